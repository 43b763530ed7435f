#include "reflquot/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "reflquot/lp.hpp"
#include "reflquot/weylgroup.hpp"

namespace reflquot {

namespace {

constexpr std::size_t kMaxRoots = 100000;

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto res = solve_linear(m, RationalVector::unit(n, c));
    auto* unique = std::get_if<UniqueSolution>(&res);
    if (!unique) throw std::invalid_argument("lattice basis is not linearly independent");
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = unique->x[r];
  }
  return inv;
}

// Primitive integer vector on the ray through c.
RationalVector primitive_on_ray(const RationalVector& c) {
  mpz_class lcm_den = 1;
  for (const auto& x : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_class v = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  RationalVector out(c.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = Rational(mpz_class(ints[i] / g));
  return out;
}

bool proportional(const RationalVector& a, const RationalVector& b, Rational& factor) {
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  if (k == a.size()) return false;
  factor = b[k] / a[k];
  return factor * a == b;
}

}  // namespace

Lattice::Lattice(std::vector<RationalVector> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  for (const auto& b : basis_)
    if (b.size() != n) throw DimensionError("lattice basis must be square (full rank in V)");
  basis_matrix_ = RationalMatrix::from_columns(basis_, n);
  inverse_ = invert(basis_matrix_);
}

Lattice Lattice::standard(std::size_t dim) {
  std::vector<RationalVector> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(RationalVector::unit(dim, i));
  return Lattice(std::move(basis));
}

RationalVector Lattice::coordinates(const RationalVector& v) const {
  if (v.size() != dim()) throw DimensionError("lattice coordinates: dimension mismatch");
  return inverse_ * v;
}

RationalVector Lattice::from_coordinates(const RationalVector& c) const { return basis_matrix_ * c; }

bool WeightPoint::is_dominant() const {
  for (auto b : lambda)
    if (b < 0) return false;
  return true;
}

RationalVector reflect(const BilinearForm& form, const RationalVector& alpha, const RationalVector& v) {
  if (alpha.is_zero()) throw std::invalid_argument("reflect: zero root");
  const Rational c = Rational(2) * inner(form, v, alpha) / inner(form, alpha, alpha);
  return v - c * alpha;
}

Rational RootDatum::coroot_pairing(const RationalVector& v, std::size_t i) const {
  return Rational(2) * inner(form_, v, simple_roots_[i]) / root_norms_[i];
}

RootDatum adapt_simple_system(const BilinearForm& form, const Lattice& lattice,
                              const std::vector<RationalVector>& raw_simple_roots) {
  const std::size_t n = form.dim();
  if (lattice.dim() != n) throw DimensionError("lattice and form dimensions differ");
  for (const auto& a : raw_simple_roots) {
    if (a.size() != n) throw DimensionError("simple root dimension mismatch");
    if (a.is_zero()) throw RootDatumError("zero simple root");
  }
  const std::size_t r = raw_simple_roots.size();
  if (r > 0 && rank(RationalMatrix::from_columns(raw_simple_roots, n)) != r)
    throw RootDatumError("simple roots are linearly dependent");

  RootDatum d(form, lattice);
  for (const auto& a : raw_simple_roots) {
    const RationalVector prim = primitive_on_ray(lattice.coordinates(a));
    if (prim.is_zero())
      throw RootDatumError("group does not preserve a lattice compatibly: M ∩ R<" + a.to_string() + "> = {0}");
    d.simple_roots_.push_back(lattice.from_coordinates(prim));
  }
  for (const auto& a : d.simple_roots_) d.root_norms_.push_back(inner(form, a, a));

  // M ⊆ Λ: every lattice basis vector pairs integrally with every simple coroot.
  RationalMatrix pairing(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pairing(i, j) = d.coroot_pairing(lattice.basis()[j], i);
      if (!pairing(i, j).is_integer())
        throw RootDatumError("lattice is not contained in the weight group: basis vector " +
                             lattice.basis()[j].to_string() + " pairs to " + pairing(i, j).to_string() +
                             " with coroot " + std::to_string(i + 1));
    }

  d.cartan_.assign(r, std::vector<std::int64_t>(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) d.cartan_[j][i] = d.coroot_pairing(d.simple_roots_[j], i).to_int64();

  RationalMatrix gram_delta(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_delta(i, j) = inner(form, d.simple_roots_[i], d.simple_roots_[j]);
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector rhs(r);
    rhs[i] = d.root_norms_[i] / Rational(2);
    auto res = solve_linear(gram_delta, rhs);
    auto* unique = std::get_if<UniqueSolution>(&res);
    if (!unique) throw RootDatumError("singular Gram matrix of simple roots");
    RationalVector lambda(n);
    for (std::size_t k = 0; k < r; ++k) lambda += unique->x[k] * d.simple_roots_[k];
    d.weights_.push_back(std::move(lambda));
  }

  for (const auto& k : integer_kernel_basis(pairing)) d.z_basis_.push_back(lattice.from_coordinates(k));

  // Root system: closure of the simple roots under the simple reflections.
  std::set<RationalVector> seen(d.simple_roots_.begin(), d.simple_roots_.end());
  std::deque<RationalVector> queue(d.simple_roots_.begin(), d.simple_roots_.end());
  while (!queue.empty()) {
    const RationalVector v = std::move(queue.front());
    queue.pop_front();
    d.all_roots_.push_back(v);
    for (const auto& a : d.simple_roots_) {
      RationalVector w = reflect(form, a, v);
      if (seen.insert(w).second) {
        if (seen.size() > kMaxRoots) throw RootDatumError("root system closure exceeds size cap; group is not finite");
        queue.push_back(std::move(w));
      }
    }
  }
  std::sort(d.all_roots_.begin(), d.all_roots_.end());
  for (std::size_t i = 0; i < d.all_roots_.size(); ++i)
    for (std::size_t j = i + 1; j < d.all_roots_.size(); ++j) {
      Rational f;
      if (proportional(d.all_roots_[i], d.all_roots_[j], f) && f != Rational(-1))
        throw RootDatumError("root system axiom violated: " + d.all_roots_[i].to_string() + " and " +
                             d.all_roots_[j].to_string() + " are proportional");
    }

  d.rho_ = RationalVector(n);
  for (const auto& w : d.weights_) d.rho_ += w;
  for (const auto& w : d.weights_) d.weight_heights_.push_back(inner(form, w, d.rho_));

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      if (d.coroot_pairing(d.weights_[i], j) != Rational(i == j ? 1 : 0))
        throw RootDatumError("fundamental weight duality failed");
    for (const auto& z : d.z_basis_)
      if (!inner(form, d.weights_[i], z).is_zero()) throw RootDatumError("fundamental weight not orthogonal to Z");
  }
  return d;
}

std::optional<WeightPoint> decompose(const RootDatum& datum, const RationalVector& v) {
  if (v.size() != datum.dim()) throw DimensionError("decompose: dimension mismatch");
  WeightPoint p{v, std::vector<std::int64_t>(datum.rank())};
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const Rational b = datum.coroot_pairing(v, i);
    if (!b.is_integer()) return std::nullopt;
    p.lambda[i] = b.to_int64();
    p.z -= b * datum.fundamental_weights()[i];
  }
  return p;
}

RationalVector reconstruct(const RootDatum& datum, const WeightPoint& p) {
  if (p.lambda.size() != datum.rank()) throw DimensionError("reconstruct: lambda length mismatch");
  RationalVector v = p.z;
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (p.lambda[i] != 0) v += Rational(static_cast<long>(p.lambda[i])) * datum.fundamental_weights()[i];
  return v;
}

std::optional<RationalVector> simple_root_coordinates(const RootDatum& datum, const RationalVector& d) {
  if (datum.rank() == 0) {
    if (d.is_zero()) return RationalVector();
    return std::nullopt;
  }
  auto res = solve_linear(RationalMatrix::from_columns(datum.simple_roots(), datum.dim()), d);
  if (auto* unique = std::get_if<UniqueSolution>(&res)) return unique->x;
  return std::nullopt;
}

bool dominance_leq(const RootDatum& datum, const RationalVector& u, const RationalVector& v) {
  return conic_combination(datum.simple_roots(), v - u).has_value();
}

bool in_fundamental_domain(const RootDatum& datum, const RationalVector& v) {
  for (const auto& a : datum.simple_roots())
    if (inner(datum.form(), v, a).sign() < 0) return false;
  return true;
}

bool hull_membership(const RootDatum& datum, const Group& group, const RationalVector& u,
                     const RationalVector& v) {
  if (!in_fundamental_domain(datum, u) || !in_fundamental_domain(datum, v))
    throw std::invalid_argument("hull_membership: both points must lie in the fundamental domain");
  const auto points = orbit(group, u);
  return convex_combination(points, v).has_value();
}

Rational height(const RootDatum& datum, const RationalVector& v) { return inner(datum.form(), v, datum.rho()); }

Rational height(const RootDatum& datum, const WeightPoint& p) {
  Rational h;
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (p.lambda[i] != 0) h += Rational(static_cast<long>(p.lambda[i])) * datum.weight_heights()[i];
  return h;
}

}  // namespace reflquot

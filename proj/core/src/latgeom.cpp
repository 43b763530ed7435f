#include "reflquot/latgeom.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "reflquot/lp.hpp"

namespace reflquot {

namespace {

// Calls visit(c) for every integer vector c with lo <= c <= hi componentwise.
template <class Visit>
void scan_box(const std::vector<long>& lo, const std::vector<long>& hi, Visit visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<long> c = lo;
  for (;;) {
    visit(c);
    std::size_t i = 0;
    while (i < n && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++c[i];
  }
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<RationalVector> vertices, Lattice lattice)
    : vertices_(std::move(vertices)), lattice_(std::move(lattice)) {
  if (vertices_.empty()) throw GeometryError("polytope needs at least one vertex");
  for (const auto& v : vertices_) {
    if (v.size() != lattice_.dim()) throw DimensionError("vertex dimension does not match lattice");
    if (!lattice_.contains(v)) throw GeometryError("vertex " + v.to_string() + " is not a lattice point");
  }
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw GeometryError("duplicate vertex");
  for (std::size_t i = 0; i < vertices_.size() && vertices_.size() > 1; ++i) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i) others.push_back(vertices_[j]);
    if (convex_combination(others, vertices_[i]))
      throw GeometryError("point " + vertices_[i].to_string() + " is not a vertex (lies in the hull of the others)");
  }
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(vertices_[i] - vertices_[0]);
  const std::size_t n = lattice_.dim();
  if (diffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto e = RationalVector::unit(n, i);
      equations_.emplace_back(e, vertices_[0][i]);
    }
  } else {
    for (auto& normal : kernel_basis(RationalMatrix::from_rows(diffs, n))) {
      Rational c = dot(normal, vertices_[0]);
      equations_.emplace_back(std::move(normal), std::move(c));
    }
  }
  full_dimensional_ = equations_.empty();
}

bool member(const LatticePolytope& p, const RationalVector& x) {
  for (const auto& [normal, c] : p.affine_equations())
    if (dot(normal, x) != c) return false;
  return convex_combination(p.vertices(), x).has_value();
}

bool member_scaled(const LatticePolytope& p, long t, const RationalVector& x) {
  if (t < 0) return false;
  if (t == 0) return x.is_zero();
  return member(p, Rational(1, t) * x);
}

std::vector<RationalVector> box_candidates(const LatticePolytope& p, long t) {
  if (t < 0) throw std::invalid_argument("box_candidates: t must be non-negative");
  const std::size_t n = p.dim();
  if (t == 0) return {RationalVector(n)};
  std::vector<long> lo(n), hi(n);
  bool first = true;
  for (const auto& v : p.vertices()) {
    const RationalVector c = p.lattice().coordinates(Rational(t) * v);
    for (std::size_t i = 0; i < n; ++i) {
      const long f = floor(c[i]).to_int64();
      const long g = ceil(c[i]).to_int64();
      lo[i] = first ? f : std::min(lo[i], f);
      hi[i] = first ? g : std::max(hi[i], g);
    }
    first = false;
  }
  std::vector<RationalVector> out;
  scan_box(lo, hi, [&](const std::vector<long>& c) {
    out.push_back(p.lattice().from_coordinates(RationalVector::from_ints(c)));
  });
  return out;
}

std::vector<RationalVector> lattice_points(const LatticePolytope& p, long t) {
  if (t < 0) throw std::invalid_argument("lattice_points: t must be non-negative");
  std::vector<RationalVector> out;
  for (auto& x : box_candidates(p, t))
    if (member_scaled(p, t, x)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> slice_by_domain(const RootDatum& datum, const std::vector<RationalVector>& points) {
  std::vector<RationalVector> out;
  for (const auto& x : points)
    if (in_fundamental_domain(datum, x)) out.push_back(x);
  return out;
}

GradedSemigroup GradedSemigroup::cone_over(LatticePolytope polytope) {
  const std::size_t n = polytope.dim();
  std::vector<RationalVector> basis;
  basis.push_back(RationalVector::unit(n + 1, 0));
  for (const auto& b : polytope.lattice().basis()) {
    RationalVector e(n + 1);
    for (std::size_t i = 0; i < n; ++i) e[i + 1] = b[i];
    basis.push_back(std::move(e));
  }
  std::vector<RationalVector> gens;
  for (const auto& v : polytope.vertices()) {
    RationalVector g(n + 1);
    g[0] = 1;
    for (std::size_t i = 0; i < n; ++i) g[i + 1] = v[i];
    gens.push_back(std::move(g));
  }
  return GradedSemigroup(std::move(polytope), std::move(gens), Lattice(std::move(basis)));
}

GradedSemigroup GradedSemigroup::generated_by(std::vector<RationalVector> generators, Lattice lattice) {
  for (const auto& g : generators) {
    if (g.size() != lattice.dim()) throw DimensionError("semigroup generator dimension mismatch");
    if (!lattice.contains(g)) throw GeometryError("semigroup generator " + g.to_string() + " is not a lattice point");
  }
  return GradedSemigroup(std::nullopt, std::move(generators), std::move(lattice));
}

const LatticePolytope& GradedSemigroup::polytope() const {
  if (!polytope_) throw std::logic_error("semigroup is not in polytope mode");
  return *polytope_;
}

long GradedSemigroup::degree(const RationalVector& x) { return x[0].to_int64(); }

bool GradedSemigroup::in_cone(const RationalVector& x) const {
  if (x.size() != dim()) throw DimensionError("semigroup membership: dimension mismatch");
  if (polytope_) {
    if (x[0].sign() < 0) return false;
    RationalVector p(x.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i + 1];
    if (x[0].is_zero()) return p.is_zero();
    return member(*polytope_, (Rational(1) / x[0]) * p);
  }
  return conic_combination(generators_, x).has_value();
}

bool GradedSemigroup::contains(const RationalVector& x) const { return lattice_.contains(x) && in_cone(x); }

std::string GradedSemigroup::summary() const {
  std::ostringstream os;
  if (polytope_) {
    os << "cone over polytope with " << polytope_->vertices().size() << " vertices in dimension " << polytope_->dim()
       << (polytope_->full_dimensional() ? " (full-dimensional)" : " (not full-dimensional)");
  } else {
    os << "semigroup generated by";
    for (const auto& g : generators_) os << ' ' << g.to_string();
  }
  return os.str();
}

RootDatum graded_datum(const RootDatum& base) {
  const std::size_t n = base.dim();
  RationalMatrix gram(n + 1, n + 1);
  gram(0, 0) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i + 1, j + 1) = base.form().gram()(i, j);
  auto lift = [n](const RationalVector& v) {
    RationalVector out(n + 1);
    for (std::size_t i = 0; i < n; ++i) out[i + 1] = v[i];
    return out;
  };
  std::vector<RationalVector> basis{RationalVector::unit(n + 1, 0)};
  for (const auto& b : base.lattice().basis()) basis.push_back(lift(b));
  std::vector<RationalVector> roots;
  for (const auto& a : base.simple_roots()) roots.push_back(lift(a));
  RootDatum d = adapt_simple_system(BilinearForm(std::move(gram)), Lattice(std::move(basis)), roots);
  d.set_name(base.name().empty() ? "graded" : "graded " + base.name());
  return d;
}

bool preserves(const Group& group, const GradedSemigroup& s) {
  if (s.is_polytope_mode()) {
    return std::all_of(group.generators().begin(), group.generators().end(),
                       [&](const GroupElement& g) { return preserves(g, std::span(s.generators())); });
  }
  for (const auto& g : group.generators())
    for (const auto& x : s.generators())
      if (!s.contains(g.apply(x))) return false;
  return true;
}

SaturationReport check_saturated(const GradedSemigroup& s, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("check_saturated: degree bound must be positive");
  SaturationReport report;
  report.degree_bound = degree_bound;
  const std::size_t n = s.dim();
  std::vector<RationalVector> gens;
  for (const auto& g : s.generators()) gens.push_back(s.lattice().coordinates(g));
  if (gens.empty()) {
    report.saturated = true;
    return report;
  }

  // A functional with value >= 1 on every generator bounds representations when C is pointed.
  std::vector<LinearConstraint> cons;
  for (const auto& g : gens) cons.push_back({g, 1, Relation::GreaterEqual});
  const LpResult positive = lp_feasible(cons);
  const bool pointed = positive.feasible;

  long gmax = 1;
  for (const auto& g : gens)
    for (const auto& x : g) gmax = std::max(gmax, abs(x).to_int64());
  const long box = degree_bound * gmax;
  Rational level_cap;
  if (pointed)
    for (const auto& g : gens) level_cap = std::max(level_cap, Rational(degree_bound) * dot(positive.witness, g));

  auto within = [&](const RationalVector& x) {
    for (const auto& c : x)
      if (abs(c) > Rational(box)) return false;
    return !pointed || dot(positive.witness, x) <= level_cap;
  };

  std::set<RationalVector> generated;
  std::deque<std::pair<RationalVector, int>> queue;
  generated.insert(RationalVector(n));
  queue.emplace_back(RationalVector(n), 0);
  const int max_count = pointed ? std::numeric_limits<int>::max() : 2 * degree_bound * static_cast<int>(gens.size());
  while (!queue.empty()) {
    auto [x, count] = queue.front();
    queue.pop_front();
    if (count >= max_count) continue;
    for (const auto& g : gens) {
      RationalVector y = x + g;
      if (!within(y)) continue;
      if (generated.insert(y).second) queue.emplace_back(std::move(y), count + 1);
    }
  }

  report.saturated = true;
  scan_box(std::vector<long>(n, -box), std::vector<long>(n, box), [&](const std::vector<long>& c) {
    if (!report.saturated) return;
    const RationalVector x = RationalVector::from_ints(c);
    if (!within(x) || generated.count(x)) return;
    if (conic_combination(gens, x)) {
      report.saturated = false;
      report.counterexample = s.lattice().from_coordinates(x);
    }
  });
  return report;
}

RestrictionResult restriction_check(const RootDatum& datum, const Group& group, const GradedSemigroup& s,
                                    const RationalVector& u) {
  if (!in_fundamental_domain(datum, u)) throw GeometryError("restriction_check: u is not in D");
  if (!s.contains(u)) throw GeometryError("restriction_check: u is not in S");
  const auto wp = decompose(datum, u);
  if (!wp) throw GeometryError("restriction_check: u is not in the weight group");
  RestrictionResult out{true, std::nullopt};
  for (const auto& v : support_points(datum, psi(datum, group, *wp))) {
    if (!s.contains(v)) {
      out.ok = false;
      out.counterexample = v;
      break;
    }
  }
  return out;
}

}  // namespace reflquot

#include "reflquot/weylgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace reflquot {

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix int_identity(std::size_t r) {
  IntMatrix m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t r = a.size();
  IntMatrix p(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) p[i][j] += a[i][k] * b[k][j];
    }
  return p;
}

// Action of s_k on fundamental-weight coordinates: lambda_j -> lambda_j - delta_jk alpha_k.
IntMatrix simple_weight_action(const RootDatum& datum, std::size_t k) {
  const std::size_t r = datum.rank();
  IntMatrix m = int_identity(r);
  for (std::size_t i = 0; i < r; ++i) m[i][k] -= datum.cartan()[k][i];
  return m;
}

}  // namespace

RationalMatrix reflection_matrix(const BilinearForm& form, const RationalVector& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("reflection_matrix: zero root");
  const std::size_t n = form.dim();
  const Rational scale = Rational(2) / inner(form, alpha, alpha);
  // row vector alpha^T G
  RationalVector ag(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) ag[j] += alpha[k] * form.gram()(k, j);
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= scale * alpha[i] * ag[j];
  return m;
}

std::size_t Group::find(const RationalMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? order() : it->second;
}

Group generate(const RootDatum& datum, std::size_t max_order) {
  if (max_order < 1) throw std::invalid_argument("generate: max_order must be at least 1");
  Group g;
  std::vector<IntMatrix> gen_actions;
  for (std::size_t k = 0; k < datum.rank(); ++k) {
    GroupElement s{reflection_matrix(datum.form(), datum.simple_roots()[k]), {static_cast<int>(k)}};
    if (!preserves(s, datum.lattice()))
      throw GroupError("simple reflection " + std::to_string(k + 1) + " does not preserve the lattice");
    g.generators_.push_back(std::move(s));
    gen_actions.push_back(simple_weight_action(datum, k));
  }

  const std::size_t n = datum.dim();
  g.elements_.push_back({RationalMatrix::identity(n), {}});
  g.weight_actions_.push_back(int_identity(datum.rank()));
  g.index_.emplace(g.elements_.front().matrix, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      RationalMatrix m = g.generators_[k].matrix * g.elements_[head].matrix;
      if (g.index_.count(m)) continue;
      if (g.elements_.size() >= max_order)
        throw GroupError("group order exceeds cap of " + std::to_string(max_order));
      std::vector<int> word{static_cast<int>(k)};
      const auto& tail = g.elements_[head].word;
      word.insert(word.end(), tail.begin(), tail.end());
      g.index_.emplace(m, g.elements_.size());
      g.weight_actions_.push_back(int_multiply(gen_actions[k], g.weight_actions_[head]));
      g.elements_.push_back({std::move(m), std::move(word)});
    }
  }
  return g;
}

std::vector<RationalVector> orbit(const Group& group, const RationalVector& v) {
  std::vector<RationalVector> pts;
  pts.reserve(group.order());
  for (const auto& w : group.elements()) pts.push_back(w.apply(v));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

DominantRepresentative dominant_representative(const RootDatum& datum, const Group& group,
                                               const RationalVector& v) {
  DominantRepresentative out{v, group.identity()};
  for (;;) {
    std::size_t k = 0;
    while (k < datum.rank() && inner(datum.form(), out.rep, datum.simple_roots()[k]).sign() >= 0) ++k;
    if (k == datum.rank()) return out;
    const auto& s = group.generators()[k];
    out.rep = s.apply(out.rep);
    out.witness.matrix = s.matrix * out.witness.matrix;
    out.witness.word.insert(out.witness.word.begin(), static_cast<int>(k));
  }
}

std::vector<std::int64_t> dominant_lambda(const RootDatum& datum, std::vector<std::int64_t> b) {
  const std::size_t r = datum.rank();
  for (;;) {
    std::size_t k = 0;
    while (k < r && b[k] >= 0) ++k;
    if (k == r) return b;
    const std::int64_t bk = b[k];
    for (std::size_t i = 0; i < r; ++i) b[i] -= bk * datum.cartan()[k][i];
  }
}

BilinearForm average_form(const Group& group, const BilinearForm& form) {
  const std::size_t n = form.dim();
  RationalMatrix sum(n, n);
  for (const auto& w : group.elements()) {
    const RationalMatrix c = w.matrix.transpose() * form.gram() * w.matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += c(i, j);
  }
  return BilinearForm(std::move(sum));
}

bool is_orthogonal(const GroupElement& g, const BilinearForm& form) {
  return g.matrix.transpose() * form.gram() * g.matrix == form.gram();
}

bool preserves(const GroupElement& g, const Lattice& lattice) {
  return (lattice.inverse_basis_matrix() * g.matrix * lattice.basis_matrix()).is_integral();
}

bool preserves(const Group& group, const Lattice& lattice) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const GroupElement& g) { return preserves(g, lattice); });
}

bool preserves(const GroupElement& g, std::span<const RationalVector> vertices) {
  const std::set<RationalVector> set(vertices.begin(), vertices.end());
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](const RationalVector& v) { return set.count(g.apply(v)) > 0; });
}

bool preserves(const Group& group, std::span<const RationalVector> vertices) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const GroupElement& g) { return preserves(g, vertices); });
}

}  // namespace reflquot

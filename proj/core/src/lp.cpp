#include "reflquot/lp.hpp"

#include <limits>

namespace reflquot {

namespace {

bool is_sign_restriction(const LinearConstraint& c, std::size_t& var) {
  if (c.relation != Relation::GreaterEqual || !c.rhs.is_zero()) return false;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i].is_zero()) continue;
    if (++nonzero > 1 || c.coeffs[i].sign() < 0) return false;
    var = i;
  }
  return nonzero == 1;
}

}  // namespace

LpResult lp_feasible(std::span<const LinearConstraint> constraints) {
  if (constraints.empty()) return {true, RationalVector()};
  const std::size_t n = constraints.front().coeffs.size();
  for (const auto& c : constraints)
    if (c.coeffs.size() != n) throw DimensionError("lp_feasible: constraint dimension mismatch");

  std::vector<bool> nonneg(n, false);
  std::vector<const LinearConstraint*> rows;
  for (const auto& c : constraints) {
    std::size_t var = 0;
    if (is_sign_restriction(c, var)) {
      nonneg[var] = true;
    } else {
      rows.push_back(&c);
    }
  }

  // Structural columns: x_i for non-negative variables, x_i+ and x_i- for free ones.
  std::vector<std::size_t> pos_col(n), neg_col(n, std::numeric_limits<std::size_t>::max());
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pos_col[i] = cols++;
    if (!nonneg[i]) neg_col[i] = cols++;
  }
  std::vector<std::size_t> slack_col(rows.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r]->relation == Relation::GreaterEqual) slack_col[r] = cols++;
  const std::size_t first_artificial = cols;
  cols += rows.size();

  const std::size_t m = rows.size();
  const std::size_t rhs = cols;
  RationalMatrix t(m + 1, cols + 1);  // row m is the phase-I objective
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = *rows[r];
    const int flip = c.rhs.sign() < 0 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (c.coeffs[i].is_zero()) continue;
      const Rational a = flip > 0 ? c.coeffs[i] : -c.coeffs[i];
      t(r, pos_col[i]) = a;
      if (!nonneg[i]) t(r, neg_col[i]) = -a;
    }
    if (slack_col[r] != std::numeric_limits<std::size_t>::max()) t(r, slack_col[r]) = Rational(-flip);
    t(r, first_artificial + r) = 1;
    t(r, rhs) = flip > 0 ? c.rhs : -c.rhs;
    basis[r] = first_artificial + r;
  }
  for (std::size_t j = 0; j < first_artificial; ++j) {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s += t(r, j);
    t(m, j) = -s;
  }
  {
    Rational s;
    for (std::size_t r = 0; r < m; ++r) s += t(r, rhs);
    t(m, rhs) = -s;
  }

  for (;;) {
    std::size_t enter = first_artificial;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == first_artificial) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter).sign() <= 0) continue;
      Rational ratio = t(r, rhs) / t(r, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    // Phase I is bounded below by zero, so some row always qualifies.
    if (leave == m) break;

    const Rational inv = Rational(1) / t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j)
      if (!t(leave, j).is_zero()) t(leave, j) *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t(r, enter).is_zero()) continue;
      const Rational f = t(r, enter);
      for (std::size_t j = 0; j <= cols; ++j)
        if (!t(leave, j).is_zero()) t(r, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  if (!t(m, rhs).is_zero()) return {false, RationalVector()};

  std::vector<Rational> colval(cols);
  for (std::size_t r = 0; r < m; ++r) colval[basis[r]] = t(r, rhs);
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = colval[pos_col[i]];
    if (!nonneg[i]) x[i] -= colval[neg_col[i]];
  }
  return {true, std::move(x)};
}

bool satisfies(std::span<const LinearConstraint> constraints, const RationalVector& x) {
  for (const auto& c : constraints) {
    const Rational lhs = dot(c.coeffs, x);
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

namespace {

std::optional<std::vector<Rational>> combination(std::span<const RationalVector> points,
                                                 const RationalVector& target, bool affine) {
  const std::size_t k = points.size();
  const std::size_t dim = target.size();
  if (k == 0) {
    if (!affine && target.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  std::vector<LinearConstraint> cons;
  cons.reserve(k + dim + 1);
  for (std::size_t i = 0; i < k; ++i) cons.push_back({RationalVector::unit(k, i), 0, Relation::GreaterEqual});
  for (std::size_t d = 0; d < dim; ++d) {
    RationalVector row(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (points[i].size() != dim) throw DimensionError("combination: point dimension mismatch");
      row[i] = points[i][d];
    }
    cons.push_back({std::move(row), target[d], Relation::Equal});
  }
  if (affine) cons.push_back({RationalVector(std::vector<Rational>(k, Rational(1))), 1, Relation::Equal});
  auto res = lp_feasible(cons);
  if (!res.feasible) return std::nullopt;
  return res.witness.coords();
}

}  // namespace

std::optional<std::vector<Rational>> convex_combination(std::span<const RationalVector> points,
                                                        const RationalVector& target) {
  return combination(points, target, true);
}

std::optional<std::vector<Rational>> conic_combination(std::span<const RationalVector> generators,
                                                       const RationalVector& target) {
  return combination(generators, target, false);
}

}  // namespace reflquot

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reflquot/linalg.hpp"

namespace reflquot {

enum class Relation { GreaterEqual, Equal };

/// coeffs . x  (>= | =)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
  Relation relation = Relation::GreaterEqual;
};

struct LpResult {
  bool feasible = false;
  RationalVector witness;  // empty when infeasible
};

/// Exact feasibility test for a system of linear constraints over free real variables.
///
/// Runs phase I of the simplex method over exact rationals with Bland's rule, so the
/// verdict is exact and the procedure terminates. Constraints of the form x_i >= 0 are
/// absorbed as sign restrictions instead of tableau rows. For a fixed input the verdict
/// and witness are deterministic.
///
/// Throws DimensionError if the constraint vectors disagree in length.
LpResult lp_feasible(std::span<const LinearConstraint> constraints);

/// true iff every constraint holds exactly at x.
bool satisfies(std::span<const LinearConstraint> constraints, const RationalVector& x);

/// Decides whether target is a convex combination of points; on success returns the weights.
std::optional<std::vector<Rational>> convex_combination(std::span<const RationalVector> points,
                                                        const RationalVector& target);

/// Decides whether target is a non-negative combination of generators; returns the coefficients.
std::optional<std::vector<Rational>> conic_combination(std::span<const RationalVector> generators,
                                                       const RationalVector& target);

}  // namespace reflquot

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reflquot/charring.hpp"
#include "reflquot/linalg.hpp"
#include "reflquot/rootsys.hpp"
#include "reflquot/weylgroup.hpp"

namespace reflquot {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polytope given by its vertices, each a lattice point.
class LatticePolytope {
 public:
  /// Throws GeometryError if a vertex is off the lattice or lies in the hull of the others.
  LatticePolytope(std::vector<RationalVector> vertices, Lattice lattice);

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.dim(); }
  bool full_dimensional() const { return full_dimensional_; }

  /// Affine equations n.x = c satisfied by every point of P.
  const std::vector<std::pair<RationalVector, Rational>>& affine_equations() const { return equations_; }

 private:
  std::vector<RationalVector> vertices_;
  Lattice lattice_;
  bool full_dimensional_ = false;
  std::vector<std::pair<RationalVector, Rational>> equations_;
};

/// x ∈ P, decided by exact LP over the vertices.
bool member(const LatticePolytope& p, const RationalVector& x);
/// x ∈ tP for t >= 0 (0P = {0}).
bool member_scaled(const LatticePolytope& p, long t, const RationalVector& x);

/// Lattice points in the bounding box (in lattice coordinates) of tP.
std::vector<RationalVector> box_candidates(const LatticePolytope& p, long t);

/// Sorted lattice points of tP.
std::vector<RationalVector> lattice_points(const LatticePolytope& p, long t);

/// Points lying in the fundamental domain D.
std::vector<RationalVector> slice_by_domain(const RootDatum& datum, const std::vector<RationalVector>& points);

/// Saturated affine semigroup S, either the graded cone {(t,p) : p ∈ tP} over a polytope or the
/// semigroup generated by a list of lattice points.
class GradedSemigroup {
 public:
  static GradedSemigroup cone_over(LatticePolytope polytope);
  static GradedSemigroup generated_by(std::vector<RationalVector> generators, Lattice lattice);

  bool is_polytope_mode() const { return polytope_.has_value(); }
  const LatticePolytope& polytope() const;
  /// Generators of the cone C; for polytope mode these are (1, v) for each vertex v.
  const std::vector<RationalVector>& generators() const { return generators_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.dim(); }

  /// Membership in S = C ∩ M. In generator mode this presumes saturation.
  bool contains(const RationalVector& x) const;
  bool in_cone(const RationalVector& x) const;

  /// Degree t of a point in polytope mode.
  static long degree(const RationalVector& x);

  std::string summary() const;

 private:
  GradedSemigroup(std::optional<LatticePolytope> p, std::vector<RationalVector> gens, Lattice lattice)
      : polytope_(std::move(p)), generators_(std::move(gens)), lattice_(std::move(lattice)) {}

  std::optional<LatticePolytope> polytope_;
  std::vector<RationalVector> generators_;
  Lattice lattice_;
};

/// Root datum on R × V with W acting trivially on the first (degree) coordinate.
RootDatum graded_datum(const RootDatum& base);

/// Each group generator maps S into itself.
bool preserves(const Group& group, const GradedSemigroup& s);

struct SaturationReport {
  bool saturated = false;
  int degree_bound = 0;
  std::optional<RationalVector> counterexample;  // a point of C ∩ M not generated
};

inline constexpr int kDefaultSaturationDegree = 8;

/// Bounded saturation test for generator mode: every point of C ∩ M up to the degree bound
/// must be a non-negative integer combination of the generators.
SaturationReport check_saturated(const GradedSemigroup& s, int degree_bound = kDefaultSaturationDegree);

struct RestrictionResult {
  bool ok = false;
  std::optional<RationalVector> counterexample;  // support point of psi(chi^u) outside S
};

/// Checks supp psi(chi^u) ⊂ S for u ∈ D ∩ S. Throws GeometryError if u is not in D ∩ S.
RestrictionResult restriction_check(const RootDatum& datum, const Group& group, const GradedSemigroup& s,
                                    const RationalVector& u);

}  // namespace reflquot

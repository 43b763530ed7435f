#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflquot/charring.hpp"
#include "reflquot/latgeom.hpp"
#include "reflquot/rootsys.hpp"
#include "reflquot/serialize.hpp"
#include "reflquot/weylgroup.hpp"

namespace reflquot {

/// A scenario whose preconditions fail (unsaturated semigroup, W not preserving the object, ...).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string name;   // e.g. "lemma_support[u=(0,1,2)]"
  Json parameters;
  bool passed = false;
  Json detail;        // certificate on pass, counterexample on failure
};

struct VerificationReport {
  std::string scenario;
  std::string group_type;
  std::size_t group_order = 0;
  std::string object_summary;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  Json tables = Json::object();  // auxiliary data, e.g. graded counts
  std::int64_t elapsed_ms = 0;  // wall-clock milliseconds; excluded from determinism comparisons

  bool all_passed() const;
  std::size_t failures() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  /// Sorts checks by name so output does not depend on evaluation order.
  void finalize();

  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

struct AffineOptions {
  Rational height_bound = 6;
  int sample_count = 50;
  std::uint64_t seed = 1;
  /// Dominant points of S are enumerated among lattice points with |M-coordinates| <= box_bound.
  int box_bound = 6;
  int saturation_degree = kDefaultSaturationDegree;
};

/// Theorem checks for Z[D ∩ S] -> Z[S]^W: support and restriction lemmas on every dominant
/// point of S in the enumeration box, then seeded multiplicativity, round-trip and
/// containment samples.
VerificationReport verify_affine(const RootDatum& datum, const Group& group, const GradedSemigroup& s,
                                 const AffineOptions& options);

struct ProjectiveOptions {
  int t_max = 3;
  int sample_count = 20;
  std::uint64_t seed = 1;
};

struct GradedCounts {
  long t = 0;
  std::size_t total_points = 0;
  std::size_t orbit_count = 0;        // distinct dominant representatives (ascent)
  std::size_t domain_slice_count = 0; // |tP ∩ D ∩ M|
  std::size_t brute_force_count = 0;  // orbits found by full group symmetrization
};

/// Per-degree counts for t = 0..t_max.
std::vector<GradedCounts> graded_counts(const RootDatum& datum, const Group& group, const LatticePolytope& p,
                                        int t_max);

/// Graded checks for the cone over a W-stable polytope.
VerificationReport verify_projective(const RootDatum& datum, const Group& group, const LatticePolytope& p,
                                     const ProjectiveOptions& options);

/// Orbit sums spanning the invariants supported on a W-stable point set, computed by applying
/// every group element. Each entry is one sorted orbit. Throws VerificationError if the set is not W-stable.
std::vector<std::vector<RationalVector>> brute_force_invariants(const RootDatum& datum, const Group& group,
                                                                const std::vector<RationalVector>& points);

/// Number of distinct dominant representatives among the points.
std::size_t orbit_count(const RootDatum& datum, const Group& group, const std::vector<RationalVector>& points);

/// The A1 action on Z^2 by swapping coordinates, with u = e1 + 3e2.
VerificationReport figure1_fixture();

/// Dominant weights sum_i b_i lambda_i (zero Z-part) with height <= bound.
std::vector<WeightPoint> dominant_weights(const RootDatum& datum, const Rational& height_bound);

/// Lattice points of t(P ∩ D), found by one LP per candidate that imposes both the polytope
/// and the domain constraints on x/t.
std::vector<RationalVector> domain_polytope_points(const RootDatum& datum, const LatticePolytope& p, long t);

}  // namespace reflquot

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflquot/latgeom.hpp"
#include "reflquot/rootsys.hpp"
#include "reflquot/weylgroup.hpp"

namespace reflquot::cli {

/// Bad flags or config contents; reported as a usage error.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ObjectKind { None, Semigroup, Polytope, Cone, Figure1 };

std::string to_string(ObjectKind k);
ObjectKind object_kind_from_string(const std::string& s);

struct ScenarioConfig {
  std::string name;

  // Group: a named type ("A".."D", "G", "trivial") or explicit simple roots.
  std::string type;
  int rank = 0;
  int dim = 0;  // ambient dimension for "trivial"
  std::vector<RationalVector> form;          // Gram matrix rows; empty means standard
  std::vector<RationalVector> lattice;       // basis rows; empty means the type's lattice or Z^n
  std::vector<RationalVector> simple_roots;  // explicit simple system

  ObjectKind kind = ObjectKind::None;
  std::vector<RationalVector> generators;  // integer lattice coordinates
  std::vector<RationalVector> vertices;    // integer lattice coordinates

  Rational height_bound = 6;
  int t_max = 3;
  int sample_count = 50;
  std::uint64_t seed = 1;
  std::size_t max_order = kDefaultMaxOrder;
  int saturation_degree = kDefaultSaturationDegree;
  int box_bound = 6;

  std::string out_path;
  std::string format;

  bool has_group() const { return !type.empty() || !simple_roots.empty(); }
  /// Throws ConfigError on a missing or conflicting group, or bounds out of range.
  void validate() const;
};

/// "1,0;0,1" -> rows. Entries may be integers or p/q.
std::vector<RationalVector> parse_rows(const std::string& text);
std::string format_rows(const std::vector<RationalVector>& rows);

/// INI text with sections [scenario], [group], [object], [bounds], [output].
ScenarioConfig parse_config(const std::string& text, const std::string& source);
std::string write_config(const ScenarioConfig& config);

/// Bundled fixture configs, embedded at build time.
std::vector<std::string> fixture_names();
/// Throws ConfigError for an unknown name.
const std::string& fixture_text(const std::string& name);
/// Vertex rows of a bundled polytope (square, simplex3, b2cross, permutohedron4), if the name is known.
std::optional<std::vector<RationalVector>> named_polytope(const std::string& name);

RootDatum build_datum(const ScenarioConfig& config);
GradedSemigroup build_semigroup(const ScenarioConfig& config, const RootDatum& datum);
LatticePolytope build_polytope(const ScenarioConfig& config, const RootDatum& datum);

}  // namespace reflquot::cli

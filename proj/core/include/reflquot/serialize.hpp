#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "reflquot/charring.hpp"
#include "reflquot/latgeom.hpp"
#include "reflquot/rootsys.hpp"

namespace reflquot {

/// Malformed document. what() carries the line number for syntax errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Parses text, converting syntax errors into ParseError that names the source and line.
Json parse_document(const std::string& text, const std::string& source);
Json read_document(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const WeightPoint& p);
/// {"basis": "monomial", "terms": [{"point": {"z": [...], "lambda": [...]}, "coeff": c}, ...]}
Json to_json(const Character& f);
/// Same shape with "basis": "orbit".
Json to_json(const InvariantCharacter& g);
/// {"name", "form", "lattice", "simple_roots", "all_roots", "fundamental_weights", "z_basis"}
Json to_json(const RootDatum& d);

Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
WeightPoint weight_point_from_json(const Json& j);
Character character_from_json(const Json& j);
InvariantCharacter invariant_character_from_json(const Json& j);
/// Rebuilds the datum from form, lattice and simple roots; derived fields are recomputed.
RootDatum root_datum_from_json(const Json& j);

/// {"lattice": [[...]] (optional, default Z^n), "vertices": [[...]]} with integer lattice coordinates.
LatticePolytope polytope_from_json(const Json& j);
Json to_json(const LatticePolytope& p);
/// {"lattice": [[...]] (optional), "generators": [[...]]}
GradedSemigroup semigroup_from_json(const Json& j);

}  // namespace reflquot

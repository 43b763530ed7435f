#include "reflquot/serialize.hpp"

#include <fstream>
#include <sstream>

namespace reflquot {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw ParseError("malformed document: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<RationalVector> vectors_from_json(const Json& j, const char* what) {
  if (!j.is_array()) shape_error(std::string(what) + " must be an array");
  std::vector<RationalVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

Json vectors_to_json(const std::vector<RationalVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::optional<Lattice> lattice_field(const Json& j) {
  if (!j.contains("lattice")) return std::nullopt;
  return Lattice(vectors_from_json(j.at("lattice"), "lattice"));
}

}  // namespace

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..."
    throw ParseError(source + ": " + e.what());
  }
}

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

Json to_json(const RationalMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Json to_json(const WeightPoint& p) { return Json{{"z", to_json(p.z)}, {"lambda", p.lambda}}; }

namespace {

template <class Terms>
Json terms_to_json(const Terms& terms, const char* basis) {
  Json t = Json::array();
  for (const auto& [p, c] : terms) t.push_back(Json{{"point", to_json(p)}, {"coeff", c}});
  return Json{{"basis", basis}, {"terms", std::move(t)}};
}

template <class Out>
Out terms_from_json(const Json& j, const char* expected_basis) {
  const auto& basis = field(j, "basis");
  if (!basis.is_string() || basis.get<std::string>() != expected_basis)
    shape_error(std::string("expected basis '") + expected_basis + "'");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) shape_error("terms must be an array");
  Out out;
  for (const auto& t : terms) {
    const auto& c = field(t, "coeff");
    if (!c.is_number_integer()) shape_error("coeff must be an integer");
    out.add_term(weight_point_from_json(field(t, "point")), c.get<Coefficient>());
  }
  return out;
}

}  // namespace

Json to_json(const Character& f) { return terms_to_json(f.terms(), "monomial"); }
Json to_json(const InvariantCharacter& g) { return terms_to_json(g.terms(), "orbit"); }

Json to_json(const RootDatum& d) {
  return Json{{"name", d.name()},
              {"form", to_json(d.form().gram())},
              {"lattice", vectors_to_json(d.lattice().basis())},
              {"simple_roots", vectors_to_json(d.simple_roots())},
              {"all_roots", vectors_to_json(d.all_roots())},
              {"fundamental_weights", vectors_to_json(d.fundamental_weights())},
              {"z_basis", vectors_to_json(d.z_basis())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) shape_error("rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    shape_error(e.what());
  }
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) shape_error("vector must be an array");
  RationalVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

RationalMatrix matrix_from_json(const Json& j) {
  const auto rows = vectors_from_json(j, "matrix");
  if (rows.empty()) return RationalMatrix();
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) shape_error("ragged matrix");
  return RationalMatrix::from_rows(rows, rows.front().size());
}

WeightPoint weight_point_from_json(const Json& j) {
  WeightPoint p;
  p.z = vector_from_json(field(j, "z"));
  const auto& l = field(j, "lambda");
  if (!l.is_array()) shape_error("lambda must be an array");
  for (const auto& b : l) {
    if (!b.is_number_integer()) shape_error("lambda coordinates must be integers");
    p.lambda.push_back(b.get<std::int64_t>());
  }
  return p;
}

Character character_from_json(const Json& j) { return terms_from_json<Character>(j, "monomial"); }

InvariantCharacter invariant_character_from_json(const Json& j) {
  try {
    return terms_from_json<InvariantCharacter>(j, "orbit");
  } catch (const CharacterError& e) {
    shape_error(e.what());
  }
}

RootDatum root_datum_from_json(const Json& j) {
  const RationalMatrix gram = matrix_from_json(field(j, "form"));
  auto lattice = lattice_field(j);
  const auto roots = vectors_from_json(field(j, "simple_roots"), "simple_roots");
  RootDatum d = adapt_simple_system(BilinearForm(gram), lattice ? *lattice : Lattice::standard(gram.rows()), roots);
  if (j.contains("name") && j.at("name").is_string()) d.set_name(j.at("name").get<std::string>());
  return d;
}

LatticePolytope polytope_from_json(const Json& j) {
  const auto coords = vectors_from_json(field(j, "vertices"), "vertices");
  if (coords.empty()) shape_error("polytope needs vertices");
  const Lattice lattice = lattice_field(j).value_or(Lattice::standard(coords.front().size()));
  std::vector<RationalVector> vertices;
  for (const auto& c : coords) {
    if (!c.is_integral()) shape_error("vertex coordinates must be integers");
    vertices.push_back(lattice.from_coordinates(c));
  }
  return LatticePolytope(std::move(vertices), lattice);
}

Json to_json(const LatticePolytope& p) {
  std::vector<RationalVector> coords;
  for (const auto& v : p.vertices()) coords.push_back(p.lattice().coordinates(v));
  return Json{{"lattice", vectors_to_json(p.lattice().basis())}, {"vertices", vectors_to_json(coords)}};
}

GradedSemigroup semigroup_from_json(const Json& j) {
  const auto coords = vectors_from_json(field(j, "generators"), "generators");
  if (coords.empty() && !j.contains("lattice")) shape_error("semigroup needs generators or a lattice");
  auto given = lattice_field(j);
  const Lattice lattice = given ? *given : Lattice::standard(coords.front().size());
  std::vector<RationalVector> gens;
  for (const auto& c : coords) {
    if (!c.is_integral()) shape_error("generator coordinates must be integers");
    gens.push_back(lattice.from_coordinates(c));
  }
  return GradedSemigroup::generated_by(std::move(gens), lattice);
}

}  // namespace reflquot

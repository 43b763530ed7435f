#include "config.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "reflquot/named_types.hpp"

namespace reflquot::cli {

// Defined in the generated fixtures source.
const std::map<std::string, std::string>& bundled_fixtures();

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
T read_number(const pt::ptree& tree, const std::string& key, T fallback) {
  const auto v = tree.get_optional<std::string>(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long long x = std::stoll(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return static_cast<T>(x);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' must be an integer, got '" + *v + "'");
  }
}

}  // namespace

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::None: return "none";
    case ObjectKind::Semigroup: return "semigroup";
    case ObjectKind::Polytope: return "polytope";
    case ObjectKind::Cone: return "cone";
    case ObjectKind::Figure1: return "figure1";
  }
  return "none";
}

ObjectKind object_kind_from_string(const std::string& s) {
  for (auto k : {ObjectKind::None, ObjectKind::Semigroup, ObjectKind::Polytope, ObjectKind::Cone, ObjectKind::Figure1})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown object kind '" + s + "' (expected none, semigroup, polytope, cone or figure1)");
}

void ScenarioConfig::validate() const {
  if (!has_group()) throw ConfigError("no group given (use --type or --simple-roots)");
  if (!type.empty() && !simple_roots.empty())
    throw ConfigError("give either a named type or explicit simple roots, not both");
  if (type == "trivial" && dim < 1 && lattice.empty()) throw ConfigError("trivial group needs dim >= 1");
  if (!type.empty() && type != "trivial" && rank < 1) throw ConfigError("rank must be at least 1");
  if (height_bound.sign() < 0) throw ConfigError("height_bound must be non-negative");
  if (t_max < 0) throw ConfigError("t_max must be non-negative");
  if (sample_count < 0) throw ConfigError("sample_count must be non-negative");
  if (max_order < 1) throw ConfigError("max_order must be positive");
  if (saturation_degree < 1) throw ConfigError("saturation_degree must be positive");
  if (box_bound < 0) throw ConfigError("box_bound must be non-negative");
  if ((kind == ObjectKind::Polytope || kind == ObjectKind::Cone) && vertices.empty())
    throw ConfigError("polytope object needs vertices");
  if (kind == ObjectKind::Semigroup && generators.empty()) throw ConfigError("semigroup object needs generators");
  if (!format.empty() && format != "json" && format != "text" && format != "csv")
    throw ConfigError("format must be json, text or csv");
}

std::vector<RationalVector> parse_rows(const std::string& text) {
  std::vector<RationalVector> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    row = trim(row);
    if (row.empty()) continue;
    std::vector<Rational> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      try {
        entries.push_back(Rational::parse(trim(entry)));
      } catch (const std::exception&) {
        throw ConfigError("bad number '" + trim(entry) + "' in '" + text + "'");
      }
    }
    if (!rows.empty() && rows.front().size() != entries.size()) throw ConfigError("ragged rows in '" + text + "'");
    rows.emplace_back(std::move(entries));
  }
  return rows;
}

std::string format_rows(const std::vector<RationalVector>& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ';';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ',';
      out += rows[r][i].to_string();
    }
  }
  return out;
}

ScenarioConfig parse_config(const std::string& text, const std::string& source) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  static const std::map<std::string, std::vector<std::string>> known = {
      {"scenario", {"name"}},
      {"group", {"type", "rank", "dim", "form", "lattice", "simple_roots"}},
      {"object", {"kind", "generators", "vertices"}},
      {"bounds", {"height_bound", "t_max", "sample_count", "seed", "max_order", "saturation_degree", "box_bound"}},
      {"output", {"path", "format"}}};
  for (const auto& [section, body] : tree) {
    const auto it = known.find(section);
    if (it == known.end()) throw ConfigError(source + ": unknown section [" + section + "]");
    for (const auto& [key, value] : body)
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw ConfigError(source + ": unknown key '" + key + "' in [" + section + "]");
  }

  ScenarioConfig c;
  c.name = tree.get("scenario.name", std::string());
  c.type = tree.get("group.type", std::string());
  c.rank = read_number<int>(tree, "group.rank", 0);
  c.dim = read_number<int>(tree, "group.dim", 0);
  c.form = parse_rows(tree.get("group.form", std::string()));
  c.lattice = parse_rows(tree.get("group.lattice", std::string()));
  c.simple_roots = parse_rows(tree.get("group.simple_roots", std::string()));
  c.kind = object_kind_from_string(tree.get("object.kind", std::string("none")));
  c.generators = parse_rows(tree.get("object.generators", std::string()));
  c.vertices = parse_rows(tree.get("object.vertices", std::string()));
  if (auto h = tree.get_optional<std::string>("bounds.height_bound")) {
    try {
      c.height_bound = Rational::parse(trim(*h));
    } catch (const std::exception&) {
      throw ConfigError(source + ": height_bound must be a rational number");
    }
  }
  c.t_max = read_number<int>(tree, "bounds.t_max", c.t_max);
  c.sample_count = read_number<int>(tree, "bounds.sample_count", c.sample_count);
  c.seed = read_number<std::uint64_t>(tree, "bounds.seed", c.seed);
  c.max_order = read_number<std::size_t>(tree, "bounds.max_order", c.max_order);
  c.saturation_degree = read_number<int>(tree, "bounds.saturation_degree", c.saturation_degree);
  c.box_bound = read_number<int>(tree, "bounds.box_bound", c.box_bound);
  c.out_path = tree.get("output.path", std::string());
  c.format = tree.get("output.format", std::string());
  return c;
}

std::string write_config(const ScenarioConfig& c) {
  std::ostringstream os;
  if (!c.name.empty()) os << "[scenario]\nname = " << c.name << "\n\n";
  os << "[group]\n";
  if (!c.type.empty()) os << "type = " << c.type << '\n';
  if (c.rank) os << "rank = " << c.rank << '\n';
  if (c.dim) os << "dim = " << c.dim << '\n';
  if (!c.form.empty()) os << "form = " << format_rows(c.form) << '\n';
  if (!c.lattice.empty()) os << "lattice = " << format_rows(c.lattice) << '\n';
  if (!c.simple_roots.empty()) os << "simple_roots = " << format_rows(c.simple_roots) << '\n';
  os << "\n[object]\nkind = " << to_string(c.kind) << '\n';
  if (!c.generators.empty()) os << "generators = " << format_rows(c.generators) << '\n';
  if (!c.vertices.empty()) os << "vertices = " << format_rows(c.vertices) << '\n';
  os << "\n[bounds]\n"
     << "height_bound = " << c.height_bound << '\n'
     << "t_max = " << c.t_max << '\n'
     << "sample_count = " << c.sample_count << '\n'
     << "seed = " << c.seed << '\n'
     << "max_order = " << c.max_order << '\n'
     << "saturation_degree = " << c.saturation_degree << '\n'
     << "box_bound = " << c.box_bound << '\n';
  if (!c.out_path.empty() || !c.format.empty()) {
    os << "\n[output]\n";
    if (!c.out_path.empty()) os << "path = " << c.out_path << '\n';
    if (!c.format.empty()) os << "format = " << c.format << '\n';
  }
  return os.str();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : bundled_fixtures()) out.push_back(name);
  return out;
}

const std::string& fixture_text(const std::string& name) {
  const auto& all = bundled_fixtures();
  const auto it = all.find(name);
  if (it == all.end()) {
    std::string known;
    for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown fixture '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

std::optional<std::vector<RationalVector>> named_polytope(const std::string& name) {
  for (const char* n : {"square", "simplex3", "b2cross", "permutohedron4"})
    if (name == n) return parse_config(fixture_text(name), name).vertices;
  return std::nullopt;
}

RootDatum build_datum(const ScenarioConfig& c) {
  c.validate();
  std::optional<Lattice> lattice;
  if (!c.lattice.empty()) lattice = Lattice(c.lattice);
  if (c.type == "trivial") {
    const std::size_t n = lattice ? lattice->dim() : static_cast<std::size_t>(c.dim);
    const BilinearForm form = c.form.empty() ? BilinearForm::standard(n) : BilinearForm(RationalMatrix::from_rows(c.form, n));
    RootDatum d = adapt_simple_system(form, lattice ? *lattice : Lattice::standard(n), {});
    d.set_name("trivial");
    return d;
  }
  if (!c.type.empty()) {
    if (c.type.size() != 1) throw ConfigError("type must be a single letter A-G or 'trivial', got '" + c.type + "'");
    RootDatum base = [&] {
      try {
        return named_root_datum(c.type[0], c.rank);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }();
    if (!lattice && c.form.empty()) return base;
    const BilinearForm form = c.form.empty() ? base.form() : BilinearForm(RationalMatrix::from_rows(c.form, base.dim()));
    RootDatum d = adapt_simple_system(form, lattice ? *lattice : base.lattice(), base.simple_roots());
    d.set_name(base.name());
    return d;
  }
  const std::size_t n = c.simple_roots.front().size();
  const BilinearForm form = c.form.empty() ? BilinearForm::standard(n) : BilinearForm(RationalMatrix::from_rows(c.form, n));
  return adapt_simple_system(form, lattice ? *lattice : Lattice::standard(n), c.simple_roots);
}

namespace {

std::vector<RationalVector> to_ambient(const std::vector<RationalVector>& coords, const Lattice& lattice,
                                       const char* what) {
  std::vector<RationalVector> out;
  for (const auto& c : coords) {
    if (c.size() != lattice.dim())
      throw ConfigError(std::string(what) + " " + c.to_string() + " has the wrong dimension");
    if (!c.is_integral()) throw ConfigError(std::string(what) + " " + c.to_string() + " must have integer coordinates");
    out.push_back(lattice.from_coordinates(c));
  }
  return out;
}

}  // namespace

GradedSemigroup build_semigroup(const ScenarioConfig& c, const RootDatum& datum) {
  if (c.kind == ObjectKind::Cone) return GradedSemigroup::cone_over(build_polytope(c, datum));
  if (c.kind != ObjectKind::Semigroup) throw ConfigError("scenario has no semigroup");
  return GradedSemigroup::generated_by(to_ambient(c.generators, datum.lattice(), "generator"), datum.lattice());
}

LatticePolytope build_polytope(const ScenarioConfig& c, const RootDatum& datum) {
  if (c.kind != ObjectKind::Polytope && c.kind != ObjectKind::Cone) throw ConfigError("scenario has no polytope");
  return LatticePolytope(to_ambient(c.vertices, datum.lattice(), "vertex"), datum.lattice());
}

}  // namespace reflquot::cli

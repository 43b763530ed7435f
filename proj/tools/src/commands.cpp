#include "commands.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "reflquot/serialize.hpp"
#include "reflquot/theoremcheck.hpp"

namespace reflquot::cli {

namespace {

struct Flags {
  std::string fixture, config, type, lattice, simple_roots, polytope, semigroup, height_bound, out, format, point;
  int rank = 0, t_max = 0, samples = 0, box = 0, saturation = 0;
  std::uint64_t seed = 0;
  std::size_t max_order = 0;
  bool cone = false;
  std::string input;  // invpsi positional
};

struct Options {
  CLI::Option *rank, *t_max, *samples, *box, *saturation, *seed, *max_order;
};

Options add_scenario_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--fixture", f.fixture, "Bundled scenario (see 'fixtures')");
  sub->add_option("--config", f.config, "Scenario config file (INI)");
  sub->add_option("--type", f.type, "Cartan type letter, or type with rank such as A2; 'trivial' for W = 1");
  Options o{};
  o.rank = sub->add_option("--rank", f.rank, "Rank for --type");
  sub->add_option("--lattice", f.lattice, "Lattice: Zn, or a JSON file with basis vectors");
  sub->add_option("--simple-roots", f.simple_roots, "JSON file: array of roots, or {simple_roots, form, lattice}");
  sub->add_option("--polytope", f.polytope, "Bundled polytope name or JSON file with integer vertex coordinates");
  sub->add_option("--semigroup", f.semigroup, "orthant, a JSON file, or gens:2,3 / gens:(1,0),(0,1)");
  sub->add_flag("--cone", f.cone, "Treat the polytope as its graded cone semigroup");
  o.t_max = sub->add_option("--tmax", f.t_max, "Largest degree t");
  sub->add_option("--height-bound", f.height_bound, "Height bound for dominant weights");
  o.samples = sub->add_option("--samples", f.samples, "Random samples per check family");
  o.seed = sub->add_option("--seed", f.seed, "Sampling seed");
  o.max_order = sub->add_option("--max-order", f.max_order, "Cap on |W| during generation");
  o.box = sub->add_option("--box", f.box, "Coordinate bound for enumerating dominant points of S");
  o.saturation = sub->add_option("--saturation-degree", f.saturation, "Degree bound for the saturation check");
  sub->add_option("--out", f.out, "Write output to this path");
  sub->add_option("--format", f.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<RationalVector> json_vectors(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + " must be an array of vectors");
  std::vector<RationalVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

std::vector<RationalVector> identity_rows(std::size_t n) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(RationalVector::unit(n, i));
  return rows;
}

// "gens:2,3" lists one-dimensional generators; "gens:(1,0),(0,1)" lists tuples.
std::vector<RationalVector> parse_inline_generators(const std::string& text) {
  if (text.find('(') == std::string::npos) {
    std::vector<RationalVector> out;
    for (auto& row : parse_rows(std::regex_replace(text, std::regex(","), ";"))) out.push_back(std::move(row));
    return out;
  }
  std::string rows;
  static const std::regex tuple(R"(\(([^()]*)\))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), tuple); it != std::sregex_iterator(); ++it)
    rows += (rows.empty() ? "" : ";") + (*it)[1].str();
  if (rows.empty()) throw ConfigError("cannot parse generators '" + text + "'");
  return parse_rows(rows);
}

ScenarioConfig resolve(const Flags& f, const Options& o) {
  if (!f.fixture.empty() && !f.config.empty()) throw ConfigError("give either --fixture or --config, not both");
  ScenarioConfig c;
  if (!f.fixture.empty()) c = parse_config(fixture_text(f.fixture), f.fixture);
  if (!f.config.empty()) c = parse_config(read_file(f.config), f.config);

  if (!f.type.empty()) {
    c.simple_roots.clear();
    static const std::regex with_rank(R"(([A-Za-z])(\d+))");
    std::smatch m;
    if (std::regex_match(f.type, m, with_rank)) {
      c.type = std::string(1, static_cast<char>(std::toupper(m[1].str()[0])));
      c.rank = std::stoi(m[2].str());
    } else if (f.type == "trivial") {
      c.type = f.type;
    } else if (f.type.size() == 1) {
      c.type = std::string(1, static_cast<char>(std::toupper(f.type[0])));
    } else {
      throw ConfigError("unknown type '" + f.type + "'");
    }
  }
  if (o.rank->count()) c.rank = f.rank;
  if (!f.simple_roots.empty()) {
    const Json j = read_document(f.simple_roots);
    c.type.clear();
    c.rank = 0;
    if (j.is_array()) {
      c.simple_roots = json_vectors(j, "simple roots");
    } else {
      if (!j.contains("simple_roots")) throw ConfigError(f.simple_roots + ": missing 'simple_roots'");
      c.simple_roots = json_vectors(j.at("simple_roots"), "simple_roots");
      if (j.contains("form")) c.form = json_vectors(j.at("form"), "form");
      if (j.contains("lattice")) c.lattice = json_vectors(j.at("lattice"), "lattice");
    }
    if (c.simple_roots.empty()) throw ConfigError(f.simple_roots + ": no simple roots (use --type trivial for W = 1)");
  }
  if (!f.lattice.empty()) {
    static const std::regex zn(R"(Z(\d+))");
    std::smatch m;
    if (std::regex_match(f.lattice, m, zn)) {
      c.lattice = identity_rows(std::stoul(m[1].str()));
    } else {
      const Json j = read_document(f.lattice);
      c.lattice = json_vectors(j.is_object() && j.contains("lattice") ? j.at("lattice") : j, "lattice");
    }
  }

  if (!f.polytope.empty()) {
    if (auto named = named_polytope(f.polytope)) {
      c.vertices = *named;
    } else {
      const Json j = read_document(f.polytope);
      if (j.is_object() && j.contains("lattice"))
        throw ConfigError(f.polytope + ": vertices are read in the group's lattice coordinates; drop the 'lattice' key");
      c.vertices = json_vectors(j.is_object() && j.contains("vertices") ? j.at("vertices") : j, "vertices");
    }
    c.kind = ObjectKind::Polytope;
    c.generators.clear();
  }
  if (f.cone) {
    if (c.vertices.empty()) throw ConfigError("--cone needs a polytope");
    c.kind = ObjectKind::Cone;
  }
  if (!f.semigroup.empty()) {
    c.vertices.clear();
    c.kind = ObjectKind::Semigroup;
    if (f.semigroup == "orthant") {
      c.generators.clear();  // filled in once the ambient dimension is known
    } else if (f.semigroup.rfind("gens:", 0) == 0) {
      c.generators = parse_inline_generators(f.semigroup.substr(5));
    } else {
      const Json j = read_document(f.semigroup);
      if (j.is_object() && j.contains("lattice"))
        throw ConfigError(f.semigroup + ": generators are read in the group's lattice coordinates; drop the 'lattice' key");
      c.generators = json_vectors(j.is_object() && j.contains("generators") ? j.at("generators") : j, "generators");
    }
  }
  if (!c.has_group() && c.kind == ObjectKind::Semigroup && !c.generators.empty()) {
    c.type = "trivial";
    c.dim = static_cast<int>(c.generators.front().size());
  }
  if (f.semigroup == "orthant") {
    if (!c.has_group()) throw ConfigError("--semigroup orthant needs a group");
    ScenarioConfig probe = c;
    probe.kind = ObjectKind::None;
    c.generators = identity_rows(build_datum(probe).lattice().dim());
  }

  if (o.t_max->count()) c.t_max = f.t_max;
  if (!f.height_bound.empty()) {
    try {
      c.height_bound = Rational::parse(f.height_bound);
    } catch (const std::exception&) {
      throw ConfigError("--height-bound must be a rational number");
    }
  }
  if (o.samples->count()) c.sample_count = f.samples;
  if (o.seed->count()) c.seed = f.seed;
  if (o.max_order->count()) c.max_order = f.max_order;
  if (o.box->count()) c.box_bound = f.box;
  if (o.saturation->count()) c.saturation_degree = f.saturation;
  if (!f.out.empty()) c.out_path = f.out;
  if (!f.format.empty()) c.format = f.format;
  c.validate();
  return c;
}

void emit(const ScenarioConfig& c, const std::string& body, std::ostream& out) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw ConfigError("cannot write " + c.out_path);
  file << body;
  out << "wrote " << c.out_path << '\n';
}

std::string join(const std::vector<RationalVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.to_string();
  return s.empty() ? "(none)" : s;
}

int cmd_roots(const ScenarioConfig& c, std::ostream& out) {
  const RootDatum d = build_datum(c);
  const Group g = generate(d, c.max_order);
  if (c.format == "json") {
    Json j = to_json(d);
    j["cartan"] = d.cartan();
    j["rho"] = to_json(d.rho());
    j["group_order"] = g.order();
    emit(c, j.dump(2) + "\n", out);
    return kExitOk;
  }
  std::ostringstream os;
  os << "type: " << (d.name().empty() ? "(explicit)" : d.name()) << '\n'
     << "dimension: " << d.dim() << ", rank: " << d.rank() << '\n'
     << "lattice basis: " << join(d.lattice().basis()) << '\n'
     << "simple roots: " << join(d.simple_roots()) << '\n'
     << "roots (" << d.all_roots().size() << "): " << join(d.all_roots()) << '\n'
     << "fundamental weights: " << join(d.fundamental_weights()) << '\n'
     << "z basis: " << join(d.z_basis()) << '\n'
     << "rho: " << d.rho().to_string() << '\n'
     << "|W| = " << g.order() << '\n';
  emit(c, os.str(), out);
  return kExitOk;
}

WeightPoint dominant_point(const RootDatum& d, const RationalVector& v) {
  if (v.size() != d.dim())
    throw ConfigError("point " + v.to_string() + " has dimension " + std::to_string(v.size()) + ", expected " +
                      std::to_string(d.dim()));
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Rational p = inner(d.form(), v, d.simple_roots()[i]);
    if (p.sign() < 0)
      throw ConfigError("point " + v.to_string() + " is not dominant: <v,alpha_" + std::to_string(i + 1) +
                        "> = " + p.to_string() + " < 0");
  }
  const auto wp = decompose(d, v);
  if (!wp) throw ConfigError("point " + v.to_string() + " is not in the weight group");
  return *wp;
}

int cmd_psi(const ScenarioConfig& c, const std::string& point, std::ostream& out) {
  if (point.empty()) throw ConfigError("psi needs --point, e.g. --point 1,3");
  const RootDatum d = build_datum(c);
  const Group g = generate(d, c.max_order);
  const auto rows = parse_rows(point);
  if (rows.size() != 1) throw ConfigError("--point takes a single vector");
  const WeightPoint u = dominant_point(d, rows.front());
  const Character image = psi(d, g, u);
  const auto orbit = to_orbit_basis(d, g, image);
  if (c.format == "json") {
    Json j{{"point", rows.front().to_string()},
           {"weight", to_json(u)},
           {"psi", to_json(image)},
           {"orbit", orbit ? to_json(*orbit) : Json()},
           {"text", format_ambient(d, image)}};
    emit(c, j.dump(2) + "\n", out);
    return kExitOk;
  }
  std::string label = format_weights(d, Character::monomial(u)).substr(std::string("χ^").size());
  if (label.front() == '{') label = label.substr(1, label.size() - 2);
  std::ostringstream os;
  os << "point: " << rows.front().to_string() << " = " << label << '\n'
     << "psi: " << format_ambient(d, image) << '\n'
     << "orbit basis: " << (orbit ? format_orbit(d, *orbit) : std::string("(not invariant)")) << '\n';
  emit(c, os.str(), out);
  return kExitOk;
}

// Terms may name points as {"z": [...], "lambda": [...]} or as an ambient vector.
InvariantCharacter read_invariant(const RootDatum& d, const Group& g, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw ParseError("malformed document: expected {\"basis\": ..., \"terms\": [...]}");
  Json normalized = j;
  for (auto& t : normalized["terms"]) {
    if (t.is_object() && t.contains("point") && t.at("point").is_array()) {
      const RationalVector v = vector_from_json(t.at("point"));
      const auto wp = v.size() == d.dim() ? decompose(d, v) : std::nullopt;
      if (!wp) throw ConfigError("term point " + v.to_string() + " is not in the weight group");
      t["point"] = to_json(*wp);
    }
  }
  const std::string basis = normalized.value("basis", std::string("orbit"));
  if (basis == "monomial") {
    const auto inv = to_orbit_basis(d, g, character_from_json(normalized));
    if (!inv) throw ConfigError("input character is not W-invariant");
    return *inv;
  }
  normalized["basis"] = "orbit";
  try {
    return invariant_character_from_json(normalized);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("input is not an invariant character in the orbit basis: ") + e.what());
  }
}

int cmd_invpsi(const ScenarioConfig& c, const std::string& path, std::ostream& out) {
  const RootDatum d = build_datum(c);
  const Group g = generate(d, c.max_order);
  const InvariantCharacter target = read_invariant(d, g, read_document(path));
  const Character pre = psi_inverse(d, g, target);
  const auto back = to_orbit_basis(d, g, psi_linear(d, g, pre));
  if (!back || !(*back == target)) throw std::logic_error("psi_inverse round trip failed");
  if (c.format == "json") {
    emit(c, Json{{"input", to_json(target)}, {"preimage", to_json(pre)}, {"text", format_weights(d, pre)}}.dump(2) + "\n",
         out);
    return kExitOk;
  }
  emit(c, "input: " + format_orbit(d, target) + "\npreimage: " + format_weights(d, pre) + "\n", out);
  return kExitOk;
}

std::string counts_csv(const std::vector<GradedCounts>& counts) {
  std::ostringstream os;
  os << "t,total_points,orbit_count,domain_slice_count\n";
  for (const auto& r : counts) os << r.t << ',' << r.total_points << ',' << r.orbit_count << ',' << r.domain_slice_count << '\n';
  return os.str();
}

int cmd_check(const ScenarioConfig& c, std::ostream& out) {
  VerificationReport report;
  std::vector<GradedCounts> counts;
  if (c.kind == ObjectKind::Figure1) {
    report = figure1_fixture();
  } else {
    const RootDatum d = build_datum(c);
    const Group g = generate(d, c.max_order);
    switch (c.kind) {
      case ObjectKind::Polytope: {
        const ProjectiveOptions opts{c.t_max, c.sample_count, c.seed};
        const LatticePolytope p = build_polytope(c, d);
        report = verify_projective(d, g, p, opts);
        counts = graded_counts(d, g, p, c.t_max);
        break;
      }
      case ObjectKind::Semigroup:
      case ObjectKind::Cone: {
        AffineOptions opts;
        opts.height_bound = c.height_bound;
        opts.sample_count = c.sample_count;
        opts.seed = c.seed;
        opts.box_bound = c.box_bound;
        opts.saturation_degree = c.saturation_degree;
        const GradedSemigroup s = build_semigroup(c, d);
        if (c.kind == ObjectKind::Cone) {
          const RootDatum gd = graded_datum(d);
          report = verify_affine(gd, generate(gd, c.max_order), s, opts);
        } else {
          report = verify_affine(d, g, s, opts);
        }
        break;
      }
      default:
        throw ConfigError("check needs a polytope or semigroup (--polytope, --semigroup or --fixture)");
    }
  }
  if (!c.name.empty()) report.scenario = c.name + " (" + report.scenario + ")";

  std::string body;
  if (c.format == "json") {
    body = report.to_json().dump(2) + "\n";
  } else if (c.format == "csv") {
    if (!counts.empty()) {
      body = counts_csv(counts);
    } else {
      body = "name,passed\n";
      for (const auto& r : report.checks) body += "\"" + r.name + "\"," + (r.passed ? "true" : "false") + "\n";
    }
  } else {
    body = report.to_text();
    if (!counts.empty()) body += "\ngraded counts\n" + counts_csv(counts);
  }
  emit(c, body, out);
  if (!c.out_path.empty())
    out << report.checks.size() << " checks, " << report.failures() << " failed\n";
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_hilbert(const ScenarioConfig& c, std::ostream& out) {
  if (c.kind != ObjectKind::Polytope && c.kind != ObjectKind::Cone)
    throw ConfigError("hilbert needs a polytope (--polytope or a polytope fixture)");
  const RootDatum d = build_datum(c);
  const Group g = generate(d, c.max_order);
  const auto counts = graded_counts(d, g, build_polytope(c, d), c.t_max);
  if (c.format == "json") {
    Json rows = Json::array();
    for (const auto& r : counts)
      rows.push_back(Json{{"t", r.t},
                          {"total_points", r.total_points},
                          {"orbit_count", r.orbit_count},
                          {"domain_slice_count", r.domain_slice_count}});
    emit(c, rows.dump(2) + "\n", out);
  } else {
    emit(c, counts_csv(counts), out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with invariant rings of reflection groups acting on lattices", "reflquot"};
  app.require_subcommand(1);
  Flags f;

  auto* roots = app.add_subcommand("roots", "Print the adapted simple roots, root system, weights and |W|");
  auto* psi_cmd = app.add_subcommand("psi", "Expand psi(chi^u) for a dominant point u");
  auto* invpsi = app.add_subcommand("invpsi", "Preimage under psi of an invariant character read from a JSON file");
  auto* check = app.add_subcommand("check", "Run the verification checks for a scenario");
  auto* hilbert = app.add_subcommand("hilbert", "Graded counts t, |tP|, orbits, |tP ∩ D| as CSV");
  auto* config = app.add_subcommand("config", "Print the resolved scenario config");
  auto* fixtures = app.add_subcommand("fixtures", "List the bundled fixtures");

  std::map<CLI::App*, Options> options;
  for (auto* sub : {roots, psi_cmd, invpsi, check, hilbert, config}) options[sub] = add_scenario_flags(sub, f);
  psi_cmd->add_option("--point", f.point, "Ambient coordinates, e.g. 1,3");
  invpsi->add_option("file", f.input, "JSON invariant character")->required();

  std::vector<std::string> argv_store{"reflquot"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << "run 'reflquot --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (fixtures->parsed()) {
      for (const auto& n : fixture_names()) out << n << '\n';
      return kExitOk;
    }
    CLI::App* sub = app.get_subcommands().front();
    const ScenarioConfig c = resolve(f, options.at(sub));
    if (sub == roots) return cmd_roots(c, out);
    if (sub == psi_cmd) return cmd_psi(c, f.point, out);
    if (sub == invpsi) return cmd_invpsi(c, f.input, out);
    if (sub == check) return cmd_check(c, out);
    if (sub == hilbert) return cmd_hilbert(c, out);
    if (sub == config) {
      emit(c, write_config(c), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace reflquot::cli

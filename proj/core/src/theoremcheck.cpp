#include "reflquot/theoremcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "reflquot/lp.hpp"

namespace reflquot {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string indexed(const char* base, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", i);
  return std::string(base) + "[" + buf + "]";
}

WeightPoint add_points(const WeightPoint& a, const WeightPoint& b) {
  WeightPoint out{a.z + b.z, a.lambda};
  for (std::size_t i = 0; i < out.lambda.size(); ++i) out.lambda[i] = checked_add(out.lambda[i], b.lambda[i]);
  return out;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  for (const auto& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

// Lattice points whose basis coordinates all lie in [-bound, bound].
std::vector<RationalVector> lattice_box(const Lattice& lattice, int bound) {
  const std::size_t n = lattice.dim();
  std::vector<RationalVector> out;
  std::vector<long> c(n, -bound);
  for (;;) {
    out.push_back(lattice.from_coordinates(RationalVector::from_ints(c)));
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

Json points_json(const std::vector<RationalVector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.to_string());
  return a;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Coefficient coefficient() {
    const long c = between(-3, 2);
    return c >= 0 ? c + 1 : c;
  }
  /// Up to k distinct indices below n.
  std::vector<std::size_t> distinct(std::size_t n, std::size_t k) {
    std::set<std::size_t> picked;
    k = std::min(k, n);
    while (picked.size() < k) picked.insert(index(n));
    return {picked.begin(), picked.end()};
  }

 private:
  std::mt19937_64 rng_;
};

Character random_character(Sampler& rng, const std::vector<WeightPoint>& pool, std::size_t max_terms) {
  Character f;
  if (pool.empty()) return f;
  const auto k = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_terms)));
  for (auto i : rng.distinct(pool.size(), k)) f.add_term(pool[i], rng.coefficient());
  return f;
}

Json character_json(const RootDatum& datum, const Character& f) {
  return Json{{"weights", format_weights(datum, f)}, {"ambient", format_ambient(datum, f)}};
}

}  // namespace

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

void VerificationReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
}

Json VerificationReport::to_json(bool include_timing) const {
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"parameters", c.parameters}, {"detail", c.detail}});
  Json out{{"scenario", scenario},
           {"group_type", group_type},
           {"group_order", group_order},
           {"object", object_summary},
           {"seed", seed},
           {"passed", all_passed()},
           {"check_count", checks.size()},
           {"failures", failures()},
           {"checks", std::move(cs)},
           {"tables", tables}};
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "scenario: " << scenario << '\n'
     << "group: " << (group_type.empty() ? "(explicit)" : group_type) << ", order " << group_order << '\n'
     << "object: " << object_summary << '\n'
     << "seed: " << seed << '\n';
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << "  " << c.detail.dump();
    os << '\n';
  }
  os << checks.size() << " checks, " << failures() << " failed\n";
  return os.str();
}

VerificationReport verify_affine(const RootDatum& datum, const Group& group, const GradedSemigroup& s,
                                 const AffineOptions& options) {
  const auto start = Clock::now();
  if (s.dim() != datum.dim()) throw VerificationError("semigroup dimension does not match the root datum");
  if (!same_lattice(s.lattice(), datum.lattice()))
    throw VerificationError("semigroup lattice differs from the lattice of the root datum");
  if (!preserves(group, s)) throw VerificationError("the group does not preserve the semigroup");
  if (!s.is_polytope_mode()) {
    const auto sat = check_saturated(s, options.saturation_degree);
    if (!sat.saturated)
      throw VerificationError("semigroup is not saturated: " + sat.counterexample->to_string() +
                              " lies in the cone but is not generated");
  }
  if (options.box_bound < 0 || options.sample_count < 0) throw std::invalid_argument("negative option");

  VerificationReport report;
  report.scenario = "affine";
  report.group_type = datum.name();
  report.group_order = group.order();
  report.object_summary = s.summary();
  report.seed = options.seed;

  // Dominant lattice points of the box, split by membership in S.
  std::vector<RationalVector> inside, outside;
  for (const auto& x : lattice_box(datum.lattice(), options.box_bound)) {
    if (!in_fundamental_domain(datum, x) || height(datum, x) > options.height_bound) continue;
    (s.contains(x) ? inside : outside).push_back(x);
  }
  // Dominant weights off the lattice lie outside S as well.
  const std::size_t shift_sources = std::min<std::size_t>(inside.size(), 20);
  for (std::size_t k = 0; k < shift_sources; ++k) {
    for (const auto& lam : datum.fundamental_weights()) {
      const RationalVector y = inside[k] + lam;
      if (!datum.lattice().contains(y)) outside.push_back(y);
    }
    for (const auto& z : datum.z_basis()) outside.push_back(inside[k] + Rational(1, 2) * z);
  }
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());

  auto weights_of = [&](const std::vector<RationalVector>& pts) {
    std::vector<WeightPoint> out;
    for (const auto& x : pts) out.push_back(*decompose(datum, x));
    return out;
  };
  const auto inside_w = weights_of(inside);
  const auto outside_w = weights_of(outside);
  std::vector<WeightPoint> all_w = inside_w;
  all_w.insert(all_w.end(), outside_w.begin(), outside_w.end());
  report.tables["dominant_points_in_S"] = inside.size();
  report.tables["dominant_points_outside_S"] = outside.size();

  for (std::size_t k = 0; k < inside.size(); ++k) {
    const auto& u = inside[k];
    const Json params{{"u", u.to_string()}};
    const auto sc = support_check(datum, group, inside_w[k]);
    Json detail{{"max_coeff_one", sc.max_coeff_one},
                {"all_below", sc.all_below},
                {"delta_integrality", sc.delta_integrality},
                {"expansion", format_orbit(datum, sc.expansion)}};
    if (sc.counterexample) detail["counterexample"] = reflquot::to_json(*sc.counterexample);
    report.add({"lemma_support[u=" + u.to_string() + "]", params, sc.ok(), std::move(detail)});

    const auto rc = restriction_check(datum, group, s, u);
    Json rdetail = Json::object();
    if (rc.counterexample) rdetail["outside_point"] = rc.counterexample->to_string();
    report.add({"lemma_restriction[u=" + u.to_string() + "]", params, rc.ok, std::move(rdetail)});
  }

  Sampler rng(options.seed);
  const std::size_t max_terms = 5;
  for (int i = 0; i < options.sample_count && !all_w.empty(); ++i) {
    const auto& a = all_w[rng.index(all_w.size())];
    const auto& b = all_w[rng.index(all_w.size())];
    const Character lhs = psi(datum, group, add_points(a, b));
    const Character rhs = psi(datum, group, a) * psi(datum, group, b);
    report.add({indexed("psi_multiplicative", i),
                Json{{"u", reconstruct(datum, a).to_string()}, {"v", reconstruct(datum, b).to_string()}},
                lhs == rhs, Json{{"terms", lhs.size()}}});
  }

  for (int i = 0; i < options.sample_count && !all_w.empty(); ++i) {
    // Orbit-basis input: inverse image must be dominant and map back.
    InvariantCharacter g;
    const auto k = static_cast<std::size_t>(rng.between(1, max_terms));
    for (auto j : rng.distinct(all_w.size(), k)) g.add_term(all_w[j], rng.coefficient());
    const Character h = psi_inverse(datum, group, g);
    bool dominant = std::all_of(h.terms().begin(), h.terms().end(), [](const auto& t) { return t.first.is_dominant(); });
    const auto back = dominant ? to_orbit_basis(datum, group, psi_linear(datum, group, h)) : std::nullopt;
    // Monomial input: psi then inverse is the identity.
    const Character f = random_character(rng, all_w, max_terms);
    const auto img = to_orbit_basis(datum, group, psi_linear(datum, group, f));
    const bool forward = img && psi_inverse(datum, group, *img) == f;
    const bool ok = dominant && back && *back == g && forward;
    report.add({indexed("psi_roundtrip", i), Json{{"input", format_orbit(datum, g)}},
                ok, Json{{"inverse", format_weights(datum, h)}, {"dominant", dominant}, {"forward", forward}}});
  }

  for (int i = 0; i < options.sample_count && !outside_w.empty(); ++i) {
    Character f = random_character(rng, all_w, max_terms - 1);
    const auto& seed_term = outside_w[rng.index(outside_w.size())];
    if (f.coefficient(seed_term) == 0) f.add_term(seed_term, rng.coefficient());
    const Character img = psi_linear(datum, group, f);
    std::optional<RationalVector> witness;
    for (const auto& x : support_points(datum, img))
      if (!s.contains(x)) {
        witness = x;
        break;
      }
    Json detail = character_json(datum, img);
    if (witness) detail["outside_point"] = witness->to_string();
    report.add({indexed("containment_outside", i), character_json(datum, f), witness.has_value(), std::move(detail)});
  }

  for (int i = 0; i < options.sample_count && !inside_w.empty(); ++i) {
    const Character f = random_character(rng, inside_w, max_terms);
    const Character img = psi_linear(datum, group, f);
    std::optional<RationalVector> bad;
    for (const auto& x : support_points(datum, img))
      if (!s.contains(x)) {
        bad = x;
        break;
      }
    Json detail = character_json(datum, img);
    if (bad) detail["outside_point"] = bad->to_string();
    report.add({indexed("containment_inside", i), character_json(datum, f), !bad.has_value(), std::move(detail)});
  }

  report.finalize();
  report.elapsed_ms = ms_since(start);
  return report;
}

std::vector<std::vector<RationalVector>> brute_force_invariants(const RootDatum& datum, const Group& group,
                                                                const std::vector<RationalVector>& points) {
  (void)datum;
  const std::set<RationalVector> all(points.begin(), points.end());
  std::set<RationalVector> seen;
  std::vector<std::vector<RationalVector>> out;
  for (const auto& x : all) {
    if (seen.count(x)) continue;
    std::set<RationalVector> orb;
    for (const auto& g : group.elements()) {
      RationalVector y = g.apply(x);
      if (!all.count(y)) throw VerificationError("point set is not W-stable: " + y.to_string() + " is missing");
      orb.insert(std::move(y));
    }
    seen.insert(orb.begin(), orb.end());
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

std::size_t orbit_count(const RootDatum& datum, const Group& group, const std::vector<RationalVector>& points) {
  std::set<RationalVector> reps;
  for (const auto& x : points) reps.insert(dominant_representative(datum, group, x).rep);
  return reps.size();
}

std::vector<GradedCounts> graded_counts(const RootDatum& datum, const Group& group, const LatticePolytope& p,
                                        int t_max) {
  if (t_max < 0) throw std::invalid_argument("graded_counts: t_max must be non-negative");
  std::vector<GradedCounts> out;
  for (long t = 0; t <= t_max; ++t) {
    const auto pts = lattice_points(p, t);
    GradedCounts c;
    c.t = t;
    c.total_points = pts.size();
    c.orbit_count = orbit_count(datum, group, pts);
    c.domain_slice_count = slice_by_domain(datum, pts).size();
    c.brute_force_count = brute_force_invariants(datum, group, pts).size();
    out.push_back(c);
  }
  return out;
}

std::vector<RationalVector> domain_polytope_points(const RootDatum& datum, const LatticePolytope& p, long t) {
  if (t < 0) throw std::invalid_argument("domain_polytope_points: t must be non-negative");
  const std::size_t n = p.dim();
  if (t == 0) return {RationalVector(n)};
  const auto& verts = p.vertices();
  const std::size_t k = verts.size();
  // Variables c_1..c_k: x/t = sum c_i v_i with c in the simplex and the combination in D.
  std::vector<LinearConstraint> fixed;
  for (std::size_t i = 0; i < k; ++i) fixed.push_back({RationalVector::unit(k, i), 0, Relation::GreaterEqual});
  fixed.push_back({RationalVector(std::vector<Rational>(k, Rational(1))), 1, Relation::Equal});
  for (const auto& alpha : datum.simple_roots()) {
    RationalVector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = inner(datum.form(), verts[i], alpha);
    fixed.push_back({row, 0, Relation::GreaterEqual});
  }
  std::vector<RationalVector> out;
  for (const auto& x : box_candidates(p, t)) {
    auto cons = fixed;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = verts[i][j];
      cons.push_back({row, x[j] / Rational(t), Relation::Equal});
    }
    if (lp_feasible(cons).feasible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_projective(const RootDatum& datum, const Group& group, const LatticePolytope& p,
                                     const ProjectiveOptions& options) {
  const auto start = Clock::now();
  if (p.dim() != datum.dim()) throw VerificationError("polytope dimension does not match the root datum");
  if (!same_lattice(p.lattice(), datum.lattice()))
    throw VerificationError("polytope lattice differs from the lattice of the root datum");
  if (!preserves(group, std::span(p.vertices()))) throw VerificationError("the group does not permute the vertices");
  if (options.t_max < 0 || options.sample_count < 0) throw std::invalid_argument("negative option");

  VerificationReport report;
  report.scenario = "projective";
  report.group_type = datum.name();
  report.group_order = group.order();
  report.object_summary = "polytope with " + std::to_string(p.vertices().size()) + " vertices" +
                          (p.full_dimensional() ? "" : " (not full-dimensional)");
  report.seed = options.seed;

  const auto counts = graded_counts(datum, group, p, options.t_max);
  Json table = Json::array();
  std::vector<std::vector<RationalVector>> slices;
  for (const auto& c : counts) {
    const auto pts = lattice_points(p, c.t);
    const auto slice = slice_by_domain(datum, pts);
    const auto direct = domain_polytope_points(datum, p, c.t);
    table.push_back(Json{{"t", c.t},
                         {"points", c.total_points},
                         {"orbits", c.orbit_count},
                         {"domain_slice", c.domain_slice_count},
                         {"brute_force", c.brute_force_count}});
    const std::string tag = "[t=" + std::to_string(c.t) + "]";
    const bool dim_ok = c.orbit_count == c.domain_slice_count && c.brute_force_count == c.domain_slice_count &&
                        direct.size() == c.domain_slice_count;
    report.add({"graded_dimension" + tag, Json{{"t", c.t}}, dim_ok,
                Json{{"orbits", c.orbit_count},
                     {"domain_slice", c.domain_slice_count},
                     {"brute_force", c.brute_force_count},
                     {"domain_polytope", direct.size()}}});
    report.add({"cone_identity" + tag, Json{{"t", c.t}}, slice == direct,
                Json{{"slice", points_json(slice)}, {"domain_polytope", points_json(direct)}}});
    slices.push_back(slice);
  }
  report.tables["graded_counts"] = std::move(table);

  const RootDatum gd = graded_datum(datum);
  const Group gg = generate(gd);
  const GradedSemigroup s = GradedSemigroup::cone_over(p);
  auto lift = [](long t, const RationalVector& x) {
    RationalVector out(x.size() + 1);
    out[0] = t;
    for (std::size_t i = 0; i < x.size(); ++i) out[i + 1] = x[i];
    return out;
  };
  Sampler rng(options.seed);
  for (int i = 0; i < options.sample_count; ++i) {
    const long t1 = rng.between(0, options.t_max);
    const long t2 = rng.between(0, options.t_max - t1);
    const RationalVector u = lift(t1, slices[t1][rng.index(slices[t1].size())]);
    const RationalVector v = lift(t2, slices[t2][rng.index(slices[t2].size())]);
    const auto a = *decompose(gd, u);
    const auto b = *decompose(gd, v);
    const Character prod = psi(gd, gg, a) * psi(gd, gg, b);
    const bool mult = prod == psi(gd, gg, add_points(a, b));
    std::optional<RationalVector> bad;
    for (const auto& x : support_points(gd, prod))
      if (GradedSemigroup::degree(x) != t1 + t2 || !s.contains(x)) {
        bad = x;
        break;
      }
    Json detail{{"multiplicative", mult}, {"terms", prod.size()}};
    if (bad) detail["bad_point"] = bad->to_string();
    report.add({indexed("graded_ring", i), Json{{"u", u.to_string()}, {"v", v.to_string()}}, mult && !bad,
                std::move(detail)});
  }

  report.finalize();
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport figure1_fixture() {
  const auto start = Clock::now();
  const Lattice z2 = Lattice::standard(2);
  RootDatum datum = adapt_simple_system(BilinearForm::standard(2), z2, {RationalVector::from_ints({-1, 1})});
  datum.set_name("A1");
  const Group group = generate(datum);
  const auto s = GradedSemigroup::generated_by({RationalVector::from_ints({1, 0}), RationalVector::from_ints({0, 1})}, z2);

  AffineOptions opts;
  opts.sample_count = 10;
  opts.box_bound = 4;
  VerificationReport report = verify_affine(datum, group, s, opts);
  report.scenario = "figure1";

  const auto u = RationalVector::from_ints({1, 3});
  const RationalVector lambda{Rational(-1, 2), Rational(1, 2)};
  const RationalVector z{Rational(1, 2), Rational(1, 2)};
  const auto wp = *decompose(datum, u);
  const bool decomposition = datum.fundamental_weights().front() == lambda && wp.z == Rational(4) * z &&
                             wp.lambda == std::vector<std::int64_t>{2} &&
                             Rational(4) * z + Rational(2) * lambda == u;
  report.add({"figure1_decomposition[u=(1,3)]", Json{{"u", u.to_string()}}, decomposition,
              Json{{"lambda", datum.fundamental_weights().front().to_string()},
                   {"z_part", wp.z.to_string()},
                   {"lambda_coords", wp.lambda}}});

  const Character got = psi(datum, group, wp);
  Character expected;
  expected.add_term(*decompose(datum, Rational(4) * z + Rational(2) * lambda), 1);
  expected.add_term(*decompose(datum, Rational(4) * z), 2);
  expected.add_term(*decompose(datum, Rational(4) * z - Rational(2) * lambda), 1);
  Json terms = Json::array();
  for (const auto& [p, c] : got.terms()) terms.push_back(Json{{"point", reconstruct(datum, p).to_string()}, {"coeff", c}});
  report.add({"figure1_expansion[u=(1,3)]", Json{{"u", u.to_string()}}, got == expected,
              Json{{"psi", format_ambient(datum, got)}, {"terms", std::move(terms)}}});

  const auto orbit_form = to_orbit_basis(datum, group, got);
  InvariantCharacter expected_orbit;
  expected_orbit.add_term(*decompose(datum, Rational(4) * z + Rational(2) * lambda), 1);
  expected_orbit.add_term(*decompose(datum, Rational(4) * z), 2);
  report.add({"figure1_orbit_basis[u=(1,3)]", Json{{"u", u.to_string()}}, orbit_form && *orbit_form == expected_orbit,
              Json{{"orbit_basis", orbit_form ? format_orbit(datum, *orbit_form) : std::string("not invariant")}}});
  report.finalize();
  report.elapsed_ms = ms_since(start);
  return report;
}

std::vector<WeightPoint> dominant_weights(const RootDatum& datum, const Rational& height_bound) {
  const std::size_t r = datum.rank();
  const RationalVector zero(datum.dim());
  std::vector<WeightPoint> out;
  if (height_bound.sign() < 0) return out;
  std::vector<std::int64_t> b(r, 0);
  // Each lambda_i has positive height, so the bound caps every coefficient.
  std::vector<std::int64_t> cap(r);
  for (std::size_t i = 0; i < r; ++i) cap[i] = floor(height_bound / datum.weight_heights()[i]).to_int64();
  for (;;) {
    Rational h;
    for (std::size_t i = 0; i < r; ++i) h += Rational(static_cast<long>(b[i])) * datum.weight_heights()[i];
    if (h <= height_bound) out.push_back(WeightPoint{zero, b});
    std::size_t i = 0;
    while (i < r && b[i] == cap[i]) b[i++] = 0;
    if (i == r) break;
    ++b[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reflquot

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Library results are checked against the reference computations in oracles.hpp.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "reflquot/named_types.hpp"
#include "reflquot/theoremcheck.hpp"

using namespace reflquot;
using oracle::Point;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Plain-data view of a datum for the oracles.
struct Plain {
  oracle::Gram gram;
  std::vector<Point> simple;
  std::vector<Point> weights;
};

Plain plain(const RootDatum& d) {
  Plain p;
  for (std::size_t i = 0; i < d.dim(); ++i) p.gram.push_back(d.form().gram().row(i).coords());
  for (const auto& a : d.simple_roots()) p.simple.push_back(a.coords());
  for (const auto& w : d.fundamental_weights()) p.weights.push_back(w.coords());
  return p;
}

oracle::AmbientCharacter oracle_psi(const Plain& p, const Point& z, const std::vector<std::int64_t>& b) {
  const std::vector<long> bl(b.begin(), b.end());
  return oracle::psi_expand(z, p.weights, bl, [&](const Point& v) { return oracle::reflection_orbit(p.gram, p.simple, v); });
}

void accumulate(oracle::AmbientCharacter& acc, const oracle::AmbientCharacter& f, std::int64_t c) {
  for (const auto& [pt, k] : f) acc[pt] += c * k;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

oracle::AmbientCharacter ambient(const RootDatum& d, const Character& f) {
  oracle::AmbientCharacter out;
  for (const auto& [p, c] : f.terms()) out[reconstruct(d, p).coords()] = c;
  return out;
}

bool nonneg_integers(const std::optional<std::vector<Rational>>& c) {
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.is_integer() && x.sign() >= 0; });
}

std::string show(const Point& p) { return RationalVector(p).to_string(); }

// The group fixtures.
std::vector<std::string> group_fixtures() { return {"A1", "A2", "B2", "A3", "B3", "C3", "G2"}; }

// Semigroup fixtures: the coordinate orthants under A_{n-1} and the graded cone over the B2 cross-polytope.
struct SemigroupFixture {
  std::string name;
  RootDatum datum;
  GradedSemigroup s;
  std::function<bool(const Point&)> member;  // oracle membership in S
  int box;                                   // coordinate bound for enumerating u
};

bool orthant_member(const Point& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

bool cross_cone_member(const Point& x) {
  if (!std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_integer(); })) return false;
  return abs(x[1]) + abs(x[2]) <= x[0];
}

std::vector<SemigroupFixture> semigroup_fixtures() {
  std::vector<SemigroupFixture> out;
  for (int n = 2; n <= 4; ++n) {
    std::vector<RationalVector> gens;
    for (int i = 0; i < n; ++i) gens.push_back(RationalVector::unit(n, i));
    out.push_back({"orthant Z^" + std::to_string(n) + " / A" + std::to_string(n - 1),
                   named_root_datum('A', n - 1), GradedSemigroup::generated_by(gens, Lattice::standard(n)),
                   orthant_member, n == 4 ? 5 : 6});
  }
  const LatticePolytope cross({RationalVector::from_ints({1, 0}), RationalVector::from_ints({-1, 0}),
                               RationalVector::from_ints({0, 1}), RationalVector::from_ints({0, -1})},
                              Lattice::standard(2));
  out.push_back({"B2 cross-polytope cone", graded_datum(named_root_datum("B2")), GradedSemigroup::cone_over(cross),
                 cross_cone_member, 6});
  return out;
}

// Integer points of the box [-box, box]^n that are dominant, in S, and of height <= bound.
std::vector<Point> dominant_points_of_s(const SemigroupFixture& f, const Plain& p, const Rational& bound) {
  const std::size_t n = f.datum.dim();
  Point rho(n);
  for (const auto& w : p.weights)
    for (std::size_t i = 0; i < n; ++i) rho[i] += w[i];
  std::vector<Point> out;
  std::vector<long> c(n, -f.box);
  for (;;) {
    Point x;
    for (long v : c) x.emplace_back(v);
    if (f.member(x) && oracle::dominant(p.gram, p.simple, x) && oracle::inner(p.gram, x, rho) <= bound)
      out.push_back(x);
    std::size_t i = 0;
    while (i < n && c[i] == f.box) c[i++] = -f.box;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

// -- criteria ---------------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const RootDatum d = adapt_simple_system(BilinearForm::standard(2), Lattice::standard(2),
                                          {RationalVector::from_ints({-1, 1})});
  const Group g = generate(d);
  const RationalVector lambda{Rational(-1, 2), Rational(1, 2)};
  const RationalVector z{Rational(1, 2), Rational(1, 2)};
  const RationalVector u = RationalVector::from_ints({1, 3});
  const auto wp = decompose(d, u);
  o.pass = d.fundamental_weights() == std::vector<RationalVector>{lambda} && wp && wp->z == Rational(4) * z &&
           wp->lambda == std::vector<std::int64_t>{2} && Rational(4) * z + Rational(2) * lambda == u;

  const oracle::AmbientCharacter expected{{{1, 3}, 1}, {{2, 2}, 2}, {{3, 1}, 1}};
  const Character image = psi(d, g, *wp);
  const auto swap_orbit = [](const Point& v) { return std::set<Point>{v, Point{v[1], v[0]}}; };
  o.pass = o.pass && ambient(d, image) == expected &&
           oracle::psi_expand({Rational(2), Rational(2)}, {lambda.coords()}, {2}, swap_orbit) == expected &&
           format_ambient(d, image) == "χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}";
  const VerificationReport r = figure1_fixture();
  o.pass = o.pass && r.all_passed();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  o.pass = o.pass && ms < 1000;
  o.detail = "psi = " + format_ambient(d, image) + ", fixture checks " + std::to_string(r.checks.size() - r.failures()) +
             "/" + std::to_string(r.checks.size()) + ", " + std::to_string(ms) + " ms";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream detail;
  for (const char* name : {"A2", "B2", "A3", "B3", "C3"}) {
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    const Plain p = plain(d);
    const auto ws = dominant_weights(d, 6);
    std::size_t ok = 0;
    for (const auto& u : ws) {
      const SupportCheck sc = support_check(d, g, u);
      const oracle::AmbientCharacter exp = oracle_psi(p, u.z.coords(), u.lambda);
      const Point up = reconstruct(d, u).coords();
      bool good = sc.ok() && ambient(d, psi(d, g, u)) == exp && exp.count(up) && exp.at(up) == 1;
      for (const auto& [v, c] : exp) {
        Point diff(up.size());
        for (std::size_t i = 0; i < up.size(); ++i) diff[i] = up[i] - v[i];
        good = good && nonneg_integers(oracle::delta_coordinates(p.gram, p.simple, diff));
      }
      if (good) {
        ++ok;
      } else if (o.pass) {
        o.pass = false;
        detail << "[" << name << " fails at " << show(up) << "] ";
      }
    }
    o.pass = o.pass && !ws.empty();
    detail << name << " " << ok << "/" << ws.size() << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& f : semigroup_fixtures()) {
    const Group g = generate(f.datum);
    const Plain p = plain(f.datum);
    const auto us = dominant_points_of_s(f, p, 6);
    std::size_t ok = 0;
    for (const auto& u : us) {
      const RestrictionResult r = restriction_check(f.datum, g, f.s, RationalVector(u));
      const auto wp = decompose(f.datum, RationalVector(u));
      bool good = r.ok && wp.has_value();
      if (good)
        for (const auto& [v, c] : oracle_psi(p, wp->z.coords(), wp->lambda)) good = good && f.member(v);
      if (good) {
        ++ok;
      } else if (o.pass) {
        o.pass = false;
        detail << "[" << f.name << " fails at " << show(u) << "] ";
      }
    }
    o.pass = o.pass && !us.empty();
    detail << f.name << " " << ok << "/" << us.size() << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream detail;
  constexpr int kSamples = 200;
  for (const auto& name : group_fixtures()) {
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    const Plain p = plain(d);
    const auto ws = dominant_weights(d, 6);
    std::mt19937_64 rng(4000 + name[0] * 10 + name[1]);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    std::uniform_int_distribution<int> terms(1, 5), zk(-4, 4), coeff(1, 5), sign(0, 1);
    int ok = 0;
    for (int s = 0; s < kSamples; ++s) {
      InvariantCharacter h;
      const int k = terms(rng);
      for (int t = 0; t < k; ++t) {
        WeightPoint u = ws[pick(rng)];
        for (const auto& zb : d.z_basis()) u.z += Rational(zk(rng), 2) * zb;
        h.add_term(u, sign(rng) ? coeff(rng) : -coeff(rng));
      }
      const Character pre = psi_inverse(d, g, h);
      bool good = to_orbit_basis(d, g, psi_linear(d, g, pre)) == h;
      oracle::AmbientCharacter lhs, rhs;
      for (const auto& [q, c] : pre.terms()) {
        const RationalVector qv = reconstruct(d, q);
        good = good && q.is_dominant() && oracle::dominant(p.gram, p.simple, qv.coords()) && decompose(d, qv) == q;
        accumulate(lhs, oracle_psi(p, q.z.coords(), q.lambda), c);
      }
      for (const auto& [u, c] : h.terms()) {
        oracle::AmbientCharacter orbit_sum;
        for (const auto& v : oracle::reflection_orbit(p.gram, p.simple, reconstruct(d, u).coords())) orbit_sum[v] = 1;
        accumulate(rhs, orbit_sum, c);
      }
      good = good && lhs == rhs;
      if (good) {
        ++ok;
      } else if (o.pass) {
        o.pass = false;
        detail << "[" << name << " sample " << s << " fails] ";
      }
    }
    detail << name << " " << ok << "/" << kSamples << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::ostringstream detail;
  constexpr int kSamples = 100;
  for (const auto& f : semigroup_fixtures()) {
    const Group g = generate(f.datum);
    const Plain p = plain(f.datum);
    // Dominant points of the weight group z + sum b_i lambda_i with half-integral z steps, split by S.
    std::vector<WeightPoint> inside, outside;
    const std::size_t r = f.datum.rank();
    std::vector<std::int64_t> b(r, 0);
    for (;;) {
      for (int k = -4; k <= 2 * f.box; ++k) {
        const WeightPoint w{Rational(k, 2) * f.datum.z_basis()[0], b};
        (f.member(reconstruct(f.datum, w).coords()) ? inside : outside).push_back(w);
      }
      std::size_t i = 0;
      while (i < r && b[i] == 2) b[i++] = 0;
      if (i == r) break;
      ++b[i];
    }
    std::mt19937_64 rng(5000 + f.datum.dim());
    std::uniform_int_distribution<int> terms(0, 3), coeff(1, 4), sign(0, 1);
    auto pick = [&](const std::vector<WeightPoint>& pool) {
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    int out_ok = 0, in_ok = 0;
    for (int s = 0; s < 2 * kSamples; ++s) {
      const bool want_outside = s < kSamples;
      std::map<WeightPoint, std::int64_t> terms_map;
      if (want_outside) terms_map[pick(outside)] = 1;
      const int extra = terms(rng) + (want_outside ? 0 : 1);
      for (int t = 0; t < extra; ++t) {
        const WeightPoint w = want_outside && sign(rng) ? pick(outside) : pick(inside);
        terms_map[w] = sign(rng) ? coeff(rng) : -coeff(rng);
      }
      Character fchar;
      oracle::AmbientCharacter image;
      for (const auto& [w, c] : terms_map) {
        fchar.add_term(w, c);
        accumulate(image, oracle_psi(p, w.z.coords(), w.lambda), c);
      }
      const bool agrees = ambient(f.datum, psi_linear(f.datum, g, fchar)) == image;
      const bool any_outside =
          std::any_of(image.begin(), image.end(), [&](const auto& kv) { return !f.member(kv.first); });
      if (want_outside) {
        if (agrees && any_outside) ++out_ok;
      } else if (agrees && !any_outside) {
        ++in_ok;
      }
    }
    if (out_ok != kSamples || in_ok != kSamples) o.pass = false;
    detail << f.name << " outside " << out_ok << "/" << kSamples << ", inside " << in_ok << "/" << kSamples << "; ";
  }
  o.detail = detail.str();
  return o;
}

// Graded pieces for criteria 6 and 7, with an oracle point enumeration for each.
struct GradedFixture {
  std::string name;
  RootDatum datum;
  LatticePolytope polytope;
  int t_max;
  std::function<std::vector<Point>(long)> oracle_points;
};

std::vector<GradedFixture> graded_fixtures() {
  std::vector<GradedFixture> out;
  auto rv = [](std::initializer_list<long> v) { return RationalVector::from_ints(v); };
  out.push_back({"square / A1", named_root_datum("A1"),
                 LatticePolytope({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}, Lattice::standard(2)), 5,
                 [](long t) {
                   std::vector<Point> pts;
                   for (long x = 0; x <= t; ++x)
                     for (long y = 0; y <= t; ++y) pts.push_back(oracle::to_point({x, y}));
                   return pts;
                 }});
  out.push_back({"simplex / A2", named_root_datum("A2"),
                 LatticePolytope({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, Lattice::standard(3)), 6,
                 [](long t) {
                   std::vector<Point> pts;
                   for (long x = 0; x <= t; ++x)
                     for (long y = 0; x + y <= t; ++y) pts.push_back(oracle::to_point({x, y, t - x - y}));
                   return pts;
                 }});
  std::vector<RationalVector> perm;
  std::vector<long> q{1, 2, 3, 4};
  do perm.push_back(rv({q[0], q[1], q[2], q[3]}));
  while (std::next_permutation(q.begin(), q.end()));
  out.push_back({"permutohedron / A3", named_root_datum("A3"), LatticePolytope(perm, Lattice::standard(4)), 3,
                 [](long t) {
                   std::vector<Point> pts;
                   for (long a = t; a <= 4 * t; ++a)
                     for (long b = t; b <= 4 * t; ++b)
                       for (long c = t; c <= 4 * t; ++c) {
                         const oracle::IntPoint x{a, b, c, 10 * t - a - b - c};
                         if (oracle::permutohedron_member(x, t)) pts.push_back(oracle::to_point(x));
                       }
                   return pts;
                 }});
  return out;
}

std::vector<std::vector<GradedCounts>>& graded_cache() {
  static std::vector<std::vector<GradedCounts>> cache = [] {
    std::vector<std::vector<GradedCounts>> c;
    for (const auto& f : graded_fixtures()) c.push_back(graded_counts(f.datum, generate(f.datum), f.polytope, f.t_max));
    return c;
  }();
  return cache;
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream detail;
  const auto fixtures = graded_fixtures();
  const auto& counts = graded_cache();
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const auto& f = fixtures[k];
    detail << f.name << " slices";
    for (const auto& c : counts[k]) {
      const long t = c.t;
      std::size_t expected = c.orbit_count;
      if (k == 0) expected = static_cast<std::size_t>((t + 1) * (t + 2) / 2);
      if (k == 1) expected = static_cast<std::size_t>(oracle::weighted_partitions_123(t));
      const bool direct = domain_polytope_points(f.datum, f.polytope, t).size() == c.domain_slice_count;
      if (c.domain_slice_count != expected || !direct || c.total_points != f.oracle_points(t).size()) o.pass = false;
      detail << ' ' << c.domain_slice_count;
    }
    o.pass = o.pass && counts[k].size() == static_cast<std::size_t>(f.t_max + 1);
    detail << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream detail;
  const auto fixtures = graded_fixtures();
  const auto& counts = graded_cache();
  std::size_t pieces = 0;
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const auto& f = fixtures[k];
    for (const auto& c : counts[k]) {
      // Every fixture group here permutes coordinates, so sorting names the orbit.
      auto pts = f.oracle_points(c.t);
      std::set<Point> sorted;
      for (auto p : pts) {
        std::sort(p.begin(), p.end());
        sorted.insert(p);
      }
      std::vector<RationalVector> lib = lattice_points(f.polytope, c.t);
      std::set<Point> lib_set, oracle_set(pts.begin(), pts.end());
      for (const auto& v : lib) lib_set.insert(v.coords());
      const std::size_t brute = brute_force_invariants(f.datum, generate(f.datum), lib).size();
      const bool same = brute == c.orbit_count && c.orbit_count == c.domain_slice_count &&
                        c.brute_force_count == brute && sorted.size() == brute && lib_set == oracle_set;
      if (!same) {
        if (o.pass) detail << "[" << f.name << " t=" << c.t << ": brute " << brute << ", orbits " << c.orbit_count
                           << ", slice " << c.domain_slice_count << ", sorted " << sorted.size() << "] ";
        o.pass = false;
      }
      ++pieces;
    }
  }
  detail << pieces << " graded pieces, brute = orbit = slice = sorted-tuple count";
  o.detail = detail.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::ostringstream detail;
  constexpr int kPairs = 500;
  for (const auto& name : group_fixtures()) {
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    const Plain p = plain(d);
    const auto ws = dominant_weights(d, 8);
    std::mt19937_64 rng(8000 + name[0] * 10 + name[1]);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    int agree = 0, related = 0;
    for (int s = 0; s < kPairs; ++s) {
      const RationalVector u = reconstruct(d, ws[pick(rng)]);
      const RationalVector v = reconstruct(d, ws[pick(rng)]);
      const bool dom = dominance_leq(d, v, u);
      const bool hull = hull_membership(d, g, u, v);
      Point diff(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - v[i];
      const auto c = oracle::delta_coordinates(p.gram, p.simple, diff);
      const bool ref = c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.sign() >= 0; });
      if (dom == hull && dom == ref) ++agree;
      related += dom ? 1 : 0;
    }
    if (agree != kPairs || related == 0 || related == kPairs) o.pass = false;
    detail << name << " " << agree << "/" << kPairs << " (" << related << " related); ";
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& name : group_fixtures()) {
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    const Plain p = plain(d);
    // Dominant lattice points: dominant weights shifted along Z into M.
    std::vector<RationalVector> vs;
    for (const auto& w : dominant_weights(d, 6)) {
      if (d.z_basis().empty()) {
        if (d.lattice().contains(reconstruct(d, w))) vs.push_back(reconstruct(d, w));
        continue;
      }
      for (int k = -12; k <= 12; ++k) {
        const RationalVector v = reconstruct(d, WeightPoint{Rational(k, 12) * d.z_basis()[0], w.lambda});
        if (d.lattice().contains(v)) vs.push_back(v);
      }
    }
    std::size_t checked = 0, bad = 0;
    for (const auto& v : vs)
      for (const auto& e : g.elements()) {
        Point diff(v.size());
        const RationalVector wv = e.apply(v);
        for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - wv[i];
        const auto c = oracle::delta_coordinates(p.gram, p.simple, diff);
        const auto lib = simple_root_coordinates(d, v - wv);
        ++checked;
        if (!nonneg_integers(c) || !lib || lib->coords() != *c) ++bad;
      }
    if (bad != 0 || vs.empty()) o.pass = false;
    detail << name << " " << vs.size() << " points x |W|=" << g.order() << ": " << checked - bad << "/" << checked << "; ";
  }
  o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1 on Z^2 worked example: psi(chi^(1,3)) = chi^(1,3) + 2chi^(2,2) + chi^(3,1)", criterion1},
      {"support lemma for A2, B2, A3, B3, C3 at every dominant weight of height <= 6", criterion2},
      {"restriction lemma on coordinate orthants (A1, A2, A3) and the B2 cone, height <= 6", criterion3},
      {"psi_inverse / psi round trip, 200 random invariant characters per group", criterion4},
      {"containment in Z[S] detected exactly, 100 + 100 samples per semigroup", criterion5},
      {"graded dimensions of square, simplex and permutohedron quotients", criterion6},
      {"brute-force invariants = orbit count = domain slice count", criterion7},
      {"dominance order agrees with orbit-hull membership, 500 pairs per group", criterion8},
      {"v - wv has non-negative integer simple-root coordinates", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " | "
              << o.detail << " [" << ms << " ms]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

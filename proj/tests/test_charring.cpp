#include <doctest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "reflquot/charring.hpp"
#include "reflquot/named_types.hpp"

using namespace reflquot;

namespace {

RationalVector v2(long a, long b) { return RationalVector::from_ints({a, b}); }

RootDatum a1() {
  return adapt_simple_system(BilinearForm::standard(2), Lattice::standard(2), {v2(-1, 1)});
}

WeightPoint wp(const RootDatum& d, const RationalVector& v) { return *decompose(d, v); }

WeightPoint random_dominant(const RootDatum& d, std::mt19937_64& rng, long max_b) {
  std::uniform_int_distribution<long> b(0, max_b), zc(-2, 2);
  WeightPoint p{RationalVector(d.dim()), {}};
  for (std::size_t i = 0; i < d.rank(); ++i) p.lambda.push_back(b(rng));
  for (const auto& z : d.z_basis()) p.z += Rational(zc(rng)) * z;
  return p;
}

oracle::AmbientCharacter ambient(const RootDatum& d, const Character& f) {
  oracle::AmbientCharacter out;
  for (const auto& [p, c] : f.terms()) out[reconstruct(d, p).coords()] = c;
  return out;
}

}  // namespace

TEST_SUITE("charring") {

TEST_CASE("checked arithmetic") {
  constexpr auto big = std::numeric_limits<Coefficient>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 3) == -12);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
}

TEST_CASE("characters drop zero coefficients and multiply by adding exponents") {
  const RootDatum d = a1();
  Character f = Character::monomial(wp(d, v2(1, 3)), 2);
  f.add_term(wp(d, v2(1, 3)), -2);
  CHECK(f.is_zero());
  const Character a = Character::monomial(wp(d, v2(1, 3))) + Character::monomial(wp(d, v2(0, 0)), 3);
  const Character b = Character::monomial(wp(d, v2(3, 1)), -1);
  const Character prod = a * b;
  CHECK(prod.size() == 2);
  CHECK(prod.coefficient(wp(d, v2(4, 4))) == -1);
  CHECK(prod.coefficient(wp(d, v2(3, 1))) == -3);
  CHECK((a - a).is_zero());
}

TEST_CASE("orbit_sum and to_orbit_basis examples") {
  const RootDatum d = a1();
  const Group g = generate(d);
  const Character m = orbit_sum(d, g, wp(d, v2(1, 3)));
  CHECK(m.size() == 2);
  CHECK(m.coefficient(wp(d, v2(3, 1))) == 1);
  CHECK_THROWS_AS(orbit_sum(d, g, wp(d, v2(3, 1))), CharacterError);

  const auto inv = to_orbit_basis(d, g, m + Character::monomial(wp(d, v2(2, 2)), 5));
  REQUIRE(inv);
  CHECK(inv->size() == 2);
  CHECK(inv->coefficient(wp(d, v2(1, 3))) == 1);
  CHECK(inv->coefficient(wp(d, v2(2, 2))) == 5);
  CHECK_FALSE(to_orbit_basis(d, g, Character::monomial(wp(d, v2(1, 3)))));

  InvariantCharacter bad;
  CHECK_THROWS_AS(bad.add_term(wp(d, v2(3, 1)), 1), CharacterError);
}

TEST_CASE("psi on A1 over Z^2") {
  const RootDatum d = a1();
  const Group g = generate(d);
  const Character f = psi(d, g, wp(d, v2(1, 3)));
  CHECK(f.size() == 3);
  CHECK(f.coefficient(wp(d, v2(1, 3))) == 1);
  CHECK(f.coefficient(wp(d, v2(2, 2))) == 2);
  CHECK(f.coefficient(wp(d, v2(3, 1))) == 1);
  CHECK(format_ambient(d, f) == "χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}");
  CHECK(psi(d, g, wp(d, v2(0, 0))) == Character::monomial(wp(d, v2(0, 0))));
  CHECK_THROWS_AS(psi(d, g, wp(d, v2(3, 1))), CharacterError);
}

TEST_CASE("psi_inverse example") {
  const RootDatum d = a1();
  const Group g = generate(d);
  InvariantCharacter target;
  target.add_term(WeightPoint{RationalVector(2), {2}}, 1);
  const Character pre = psi_inverse(d, g, target);
  Character expected = Character::monomial(WeightPoint{RationalVector(2), {2}});
  expected.add_term(WeightPoint{RationalVector(2), {0}}, -2);
  CHECK(pre == expected);
  CHECK(format_weights(d, pre) == "χ^{2λ1} - 2χ^0");
  CHECK(to_orbit_basis(d, g, psi_linear(d, g, pre)) == target);
}

TEST_CASE("psi is multiplicative on dominant monomials") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
      const WeightPoint u = random_dominant(d, rng, 2), v = random_dominant(d, rng, 2);
      const Character uv = Character::monomial(u) * Character::monomial(v);
      CHECK(psi_linear(d, g, uv) == psi(d, g, u) * psi(d, g, v));
    }
  }
}

TEST_CASE("psi and psi_inverse round trip") {
  for (const char* name : {"A2", "B2", "C3"}) {
    CAPTURE(name);
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<Coefficient> coeff(-3, 3);
    for (int i = 0; i < 15; ++i) {
      Character f;
      for (int k = 0; k < 3; ++k) f.add_term(random_dominant(d, rng, 2), coeff(rng));
      const auto image = to_orbit_basis(d, g, psi_linear(d, g, f));
      REQUIRE(image);
      CHECK(psi_inverse(d, g, *image) == f);

      InvariantCharacter h;
      for (int k = 0; k < 3; ++k) h.add_term(random_dominant(d, rng, 2), coeff(rng));
      const Character pre = psi_inverse(d, g, h);
      for (const auto& [p, c] : pre.terms()) CHECK(p.is_dominant());
      CHECK(to_orbit_basis(d, g, psi_linear(d, g, pre)) == h);
    }
  }
}

TEST_CASE("psi agrees with a direct expansion over coordinate permutations") {
  for (const char* name : {"A2", "A3"}) {
    CAPTURE(name);
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    std::vector<oracle::Point> weights;
    for (const auto& w : d.fundamental_weights()) weights.push_back(w.coords());
    std::mt19937_64 rng(31);
    for (int i = 0; i < 8; ++i) {
      const WeightPoint u = random_dominant(d, rng, 2);
      const std::vector<long> b(u.lambda.begin(), u.lambda.end());
      const auto expected = oracle::psi_expand(u.z.coords(), weights, b, oracle::permutation_orbit);
      CHECK(ambient(d, psi(d, g, u)) == expected);
    }
  }
}

TEST_CASE("psi is unitriangular with respect to dominance") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const RootDatum d = named_root_datum(name);
    const Group g = generate(d);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 10; ++i) {
      const WeightPoint u = random_dominant(d, rng, 3);
      const auto expansion = to_orbit_basis(d, g, psi(d, g, u));
      REQUIRE(expansion);
      CHECK(expansion->coefficient(u) == 1);
      const RationalVector uv = reconstruct(d, u);
      for (const auto& [v, c] : expansion->terms()) {
        CHECK(c > 0);
        CHECK(dominance_leq(d, reconstruct(d, v), uv));
        if (!(v == u)) CHECK(height(d, v) < height(d, u));
      }
    }
  }
}

TEST_CASE("support_check on A2 at lambda1 + lambda2") {
  const RootDatum d = named_root_datum("A2");
  const Group g = generate(d);
  const WeightPoint u{RationalVector(3), {1, 1}};
  const SupportCheck sc = support_check(d, g, u);
  CHECK(sc.ok());
  CHECK_FALSE(sc.counterexample);
  CHECK(sc.expansion.size() == 2);
  CHECK(sc.expansion.coefficient(u) == 1);
  CHECK(sc.expansion.coefficient(WeightPoint{RationalVector(3), {0, 0}}) == 3);
}

TEST_CASE("distinct orbit sums are linearly independent") {
  const RootDatum d = named_root_datum("B2");
  const Group g = generate(d);
  std::vector<WeightPoint> us;
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; b <= 2; ++b) us.push_back(WeightPoint{RationalVector(2), {a, b}});
  std::vector<Character> sums;
  std::map<WeightPoint, std::size_t> column;
  for (const auto& u : us) {
    sums.push_back(orbit_sum(d, g, u));
    for (const auto& [p, c] : sums.back().terms()) column.emplace(p, column.size());
  }
  RationalMatrix m(us.size(), column.size());
  for (std::size_t i = 0; i < us.size(); ++i)
    for (const auto& [p, c] : sums[i].terms()) m(i, column.at(p)) = c;
  CHECK(rank(m) == us.size());
}

TEST_CASE("expand inverts to_orbit_basis") {
  const RootDatum d = named_root_datum("G2");
  const Group g = generate(d);
  InvariantCharacter h;
  h.add_term(WeightPoint{RationalVector(2), {1, 0}}, 2);
  h.add_term(WeightPoint{RationalVector(2), {0, 1}}, -1);
  const Character f = expand(d, g, h);
  CHECK(f.size() == 12);
  CHECK(to_orbit_basis(d, g, f) == h);
}

}  // TEST_SUITE

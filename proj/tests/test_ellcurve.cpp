#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "howe/ellcurve.hpp"
#include "oracles.hpp"

using namespace howe;

TEST_CASE("j_invariant") {
  const FieldCtx F(11);
  CHECK(j_invariant({F.zero(), F.one()}) == F.zero());
  CHECK(j_invariant({F.one(), F.zero()}) == F.from_int(1728));
  CHECK(j_invariant({F.one(), F.one()}) == F.from_int(9));
  CHECK_THROWS_AS(j_invariant({F.zero(), F.zero()}), std::invalid_argument);
  // -3, 2: 4(-27) + 27*4 = 0.
  CHECK_THROWS_AS(j_invariant({F.from_int(-3), F.from_int(2)}), std::invalid_argument);
}

TEST_CASE("is_supersingular by hand expansion") {
  const FieldCtx F5(5), F7(7);
  CHECK(is_supersingular({F5.zero(), F5.one()}));
  CHECK(is_supersingular({F7.one(), F7.zero()}));
  CHECK_FALSE(is_supersingular({F5.one(), F5.zero()}));
}

TEST_CASE("is_supersingular agrees with the untruncated Hasse invariant") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    const FieldCtx F(p);
    for (int i = 0; i < 60; ++i) {
      const EllipticCurve E{oracle::random_fq(F, rng), oracle::random_fq(F, rng)};
      if (E.discriminant_factor().is_zero()) continue;
      CHECK(is_supersingular(E) == oracle::naive_supersingular_cubic(E.cubic()));
    }
  }
}

TEST_CASE("supersingular lambda set, small primes") {
  const FieldCtx F5(5);
  CHECK(hasse_polynomial(F5) == UniPoly(F5, {1, 4, 1}));
  const auto s5 = supersingular_lambda_set(F5);
  CHECK(s5.size() == 2);
  for (const Fq& l : s5.lambdas()) {
    CHECK((l * l + F5.from_int(4) * l + F5.one()).is_zero());
    CHECK(is_supersingular(curve_from_roots({F5.zero(), F5.one(), l})));
  }
  const FieldCtx F7(7);
  const auto s7 = supersingular_lambda_set(F7);
  CHECK(s7.size() == 3);
  CHECK(s7.contains(F7.from_int(6)));
}

TEST_CASE("supersingular lambda set invariants") {
  for (std::uint32_t p : {11u, 13u, 17u, 19u, 23u, 101u}) {
    const FieldCtx F(p);
    const auto ss = supersingular_lambda_set(F);
    CHECK(ss.size() == (p - 1) / 2);
    const UniPoly H = hasse_polynomial(F);
    CHECK(poly_gcd(H, H.derivative()).degree() == 0);
    CHECK_FALSE(ss.contains(F.zero()));
    CHECK_FALSE(ss.contains(F.one()));
    for (const Fq& l : ss.lambdas()) {
      for (const Fq& m : lambda_orbit(l)) CHECK(ss.contains(m));
      CHECK(is_supersingular(curve_from_roots({F.zero(), F.one(), l})));
    }
  }
}

TEST_CASE("lambda_of_quartic") {
  const FieldCtx F(11);
  const ProjPoint inf = ProjPoint::infinity(F);
  for (int l = 2; l < 11; ++l)
    CHECK(lambda_of_quartic({inf, {F.zero(), F.one(), F.from_int(l)}}) == F.from_int(l));

  std::mt19937_64 rng(8);
  const auto ss = supersingular_lambda_set(F);
  std::size_t hits = 0;
  for (int i = 0; i < 200; ++i) {
    const auto v = oracle::random_distinct<4>(F, rng);
    const QuarticModel Q{i % 5 ? ProjPoint::finite(v[3]) : inf, {v[0], v[1], v[2]}};
    const Fq l = lambda_of_quartic(Q);
    const bool member = ss.contains(l);
    hits += member;
    CHECK(member == is_supersingular(weierstrass_of_quartic(Q)));

    const MobiusMap m = oracle::random_mobius(F, rng);
    std::array<ProjPoint, 4> pts{Q.b, ProjPoint::finite(v[0]), ProjPoint::finite(v[1]), ProjPoint::finite(v[2])};
    for (auto& x : pts) x = m(x);
    const Fq l2 = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    const auto orbit = lambda_orbit(l);
    CHECK(std::find(orbit.begin(), orbit.end(), l2) != orbit.end());
  }
  CHECK(hits > 0);
}

TEST_CASE("supersingular classes, examples") {
  const FieldCtx F11(11);
  const auto c11 = supersingular_classes(F11);
  REQUIRE(c11.size() == 2);
  CHECK(c11[0].j == F11.zero());
  CHECK(c11[1].j == F11.one());
  const FieldCtx F13(13);
  const auto c13 = supersingular_classes(F13);
  REQUIRE(c13.size() == 1);
  CHECK(c13[0].j == F13.from_int(5));
}

TEST_CASE("supersingular classes match an exhaustive j scan") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const FieldCtx F(p);
    const auto classes = supersingular_classes(F);
    std::set<Fq> js;
    for (const auto& c : classes) {
      js.insert(c.j);
      CHECK(j_invariant(c.curve) == c.j);
      CHECK(c.j.pow(F.order()) == c.j);
      CHECK(is_supersingular(c.curve));
      const auto roots = two_torsion_roots(c.curve);
      CHECK(roots == std::vector<Fq>(c.roots.begin(), c.roots.end()));
    }
    CHECK(js.size() == classes.size());
    CHECK(js == oracle::brute_supersingular_j(F));
    CHECK(classes.size() >= p / 12);
    CHECK(classes.size() <= p / 12 + 2);
    CHECK(enumerate_supersingular_classes(F).size() == classes.size());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "howe/enumerate.hpp"
#include "howe/howe_curve.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {

// A random Mobius map that keeps every root of H finite.
MobiusMap finite_map(const HoweData& H, std::mt19937_64& rng) {
  const FieldCtx& F = H.C.field();
  for (;;) {
    const MobiusMap m = oracle::random_mobius(F, rng);
    bool ok = true;
    for (const Fq& r : H.C.roots()) ok &= m(r).is_finite();
    if (ok) return m;
  }
}

UniPoly cubic(const FieldCtx& F, std::int64_t c0, std::int64_t c1, std::int64_t c2) {
  return UniPoly(F, {c0, c1, c2, 1});
}

}  // namespace

TEST_CASE("Weierstrass splits") {
  const auto& all = WeierstrassSplit::all();
  std::set<std::uint8_t> masks;
  for (const auto& s : all) {
    masks.insert(s.mask());
    CHECK(s.contains_first(0));
    const auto a = s.first(), b = s.second();
    std::set<int> u(a.begin(), a.end());
    u.insert(b.begin(), b.end());
    CHECK(u.size() == 6);
  }
  CHECK(masks.size() == 10);
  CHECK(WeierstrassSplit(0b111000) == WeierstrassSplit(0b000111));
  CHECK(WeierstrassSplit::from_indices({5, 3, 1}) == WeierstrassSplit::from_indices({0, 2, 4}));
  CHECK_THROWS_AS(WeierstrassSplit(0b1111), std::invalid_argument);
  CHECK_THROWS_AS(WeierstrassSplit::from_indices({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("howe_from_cubics") {
  const FieldCtx F(11);
  // x^3 - x and x^3 - 1 share the root 1.
  CHECK_THROWS_AS(howe_from_cubics(cubic(F, 0, -1, 0), cubic(F, -1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(howe_from_cubics(cubic(F, 0, 0, 0), cubic(F, -1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(howe_from_cubics(UniPoly(F, {1, 0, 0, 2}), cubic(F, -1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(howe_from_cubics(UniPoly(F, {1, 0, 1}), cubic(F, -1, 0, 0)), std::invalid_argument);

  const UniPoly f1 = cubic(F, 1, 0, 0), f2 = cubic(F, -2, 0, 0);
  const HoweData H = howe_from_cubics(f1, f2);
  CHECK(H.b.is_infinite());
  // The first triple is the one holding root 0, which may come from either cubic.
  const auto w1 = H.first_roots(), w2 = H.second_roots();
  const bool straight = f1.eval(w1[0]).is_zero();
  for (const Fq& r : w1) CHECK((straight ? f1 : f2).eval(r).is_zero());
  for (const Fq& r : w2) CHECK((straight ? f2 : f1).eval(r).is_zero());
  CHECK(howe_from_cubics(f2, f1) == H);
}

TEST_CASE("parameter points give valid Howe data") {
  const FieldCtx F(11);
  const auto classes = supersingular_classes(F);
  const auto& E1 = classes[0].curve;
  const auto& E2 = classes[1].curve;
  const auto pts = solve_howe_points(E1, E2);
  REQUIRE(!pts.empty());
  for (const auto& pt : pts) {
    const auto [f1, f2] = cubics_of_point(E1, E2, pt);
    const HoweData H = howe_from_cubics(f1, f2);
    CHECK(is_superspecial_howe(H));
  }
}

TEST_CASE("is_superspecial_howe on y^2 = x^6 - 1") {
  const FieldCtx F11(11);
  const HoweData H = howe_from_cubics(cubic(F11, -1, 0, 0), cubic(F11, 1, 0, 0));
  CHECK(H.C.sextic() == UniPoly(F11, {-1, 0, 0, 0, 0, 0, 1}));
  CHECK(is_superspecial_howe(H));

  // b = 0 and every other finite b: compare with direct Hasse invariants.
  const auto ss = supersingular_lambda_set(F11);
  for (std::uint64_t i = 0; i < F11.order(); ++i) {
    const ProjPoint b = ProjPoint::finite(F11.element(i));
    if (H.C.has_root(b)) continue;
    const HoweData Hb(H.C, H.split, b);
    const bool expected = oracle::quartic_supersingular(b, Hb.first_roots()) &&
                          oracle::quartic_supersingular(b, Hb.second_roots()) && is_superspecial(H.C);
    CHECK(is_superspecial_howe(Hb, ss) == expected);
  }

  const FieldCtx F13(13);
  CHECK_FALSE(is_superspecial_howe(howe_from_cubics(cubic(F13, -1, 0, 0), cubic(F13, 1, 0, 0))));
  CHECK_THROWS_AS(HoweData(H.C, H.split, ProjPoint::finite(H.C.root(2))), std::invalid_argument);
}

TEST_CASE("howe_isomorphic on Mobius orbits") {
  std::mt19937_64 rng(15);
  for (std::uint32_t p : {11u, 13u, 23u}) {
    const FieldCtx F(p);
    for (int i = 0; i < 30; ++i) {
      const HoweData H = oracle::random_howe(F, rng);
      CHECK(howe_isomorphic(H, H));
      const HoweData H1 = transform(H, finite_map(H, rng));
      const HoweData H2 = transform(H1, finite_map(H1, rng));
      CHECK(howe_isomorphic(H, H1));
      CHECK(howe_isomorphic(H1, H));
      CHECK(howe_isomorphic(H, H2));
      const auto m = howe_isomorphism(H, H1);
      REQUIRE(m.has_value());
      CHECK((*m)(H.b) == H1.b);

      // Swapping the roles of the triples is the same split.
      const HoweData swapped(H.C, WeierstrassSplit(static_cast<std::uint8_t>(~H.split.mask() & 0x3f)), H.b);
      CHECK(swapped == H);
      CHECK(howe_isomorphic(swapped, H1));

      // Another split of the same curve: decided by the automorphisms alone.
      const HoweData other(H.C, WeierstrassSplit::all()[rng() % 10], H.b);
      bool via_aut = false;
      for (const auto& a : automorphisms(H.C)) {
        if (a(H.b) != other.b) continue;
        std::uint8_t mask = 0;
        for (int k : H.split.first()) mask |= static_cast<std::uint8_t>(1u << H.C.index_of(a(H.C.root(k))));
        via_aut |= WeierstrassSplit(mask) == other.split;
      }
      CHECK(howe_isomorphic(H, other) == via_aut);
    }
  }
}

TEST_CASE("changing b: isomorphic iff an automorphism moves it") {
  const FieldCtx F(11);
  const HoweData H = howe_from_cubics(cubic(F, -1, 0, 0), cubic(F, 1, 0, 0));
  const auto auts = automorphisms(H.C);
  std::size_t hits = 0;
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const ProjPoint v = ProjPoint::finite(F.element(i));
    if (H.C.has_root(v)) continue;
    const HoweData Hv(H.C, H.split, v);
    bool expected = false;
    for (const auto& a : auts) {
      if (a(H.b) != v) continue;
      std::uint8_t mask = 0;
      for (int k : H.split.first()) mask |= static_cast<std::uint8_t>(1u << H.C.index_of(a(H.C.root(k))));
      expected |= WeierstrassSplit(mask) == H.split;
    }
    hits += expected;
    CHECK(howe_isomorphic(H, Hv) == expected);
  }
  // x -> 1/x swaps the cube roots of 1 among themselves and fixes the split,
  // sending infinity to 0.
  CHECK(howe_isomorphic(H, HoweData(H.C, H.split, ProjPoint::finite(F.zero()))));
  CHECK(hits >= 1);
}

TEST_CASE("superspeciality is constant on isomorphism classes") {
  std::mt19937_64 rng(16);
  const FieldCtx F(23);
  const auto report = enumerate_B(F);
  const auto ss = supersingular_lambda_set(F);
  for (const HoweData& H : report.representatives) {
    CHECK(is_superspecial_howe(H, ss));
    const HoweData H1 = transform(H, finite_map(H, rng));
    CHECK(is_superspecial_howe(H1, ss));
    CHECK(howe_isomorphic(H, H1));
  }
}

TEST_CASE("canonical model") {
  const FieldCtx F(11);
  const auto m = canonical_model_from_cubics(cubic(F, 0, 0, 0), cubic(F, 1, 0, 0));
  CHECK(m.q == std::array<Fq, 3>{F.zero(), F.zero(), -F.one()});
  CHECK(m.f1 == std::array<Fq, 4>{F.one(), F.zero(), F.zero(), F.zero()});

  const Fq a = F.from_int(4).inv();
  const UniPoly fa(F, std::vector<Fq>{a, F.zero(), F.zero(), F.one()});
  CHECK(canonical_model_from_cubics(cubic(F, 1, 0, 0), fa).q == std::array<Fq, 3>{F.zero(), F.zero(), F.one() - a});
  // From Howe data the triple order is by root index, so only the sign is open.
  const auto fam = canonical_model(howe_from_cubics(cubic(F, 1, 0, 0), fa));
  CHECK((fam.q[2] == F.one() - a || fam.q[2] == a - F.one()));
  CHECK(fam.q[0].is_zero());
  CHECK(fam.q[1].is_zero());

  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const HoweData H = oracle::random_howe(F, rng);
    const CanonicalModel c = canonical_model(H);
    // q y = f1 - f2 coefficient by coefficient.
    CHECK(c.f1[0] == F.one());
    CHECK(c.f2[0] == F.one());
    for (int k = 0; k < 3; ++k) CHECK(c.q[k] == c.f1[k + 1] - c.f2[k + 1]);
    if (H.b.is_finite()) {
      // The roots of f1 f2 are 1/(a - b), one cubic per triple.
      const UniPoly f1(F, std::vector<Fq>{c.f1[3], c.f1[2], c.f1[1], c.f1[0]});
      const UniPoly f2(F, std::vector<Fq>{c.f2[3], c.f2[2], c.f2[1], c.f2[0]});
      const auto w1 = H.first_roots();
      const UniPoly& g = f1.eval((w1[0] - H.b.value()).inv()).is_zero() ? f1 : f2;
      for (const Fq& r : w1) CHECK(g.eval((r - H.b.value()).inv()).is_zero());
      for (const Fq& r : H.second_roots()) CHECK((f1 * f2).eval((r - H.b.value()).inv()).is_zero());
    }
  }
}

TEST_CASE("special family") {
  const FieldCtx F11(11), F17(17), F13(13);
  CHECK(is_superspecial_howe(special_family(F11, -F11.one())));
  CHECK(F17.from_int(4).inv() == F17.from_int(13));
  CHECK(is_superspecial_howe(special_family(F17, F17.from_int(13))));
  CHECK_THROWS_AS(special_family(F13, -F13.one()), std::invalid_argument);
  CHECK_THROWS_AS(special_family(F11, F11.from_int(2)), std::invalid_argument);
  for (std::uint32_t p = 5; p < 200; ++p) {
    if (!is_prime(p) || p % 6 != 5) continue;
    const FieldCtx F(p);
    for (const Fq& a : {-F.one(), F.from_int(4).inv()}) {
      const HoweData H = special_family(F, a);
      CHECK(H.b.is_infinite());
      CHECK(is_superspecial_howe(H));
    }
  }
}

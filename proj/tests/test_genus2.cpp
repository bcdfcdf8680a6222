#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "howe/genus2.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {

// Sixth roots of unity in F_{p^2}, available whenever p^2 = 1 mod 6.
Genus2Curve x6_minus_1(const FieldCtx& F) {
  const auto r = poly_roots_in_fq(UniPoly(F, {-1, 0, 0, 0, 0, 0, 1}));
  REQUIRE(r.size() == 6);
  return Genus2Curve({r[0], r[1], r[2], r[3], r[4], r[5]});
}

Genus2Curve random_curve(const FieldCtx& F, std::mt19937_64& rng) {
  return Genus2Curve(oracle::random_distinct<6>(F, rng));
}

Genus2Curve mapped(const Genus2Curve& C, const MobiusMap& m) {
  return genus2_from_points({m(C.root(0)), m(C.root(1)), m(C.root(2)), m(C.root(3)), m(C.root(4)), m(C.root(5))})
      .curve;
}

}  // namespace

TEST_CASE("cartier_manin by hand") {
  const FieldCtx F5(5);
  // (x^3+1)(x^3+2) = x^6 + 3x^3 + 2; its square is x^12 + x^9 + 3x^6 + 2x^3 + 4.
  const auto e = cartier_manin_of(UniPoly(F5, {2, 0, 0, 3, 0, 0, 1}));
  CHECK(e.a == F5.zero());
  CHECK(e.b == F5.one());
  CHECK(e.c == F5.from_int(2));
  CHECK(e.d == F5.zero());
  CHECK_FALSE(e.is_zero());

  const FieldCtx F11(11);
  const Genus2Curve C = x6_minus_1(F11);
  CHECK(C.sextic() == UniPoly(F11, {-1, 0, 0, 0, 0, 0, 1}));
  CHECK(cartier_manin(C).is_zero());
  CHECK(is_superspecial(C));
}

TEST_CASE("cartier_manin matches the untruncated power") {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const FieldCtx F(p);
    for (int i = 0; i < 20; ++i) {
      const Genus2Curve C = random_curve(F, rng);
      const auto fast = cartier_manin(C);
      const auto slow = oracle::naive_cartier_manin(C.sextic());
      CHECK(fast.a == slow.a);
      CHECK(fast.b == slow.b);
      CHECK(fast.c == slow.c);
      CHECK(fast.d == slow.d);
    }
  }
}

TEST_CASE("superspeciality is invariant under translation") {
  std::mt19937_64 rng(10);
  const FieldCtx F(11);
  const auto L = superspecial_genus2_list(F);
  for (int i = 0; i < 40; ++i) {
    const Genus2Curve C = i % 2 ? random_curve(F, rng) : L[i % L.size()];
    const Fq c = oracle::random_fq(F, rng);
    std::array<Fq, 6> shifted;
    for (int k = 0; k < 6; ++k) shifted[k] = C.root(k) + c;
    CHECK(is_superspecial(Genus2Curve(shifted)) == is_superspecial(C));
  }
}

TEST_CASE("genus-2 curves need distinct roots") {
  const FieldCtx F(7);
  CHECK_THROWS_AS(Genus2Curve({F.zero(), F.one(), F.one(), F.from_int(2), F.from_int(3), F.from_int(4)}),
                  std::invalid_argument);
  const Genus2Curve C({F.from_int(5), F.one(), F.zero(), F.from_int(3), F.from_int(2), F.from_int(4)});
  CHECK(C.root(0) == F.zero());
  CHECK(C.index_of(ProjPoint::finite(F.from_int(3))) == 3);
  CHECK(C.index_of(ProjPoint::infinity(F)) == -1);
}

TEST_CASE("genus2_from_points moves infinity") {
  const FieldCtx F(11);
  std::array<ProjPoint, 6> pts{ProjPoint::finite(F.from_int(0)), ProjPoint::finite(F.from_int(1)),
                               ProjPoint::finite(F.from_int(2)), ProjPoint::finite(F.from_int(3)),
                               ProjPoint::finite(F.from_int(5)), ProjPoint::infinity(F)};
  const NormalizedCurve n = genus2_from_points(pts);
  // 4 is the smallest non-root, so x -> 1/(x - 4).
  CHECK(n.moved(ProjPoint::finite(F.from_int(4))) == ProjPoint::infinity(F));
  for (const auto& p : pts) CHECK(n.curve.has_root(n.moved(p)));
}

TEST_CASE("quadratic splittings") {
  const auto& all = all_quadratic_splittings();
  std::set<std::set<std::set<int>>> seen;
  for (const auto& s : all) {
    std::set<int> covered;
    std::set<std::set<int>> pairs;
    for (const auto& pr : s) {
      covered.insert(pr[0]);
      covered.insert(pr[1]);
      pairs.insert({pr[0], pr[1]});
    }
    CHECK(covered.size() == 6);
    seen.insert(pairs);
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("isomorphic finds translations") {
  std::mt19937_64 rng(11);
  const FieldCtx F(11);
  for (int i = 0; i < 20; ++i) {
    const Genus2Curve C = random_curve(F, rng);
    const auto self = isomorphic(C, C);
    REQUIRE(self.has_value());
    std::array<Fq, 6> shifted;
    for (int k = 0; k < 6; ++k) shifted[k] = C.root(k) + F.one();
    const Genus2Curve C2(shifted);
    const auto maps = isomorphisms(C, C2);
    CHECK(std::find(maps.begin(), maps.end(), MobiusMap(F.one(), F.one(), F.zero(), F.one())) != maps.end());
    const auto m = isomorphic(C, C2);
    REQUIRE(m.has_value());
    for (const Fq& r : C.roots()) CHECK(C2.has_root((*m)(r)));
  }
}

TEST_CASE("isomorphisms agree with the brute-force triple search") {
  const FieldCtx F(11);
  auto fin = [&](int v) { return F.from_int(v); };
  const Genus2Curve C({fin(0), fin(1), fin(2), fin(3), fin(4), fin(5)});
  const Genus2Curve C2({fin(0), fin(1), fin(2), fin(3), fin(4), fin(6)});
  CHECK(isomorphisms(C, C2) == oracle::brute_isomorphisms(C, C2));
  CHECK(isomorphic(C, C2).has_value() == !oracle::brute_isomorphisms(C, C2).empty());

  std::mt19937_64 rng(12);
  const auto L = superspecial_genus2_list(F);
  for (int i = 0; i < 30; ++i) {
    const Genus2Curve A = i % 3 ? random_curve(F, rng) : L[i % L.size()];
    const Genus2Curve B = i % 2 ? mapped(A, oracle::random_mobius(F, rng)) : random_curve(F, rng);
    CHECK(isomorphisms(A, B) == oracle::brute_isomorphisms(A, B));
  }
}

TEST_CASE("automorphisms") {
  std::mt19937_64 rng(13);
  const FieldCtx F(11);
  std::size_t trivial = 0;
  for (int i = 0; i < 20; ++i) trivial += automorphisms(random_curve(F, rng)).size() == 1;
  CHECK(trivial >= 15);

  const Genus2Curve C = x6_minus_1(F);
  const auto G = automorphisms(C);
  const MobiusMap neg(-F.one(), F.zero(), F.zero(), F.one());
  const MobiusMap recip(F.zero(), F.one(), F.one(), F.zero());
  CHECK(std::find(G.begin(), G.end(), neg) != G.end());
  CHECK(std::find(G.begin(), G.end(), recip) != G.end());
  CHECK(G.size() >= 12);
  for (const auto& a : G) {
    CHECK(std::find(G.begin(), G.end(), a.inverse()) != G.end());
    for (const auto& b : G) CHECK(std::binary_search(G.begin(), G.end(), a * b));
  }
}

TEST_CASE("Igusa keys agree on isomorphic curves") {
  std::mt19937_64 rng(14);
  for (std::uint32_t p : {11u, 13u, 31u}) {
    const FieldCtx F(p);
    for (int i = 0; i < 40; ++i) {
      const Genus2Curve C = random_curve(F, rng);
      CHECK(igusa_key(C) == igusa_key(mapped(C, oracle::random_mobius(F, rng))));
    }
  }
}

TEST_CASE("Richelot codomains over the superspecial lists for 11 and 13") {
  for (std::uint32_t p : {11u, 13u}) {
    const FieldCtx F(p);
    const auto L = superspecial_genus2_list(F);
    for (const Genus2Curve& C : L.curves()) {
      const auto cods = richelot_codomains(C);
      CHECK(cods.size() <= 15);
      std::size_t degenerate = 0;
      for (const auto& s : all_quadratic_splittings()) degenerate += splitting_determinant(C, s).is_zero();
      CHECK(cods.size() + degenerate == 15);
      for (const auto& r : cods) {
        CHECK(is_superspecial(r.codomain));
        CHECK(L.find(r.codomain).has_value());
        // The dual splitting leads back to C.
        const auto back = richelot_codomain(r.codomain, r.dual);
        REQUIRE(back.has_value());
        CHECK(isomorphic(back->codomain, C).has_value());
      }
    }
  }
}

TEST_CASE("gluing two copies of the j = 0 curve at p = 11") {
  const FieldCtx F(11);
  const auto classes = supersingular_classes(F);
  REQUIRE(classes[0].j == F.zero());
  const auto& s = classes[0].roots;
  static constexpr std::array<std::array<int, 3>, 6> kMatchings{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::size_t made = 0;
  for (const auto& m : kMatchings) {
    const auto C = glue_elliptic_pair(s, s, m);
    if (!C) continue;
    ++made;
    CHECK(is_superspecial(*C));
  }
  CHECK(made >= 1);
  CHECK(made <= 6);
}

TEST_CASE("glued curves carry a degenerate splitting") {
  for (std::uint32_t p : {11u, 13u, 17u, 19u, 23u}) {
    const FieldCtx F(p);
    const auto classes = supersingular_classes(F);
    const auto seeds = glued_seeds(F, classes);
    CHECK(seeds.size() <= 6 * classes.size() * (classes.size() + 1) / 2);
    for (const Genus2Curve& C : seeds) {
      CHECK(is_superspecial(C));
      bool degenerate = false;
      for (const auto& s : all_quadratic_splittings()) degenerate |= splitting_determinant(C, s).is_zero();
      CHECK(degenerate);
    }
  }
}

TEST_CASE("superspecial list for p = 11") {
  const FieldCtx F(11);
  const auto L = superspecial_genus2_list(F);
  CHECK((L.size() == 2 || L.size() == 3));
  CHECK(L.size() == 2);
  for (std::size_t i = 0; i < L.size(); ++i) {
    CHECK(is_superspecial(L[i]));
    for (std::size_t j = i + 1; j < L.size(); ++j) CHECK_FALSE(isomorphic(L[i], L[j]).has_value());
  }
  CHECK_THROWS_AS(superspecial_genus2_list(FieldCtx(5)), std::invalid_argument);
}

TEST_CASE("closure does not depend on seeding or worker count") {
  for (std::uint32_t p : {13u, 17u, 23u, 29u, 37u}) {
    const FieldCtx F(p);
    const auto L = superspecial_genus2_list(F);
    ClosureOptions rosenhain;
    rosenhain.seeding = Seeding::kRosenhain;
    const auto R = superspecial_genus2_list(F, rosenhain);
    CHECK(R.size() == L.size());
    for (const auto& C : R.curves()) CHECK(L.find(C).has_value());
    ClosureOptions threaded;
    threaded.workers = 4;
    CHECK(superspecial_genus2_list(F, threaded).curves() == L.curves());
  }
}

TEST_CASE("early stop through on_insert") {
  const FieldCtx F(37);
  ClosureOptions opts;
  std::size_t calls = 0;
  opts.on_insert = [&](const SuperspecialList&, std::size_t) { return ++calls < 5; };
  CHECK(superspecial_genus2_list(F, opts).size() == 5);
}

TEST_CASE("IKO count window") {
  // Scaled excess is 720 D (|L| - (p-1)(p^2 + 25p + 166)/D).
  CHECK(iko_scaled_excess(11, 2) == 720 * 2880 * 2 - 720 * 10 * 562);
  for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u}) {
    const FieldCtx F(p);
    CHECK(within_iko_window(p, superspecial_genus2_list(F).size()));
  }
  // With 2800 in the denominator the window is missed from p = 31 on.
  CHECK(within_iko_window(29, 18, 2800));
  CHECK_FALSE(within_iko_window(31, 20, 2800));
}

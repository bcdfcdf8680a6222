#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "howe/ellcurve.hpp"
#include "howe/genus2.hpp"
#include "howe/howe_curve.hpp"

namespace howe {

// (lambda : mu : nu) with nu = 1 and mu != 0 such that
//   f1 = x^3 + A1 mu^2 x + B1 mu^3,  f2 = (x - lambda)^3 + A2 (x - lambda) + B2
// are coprime and f1 f2 has vanishing Cartier-Manin matrix.
struct HoweTypePoint {
  Fq lambda, mu, nu;
  bool mu_nonzero = true;
  bool nu_nonzero = true;

  friend bool operator==(const HoweTypePoint& a, const HoweTypePoint& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
  }
  friend auto operator<=>(const HoweTypePoint& a, const HoweTypePoint& b) {
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

struct EnumOptions {
  unsigned workers = 1;
  std::uint64_t seed = 0x5eed;
};

struct EnumReport {
  std::uint32_t p = 0;
  char strategy = 'B';
  std::size_t n = 0;
  double ratio = 0;  // n / (p^3 / 1152)
  std::vector<HoweData> representatives;
  // Strategy A: Howe-type points before deduplication. Strategy B: (C, split, b)
  // triples before deduplication.
  std::size_t h0_size = 0;
  std::size_t genus2_count = 0;  // |L|, strategy B only
  double elapsed_seconds = 0;
};

double heuristic_ratio(std::uint32_t p, std::size_t n);

// Cartier-Manin entries of f1 f2 as polynomials in lambda for fixed mu.
struct LambdaEntries {
  UniPoly a, b, c, d;
};

// Precomputes the mu-independent part of the system for one pair of curves.
class CmLambdaSystem {
 public:
  CmLambdaSystem(const EllipticCurve& E1, const EllipticCurve& E2);
  LambdaEntries entries(const Fq& mu) const;

 private:
  UniPoly entry(std::size_t N, const std::vector<Fq>& weights) const;

  const FieldCtx* field_;
  std::size_t m_;
  std::vector<Fq> h_;        // coefficients of (x^3 + A1 x + B1)^m
  std::vector<UniPoly> shifted_;  // shifted_[i] = [x^i] (G^m)(x - lambda)
};

LambdaEntries cm_entries_in_lambda(const Fq& A1, const Fq& B1, const Fq& A2, const Fq& B2, const Fq& mu);

// The cubics of a parameter point.
std::array<UniPoly, 2> cubics_of_point(const EllipticCurve& E1, const EllipticCurve& E2, const HoweTypePoint& pt);

std::vector<HoweTypePoint> solve_howe_points(const EllipticCurve& E1, const EllipticCurve& E2,
                                             std::uint64_t seed = 0x5eed);

EnumReport enumerate_A(const FieldCtx& F, const EnumOptions& options = {});

// b in P^1 \ roots(C) for which both genus-1 quotients are supersingular.
std::vector<ProjPoint> good_b_values(const Genus2Curve& C, const WeierstrassSplit& split,
                                     const SupersingularLambdaSet& ss);

// Howe data over C, one per Aut(C)-orbit of (split, b).
std::vector<HoweData> howe_representatives_over(const Genus2Curve& C, const SupersingularLambdaSet& ss);

EnumReport enumerate_B(const FieldCtx& F, const EnumOptions& options = {});
// Same, over a precomputed list (e.g. loaded from a cache).
EnumReport enumerate_B(const FieldCtx& F, const SuperspecialList& L, const EnumOptions& options = {});

// A superspecial Howe curve, or nullopt after an exhaustive search.
std::optional<HoweData> find_one(const FieldCtx& F, const EnumOptions& options = {});

}  // namespace howe

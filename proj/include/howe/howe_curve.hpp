#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "howe/ellcurve.hpp"
#include "howe/genus2.hpp"
#include "howe/projective.hpp"

namespace howe {

// Unordered partition of the six root indices into two triples, stored as a
// 6-bit mask of the triple that contains root 0.
class WeierstrassSplit {
 public:
  // Either triple of the partition; the mask must have exactly three bits.
  explicit WeierstrassSplit(std::uint8_t mask);
  static WeierstrassSplit from_indices(const std::array<int, 3>& indices);
  // The ten splits, in mask order.
  static const std::array<WeierstrassSplit, 10>& all();

  std::uint8_t mask() const { return mask_; }
  std::array<int, 3> first() const;   // contains index 0
  std::array<int, 3> second() const;
  bool contains_first(int i) const { return (mask_ >> i) & 1u; }

  friend bool operator==(const WeierstrassSplit&, const WeierstrassSplit&) = default;
  friend auto operator<=>(const WeierstrassSplit&, const WeierstrassSplit&) = default;

 private:
  std::uint8_t mask_;
};

// A Howe curve up to isomorphism: the genus-2 quotient C, the split of its
// Weierstrass points, and the x-coordinate b of the pair of points over which
// the two genus-1 covers are glued.
struct HoweData {
  Genus2Curve C;
  WeierstrassSplit split;
  ProjPoint b;

  // Throws std::invalid_argument if b is a root of C.
  HoweData(Genus2Curve C, WeierstrassSplit split, ProjPoint b);

  std::array<Fq, 3> first_roots() const;
  std::array<Fq, 3> second_roots() const;

  friend bool operator==(const HoweData&, const HoweData&) = default;
};

// w^2 = f1, z^2 = f2 with shared branch point at infinity. Throws
// std::invalid_argument unless both are monic separable cubics, coprime, and
// split over F_{p^2}.
HoweData howe_from_cubics(const UniPoly& f1, const UniPoly& f2);

bool is_superspecial_howe(const HoweData& H, const SupersingularLambdaSet& ss);
bool is_superspecial_howe(const HoweData& H);

// Map of P^1 carrying the roots, split and b of H onto those of H2, if any.
std::optional<MobiusMap> howe_isomorphism(const HoweData& H, const HoweData& H2);
bool howe_isomorphic(const HoweData& H, const HoweData& H2);

// Image of H under a Mobius map that keeps every root finite.
HoweData transform(const HoweData& H, const MobiusMap& m);

// z^2 - w^2 = q(x, y), z^2 y = f1(x, y) in P^3. Binary forms are coefficient
// arrays in decreasing powers of x: q = q0 x^2 + q1 xy + q2 y^2.
struct CanonicalModel {
  std::array<Fq, 3> q;
  std::array<Fq, 4> f1;
  std::array<Fq, 4> f2;
};

CanonicalModel canonical_model_from_cubics(const UniPoly& f1, const UniPoly& f2);
// Moves b to infinity first when it is finite.
CanonicalModel canonical_model(const HoweData& H);

// y^2 = (x^3 + 1)(x^3 + a), split by the two cubics, b = infinity. Requires
// p = 5 mod 6 and a in {-1, 1/4}; throws std::invalid_argument otherwise.
HoweData special_family(const FieldCtx& F, const Fq& a);

std::string to_string(const HoweData& H);

}  // namespace howe

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "howe/field.hpp"

namespace howe {

// Point of P^1(F_{p^2}): a finite value or infinity.
class ProjPoint {
 public:
  static ProjPoint finite(const Fq& x) { return ProjPoint(x, false); }
  static ProjPoint infinity(const FieldCtx& field) { return ProjPoint(field.zero(), true); }
  // Point with homogeneous coordinates [x : y], (x, y) != (0, 0).
  static ProjPoint from_homogeneous(const Fq& x, const Fq& y);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // The finite value; throws std::logic_error at infinity.
  const Fq& value() const;

  // Homogeneous representative: [x : 1] or [1 : 0].
  Fq hx() const { return infinite_ ? x_.field->one() : x_; }
  Fq hy() const { return infinite_ ? x_.field->zero() : x_.field->one(); }

  std::string str() const { return infinite_ ? "inf" : x_.str(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.x_ == b.x_);
  }
  // Finite points in (c0, c1) order, then infinity.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.x_ <=> b.x_;
  }

 private:
  ProjPoint(const Fq& x, bool inf) : x_(x), infinite_(inf) {}

  Fq x_;
  bool infinite_;
};

// x -> (m00 x + m01) / (m10 x + m11), an element of PGL_2(F_{p^2}). Stored
// normalized so that equal maps compare equal.
class MobiusMap {
 public:
  // Throws std::invalid_argument for a singular matrix.
  MobiusMap(const Fq& m00, const Fq& m01, const Fq& m10, const Fq& m11);
  static MobiusMap identity(const FieldCtx& field);

  const std::array<Fq, 4>& matrix() const { return m_; }
  Fq determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  ProjPoint operator()(const ProjPoint& x) const;
  ProjPoint operator()(const Fq& x) const { return (*this)(ProjPoint::finite(x)); }

  // (a * b)(x) = a(b(x)).
  friend MobiusMap operator*(const MobiusMap& a, const MobiusMap& b);
  MobiusMap inverse() const;

  friend bool operator==(const MobiusMap& a, const MobiusMap& b) { return a.m_ == b.m_; }
  friend auto operator<=>(const MobiusMap& a, const MobiusMap& b) { return a.m_ <=> b.m_; }

 private:
  std::array<Fq, 4> m_;
};

// ((q - s)(r - t)) / ((r - s)(q - t)), with the usual limits at infinity.
// Throws std::invalid_argument unless the four points are pairwise distinct.
Fq cross_ratio(const ProjPoint& q, const ProjPoint& r, const ProjPoint& s, const ProjPoint& t);

// The unique map with src[i] -> dst[i]. Throws std::invalid_argument if a
// triple has a repeated point.
MobiusMap mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

}  // namespace howe

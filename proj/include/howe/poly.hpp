#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "howe/field.hpp"

namespace howe {

// Dense univariate polynomial over F_{p^2}. The coefficient list never has a
// trailing zero; the zero polynomial is the empty list.
class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& field) : field_(&field) {}
  UniPoly(const FieldCtx& field, std::vector<Fq> coeffs);
  // Coefficients from small integers, constant term first.
  UniPoly(const FieldCtx& field, std::initializer_list<std::int64_t> coeffs);

  static UniPoly constant(const Fq& c);
  static UniPoly x(const FieldCtx& field);
  static UniPoly monomial(const Fq& c, std::size_t degree);
  // prod (x - r) over the given roots.
  static UniPoly from_roots(const FieldCtx& field, std::span<const Fq> roots);

  const FieldCtx& field() const { return *field_; }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^i, zero beyond the degree.
  Fq coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  Fq leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

  Fq eval(const Fq& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly truncated(std::size_t degcap) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  const FieldCtx* field_;
  std::vector<Fq> coeffs_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Fq& c, const UniPoly& a);

// Product with every monomial of degree > degcap dropped.
UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t degcap);

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

// f^e mod m by square-and-multiply.
UniPoly powmod(const UniPoly& f, std::uint64_t e, const UniPoly& m);

// f^e with every monomial of degree > degcap discarded after each product.
UniPoly poly_powmod_truncated(const UniPoly& f, std::uint64_t e, std::size_t degcap);

// Monic gcd; gcd(f, 0) = monic(f). Throws std::invalid_argument if both are zero.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

// Distinct roots of f in F_{p^2}, sorted by (c0, c1). Randomized equal-degree
// splitting driven by `seed`; the returned set does not depend on it.
// Throws std::invalid_argument for the zero polynomial.
std::vector<Fq> poly_roots_in_fq(const UniPoly& f, std::uint64_t seed = 0x5eed);

// Binomial coefficient mod p by Lucas' theorem.
class BinomialModP {
 public:
  explicit BinomialModP(const FieldCtx& field);
  Fq operator()(std::uint64_t n, std::uint64_t k) const;

 private:
  const FieldCtx* field_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

}  // namespace howe

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace howe {

class FieldCtx;

// Element of F_{p^2} = F_p[t]/(t^2 - r), stored as c0 + c1*t with both
// coordinates fully reduced. Carries a pointer to its field; the field must
// outlive every element created from it.
struct Fq {
  const FieldCtx* field = nullptr;
  std::uint32_t c0 = 0;
  std::uint32_t c1 = 0;

  bool is_zero() const { return c0 == 0 && c1 == 0; }
  bool is_one() const { return c0 == 1 && c1 == 0; }
  bool in_base_field() const { return c1 == 0; }

  Fq pow(std::uint64_t e) const;
  Fq inv() const;
  Fq frobenius() const;  // x -> x^p
  Fq norm() const;       // x^(p+1), lies in F_p

  // Packed (c0, c1) for hashing and bitmap indexing.
  std::uint64_t key() const { return (std::uint64_t{c1} << 32) | c0; }

  std::string str() const;
};

inline bool operator==(const Fq& a, const Fq& b) { return a.c0 == b.c0 && a.c1 == b.c1; }

// Canonical order: lexicographic on (c0, c1).
inline std::strong_ordering operator<=>(const Fq& a, const Fq& b) {
  if (auto c = a.c0 <=> b.c0; c != 0) return c;
  return a.c1 <=> b.c1;
}

// Shared read-only description of F_p and F_{p^2}. Not copyable so that the
// back-pointers stored in Fq stay valid.
class FieldCtx {
 public:
  // Primes up to 2^20 are supported; p must be prime and > 3.
  static constexpr std::uint32_t kMaxPrime = 1u << 20;

  explicit FieldCtx(std::uint32_t p);
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  // The modulus is t^2 - nonresidue().
  std::uint32_t nonresidue() const { return r_; }
  std::uint64_t order() const { return std::uint64_t{p_} * p_; }
  std::string modulus_str() const;

  Fq zero() const { return Fq{this, 0, 0}; }
  Fq one() const { return Fq{this, 1, 0}; }
  Fq gen() const { return Fq{this, 0, 1}; }
  Fq from_int(std::int64_t v) const;
  Fq make(std::uint64_t c0, std::uint64_t c1) const;
  // Enumerates F_{p^2}: index = c0 + c1*p, 0 <= index < order().
  Fq element(std::uint64_t index) const;

  bool is_square(const Fq& x) const;
  // Some square root if one exists in F_{p^2}.
  std::optional<Fq> sqrt(const Fq& x) const;

  std::uint32_t reduce(std::uint64_t v) const { return static_cast<std::uint32_t>(v % p_); }

 private:
  std::uint32_t p_;
  std::uint32_t r_;
  // Tonelli-Shanks data for F_{p^2}: order - 1 = 2^two_adicity_ * odd_part_.
  std::uint32_t two_adicity_ = 0;
  std::uint64_t odd_part_ = 0;
  std::uint32_t nonsquare_c0_ = 0;
  std::uint32_t nonsquare_c1_ = 0;
};

bool is_prime(std::uint64_t n);

inline Fq operator+(const Fq& a, const Fq& b) {
  const FieldCtx* f = a.field ? a.field : b.field;
  const std::uint32_t p = f->p();
  std::uint32_t c0 = a.c0 + b.c0;
  std::uint32_t c1 = a.c1 + b.c1;
  if (c0 >= p) c0 -= p;
  if (c1 >= p) c1 -= p;
  return Fq{f, c0, c1};
}

inline Fq operator-(const Fq& a) {
  const std::uint32_t p = a.field->p();
  return Fq{a.field, a.c0 ? p - a.c0 : 0u, a.c1 ? p - a.c1 : 0u};
}

inline Fq operator-(const Fq& a, const Fq& b) {
  const FieldCtx* f = a.field ? a.field : b.field;
  const std::uint32_t p = f->p();
  std::uint32_t c0 = a.c0 >= b.c0 ? a.c0 - b.c0 : a.c0 + p - b.c0;
  std::uint32_t c1 = a.c1 >= b.c1 ? a.c1 - b.c1 : a.c1 + p - b.c1;
  return Fq{f, c0, c1};
}

inline Fq operator*(const Fq& a, const Fq& b) {
  const FieldCtx* f = a.field ? a.field : b.field;
  const std::uint64_t p = f->p();
  const std::uint64_t a0 = a.c0, a1 = a.c1, b0 = b.c0, b1 = b.c1;
  const std::uint64_t hi = (a1 * b1) % p;
  const std::uint64_t c0 = (a0 * b0 + f->nonresidue() * hi) % p;
  const std::uint64_t c1 = (a0 * b1 + a1 * b0) % p;
  return Fq{f, static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
}

inline Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }

inline Fq& operator+=(Fq& a, const Fq& b) { return a = a + b; }
inline Fq& operator-=(Fq& a, const Fq& b) { return a = a - b; }
inline Fq& operator*=(Fq& a, const Fq& b) { return a = a * b; }

using FqElem = Fq;

}  // namespace howe

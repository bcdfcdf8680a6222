#include "howe/field.hpp"

#include <stdexcept>

namespace howe {

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p) : p_(p), r_(0) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p <= 3) throw std::invalid_argument("characteristic must be > 3");
  if (p >= kMaxPrime) throw std::invalid_argument("characteristic too large");

  // Smallest quadratic non-residue mod p; t^2 - r is then irreducible.
  for (std::uint32_t r = 2; r < p; ++r) {
    if (powmod_u64(r, (p - 1) / 2, p) == p - 1) {
      r_ = r;
      break;
    }
  }

  std::uint64_t m = order() - 1;
  while ((m & 1) == 0) {
    m >>= 1;
    ++two_adicity_;
  }
  odd_part_ = m;
  for (std::uint64_t i = 1; i < order(); ++i) {
    Fq z = element(i);
    if (!is_square(z)) {
      nonsquare_c0_ = z.c0;
      nonsquare_c1_ = z.c1;
      break;
    }
  }
}

std::string FieldCtx::modulus_str() const { return "t^2 - " + std::to_string(r_); }

Fq FieldCtx::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return Fq{this, static_cast<std::uint32_t>(m), 0};
}

Fq FieldCtx::make(std::uint64_t c0, std::uint64_t c1) const {
  return Fq{this, static_cast<std::uint32_t>(c0 % p_), static_cast<std::uint32_t>(c1 % p_)};
}

Fq FieldCtx::element(std::uint64_t index) const {
  return Fq{this, static_cast<std::uint32_t>(index % p_), static_cast<std::uint32_t>(index / p_)};
}

bool FieldCtx::is_square(const Fq& x) const {
  if (x.is_zero()) return true;
  // x is a square in F_{p^2} iff its norm is a square in F_p; every element
  // of F_p is a square in F_{p^2}.
  Fq n = x.norm();
  return powmod_u64(n.c0, (p_ - 1) / 2, p_) == 1;
}

std::optional<Fq> FieldCtx::sqrt(const Fq& x) const {
  if (x.is_zero()) return zero();
  if (!is_square(x)) return std::nullopt;
  // Tonelli-Shanks over F_{p^2}.
  std::uint32_t m = two_adicity_;
  Fq c = Fq{this, nonsquare_c0_, nonsquare_c1_}.pow(odd_part_);
  Fq t = x.pow(odd_part_);
  Fq r = x.pow((odd_part_ + 1) / 2);
  while (!t.is_one()) {
    std::uint32_t i = 0;
    Fq t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      ++i;
    }
    Fq b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

Fq Fq::pow(std::uint64_t e) const {
  Fq result = field->one();
  Fq base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Fq Fq::frobenius() const {
  // t^p = -t because t^2 is a non-residue.
  return Fq{field, c0, c1 ? field->p() - c1 : 0u};
}

Fq Fq::norm() const { return *this * frobenius(); }

Fq Fq::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_{p^2}");
  const std::uint64_t p = field->p();
  Fq n = norm();
  std::uint64_t ninv = powmod_u64(n.c0, p - 2, p);
  Fq conj = frobenius();
  return Fq{field, static_cast<std::uint32_t>(conj.c0 * ninv % p),
            static_cast<std::uint32_t>(conj.c1 * ninv % p)};
}

std::string Fq::str() const {
  if (c1 == 0) return std::to_string(c0);
  std::string s = c0 ? std::to_string(c0) + "+" : "";
  return s + (c1 == 1 ? "" : std::to_string(c1) + "*") + "t";
}

}  // namespace howe

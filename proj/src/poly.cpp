#include "howe/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace howe {

UniPoly::UniPoly(const FieldCtx& field, std::vector<Fq> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.field = field_;
  trim();
}

UniPoly::UniPoly(const FieldCtx& field, std::initializer_list<std::int64_t> coeffs) : field_(&field) {
  coeffs_.reserve(coeffs.size());
  for (auto v : coeffs) coeffs_.push_back(field.from_int(v));
  trim();
}

UniPoly UniPoly::constant(const Fq& c) { return UniPoly(*c.field, std::vector<Fq>{c}); }

UniPoly UniPoly::x(const FieldCtx& field) { return UniPoly(field, {0, 1}); }

UniPoly UniPoly::monomial(const Fq& c, std::size_t degree) {
  std::vector<Fq> v(degree + 1, c.field->zero());
  v[degree] = c;
  return UniPoly(*c.field, std::move(v));
}

UniPoly UniPoly::from_roots(const FieldCtx& field, std::span<const Fq> roots) {
  std::vector<Fq> v{field.one()};
  for (const Fq& r : roots) {
    std::vector<Fq> next(v.size() + 1, field.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
      next[i + 1] += v[i];
      next[i] -= r * v[i];
    }
    v = std::move(next);
  }
  return UniPoly(field, std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Fq UniPoly::eval(const Fq& x) const {
  Fq acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Fq> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v.push_back(field_->from_int(static_cast<std::int64_t>(i)) * coeffs_[i]);
  return UniPoly(*field_, std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Fq inv = leading().inv();
  std::vector<Fq> v = coeffs_;
  for (auto& c : v) c = c * inv;
  return UniPoly(*field_, std::move(v));
}

UniPoly UniPoly::truncated(std::size_t degcap) const {
  if (coeffs_.size() <= degcap + 1) return *this;
  return UniPoly(*field_, std::vector<Fq>(coeffs_.begin(), coeffs_.begin() + degcap + 1));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Fq> v(std::max(ca.size(), cb.size()), a.field().zero());
  for (std::size_t i = 0; i < ca.size(); ++i) v[i] = ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) v[i] += cb[i];
  return UniPoly(a.field(), std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Fq> v(std::max(ca.size(), cb.size()), a.field().zero());
  for (std::size_t i = 0; i < ca.size(); ++i) v[i] = ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) v[i] -= cb[i];
  return UniPoly(a.field(), std::move(v));
}

UniPoly operator*(const Fq& c, const UniPoly& a) {
  std::vector<Fq> v = a.coeffs();
  for (auto& x : v) x = c * x;
  return UniPoly(a.field(), std::move(v));
}

UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t degcap) {
  const FieldCtx& F = a.field();
  if (a.is_zero() || b.is_zero()) return UniPoly(F);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t n = ca.size(), m = cb.size();
  const std::size_t len = std::min(n + m - 1, degcap + 1);
  const std::uint64_t p = F.p();
  const std::uint64_t r = F.nonresidue();

  // Products are < 2^40 (p < 2^20), so unreduced accumulation is safe for
  // any operand length that fits in memory.
  std::vector<std::uint32_t> a0(n), a1(n), b0(m), b1(m);
  for (std::size_t i = 0; i < n; ++i) a0[i] = ca[i].c0, a1[i] = ca[i].c1;
  for (std::size_t j = 0; j < m; ++j) b0[j] = cb[j].c0, b1[j] = cb[j].c1;

  std::vector<Fq> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t s00 = 0, s11 = 0, s01 = 0;
    const std::size_t lo = k >= m - 1 ? k - (m - 1) : 0;
    const std::size_t hi = std::min(k, n - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t j = k - i;
      const std::uint64_t x0 = a0[i], x1 = a1[i], y0 = b0[j], y1 = b1[j];
      s00 += x0 * y0;
      s11 += x1 * y1;
      s01 += x0 * y1 + x1 * y0;
    }
    out[k] = Fq{&F, static_cast<std::uint32_t>((s00 % p + r * (s11 % p)) % p),
                static_cast<std::uint32_t>(s01 % p)};
  }
  return UniPoly(F, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field());
  return mul_truncated(a, b, a.coeffs().size() + b.coeffs().size());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  const FieldCtx& F = a.field();
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(F), a};
  std::vector<Fq> rem = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Fq lead_inv = cb.back().inv();
  std::vector<Fq> quot(rem.size() - db, F.zero());
  for (std::size_t k = rem.size(); k-- > db;) {
    Fq c = rem[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * cb[j];
  }
  rem.resize(db);
  return {UniPoly(F, std::move(quot)), UniPoly(F, std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly powmod(const UniPoly& f, std::uint64_t e, const UniPoly& m) {
  const FieldCtx& F = f.field();
  UniPoly result = UniPoly::constant(F.one()) % m;
  UniPoly base = f % m;
  int top = 63;
  while (top >= 0 && !((e >> top) & 1)) --top;
  for (int bit = top; bit >= 0; --bit) {
    result = (result * result) % m;
    if ((e >> bit) & 1) result = (result * base) % m;
  }
  return result;
}

UniPoly poly_powmod_truncated(const UniPoly& f, std::uint64_t e, std::size_t degcap) {
  const FieldCtx& F = f.field();
  UniPoly result = UniPoly::constant(F.one());
  const UniPoly base = f.truncated(degcap);
  int top = 63;
  while (top >= 0 && !((e >> top) & 1)) --top;
  for (int bit = top; bit >= 0; --bit) {
    result = mul_truncated(result, result, degcap);
    if ((e >> bit) & 1) result = mul_truncated(result, base, degcap);
  }
  return result;
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

void split_linear_factors(const UniPoly& g, std::mt19937_64& rng, std::vector<Fq>& out) {
  const FieldCtx& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  const std::uint64_t half = (F.order() - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  for (;;) {
    UniPoly shift(F, std::vector<Fq>{F.element(pick(rng)), F.one()});
    UniPoly w = powmod(shift, half, g) - UniPoly::constant(F.one());
    if (w.is_zero()) continue;
    UniPoly d = poly_gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear_factors(d, rng, out);
      split_linear_factors(divmod(g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fq> poly_roots_in_fq(const UniPoly& f, std::uint64_t seed) {
  const FieldCtx& F = f.field();
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  if (f.degree() == 0) return {};
  const UniPoly fm = f.monic();
  const UniPoly x = UniPoly::x(F);
  UniPoly frob = powmod(x, F.order(), fm) - x;
  UniPoly g = poly_gcd(fm, frob);
  std::mt19937_64 rng(seed);
  std::vector<Fq> roots;
  split_linear_factors(g, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

BinomialModP::BinomialModP(const FieldCtx& field) : field_(&field) {
  const std::uint64_t p = field.p();
  fact_.assign(p, 1);
  for (std::uint64_t i = 1; i < p; ++i) fact_[i] = static_cast<std::uint32_t>(fact_[i - 1] * i % p);
  inv_fact_.assign(p, 1);
  inv_fact_[p - 1] = field.from_int(fact_[p - 1]).inv().c0;
  for (std::uint64_t i = p - 1; i > 0; --i)
    inv_fact_[i - 1] = static_cast<std::uint32_t>(std::uint64_t{inv_fact_[i]} * i % p);
}

Fq BinomialModP::operator()(std::uint64_t n, std::uint64_t k) const {
  const std::uint64_t p = field_->p();
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return field_->zero();
    result = result * fact_[ni] % p * inv_fact_[ki] % p * inv_fact_[ni - ki] % p;
    n /= p;
    k /= p;
  }
  return field_->from_int(static_cast<std::int64_t>(result));
}

}  // namespace howe

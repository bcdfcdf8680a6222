#include "howe/ellcurve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace howe {

Fq EllipticCurve::discriminant_factor() const {
  const FieldCtx& F = *A.field;
  return F.from_int(4) * A * A * A + F.from_int(27) * B * B;
}

UniPoly EllipticCurve::cubic() const {
  const FieldCtx& F = *A.field;
  return UniPoly(F, std::vector<Fq>{B, A, F.zero(), F.one()});
}

SupersingularLambdaSet::SupersingularLambdaSet(std::uint32_t p, std::vector<Fq> lambdas)
    : p_(p), lambdas_(std::move(lambdas)) {
  std::sort(lambdas_.begin(), lambdas_.end());
}

bool SupersingularLambdaSet::contains(const Fq& lambda) const {
  return std::binary_search(lambdas_.begin(), lambdas_.end(), lambda);
}

Fq j_invariant(const EllipticCurve& E) {
  const FieldCtx& F = *E.A.field;
  const Fq disc = E.discriminant_factor();
  if (disc.is_zero()) throw std::invalid_argument("j_invariant: singular curve");
  const Fq a3 = F.from_int(4) * E.A * E.A * E.A;
  return F.from_int(1728) * a3 / disc;
}

bool is_supersingular(const EllipticCurve& E) {
  const FieldCtx& F = *E.A.field;
  const std::uint32_t p = F.p();
  const UniPoly power = poly_powmod_truncated(E.cubic(), (p - 1) / 2, p - 1);
  return power.coeff(p - 1).is_zero();
}

UniPoly hasse_polynomial(const FieldCtx& F) {
  const std::uint32_t m = (F.p() - 1) / 2;
  BinomialModP binom(F);
  std::vector<Fq> c;
  c.reserve(m + 1);
  for (std::uint32_t i = 0; i <= m; ++i) {
    const Fq b = binom(m, i);
    c.push_back(b * b);
  }
  return UniPoly(F, std::move(c));
}

SupersingularLambdaSet supersingular_lambda_set(const FieldCtx& F) {
  return SupersingularLambdaSet(F.p(), poly_roots_in_fq(hasse_polynomial(F)));
}

Fq j_of_lambda(const Fq& lambda) {
  const FieldCtx& F = *lambda.field;
  const Fq one = F.one();
  const Fq s = lambda * lambda - lambda + one;
  const Fq d = lambda * (lambda - one);
  return F.from_int(256) * s * s * s / (d * d);
}

std::array<Fq, 6> lambda_orbit(const Fq& l) {
  const Fq one = l.field->one();
  return {l, one - l, l.inv(), l / (l - one), (l - one) / l, (one - l).inv()};
}

Fq lambda_of_quartic(const QuarticModel& Q) {
  return cross_ratio(Q.b, ProjPoint::finite(Q.roots[0]), ProjPoint::finite(Q.roots[1]),
                     ProjPoint::finite(Q.roots[2]));
}

EllipticCurve curve_from_roots(const std::array<Fq, 3>& r) {
  const FieldCtx& F = *r[0].field;
  if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2])
    throw std::invalid_argument("curve_from_roots: repeated root");
  const Fq shift = (r[0] + r[1] + r[2]) / F.from_int(3);
  const Fq u0 = r[0] - shift, u1 = r[1] - shift, u2 = r[2] - shift;
  return EllipticCurve{u0 * u1 + u0 * u2 + u1 * u2, -(u0 * u1 * u2)};
}

EllipticCurve weierstrass_of_quartic(const QuarticModel& Q) {
  if (Q.b.is_infinite()) return curve_from_roots(Q.roots);
  const Fq b = Q.b.value();
  std::array<Fq, 3> moved;
  for (int i = 0; i < 3; ++i) {
    if (Q.roots[i] == b) throw std::invalid_argument("weierstrass_of_quartic: b is a root");
    moved[i] = (Q.roots[i] - b).inv();
  }
  return curve_from_roots(moved);
}

std::vector<Fq> two_torsion_roots(const EllipticCurve& E) { return poly_roots_in_fq(E.cubic()); }

std::vector<SupersingularClass> supersingular_classes(const FieldCtx& F, const SupersingularLambdaSet& ss) {
  // Lambdas are sorted, so the first one seen for each j is the smallest.
  std::map<Fq, Fq> first_lambda;
  for (const Fq& l : ss.lambdas()) first_lambda.try_emplace(j_of_lambda(l), l);
  std::vector<SupersingularClass> out;
  for (const auto& [j, l] : first_lambda) {
    const std::array<Fq, 3> legendre{F.zero(), F.one(), l};
    const EllipticCurve E = curve_from_roots(legendre);
    const Fq shift = (F.one() + l) / F.from_int(3);
    std::array<Fq, 3> roots{legendre[0] - shift, legendre[1] - shift, legendre[2] - shift};
    std::sort(roots.begin(), roots.end());
    out.push_back(SupersingularClass{j, l, E, roots});
  }
  return out;
}

std::vector<SupersingularClass> supersingular_classes(const FieldCtx& F) {
  return supersingular_classes(F, supersingular_lambda_set(F));
}

std::vector<EllipticCurve> enumerate_supersingular_classes(const FieldCtx& F) {
  std::vector<EllipticCurve> out;
  for (const auto& c : supersingular_classes(F)) out.push_back(c.curve);
  return out;
}

}  // namespace howe

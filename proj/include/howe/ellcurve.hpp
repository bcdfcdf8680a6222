#pragma once

#include <array>
#include <vector>

#include "howe/field.hpp"
#include "howe/poly.hpp"
#include "howe/projective.hpp"

namespace howe {

// y^2 = x^3 + A x + B.
struct EllipticCurve {
  Fq A;
  Fq B;

  Fq discriminant_factor() const;  // 4A^3 + 27B^2
  UniPoly cubic() const;
  friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;
};

// y^2 = (x - b)(x - a1)(x - a2)(x - a3), or the cubic (x - a1)(x - a2)(x - a3)
// when b is infinite.
struct QuarticModel {
  ProjPoint b;
  std::array<Fq, 3> roots;
};

// Legendre invariants of the supersingular curves, sorted by (c0, c1).
class SupersingularLambdaSet {
 public:
  SupersingularLambdaSet(std::uint32_t p, std::vector<Fq> lambdas);

  std::uint32_t p() const { return p_; }
  const std::vector<Fq>& lambdas() const { return lambdas_; }
  std::size_t size() const { return lambdas_.size(); }
  bool contains(const Fq& lambda) const;

 private:
  std::uint32_t p_;
  std::vector<Fq> lambdas_;
};

// Throws std::invalid_argument for a singular model.
Fq j_invariant(const EllipticCurve& E);

// Deuring: the coefficient of x^(p-1) in (x^3 + A x + B)^((p-1)/2) vanishes.
bool is_supersingular(const EllipticCurve& E);

// sum_i binom(m, i)^2 lambda^i with m = (p - 1)/2.
UniPoly hasse_polynomial(const FieldCtx& F);

SupersingularLambdaSet supersingular_lambda_set(const FieldCtx& F);

Fq j_of_lambda(const Fq& lambda);

// The six values lambda, 1 - lambda, 1/lambda, ... of the S_3 orbit.
std::array<Fq, 6> lambda_orbit(const Fq& lambda);

// Cross-ratio of (b, a1; a2, a3). Throws std::invalid_argument if the model
// has repeated branch points.
Fq lambda_of_quartic(const QuarticModel& Q);

// Short Weierstrass model of the genus-1 curve (twist ignored) obtained by
// sending b to infinity and completing the cube.
EllipticCurve weierstrass_of_quartic(const QuarticModel& Q);

// Depressed cubic with the given distinct roots: x^3 + A x + B after the
// translation that kills the x^2 term.
EllipticCurve curve_from_roots(const std::array<Fq, 3>& roots);

// 2-torsion x-coordinates when they are F_{p^2}-rational, sorted.
std::vector<Fq> two_torsion_roots(const EllipticCurve& E);

// One supersingular class per j-invariant.
struct SupersingularClass {
  Fq j;
  Fq lambda;                  // smallest Legendre invariant with this j
  EllipticCurve curve;        // depressed Legendre model
  std::array<Fq, 3> roots;    // its 2-torsion x-coordinates, F_{p^2}-rational
};

std::vector<SupersingularClass> supersingular_classes(const FieldCtx& F, const SupersingularLambdaSet& ss);
std::vector<SupersingularClass> supersingular_classes(const FieldCtx& F);

// The curves of supersingular_classes().
std::vector<EllipticCurve> enumerate_supersingular_classes(const FieldCtx& F);

}  // namespace howe

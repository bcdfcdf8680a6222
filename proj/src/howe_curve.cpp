#include "howe/howe_curve.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace howe {

namespace {

std::array<Fq, 3> roots_of_monic_cubic(const UniPoly& f, const char* name) {
  if (f.degree() != 3 || !f.leading().is_one())
    throw std::invalid_argument(std::string("howe_from_cubics: ") + name + " is not a monic cubic");
  const std::vector<Fq> r = poly_roots_in_fq(f);
  if (r.size() != 3) throw std::invalid_argument(std::string("howe_from_cubics: ") + name + " is not separable and split");
  return {r[0], r[1], r[2]};
}

std::array<Fq, 4> binary_cubic(const UniPoly& f) {
  return {f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
}

}  // namespace

WeierstrassSplit::WeierstrassSplit(std::uint8_t mask) {
  mask &= 0x3f;
  if (std::popcount(mask) != 3) throw std::invalid_argument("WeierstrassSplit: mask must select three roots");
  mask_ = (mask & 1u) ? mask : static_cast<std::uint8_t>(~mask & 0x3f);
}

WeierstrassSplit WeierstrassSplit::from_indices(const std::array<int, 3>& indices) {
  std::uint8_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i > 5) throw std::invalid_argument("WeierstrassSplit: index out of range");
    mask |= static_cast<std::uint8_t>(1u << i);
  }
  return WeierstrassSplit(mask);
}

const std::array<WeierstrassSplit, 10>& WeierstrassSplit::all() {
  static const std::array<WeierstrassSplit, 10> splits = [] {
    std::vector<WeierstrassSplit> v;
    for (std::uint8_t m = 1; m < 64; m += 2)
      if (std::popcount(m) == 3) v.emplace_back(m);
    std::array<WeierstrassSplit, 10> out{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    return out;
  }();
  return splits;
}

std::array<int, 3> WeierstrassSplit::first() const {
  std::array<int, 3> out{};
  int n = 0;
  for (int i = 0; i < 6; ++i)
    if (contains_first(i)) out[n++] = i;
  return out;
}

std::array<int, 3> WeierstrassSplit::second() const {
  std::array<int, 3> out{};
  int n = 0;
  for (int i = 0; i < 6; ++i)
    if (!contains_first(i)) out[n++] = i;
  return out;
}

HoweData::HoweData(Genus2Curve C_, WeierstrassSplit split_, ProjPoint b_)
    : C(std::move(C_)), split(split_), b(b_) {
  if (C.has_root(b)) throw std::invalid_argument("HoweData: b is a Weierstrass point");
}

std::array<Fq, 3> HoweData::first_roots() const {
  const auto idx = split.first();
  return {C.root(idx[0]), C.root(idx[1]), C.root(idx[2])};
}

std::array<Fq, 3> HoweData::second_roots() const {
  const auto idx = split.second();
  return {C.root(idx[0]), C.root(idx[1]), C.root(idx[2])};
}

HoweData howe_from_cubics(const UniPoly& f1, const UniPoly& f2) {
  const auto r1 = roots_of_monic_cubic(f1, "f1");
  const auto r2 = roots_of_monic_cubic(f2, "f2");
  for (const Fq& a : r1)
    for (const Fq& b : r2)
      if (a == b) throw std::invalid_argument("howe_from_cubics: f1 and f2 share a root");
  std::array<Fq, 6> all{r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
  Genus2Curve C(all);
  std::uint8_t mask = 0;
  for (const Fq& a : r1) mask |= static_cast<std::uint8_t>(1u << C.index_of(ProjPoint::finite(a)));
  const FieldCtx& F = C.field();
  return HoweData(C, WeierstrassSplit(mask), ProjPoint::infinity(F));
}

bool is_superspecial_howe(const HoweData& H, const SupersingularLambdaSet& ss) {
  if (!ss.contains(lambda_of_quartic(QuarticModel{H.b, H.first_roots()}))) return false;
  if (!ss.contains(lambda_of_quartic(QuarticModel{H.b, H.second_roots()}))) return false;
  return is_superspecial(H.C);
}

bool is_superspecial_howe(const HoweData& H) {
  return is_superspecial_howe(H, supersingular_lambda_set(H.C.field()));
}

HoweData transform(const HoweData& H, const MobiusMap& m) {
  std::array<Fq, 6> roots;
  std::array<ProjPoint, 6> images{ProjPoint::finite(H.C.root(0)), ProjPoint::finite(H.C.root(1)),
                                  ProjPoint::finite(H.C.root(2)), ProjPoint::finite(H.C.root(3)),
                                  ProjPoint::finite(H.C.root(4)), ProjPoint::finite(H.C.root(5))};
  for (int i = 0; i < 6; ++i) {
    images[i] = m(images[i]);
    if (images[i].is_infinite()) throw std::invalid_argument("transform: a root is sent to infinity");
    roots[i] = images[i].value();
  }
  Genus2Curve C(roots);
  std::uint8_t mask = 0;
  for (int i : H.split.first()) mask |= static_cast<std::uint8_t>(1u << C.index_of(images[i]));
  return HoweData(C, WeierstrassSplit(mask), m(H.b));
}

std::optional<MobiusMap> howe_isomorphism(const HoweData& H, const HoweData& H2) {
  for (const MobiusMap& m : isomorphisms(H.C, H2.C)) {
    if (m(H.b) != H2.b) continue;
    std::uint8_t mask = 0;
    for (int i : H.split.first())
      mask |= static_cast<std::uint8_t>(1u << H2.C.index_of(m(H.C.root(i))));
    if (WeierstrassSplit(mask) == H2.split) return m;
  }
  return std::nullopt;
}

bool howe_isomorphic(const HoweData& H, const HoweData& H2) { return howe_isomorphism(H, H2).has_value(); }

CanonicalModel canonical_model_from_cubics(const UniPoly& f1, const UniPoly& f2) {
  if (f1.degree() != 3 || f2.degree() != 3 || !f1.leading().is_one() || !f2.leading().is_one())
    throw std::invalid_argument("canonical_model: expected monic cubics");
  CanonicalModel out{{}, binary_cubic(f1), binary_cubic(f2)};
  // The x^3 terms cancel, so f1 - f2 = y * q.
  for (int i = 0; i < 3; ++i) out.q[i] = out.f1[i + 1] - out.f2[i + 1];
  return out;
}

CanonicalModel canonical_model(const HoweData& H) {
  const FieldCtx& F = H.C.field();
  HoweData moved = H;
  if (H.b.is_finite()) moved = transform(H, MobiusMap(F.zero(), F.one(), F.one(), -H.b.value()));
  const auto r1 = moved.first_roots();
  const auto r2 = moved.second_roots();
  return canonical_model_from_cubics(UniPoly::from_roots(F, r1), UniPoly::from_roots(F, r2));
}

HoweData special_family(const FieldCtx& F, const Fq& a) {
  if (F.p() % 6 != 5) throw std::invalid_argument("special_family: requires p = 5 mod 6");
  if (a != -F.one() && a != F.from_int(4).inv())
    throw std::invalid_argument("special_family: a must be -1 or 1/4");
  const UniPoly f1(F, std::vector<Fq>{F.one(), F.zero(), F.zero(), F.one()});
  const UniPoly f2(F, std::vector<Fq>{a, F.zero(), F.zero(), F.one()});
  return howe_from_cubics(f1, f2);
}

std::string to_string(const HoweData& H) {
  std::ostringstream os;
  os << "roots [";
  for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << H.C.root(i).str();
  const auto w1 = H.split.first();
  const auto w2 = H.split.second();
  os << "] split {" << w1[0] << w1[1] << w1[2] << "|" << w2[0] << w2[1] << w2[2] << "} b " << H.b.str();
  return os.str();
}

}  // namespace howe

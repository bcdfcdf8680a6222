#include "howe/projective.hpp"

#include <stdexcept>

namespace howe {

namespace {

// det [a b] of two homogeneous column vectors.
Fq bracket(const ProjPoint& a, const ProjPoint& b) { return a.hx() * b.hy() - a.hy() * b.hx(); }

// Matrix sending infinity, 0, 1 to the given triple.
std::array<Fq, 4> frame_matrix(const std::array<ProjPoint, 3>& z) {
  // Columns alpha*v1 and beta*v2 with alpha*v1 + beta*v2 = v3.
  const Fq d = bracket(z[0], z[1]);
  if (d.is_zero() || bracket(z[0], z[2]).is_zero() || bracket(z[1], z[2]).is_zero())
    throw std::invalid_argument("mobius_from_triples: repeated point in triple");
  const Fq alpha = bracket(z[2], z[1]) / d;
  const Fq beta = bracket(z[0], z[2]) / d;
  return {alpha * z[0].hx(), beta * z[1].hx(), alpha * z[0].hy(), beta * z[1].hy()};
}

}  // namespace

ProjPoint ProjPoint::from_homogeneous(const Fq& x, const Fq& y) {
  if (y.is_zero()) {
    if (x.is_zero()) throw std::invalid_argument("[0 : 0] is not a point of P^1");
    return infinity(*x.field);
  }
  return finite(x / y);
}

const Fq& ProjPoint::value() const {
  if (infinite_) throw std::logic_error("value() of the point at infinity");
  return x_;
}

MobiusMap::MobiusMap(const Fq& m00, const Fq& m01, const Fq& m10, const Fq& m11)
    : m_{m00, m01, m10, m11} {
  if (determinant().is_zero()) throw std::invalid_argument("singular Mobius matrix");
  for (const Fq& c : m_) {
    if (!c.is_zero()) {
      const Fq s = c.inv();
      for (Fq& e : m_) e = e * s;
      break;
    }
  }
}

MobiusMap MobiusMap::identity(const FieldCtx& field) {
  return MobiusMap(field.one(), field.zero(), field.zero(), field.one());
}

ProjPoint MobiusMap::operator()(const ProjPoint& x) const {
  const Fq hx = x.hx(), hy = x.hy();
  return ProjPoint::from_homogeneous(m_[0] * hx + m_[1] * hy, m_[2] * hx + m_[3] * hy);
}

MobiusMap operator*(const MobiusMap& a, const MobiusMap& b) {
  const auto& x = a.m_;
  const auto& y = b.m_;
  return MobiusMap(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                   x[2] * y[1] + x[3] * y[3]);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

Fq cross_ratio(const ProjPoint& q, const ProjPoint& r, const ProjPoint& s, const ProjPoint& t) {
  const Fq qs = bracket(q, s), rt = bracket(r, t), rs = bracket(r, s), qt = bracket(q, t);
  if (qs.is_zero() || rt.is_zero() || rs.is_zero() || qt.is_zero() || bracket(q, r).is_zero() ||
      bracket(s, t).is_zero())
    throw std::invalid_argument("cross_ratio: points must be pairwise distinct");
  return (qs * rt) / (rs * qt);
}

MobiusMap mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
  const auto s = frame_matrix(src);
  const auto d = frame_matrix(dst);
  const MobiusMap to_dst(d[0], d[1], d[2], d[3]);
  const MobiusMap to_src(s[0], s[1], s[2], s[3]);
  return to_dst * to_src.inverse();
}

}  // namespace howe

#include "howe/genus2.hpp"

#include "howe/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace howe {

namespace {

using RawMatrix = std::array<Fq, 4>;

// Unnormalized matrix sending (infinity, 0, 1) to the triple; scaled by
// det[v1 v2] so no inversion is needed.
RawMatrix raw_frame(const Fq& z0, const Fq& z1, const Fq& z2) {
  // Finite points: v_i = (z_i, 1); alpha' = det[v3 v2], beta' = det[v1 v3].
  const Fq alpha = z2 - z1;
  const Fq beta = z0 - z2;
  const Fq one = z0.field->one();
  return {alpha * z0, beta * z1, alpha * one, beta * one};
}

RawMatrix raw_adjugate(const RawMatrix& m) { return {m[3], -m[1], -m[2], m[0]}; }

RawMatrix raw_mul(const RawMatrix& x, const RawMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// True when m maps the finite point x onto one of `targets`.
bool raw_maps_into(const RawMatrix& m, const Fq& x, const std::array<Fq, 6>& targets) {
  const Fq num = m[0] * x + m[1];
  const Fq den = m[2] * x + m[3];
  if (den.is_zero()) return false;
  for (const Fq& t : targets)
    if (num == den * t) return true;
  return false;
}

std::array<QuadraticSplitting, 15> make_splittings() {
  std::array<QuadraticSplitting, 15> out{};
  std::size_t n = 0;
  for (std::uint8_t a = 1; a < 6; ++a) {
    std::array<std::uint8_t, 4> rest{};
    std::size_t r = 0;
    for (std::uint8_t i = 1; i < 6; ++i)
      if (i != a) rest[r++] = i;
    // Pair rest[0] with each of the other three.
    for (std::size_t b = 1; b < 4; ++b) {
      std::array<std::uint8_t, 2> others{};
      std::size_t o = 0;
      for (std::size_t i = 1; i < 4; ++i)
        if (i != b) others[o++] = rest[i];
      out[n++] = QuadraticSplitting{{{0, a}, {rest[0], rest[b]}, {others[0], others[1]}}};
    }
  }
  return out;
}

// Roots of a x^2 + b x + c in P^1 (infinity when the degree drops).
std::array<ProjPoint, 2> quadratic_roots(const Fq& a, const Fq& b, const Fq& c) {
  const FieldCtx& F = *a.field;
  if (a.is_zero()) {
    if (b.is_zero()) throw std::runtime_error("richelot: degenerate quadratic");
    return {ProjPoint::finite(-c / b), ProjPoint::infinity(F)};
  }
  const Fq disc = b * b - F.from_int(4) * a * c;
  const auto s = F.sqrt(disc);
  if (!s) throw RationalityError("rationality invariant violated: Richelot quadratic does not split over F_{p^2}");
  const Fq inv2a = (a + a).inv();
  return {ProjPoint::finite((-b + *s) * inv2a), ProjPoint::finite((-b - *s) * inv2a)};
}

}  // namespace

Genus2Curve::Genus2Curve(std::array<Fq, 6> roots) : roots_(roots) {
  std::sort(roots_.begin(), roots_.end());
  if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end())
    throw std::invalid_argument("genus-2 curve needs six distinct roots");
}

UniPoly Genus2Curve::sextic() const { return UniPoly::from_roots(field(), roots_); }

int Genus2Curve::index_of(const ProjPoint& x) const {
  if (x.is_infinite()) return -1;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), x.value());
  if (it == roots_.end() || !(*it == x.value())) return -1;
  return static_cast<int>(it - roots_.begin());
}

NormalizedCurve genus2_from_points(const std::array<ProjPoint, 6>& points) {
  const FieldCtx& F = *points[0].hx().field;
  bool has_inf = false;
  for (const auto& pt : points) has_inf |= pt.is_infinite();
  MobiusMap m = MobiusMap::identity(F);
  if (has_inf) {
    std::uint32_t k = 0;
    for (; k < F.p(); ++k) {
      const ProjPoint cand = ProjPoint::finite(F.from_int(k));
      if (std::find(points.begin(), points.end(), cand) == points.end()) break;
    }
    m = MobiusMap(F.zero(), F.one(), F.one(), -F.from_int(k));
  }
  std::array<Fq, 6> roots;
  for (std::size_t i = 0; i < 6; ++i) roots[i] = m(points[i]).value();
  return NormalizedCurve{Genus2Curve(roots), m};
}

CartierManinEntries cartier_manin_of(const UniPoly& f) {
  const FieldCtx& F = f.field();
  const std::uint32_t p = F.p();
  const UniPoly g = poly_powmod_truncated(f, (p - 1) / 2, 2 * p - 1);
  return CartierManinEntries{g.coeff(p - 1), g.coeff(2 * p - 1), g.coeff(p - 2), g.coeff(2 * p - 2)};
}

CartierManinEntries cartier_manin(const Genus2Curve& C) { return cartier_manin_of(C.sextic()); }

bool is_superspecial(const Genus2Curve& C) { return cartier_manin(C).is_zero(); }

const std::array<QuadraticSplitting, 15>& all_quadratic_splittings() {
  static const std::array<QuadraticSplitting, 15> table = make_splittings();
  return table;
}

Fq splitting_determinant(const Genus2Curve& C, const QuadraticSplitting& s) {
  // Rows (c, b, 1) of the monic quadratics x^2 + b x + c.
  std::array<std::array<Fq, 2>, 3> g;
  for (int i = 0; i < 3; ++i) {
    const Fq& u = C.root(s[i][0]);
    const Fq& v = C.root(s[i][1]);
    g[i] = {u * v, -(u + v)};
  }
  // det [[c0 b0 1] [c1 b1 1] [c2 b2 1]]
  return g[0][0] * (g[1][1] - g[2][1]) - g[0][1] * (g[1][0] - g[2][0]) + (g[1][0] * g[2][1] - g[2][0] * g[1][1]);
}

std::size_t IgusaKeyHash::operator()(const IgusaKey& k) const noexcept {
  std::size_t h = k.kind;
  for (const Fq& v : k.values) h = h * 0x9E3779B97F4A7C15ull ^ (v.key() + 0x7F4A7C15ull + (h << 6) + (h >> 2));
  return h;
}

std::array<Fq, 4> igusa_clebsch_from_roots(const Genus2Curve& C) {
  const FieldCtx& F = C.field();
  std::array<std::array<Fq, 6>, 6> d;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const Fq diff = C.root(i) - C.root(j);
      d[i][j] = diff * diff;
    }

  Fq i2 = F.zero();
  for (const auto& s : all_quadratic_splittings())
    i2 += d[s[0][0]][s[0][1]] * d[s[1][0]][s[1][1]] * d[s[2][0]][s[2][1]];

  Fq i4 = F.zero(), i6 = F.zero();
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  // Triples containing root 0 enumerate the ten unordered splits once each.
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::array<int, 3> t{0, a, b};
      std::array<int, 3> u{};
      int n = 0;
      for (int i = 1; i < 6; ++i)
        if (i != a && i != b) u[n++] = i;
      const Fq dt = d[t[0]][t[1]] * d[t[1]][t[2]] * d[t[0]][t[2]];
      const Fq du = d[u[0]][u[1]] * d[u[1]][u[2]] * d[u[0]][u[2]];
      const Fq base = dt * du;
      i4 += base;
      Fq matched = F.zero();
      for (const auto& perm : kPerms)
        matched += d[t[0]][u[perm[0]]] * d[t[1]][u[perm[1]]] * d[t[2]][u[perm[2]]];
      i6 += base * matched;
    }

  Fq i10 = F.one();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) i10 *= d[i][j];
  return {i2, i4, i6, i10};
}

IgusaKey igusa_key(const Genus2Curve& C) {
  const FieldCtx& F = C.field();
  const auto [i2, i4, i6, i10] = igusa_clebsch_from_roots(C);
  IgusaKey key{0, {F.zero(), F.zero(), F.zero()}};
  if (!i2.is_zero()) {
    const Fq inv = i2.inv();
    const Fq inv2 = inv * inv;
    const Fq inv3 = inv2 * inv;
    key.kind = 0;
    key.values = {i4 * inv2, i6 * inv3, i10 * inv3 * inv2};
  } else if (!i4.is_zero()) {
    const Fq inv = i4.inv();
    const Fq inv3 = inv * inv * inv;
    const Fq inv4 = inv3 * inv;
    key.kind = 1;
    key.values = {i6 * i6 * inv3, i10 * i10 * inv4 * inv, i6 * i10 * inv4};
  } else if (!i6.is_zero()) {
    const Fq inv = i6.inv();
    key.kind = 2;
    key.values[0] = i10 * i10 * i10 * inv.pow(5);
  } else {
    key.kind = 3;
  }
  return key;
}

std::vector<MobiusMap> isomorphisms(const Genus2Curve& C, const Genus2Curve& C2) {
  std::vector<MobiusMap> out;
  const auto& a = C.roots();
  const auto& b = C2.roots();
  const RawMatrix from_src = raw_adjugate(raw_frame(a[0], a[1], a[2]));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 6; ++k) {
        if (k == i || k == j) continue;
        const RawMatrix m = raw_mul(raw_frame(b[i], b[j], b[k]), from_src);
        if (raw_maps_into(m, a[3], b) && raw_maps_into(m, a[4], b) && raw_maps_into(m, a[5], b))
          out.emplace_back(m[0], m[1], m[2], m[3]);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MobiusMap> isomorphic(const Genus2Curve& C, const Genus2Curve& C2) {
  const auto& a = C.roots();
  const auto& b = C2.roots();
  const RawMatrix from_src = raw_adjugate(raw_frame(a[0], a[1], a[2]));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 6; ++k) {
        if (k == i || k == j) continue;
        const RawMatrix m = raw_mul(raw_frame(b[i], b[j], b[k]), from_src);
        if (raw_maps_into(m, a[3], b) && raw_maps_into(m, a[4], b) && raw_maps_into(m, a[5], b))
          return MobiusMap(m[0], m[1], m[2], m[3]);
      }
    }
  return std::nullopt;
}

std::vector<MobiusMap> automorphisms(const Genus2Curve& C) { return isomorphisms(C, C); }

std::optional<RichelotCodomain> richelot_codomain(const Genus2Curve& C, const QuadraticSplitting& s) {
  if (splitting_determinant(C, s).is_zero()) return std::nullopt;
  const FieldCtx& F = C.field();
  // Monic G_i = x^2 + b_i x + c_i.
  std::array<Fq, 3> bs, cs;
  for (int i = 0; i < 3; ++i) {
    const Fq& u = C.root(s[i][0]);
    const Fq& v = C.root(s[i][1]);
    bs[i] = -(u + v);
    cs[i] = u * v;
  }
  const Fq two = F.from_int(2);
  std::array<ProjPoint, 6> points{ProjPoint::infinity(F), ProjPoint::infinity(F), ProjPoint::infinity(F),
                                  ProjPoint::infinity(F), ProjPoint::infinity(F), ProjPoint::infinity(F)};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    // H_i = G_j' G_k - G_j G_k'.
    const Fq h2 = bs[k] - bs[j];
    const Fq h1 = two * (cs[k] - cs[j]);
    const Fq h0 = bs[j] * cs[k] - cs[j] * bs[k];
    const auto r = quadratic_roots(h2, h1, h0);
    points[2 * i] = r[0];
    points[2 * i + 1] = r[1];
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (points[i] == points[j]) throw std::runtime_error("richelot: singular codomain");

  NormalizedCurve norm = genus2_from_points(points);
  QuadraticSplitting dual{};
  for (int i = 0; i < 3; ++i)
    for (int e = 0; e < 2; ++e)
      dual[i][e] = static_cast<std::uint8_t>(norm.curve.index_of(norm.moved(points[2 * i + e])));
  return RichelotCodomain{s, norm.curve, dual};
}

std::vector<RichelotCodomain> richelot_codomains(const Genus2Curve& C) {
  std::vector<RichelotCodomain> out;
  for (const auto& s : all_quadratic_splittings())
    if (auto r = richelot_codomain(C, s)) out.push_back(std::move(*r));
  return out;
}

std::optional<Genus2Curve> glue_elliptic_pair(const std::array<Fq, 3>& s, const std::array<Fq, 3>& t0,
                                              const std::array<int, 3>& matching) {
  const FieldCtx& F = *s[0].field;
  const std::array<Fq, 3> t{t0[matching[0]], t0[matching[1]], t0[matching[2]]};
  // Find beta, D with (s_i + beta)(t_i - D) independent of i: then
  // x -> x + beta and x -> K/(x - D) carry the two branch sets to
  // {inf, r_i} and {0, r_i} with the same r_i = s_i + beta.
  const Fq a11 = t[0] - t[1], a12 = s[1] - s[0];
  const Fq a21 = t[0] - t[2], a22 = s[2] - s[0];
  const Fq e1 = s[1] * t[1] - s[0] * t[0];
  const Fq e2 = s[2] * t[2] - s[0] * t[0];
  const Fq det = a11 * a22 - a12 * a21;
  if (det.is_zero()) return std::nullopt;
  const Fq beta = (e1 * a22 - a12 * e2) / det;
  const Fq D = (a11 * e2 - a21 * e1) / det;
  std::array<Fq, 3> r{s[0] + beta, s[1] + beta, s[2] + beta};
  const Fq K = r[0] * (t[0] - D);
  if (K.is_zero()) return std::nullopt;
  // y^2 = prod (x^2 - r_i / r_0): the involution x -> -x has the two
  // elliptic quotients.
  std::array<Fq, 6> roots;
  const Fq scale = r[0].inv();
  for (int i = 0; i < 3; ++i) {
    const auto root = F.sqrt(r[i] * scale);
    if (!root) throw RationalityError("rationality invariant violated: glued curve has irrational Weierstrass points");
    roots[2 * i] = *root;
    roots[2 * i + 1] = -*root;
  }
  return Genus2Curve(roots);
}

std::optional<std::size_t> SuperspecialList::find(const Genus2Curve& C) const { return find(C, igusa_key(C)); }

std::optional<std::size_t> SuperspecialList::find(const Genus2Curve& C, const IgusaKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if (curves_[idx] == C || isomorphic(curves_[idx], C)) return idx;
  return std::nullopt;
}

bool SuperspecialList::insert(const Genus2Curve& C) { return insert(C, igusa_key(C)); }

bool SuperspecialList::insert(const Genus2Curve& C, const IgusaKey& key) {
  if (find(C, key)) return false;
  index_[key].push_back(curves_.size());
  curves_.push_back(C);
  return true;
}

std::vector<Genus2Curve> glued_seeds(const FieldCtx& F, const std::vector<SupersingularClass>& classes) {
  (void)F;
  static constexpr std::array<std::array<int, 3>, 6> kMatchings{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<Genus2Curve> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j)
      for (const auto& m : kMatchings)
        if (auto C = glue_elliptic_pair(classes[i].roots, classes[j].roots, m)) out.push_back(*C);
  return out;
}

std::optional<Genus2Curve> rosenhain_seed(const FieldCtx& F) {
  const std::uint64_t q = F.order();
  for (std::uint64_t l = 2; l < q; ++l)
    for (std::uint64_t m = l + 1; m < q; ++m)
      for (std::uint64_t n = m + 1; n < q; ++n) {
        const std::array<ProjPoint, 6> pts{ProjPoint::finite(F.zero()),       ProjPoint::finite(F.one()),
                                           ProjPoint::finite(F.element(l)),    ProjPoint::finite(F.element(m)),
                                           ProjPoint::finite(F.element(n)),    ProjPoint::infinity(F)};
        NormalizedCurve c = genus2_from_points(pts);
        if (is_superspecial(c.curve)) return c.curve;
      }
  return std::nullopt;
}

SuperspecialList superspecial_genus2_list(const FieldCtx& F, const std::vector<SupersingularClass>& classes,
                                          const ClosureOptions& options) {
  if (F.p() <= 5) throw std::invalid_argument("superspecial_genus2_list requires p > 5");
  SuperspecialList list;
  auto add = [&](const Genus2Curve& C, const IgusaKey& key) {
    if (!list.insert(C, key)) return true;
    return !options.on_insert || options.on_insert(list, list.size() - 1);
  };

  std::vector<Genus2Curve> seeds;
  if (options.seeding == Seeding::kGluing) {
    seeds = glued_seeds(F, classes);
  } else if (auto seed = rosenhain_seed(F)) {
    seeds.push_back(*seed);
  }
  for (const auto& C : seeds)
    if (!add(C, igusa_key(C))) return list;

  // Breadth-first by levels: neighbors of a level are computed in parallel
  // and inserted in index order, so the result is independent of `workers`.
  std::size_t next = 0;
  while (next < list.size()) {
    const std::size_t end = list.size();
    std::vector<std::vector<std::pair<Genus2Curve, IgusaKey>>> found(end - next);
    parallel_for(end - next, options.workers, [&](std::size_t i) {
      for (auto& r : richelot_codomains(list[next + i])) found[i].emplace_back(r.codomain, igusa_key(r.codomain));
    });
    for (const auto& batch : found)
      for (const auto& [C, key] : batch)
        if (!add(C, key)) return list;
    next = end;
  }
  return list;
}

SuperspecialList superspecial_genus2_list(const FieldCtx& F, const ClosureOptions& options) {
  return superspecial_genus2_list(F, supersingular_classes(F), options);
}

std::int64_t iko_scaled_excess(std::uint32_t p, std::size_t count, std::int64_t denominator) {
  const std::int64_t P = p;
  return 720 * denominator * static_cast<std::int64_t>(count) - 720 * (P - 1) * (P * P + 25 * P + 166);
}

bool within_iko_window(std::uint32_t p, std::size_t count, std::int64_t denominator) {
  const std::int64_t e = iko_scaled_excess(p, count, denominator);
  return e >= -45 * denominator && e <= 836 * denominator;
}

}  // namespace howe

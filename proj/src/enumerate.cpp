#include "howe/enumerate.hpp"

#include <chrono>
#include <map>
#include <set>
#include <unordered_map>

#include "howe/parallel.hpp"

namespace howe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Fq> coefficients_padded(const UniPoly& f, std::size_t len) {
  std::vector<Fq> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(f.coeff(i));
  return out;
}

// Representatives pairwise non-isomorphic as Howe data; buckets by the Igusa
// key of the genus-2 quotient.
class HoweClassSet {
 public:
  bool insert(const HoweData& H) {
    auto& bucket = buckets_[igusa_key(H.C)];
    for (std::size_t i : bucket)
      if (howe_isomorphic(reps_[i], H)) return false;
    bucket.push_back(reps_.size());
    reps_.push_back(H);
    return true;
  }
  std::vector<HoweData> take() { return std::move(reps_); }

 private:
  std::vector<HoweData> reps_;
  std::unordered_map<IgusaKey, std::vector<std::size_t>, IgusaKeyHash> buckets_;
};

WeierstrassSplit image_split(const Genus2Curve& C, const WeierstrassSplit& s, const MobiusMap& m) {
  std::uint8_t mask = 0;
  for (int i : s.first()) mask |= static_cast<std::uint8_t>(1u << C.index_of(m(C.root(i))));
  return WeierstrassSplit(mask);
}

}  // namespace

double heuristic_ratio(std::uint32_t p, std::size_t n) {
  const double P = p;
  return static_cast<double>(n) * 1152.0 / (P * P * P);
}

CmLambdaSystem::CmLambdaSystem(const EllipticCurve& E1, const EllipticCurve& E2)
    : field_(E1.A.field), m_((E1.A.field->p() - 1) / 2) {
  const FieldCtx& F = *field_;
  const std::size_t deg = 3 * m_;
  h_ = coefficients_padded(poly_powmod_truncated(E1.cubic(), m_, deg), deg + 1);
  const std::vector<Fq> g = coefficients_padded(poly_powmod_truncated(E2.cubic(), m_, deg), deg + 1);
  // (G^m)(x - lambda) = sum_k g_k sum_i binom(k, i) x^i (-lambda)^(k - i).
  BinomialModP binom(F);
  shifted_.reserve(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    std::vector<Fq> c(deg - i + 1, F.zero());
    for (std::size_t k = i; k <= deg; ++k) {
      const Fq t = g[k] * binom(k, i);
      c[k - i] = ((k - i) & 1) ? -t : t;
    }
    shifted_.emplace_back(F, std::move(c));
  }
}

UniPoly CmLambdaSystem::entry(std::size_t N, const std::vector<Fq>& weights) const {
  const FieldCtx& F = *field_;
  const std::size_t deg = 3 * m_;
  std::vector<Fq> acc(deg + 1, F.zero());
  const std::size_t lo = N > deg ? N - deg : 0;
  const std::size_t hi = std::min(N, deg);
  for (std::size_t j = lo; j <= hi; ++j) {
    if (weights[j].is_zero()) continue;
    const auto& s = shifted_[N - j].coeffs();
    for (std::size_t k = 0; k < s.size(); ++k) acc[k] = acc[k] + weights[j] * s[k];
  }
  return UniPoly(F, std::move(acc));
}

LambdaEntries CmLambdaSystem::entries(const Fq& mu) const {
  const std::uint32_t p = field_->p();
  const std::size_t deg = 3 * m_;
  // [x^j] f1^m = h_j mu^(3m - j).
  std::vector<Fq> weights(deg + 1, field_->zero());
  Fq power = field_->one();
  for (std::size_t j = deg + 1; j-- > 0;) {
    weights[j] = h_[j] * power;
    power = power * mu;
  }
  return LambdaEntries{entry(p - 1, weights), entry(2 * p - 1, weights), entry(p - 2, weights),
                       entry(2 * p - 2, weights)};
}

LambdaEntries cm_entries_in_lambda(const Fq& A1, const Fq& B1, const Fq& A2, const Fq& B2, const Fq& mu) {
  return CmLambdaSystem(EllipticCurve{A1, B1}, EllipticCurve{A2, B2}).entries(mu);
}

std::array<UniPoly, 2> cubics_of_point(const EllipticCurve& E1, const EllipticCurve& E2, const HoweTypePoint& pt) {
  const FieldCtx& F = *E1.A.field;
  const Fq& l = pt.lambda;
  const Fq& mu = pt.mu;
  const Fq& nu = pt.nu;
  const Fq three = F.from_int(3);
  const UniPoly f1(F, std::vector<Fq>{E1.B * mu * mu * mu, E1.A * mu * mu, F.zero(), F.one()});
  // (x - l)^3 + A2 nu^2 (x - l) + B2 nu^3
  const Fq a2 = E2.A * nu * nu;
  const Fq b2 = E2.B * nu * nu * nu;
  const UniPoly f2(F, std::vector<Fq>{-(l * l * l) - a2 * l + b2, three * l * l + a2, -(three * l), F.one()});
  return {f1, f2};
}

std::vector<HoweTypePoint> solve_howe_points(const EllipticCurve& E1, const EllipticCurve& E2, std::uint64_t seed) {
  const FieldCtx& F = *E1.A.field;
  const CmLambdaSystem system(E1, E2);
  std::vector<HoweTypePoint> out;
  for (std::uint64_t idx = 1; idx < F.order(); ++idx) {
    const Fq mu = F.element(idx);
    const LambdaEntries e = system.entries(mu);
    UniPoly G(F);
    for (const UniPoly* f : {&e.a, &e.b, &e.c, &e.d})
      if (!f->is_zero()) G = G.is_zero() ? f->monic() : poly_gcd(G, *f);
    std::vector<Fq> lambdas;
    if (G.is_zero()) {
      for (std::uint64_t k = 0; k < F.order(); ++k) lambdas.push_back(F.element(k));
    } else if (G.degree() > 0) {
      lambdas = poly_roots_in_fq(G, seed);
    }
    for (const Fq& l : lambdas) {
      HoweTypePoint pt{l, mu, F.one()};
      const auto [f1, f2] = cubics_of_point(E1, E2, pt);
      if (poly_gcd(f1, f2).degree() > 0) continue;
      out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EnumReport enumerate_A(const FieldCtx& F, const EnumOptions& options) {
  const auto t0 = Clock::now();
  const SupersingularLambdaSet ss = supersingular_lambda_set(F);
  const std::vector<SupersingularClass> classes = supersingular_classes(F, ss);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<HoweData>> found(pairs.size());
  std::vector<std::size_t> points(pairs.size(), 0);
  parallel_for(pairs.size(), options.workers, [&](std::size_t k) {
    const EllipticCurve& E1 = classes[pairs[k].first].curve;
    const EllipticCurve& E2 = classes[pairs[k].second].curve;
    const auto pts = solve_howe_points(E1, E2, options.seed);
    points[k] = pts.size();
    HoweClassSet local;
    for (const HoweTypePoint& pt : pts) {
      const auto [f1, f2] = cubics_of_point(E1, E2, pt);
      HoweData H = howe_from_cubics(f1, f2);
      if (is_superspecial_howe(H, ss)) local.insert(H);
    }
    found[k] = local.take();
  });

  EnumReport report;
  report.p = F.p();
  report.strategy = 'A';
  HoweClassSet all;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    report.h0_size += points[k];
    for (const HoweData& H : found[k]) all.insert(H);
  }
  report.representatives = all.take();
  report.n = report.representatives.size();
  report.ratio = heuristic_ratio(report.p, report.n);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

std::vector<ProjPoint> good_b_values(const Genus2Curve& C, const WeierstrassSplit& split,
                                     const SupersingularLambdaSet& ss) {
  const FieldCtx& F = C.field();
  const auto w1 = split.first();
  const auto w2 = split.second();
  auto pt = [&](int i) { return ProjPoint::finite(C.root(i)); };
  // lambda_1(b) = CR(b, a1, a2, a3) sends a1 -> 1, a2 -> 0, a3 -> infinity.
  const MobiusMap lambda1 = mobius_from_triples({pt(w1[0]), pt(w1[1]), pt(w1[2])},
                                                {ProjPoint::finite(F.one()), ProjPoint::finite(F.zero()),
                                                 ProjPoint::infinity(F)});
  const MobiusMap preimage = lambda1.inverse();
  std::vector<ProjPoint> out;
  for (const Fq& l : ss.lambdas()) {
    const ProjPoint b = preimage(l);
    if (C.has_root(b)) continue;
    if (ss.contains(cross_ratio(b, pt(w2[0]), pt(w2[1]), pt(w2[2])))) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HoweData> howe_representatives_over(const Genus2Curve& C, const SupersingularLambdaSet& ss) {
  std::vector<std::pair<WeierstrassSplit, ProjPoint>> candidates;
  for (const WeierstrassSplit& s : WeierstrassSplit::all())
    for (const ProjPoint& b : good_b_values(C, s, ss)) candidates.emplace_back(s, b);
  if (candidates.empty()) return {};
  const std::vector<MobiusMap> auts = automorphisms(C);
  std::set<std::pair<std::uint8_t, ProjPoint>> seen;
  std::vector<HoweData> out;
  for (const auto& [s, b] : candidates) {
    if (seen.count({s.mask(), b})) continue;
    out.emplace_back(C, s, b);
    for (const MobiusMap& m : auts) seen.emplace(image_split(C, s, m).mask(), m(b));
  }
  return out;
}

EnumReport enumerate_B(const FieldCtx& F, const EnumOptions& options) {
  const auto t0 = Clock::now();
  ClosureOptions closure;
  closure.workers = options.workers;
  EnumReport report = enumerate_B(F, superspecial_genus2_list(F, closure), options);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

EnumReport enumerate_B(const FieldCtx& F, const SuperspecialList& L, const EnumOptions& options) {
  const auto t0 = Clock::now();
  const SupersingularLambdaSet ss = supersingular_lambda_set(F);

  std::vector<std::vector<HoweData>> found(L.size());
  std::vector<std::size_t> raw(L.size(), 0);
  parallel_for(L.size(), options.workers, [&](std::size_t i) {
    for (const WeierstrassSplit& s : WeierstrassSplit::all()) raw[i] += good_b_values(L[i], s, ss).size();
    found[i] = howe_representatives_over(L[i], ss);
  });

  EnumReport report;
  report.p = F.p();
  report.strategy = 'B';
  report.genus2_count = L.size();
  for (std::size_t i = 0; i < L.size(); ++i) {
    report.h0_size += raw[i];
    for (HoweData& H : found[i]) report.representatives.push_back(std::move(H));
  }
  report.n = report.representatives.size();
  report.ratio = heuristic_ratio(report.p, report.n);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

std::optional<HoweData> find_one(const FieldCtx& F, const EnumOptions& options) {
  if (F.p() % 6 == 5) return special_family(F, -F.one());
  const SupersingularLambdaSet ss = supersingular_lambda_set(F);
  std::optional<HoweData> witness;
  ClosureOptions closure;
  closure.workers = options.workers;
  closure.on_insert = [&](const SuperspecialList& list, std::size_t i) {
    for (const WeierstrassSplit& s : WeierstrassSplit::all()) {
      const auto bs = good_b_values(list[i], s, ss);
      if (!bs.empty()) {
        witness.emplace(list[i], s, bs.front());
        return false;
      }
    }
    return true;
  };
  superspecial_genus2_list(F, supersingular_classes(F, ss), closure);
  return witness;
}

}  // namespace howe

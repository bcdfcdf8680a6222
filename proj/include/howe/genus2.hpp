#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "howe/ellcurve.hpp"
#include "howe/field.hpp"
#include "howe/poly.hpp"
#include "howe/projective.hpp"

namespace howe {

// A Richelot codomain (or glued curve) whose Weierstrass points are not all
// F_{p^2}-rational. Superspecial inputs never produce one.
class RationalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// y^2 = prod (x - a_i) with six distinct roots, kept sorted.
class Genus2Curve {
 public:
  // Throws std::invalid_argument on repeated roots.
  explicit Genus2Curve(std::array<Fq, 6> roots);

  const FieldCtx& field() const { return *roots_[0].field; }
  const std::array<Fq, 6>& roots() const { return roots_; }
  const Fq& root(std::size_t i) const { return roots_[i]; }
  UniPoly sextic() const;
  // Index of x among the roots, or -1.
  int index_of(const ProjPoint& x) const;
  bool has_root(const ProjPoint& x) const { return index_of(x) >= 0; }

  friend bool operator==(const Genus2Curve&, const Genus2Curve&) = default;

 private:
  std::array<Fq, 6> roots_;
};

// Six distinct points of P^1 moved to a finite model. When one point is
// infinite the map x -> 1/(x - k) is applied, k the smallest element of F_p
// that is not a root; `moved` records it.
struct NormalizedCurve {
  Genus2Curve curve;
  MobiusMap moved;
};
NormalizedCurve genus2_from_points(const std::array<ProjPoint, 6>& points);

// Coefficients of f^((p-1)/2): a = g_{p-1}, b = g_{2p-1}, c = g_{p-2}, d = g_{2p-2}.
struct CartierManinEntries {
  Fq a, b, c, d;
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

CartierManinEntries cartier_manin(const Genus2Curve& C);
// Same entries for an arbitrary polynomial f (any degree).
CartierManinEntries cartier_manin_of(const UniPoly& f);
bool is_superspecial(const Genus2Curve& C);

// Three disjoint root-index pairs covering {0..5}.
using QuadraticSplitting = std::array<std::array<std::uint8_t, 2>, 3>;
const std::array<QuadraticSplitting, 15>& all_quadratic_splittings();

// Determinant of the coefficient matrix of the three quadratics.
Fq splitting_determinant(const Genus2Curve& C, const QuadraticSplitting& s);

// Weighted-projective normalization of the root-form Igusa-Clebsch
// invariants. Isomorphic curves have equal keys.
struct IgusaKey {
  std::uint8_t kind = 0;  // 0: I2 != 0; 1: I2 = 0, I4 != 0; 2: I2 = I4 = 0, I6 != 0; 3: rest
  std::array<Fq, 3> values;

  friend bool operator==(const IgusaKey&, const IgusaKey&) = default;
  friend auto operator<=>(const IgusaKey& a, const IgusaKey& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.values <=> b.values;
  }
};

struct IgusaKeyHash {
  std::size_t operator()(const IgusaKey& k) const noexcept;
};

// (I2, I4, I6, I10) computed from root differences of the monic model.
std::array<Fq, 4> igusa_clebsch_from_roots(const Genus2Curve& C);
IgusaKey igusa_key(const Genus2Curve& C);

// A Mobius map taking the roots of C onto the roots of C2, if any.
std::optional<MobiusMap> isomorphic(const Genus2Curve& C, const Genus2Curve& C2);
// Every such map, sorted.
std::vector<MobiusMap> isomorphisms(const Genus2Curve& C, const Genus2Curve& C2);
// Stabilizer of the root set in PGL_2(F_{p^2}), i.e. Aut(C) modulo the
// hyperelliptic involution.
std::vector<MobiusMap> automorphisms(const Genus2Curve& C);

struct RichelotCodomain {
  QuadraticSplitting kernel;  // on the domain roots
  Genus2Curve codomain;
  QuadraticSplitting dual;    // roots of H_1, H_2, H_3 on the codomain
};

// Codomain for one splitting; nullopt when the determinant vanishes (the
// codomain is then a product of elliptic curves). Throws RationalityError
// if some H_i does not split over F_{p^2}.
std::optional<RichelotCodomain> richelot_codomain(const Genus2Curve& C, const QuadraticSplitting& s);
std::vector<RichelotCodomain> richelot_codomains(const Genus2Curve& C);

// Genus-2 curve glued from y^2 = prod(x - s_i) and y^2 = prod(x - t_i) along
// the 2-torsion matching s_i <-> t_{matching[i]}. nullopt when the matching
// is induced by an isomorphism of the two curves.
std::optional<Genus2Curve> glue_elliptic_pair(const std::array<Fq, 3>& s, const std::array<Fq, 3>& t,
                                              const std::array<int, 3>& matching);

// Pairwise non-isomorphic superspecial curves with an Igusa-key index.
class SuperspecialList {
 public:
  const std::vector<Genus2Curve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }
  const Genus2Curve& operator[](std::size_t i) const { return curves_[i]; }

  // Index of a stored curve isomorphic to C.
  std::optional<std::size_t> find(const Genus2Curve& C) const;
  std::optional<std::size_t> find(const Genus2Curve& C, const IgusaKey& key) const;
  // Appends C unless an isomorphic curve is present; returns true if added.
  bool insert(const Genus2Curve& C);
  bool insert(const Genus2Curve& C, const IgusaKey& key);

 private:
  std::vector<Genus2Curve> curves_;
  std::unordered_map<IgusaKey, std::vector<std::size_t>, IgusaKeyHash> index_;
};

enum class Seeding { kGluing, kRosenhain };

struct ClosureOptions {
  Seeding seeding = Seeding::kGluing;
  unsigned workers = 1;
  // Called after each insertion with the list and the new index; returning
  // false stops the closure early.
  std::function<bool(const SuperspecialList&, std::size_t)> on_insert;
};

// All gluings of pairs of supersingular classes along all matchings.
std::vector<Genus2Curve> glued_seeds(const FieldCtx& F, const std::vector<SupersingularClass>& classes);

// First superspecial curve found by scanning Rosenhain models
// x(x - 1)(x - l)(x - m)(x - n) in lexicographic order.
std::optional<Genus2Curve> rosenhain_seed(const FieldCtx& F);

// Seeds plus breadth-first Richelot closure. Requires p > 5.
SuperspecialList superspecial_genus2_list(const FieldCtx& F, const std::vector<SupersingularClass>& classes,
                                          const ClosureOptions& options = {});
SuperspecialList superspecial_genus2_list(const FieldCtx& F, const ClosureOptions& options = {});

// c = |L| - (p-1)(p^2 + 25p + 166)/D scaled by 720 D, so it is an integer.
// The Ibukiyama-Katsura-Oort count has c in [-1/16, 209/180] with D = 2880.
std::int64_t iko_scaled_excess(std::uint32_t p, std::size_t count, std::int64_t denominator = 2880);
bool within_iko_window(std::uint32_t p, std::size_t count, std::int64_t denominator = 2880);

}  // namespace howe

#pragma once
// Equator, extended equator and tropic circle geometries of opposite pairs.

#include <array>
#include <cstdint>
#include <vector>

#include "e6/gamma.hpp"
#include "e6/polar.hpp"

namespace e6 {

struct EquatorGeometry {
  HId p, q;
  std::vector<HId> points;  // sorted, 63
};

struct ExtendedEquator {
  std::vector<HId> points;  // sorted, 255
  std::vector<Vec> basis;   // reduced echelon basis of the linear span (9 vectors)
  HId key_a = kNoH, key_b = kNoH;  // least opposite pair
  bool contains(HId x) const;
};

struct TropicCircle {
  std::vector<HId> points;  // sorted, 2295
  bool contains(HId x) const;
};

struct SolidRelation {
  std::size_t meet;  // |U cap V|
  Rel beta_rel;      // relation of beta(U), beta(V)
  HId midpoint = kNoH;
  bool consistent;   // plane/line/point/empty matches collinear/symplectic/special/opposite
};

struct GrownHyperbolic {
  std::vector<HId> plane;  // 7
  std::vector<HId> solid;  // 15
  ExtendedEquator ext;
  HId p = kNoH, q = kNoH;
};

enum class EquatorLocation { InE, InT, InHOnly, Outside };
struct EquatorPlacement {
  EquatorLocation where;
  std::array<std::size_t, 5> profile{};  // relation counts to points of E-hat, by Rel
  HId anchor = kNoH;                      // InHOnly: the collinear point of E-hat
  std::vector<HId> solid;                 // InHOnly: solid through anchor, rest symplectic to x
  std::vector<HId> special_set;           // Outside: points of E-hat special to x
};

struct HyperplaneH {
  std::vector<HId> points;  // sorted
  std::vector<HId> deep;    // sorted
};

struct ImaginaryCompletion {
  std::vector<std::vector<HId>> tags;  // hyperbolic D4s inside the tropic circle, 135 each
  std::size_t points() const;          // 255 + tags
};

class Equators {
 public:
  explicit Equators(const Gamma& g) : g_(g) {}
  const Gamma& gamma() const { return g_; }

  bool opposite(HId x, HId y) const { return g_.relation(x, y).kind == Rel::Opposite; }

  // One pivot per symplecton through p.
  EquatorGeometry equator(HId p, HId q) const;
  // Same, but each pivot found by scanning the symplecton (point_symp_relation).
  EquatorGeometry equator_by_scan(HId p, HId q) const;

  // Closure of E(p,q) and p, q under third points of hyperbolic lines.
  ExtendedEquator extended_equator(HId p, HId q) const;
  // Union of E(x,y) over opposite x,y in E(p,q).
  std::vector<HId> extended_equator_by_union(HId p, HId q) const;
  // Fixpoint closure of a point set under hyperbolic third points.
  std::vector<HId> hyperbolic_closure(std::vector<HId> pts) const;
  ExtendedEquator from_points(std::vector<HId> pts) const;

  // Points of the symplecton in the extended equator (0 or 3 of them).
  std::vector<HId> symp_trace(std::uint32_t s, const ExtendedEquator& e) const;

  TropicCircle tropic_circle(const ExtendedEquator& e) const;
  std::vector<HId> beta(HId x, const ExtendedEquator& e) const;
  HId beta_inv(const std::vector<HId>& solid) const;
  bool is_hyperbolic_subspace(const std::vector<HId>& pts) const;

  SolidRelation solid_relation(const std::vector<HId>& u, const std::vector<HId>& v) const;
  GrownHyperbolic grow_hyperbolic(HId a, HId b) const;

  HyperplaneH hyperplane_H(const ExtendedEquator& e, const TropicCircle& t) const;
  EquatorPlacement classify_vs_equator(HId x, const ExtendedEquator& e,
                                       const TropicCircle& t) const;
  ImaginaryCompletion imaginary_completion(const ExtendedEquator& e,
                                           const TropicCircle& t) const;

  // Local polar space on a set of Gamma points with hyperbolic lines.
  LocalSpace hyperbolic_space(const std::vector<HId>& pts) const;
  // Polar space on E-hat plus completion tags.
  LocalSpace completion_space(const ExtendedEquator& e, const TropicCircle& t,
                              const ImaginaryCompletion& c) const;

 private:
  const Gamma& g_;
};

}  // namespace e6

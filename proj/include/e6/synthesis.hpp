#pragma once
// The E6 geometry rebuilt from Gamma: points are Gamma points plus extended
// equators ("new points"), lines are Gamma lines, hyperbolic lines and one
// new line per hyperbolic solid. Quads, 4-spaces, 5-spaces, planes and the
// polarity are evaluated on demand.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "e6/equator.hpp"

namespace e6 {

using EpsId = std::uint32_t;
using SId = std::uint32_t;  // < |H|: ordinary point; else |H| + EpsId
constexpr SId kNoS = 0xFFFFFFFFu;

using EpsBasis = std::array<Vec, 9>;

class NewPointCatalog {
 public:
  std::size_t size() const { return bases_.size(); }
  const EpsBasis& basis(EpsId e) const { return bases_[e]; }
  const std::vector<EpsBasis>& bases() const { return bases_; }
  std::span<const HId> points(EpsId e) const { return {pts_.data() + std::size_t(e) * 255, 255}; }
  // Ascending ids of the extended equators through an ordinary point.
  std::span<const EpsId> through(HId x) const {
    return {idx_.data() + off_[x], off_[x + 1] - off_[x]};
  }

  // Sweeps the points in order; at p, each opposite q not yet covered by a
  // known equator through p yields a new one.
  static NewPointCatalog enumerate(const Equators& eq,
                                   const std::function<void(HId)>& progress = {});
  static NewPointCatalog from_bases(const Gamma& g, std::vector<EpsBasis> bases);

 private:
  void add(const EpsBasis& b, const std::vector<HId>& pts);
  void build_index(std::size_t npoints);

  std::vector<EpsBasis> bases_;
  std::vector<HId> pts_;
  std::vector<std::uint32_t> off_;
  std::vector<EpsId> idx_;
};

enum class SLineKind { Gamma, Hyperbolic, New };
struct SynthLine {
  SLineKind kind;
  std::array<SId, 3> pts;   // sorted
  std::vector<HId> solid;   // New: the hyperbolic solid shared by its two new points
};

enum class Sort { Point, Line, Plane, FiveSpace, FourSpace, Quad };
const char* sort_name(Sort s);

struct Element {
  Sort sort;
  std::vector<SId> pts;  // sorted; a point is a singleton
  friend bool operator==(const Element&, const Element&) = default;
};

class Synth {
 public:
  Synth(const Equators& eq, const NewPointCatalog& cat);

  const Gamma& gamma() const { return g_; }
  const Equators& equators() const { return eq_; }
  const NewPointCatalog& catalog() const { return cat_; }

  std::size_t size() const { return nh_ + cat_.size(); }
  std::size_t ordinary_count() const { return nh_; }
  bool is_new(SId s) const { return s >= nh_; }
  EpsId eps(SId s) const { return s - SId(nh_); }
  SId of_eps(EpsId e) const { return SId(nh_) + e; }

  std::span<const HId> points_of(EpsId e) const { return cat_.points(e); }
  bool eps_contains(EpsId e, HId x) const;
  // x lies in the tropic circle of e: at least two Gamma-neighbours in e.
  bool in_tropic(HId x, EpsId e) const;
  std::vector<HId> tropic(EpsId e) const;
  std::vector<HId> beta(HId x, EpsId e) const;  // x^perp cap e
  // Equators containing all given points.
  std::vector<EpsId> eps_containing(std::span<const HId> pts) const;
  EpsId eps_of_pair(HId x, HId y) const;  // x, y opposite
  EpsId eps_of_points(const std::vector<HId>& sorted_pts) const;  // kNoS if none

  bool collinear(SId a, SId b) const;
  SId third(SId a, SId b) const;  // kNoS unless collinear
  SynthLine line(SId a, SId b) const;
  SynthLine new_line(const std::vector<HId>& solid) const;
  // All lines through a point.
  std::vector<SynthLine> lines_through(SId a) const;
  // Equators collinear with an ordinary point (those whose tropic circle holds it).
  std::vector<EpsId> eps_collinear_with(HId x) const;

  std::vector<SId> quad_of_point(HId p) const;
  std::vector<SId> quad_of_new(EpsId e) const;
  // The same quad from the opposite pairs of the tropic circle.
  std::vector<SId> quad_of_new_by_pairs(EpsId e) const;
  std::vector<SId> quad(SId a) const { return is_new(a) ? quad_of_new(eps(a)) : quad_of_point(a); }

  // U(l) from its defining description (perp, hyperbolic perp plus equators, or cone test).
  std::vector<SId> four_space(const SynthLine& l) const;
  // U(V) for a hyperbolic solid V via the cone criterion.
  std::vector<SId> four_space_of_solid(const std::vector<HId>& v) const;
  // Hyperbolic cone over W with vertex beta(W), and its twin.
  std::pair<std::vector<HId>, std::vector<HId>> cone_and_twin(const std::vector<HId>& w) const;
  std::vector<HId> twin(const std::vector<HId>& cone) const;
  std::vector<SId> five_space(const std::vector<HId>& cone) const;
  // Gamma-lines of a 31-point cone all pass through its vertex; returns it or kNoH.
  HId cone_vertex(const std::vector<HId>& cone) const;

  // Polarity.
  Element theta(const Element& x) const;
  SId quad_tag(const std::vector<SId>& quad) const;                 // inverse of quad()
  SynthLine line_of_four_space(const std::vector<SId>& u) const;    // inverse of four_space()
  std::vector<SId> plane_image(const std::vector<SId>& plane) const;  // meet of quads
  bool incident(const Element& a, const Element& b) const;

  LocalSpace space_on(const std::vector<SId>& pts) const;
  // Singular closure of a set of collinear points (empty if not singular).
  std::vector<SId> span_of(std::vector<SId> pts) const;

 private:
  const Equators& eq_;
  const Gamma& g_;
  const NewPointCatalog& cat_;
  std::size_t nh_;
};

std::vector<SId> sorted_intersection(const std::vector<SId>& a, const std::vector<SId>& b);

}  // namespace e6

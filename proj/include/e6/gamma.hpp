#pragma once
// The metasymplectic space sitting in the trace-zero section of Delta.
// Points carry dense local ids (HId) in the sorted trace-zero table.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "e6/delta.hpp"

namespace e6 {

using HId = std::uint32_t;
constexpr HId kNoH = 0xFFFFFFFFu;

enum class Rel { Equal, Collinear, Symplectic, Special, Opposite };
const char* rel_name(Rel r);

struct GammaRelation {
  Rel kind;
  HId midpoint = kNoH;  // only for Special
};

enum class LineKind { GammaLine, HyperbolicLine };
struct LineClass {
  LineKind kind;
  int symplecta;                      // 5-space extensions inside H
  std::vector<std::vector<HId>> spaces;  // their point sets, sorted
};

enum class SympRel { In, Close, Far };
struct PointSympRelation {
  SympRel kind;
  std::vector<HId> line;  // Close: the 3 collinear points
  HId pivot = kNoH;       // Far
};

struct Symplecton {
  std::array<Vec, 6> basis;
  std::array<HId, 63> points;
};

constexpr int kGammaDegree = 270;
constexpr int kSympPerPoint = 63;

class Gamma {
 public:
  // Builds the trace-zero table, collinearity lists and the symplecton catalog.
  explicit Gamma(const Delta& d, bool with_symplecta = true);
  // Reuses a cached symplecton catalog (bases only).
  Gamma(const Delta& d, const std::vector<std::array<Vec, 6>>& symplecton_bases);

  const Delta& delta() const { return d_; }
  std::size_t size() const { return h_.size(); }
  Vec vec(HId h) const { return d_.vec(h_[h]); }
  PointId did(HId h) const { return h_[h]; }
  HId hid(PointId p) const { return inv_[p]; }
  HId hid_of_vec(Vec v) const {
    PointId p = d_.id(v);
    return p == kNoPoint ? kNoH : inv_[p];
  }

  std::span<const HId> neighbours(HId x) const {
    return {nbr_.data() + std::size_t(x) * kGammaDegree, kGammaDegree};
  }
  bool collinear(HId x, HId y) const;
  bool delta_collinear(HId x, HId y) const { return d_.collinear_vec(vec(x), vec(y)); }
  bool symplectic(HId x, HId y) const { return x != y && delta_collinear(x, y) && !collinear(x, y); }
  GammaRelation relation(HId x, HId y) const;
  HId third(HId x, HId y) const { return hid_of_vec(vec(x) ^ vec(y)); }

  // Extension-search classification of a Delta-line inside H.
  LineClass classify_line(HId x, HId y) const;
  // Points of H collinear in Delta with x (excluding x), full scan.
  std::vector<HId> delta_perp(HId x) const;

  // (x^perp cap y^perp)^perp in Gamma, computed literally.
  std::vector<HId> hyperbolic_line(HId x, HId y) const;
  std::vector<HId> common_neighbours(HId x, HId y) const;

  // Symplecton catalog.
  std::size_t symplecton_count() const { return symp_.size(); }
  const Symplecton& symplecton(std::uint32_t s) const { return symp_[s]; }
  const std::vector<Symplecton>& symplecta() const { return symp_; }
  std::span<const std::uint32_t> symplecta_through(HId x) const {
    return {symp_of_.data() + std::size_t(x) * kSympPerPoint, kSympPerPoint};
  }
  bool in_symplecton(HId x, std::uint32_t s) const;
  std::uint32_t symplecton_of_pair(HId x, HId y) const;
  PointSympRelation point_symp_relation(HId x, std::uint32_t s) const;
  // Point of the symplecton collinear in Delta with x, via the kernel of x cross.
  HId far_pivot(HId x, std::uint32_t s) const;

  // Relation census from x: counts for Collinear, Symplectic, Special, Opposite.
  std::array<std::size_t, 4> census(HId x) const;
  // Bitset over H of {x} cup N(x) cup N(N(x)): the non-opposite set of x.
  std::vector<std::uint64_t> near_bits(HId x) const;

 private:
  void build_points();
  void build_neighbours();
  void build_symplecta();
  void index_symplecta();
  Symplecton make_symplecton(const std::vector<Vec>& gens) const;

  const Delta& d_;
  std::vector<PointId> h_;
  std::vector<HId> inv_;
  std::vector<HId> nbr_;
  std::vector<Symplecton> symp_;
  std::vector<std::uint32_t> symp_of_;
};

inline bool test_bit(const std::vector<std::uint64_t>& b, std::size_t i) {
  return b[i >> 6] >> (i & 63) & 1;
}
inline void set_bit(std::vector<std::uint64_t>& b, std::size_t i) {
  b[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace e6

#pragma once
// The E6 point-line geometry over GF(2): rank-one classes of the Albert
// algebra. Points are dense ids into the sorted table of 27-bit vectors.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "e6/algebra.hpp"
#include "e6/gf2.hpp"

namespace e6 {

using PointId = std::uint32_t;
constexpr PointId kNoPoint = 0xFFFFFFFFu;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using DeltaLine = std::array<PointId, 3>;

struct Quad {
  std::vector<PointId> points;  // sorted
  std::optional<Vec> dual_vec;
};

enum class PointQuadKind { Contained, Neighboring, Opposite };
struct PointQuadRelation {
  PointQuadKind kind;
  std::vector<PointId> meet;  // the 4-space in the neighboring case
};

class Delta {
 public:
  // Full 2^27 scan.
  static Delta enumerate();
  // From a previously computed sorted table (cache reload).
  static Delta from_table(std::vector<Vec> table);

  std::size_t size() const { return pts_.size(); }
  Vec vec(PointId i) const { return pts_[i]; }
  const std::vector<Vec>& table() const { return pts_; }

  bool is_point(Vec v) const { return v && (bits_[v >> 6] >> (v & 63) & 1); }
  PointId id(Vec v) const;  // kNoPoint if not rank one

  bool collinear(PointId x, PointId y) const;  // throws on x == y
  bool collinear_vec(Vec x, Vec y) const { return x != y && is_point(x ^ y); }
  DeltaLine line_through(PointId x, PointId y) const;

  std::vector<PointId> perp(PointId x) const;  // excludes x
  std::vector<std::uint64_t> perp_bits(PointId x) const;

  // Convex closure of a non-collinear pair.
  Quad quad_through(PointId x, PointId y) const;
  // Rank-one points in the image of Y -> xi x Y; xi a rank-one dual vector.
  Quad quad_of_dual(Vec xi) const;
  PointQuadRelation point_quad_relation(PointId x, const Quad& q) const;
  // Common class of X x Y over sampled non-collinear pairs; throws if not constant.
  Vec quad_dual_point(const Quad& q, std::uint64_t seed, int pairs) const;

 private:
  void build_index();
  std::vector<Vec> pts_;
  std::vector<std::uint64_t> bits_;    // 2^21 words
  std::vector<std::uint32_t> prefix_;  // popcount before each word
};

inline std::size_t closed_form_point_count() {
  // (q^12 - 1)(q^9 - 1) / ((q^4 - 1)(q - 1)) at q = 2
  return ((1ull << 12) - 1) * ((1ull << 9) - 1) / ((1ull << 4) - 1);
}

}  // namespace e6

#pragma once
// The 27-point thin E6 geometry built from the elliptic quadrangle of order
// (2,4). Elements are subsets of the 27 points, stored as bit masks.
// Collinearity in the thin geometry is non-collinearity in the quadrangle.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "e6/report.hpp"

namespace e6 {

using Mask = std::uint32_t;

// A quadratic form on GF(2)^6 given by its monomial coefficients: c[i][j]
// (i <= j) multiplies x_i x_j.
using QuadForm = std::array<std::array<std::uint8_t, 6>, 6>;

QuadForm standard_elliptic_form();  // x0x1 + x2x3 + x4^2 + x4x5 + x5^2
QuadForm permuted_elliptic_form();  // the same shape on shuffled coordinates

struct GQ24 {
  std::vector<std::uint8_t> coords;         // singular vectors, one per point
  std::vector<std::array<int, 3>> lines;
  std::vector<Mask> perp;                   // the point and its collinear points
  bool collinear(int a, int b) const { return a != b && (perp[a] >> b & 1); }
};

GQ24 build_gq24(const QuadForm& f = standard_elliptic_form());

// Types in diagram order: 1 point, 2 five-space, 3 line, 4 plane, 5 four-space, 6 quad.
enum class ThinType { Point = 1, FiveSpace = 2, Line = 3, Plane = 4, FourSpace = 5, Quad = 6 };

struct ThinElement {
  ThinType type;
  Mask pts;
};

class ThinE6 {
 public:
  explicit ThinE6(GQ24 gq);

  const GQ24& gq() const { return gq_; }
  const std::vector<Mask>& of(ThinType t) const { return sets_[int(t) - 1]; }
  std::array<std::size_t, 6> counts() const;

  // Thin collinearity: distinct and not collinear in the quadrangle.
  bool collinear(int a, int b) const { return a != b && !gq_.collinear(a, b); }
  Mask collinear_with(int a) const { return ~gq_.perp[a] & kAll; }
  bool incident(const ThinElement& a, const ThinElement& b) const;
  ThinElement opposite(const ThinElement& e) const;

  static constexpr Mask kAll = (Mask{1} << 27) - 1;

 private:
  Mask gperp(Mask s) const;  // common quadrangle perp of a set of points
  GQ24 gq_;
  std::array<std::vector<Mask>, 6> sets_;
};

// Exhaustive checks of the thin geometry.
Report verify_thin(const ThinE6& t);

}  // namespace e6

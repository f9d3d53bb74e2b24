#pragma once
// Tangent and secant quads of Delta relative to the trace-zero section, the
// polarity rebuilt from them, and the pairing on the non-H points of a
// secant quad.

#include <cstdint>
#include <random>
#include <vector>

#include "e6/synthesis.hpp"

namespace e6 {

enum class QuadKind { Tangent, Secant };
struct QuadClass {
  QuadKind kind;
  HId point = kNoH;   // Tangent
  EpsId eps = kNoS;   // Secant
};

struct SigmaReport {
  std::vector<PointId> outside;  // Q minus E, sorted
  std::vector<PointId> image;    // sigma of each, parallel to outside
  std::size_t generators = 0;
  std::size_t choices = 0;       // (V, W) picks evaluated
  std::size_t disagreements = 0; // picks giving a different image
  std::size_t degenerate = 0;    // picks where a step was not a single point
};

class Recognition {
 public:
  explicit Recognition(const Synth& s);

  const Delta& delta() const { return d_; }

  // quad_through(u, v) for the first non-Delta-collinear pair of Gamma-neighbours.
  Quad tangent_quad(HId x) const;
  Quad secant_quad(HId x, HId y) const;
  std::vector<HId> h_part(const Quad& q) const;
  QuadClass classify_quad(const Quad& q) const;

  // The point of Q_x cap Q_y off H for an opposite pair of the equator.
  PointId image_of_eps(EpsId e) const;
  // Image of every synthesized point; index by SId.
  std::vector<PointId> iso_table() const;

  // Polarity from tangent and secant quads; needs the iso table for points off H.
  Quad theta_point(PointId s, const std::vector<EpsId>& eps_of_point) const;
  PointId theta_quad(const Quad& q) const;

  SigmaReport pairing_sigma(const Quad& q, std::mt19937_64& rng, int picks) const;

 private:
  const Synth& s_;
  const Gamma& g_;
  const Delta& d_;
};

// Inverse of an iso table restricted to points off H.
std::vector<EpsId> eps_by_delta_point(const std::vector<PointId>& iso, std::size_t nh,
                                      std::size_t ndelta);

}  // namespace e6

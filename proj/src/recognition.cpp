#include "e6/recognition.hpp"

#include <algorithm>

#include "e6/gf2.hpp"
#include "e6/polar.hpp"

namespace e6 {

Recognition::Recognition(const Synth& s)
    : s_(s), g_(s.gamma()), d_(s.gamma().delta()) {}

Quad Recognition::tangent_quad(HId x) const {
  auto n = g_.neighbours(x);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      if (!g_.delta_collinear(n[i], n[j])) return d_.quad_through(g_.did(n[i]), g_.did(n[j]));
  throw GeometryError("NoWitnessPair");
}

Quad Recognition::secant_quad(HId x, HId y) const {
  if (g_.relation(x, y).kind != Rel::Opposite) throw GeometryError("NotOpposite");
  return d_.quad_through(g_.did(x), g_.did(y));
}

std::vector<HId> Recognition::h_part(const Quad& q) const {
  std::vector<HId> out;
  for (PointId p : q.points) {
    HId h = g_.hid(p);
    if (h != kNoH) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadClass Recognition::classify_quad(const Quad& q) const {
  auto h = h_part(q);
  QuadClass c{QuadKind::Tangent};
  int found = 0;
  if (h.size() == 271) {
    for (HId x : h) {
      std::vector<HId> perp{x};
      for (HId n : g_.neighbours(x)) perp.push_back(n);
      std::sort(perp.begin(), perp.end());
      if (perp == h) {
        c = {QuadKind::Tangent, x};
        ++found;
      }
    }
  }
  EpsId e = s_.eps_of_points(h);
  if (e != kNoS) {
    c = {QuadKind::Secant, kNoH, e};
    ++found;
  }
  if (found != 1) throw GeometryError("quad is neither tangent nor secant");
  return c;
}

PointId Recognition::image_of_eps(EpsId e) const {
  auto pts = s_.points_of(e);
  HId x = pts[0], y = kNoH;
  for (HId z : pts)
    if (g_.relation(x, z).kind == Rel::Opposite) {
      y = z;
      break;
    }
  Span m = intersect(cross_image(g_.vec(x)), cross_image(g_.vec(y)));
  PointId s = kNoPoint;
  int n = 0;
  for (Vec v : m.elements()) {
    PointId p = d_.id(v);
    if (p == kNoPoint) continue;
    ++n;
    s = p;
  }
  if (n != 1 || g_.hid(s) != kNoH) throw GeometryError("NotSingleton");
  return s;
}

std::vector<PointId> Recognition::iso_table() const {
  std::vector<PointId> out(s_.size());
  for (HId x = 0; x < g_.size(); ++x) out[x] = g_.did(x);
  for (EpsId e = 0; e < s_.catalog().size(); ++e) out[s_.of_eps(e)] = image_of_eps(e);
  return out;
}

std::vector<EpsId> eps_by_delta_point(const std::vector<PointId>& iso, std::size_t nh,
                                      std::size_t ndelta) {
  std::vector<EpsId> out(ndelta, kNoS);
  for (std::size_t i = nh; i < iso.size(); ++i) out[iso[i]] = EpsId(i - nh);
  return out;
}

Quad Recognition::theta_point(PointId s, const std::vector<EpsId>& eps_of_point) const {
  HId h = g_.hid(s);
  if (h != kNoH) return tangent_quad(h);
  EpsId e = eps_of_point[s];
  if (e == kNoS) throw GeometryError("point off H with no equator");
  auto pts = s_.points_of(e);
  for (HId z : pts)
    if (g_.relation(pts[0], z).kind == Rel::Opposite) return secant_quad(pts[0], z);
  throw GeometryError("equator without opposite pair");
}

PointId Recognition::theta_quad(const Quad& q) const {
  auto c = classify_quad(q);
  return c.kind == QuadKind::Tangent ? g_.did(c.point) : image_of_eps(c.eps);
}

SigmaReport Recognition::pairing_sigma(const Quad& q, std::mt19937_64& rng, int picks) const {
  const auto& P = q.points;
  const int n = int(P.size());
  auto idx = [&](PointId p) {
    auto it = std::lower_bound(P.begin(), P.end(), p);
    return (it != P.end() && *it == p) ? int(it - P.begin()) : -1;
  };
  LocalSpace ls(
      n, [&](int a, int b) { return d_.collinear(P[a], P[b]); },
      [&](int a, int b) { return idx(d_.id(d_.vec(P[a]) ^ d_.vec(P[b]))); });
  auto gens = ls.maximal_singular();
  SigmaReport rep;
  rep.generators = gens.size();

  // System label: same system iff the meet has 31, 7 or 1 points.
  std::vector<int> sys(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Bits m = gens[0];
    m &= gens[i];
    std::size_t c = m.count();
    sys[i] = (c == 31 || c == 7 || c == 1) ? 0 : 1;
  }
  Bits in_e{std::size_t(n)};
  for (int i = 0; i < n; ++i)
    if (g_.hid(P[i]) != kNoH) in_e.set(std::size_t(i));
  std::vector<std::vector<int>> through(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i : gens[k].items()) through[std::size_t(i)].push_back(int(k));

  // The other generator through a 3-space of E.
  auto partner = [&](int k, const Bits& sol) -> int {
    int f = sol.first();
    int hit = -1;
    for (int j : through[std::size_t(f)])
      if (j != k && sol.subset_of(gens[std::size_t(j)])) {
        if (hit >= 0) return -2;
        hit = j;
      }
    return hit;
  };

  for (int x = 0; x < n; ++x) {
    if (in_e.test(std::size_t(x))) continue;
    const auto& tx = through[std::size_t(x)];
    PointId first = kNoPoint;
    for (int t = 0; t < picks; ++t) {
      std::uniform_int_distribution<std::size_t> pick(0, tx.size() - 1);
      int v = tx[pick(rng)], w = tx[pick(rng)];
      Bits vw = gens[std::size_t(v)];
      vw &= gens[std::size_t(w)];
      if (sys[std::size_t(v)] != sys[std::size_t(w)] || vw.count() != 1) {
        --t;
        continue;
      }
      ++rep.choices;
      Bits sv = gens[std::size_t(v)], sw = gens[std::size_t(w)];
      sv &= in_e;
      sw &= in_e;
      int v2 = sv.count() == 15 ? partner(v, sv) : -1;
      int w2 = sw.count() == 15 ? partner(w, sw) : -1;
      if (v2 < 0 || w2 < 0) {
        ++rep.degenerate;
        continue;
      }
      Bits m = gens[std::size_t(v2)];
      m &= gens[std::size_t(w2)];
      if (m.count() != 1) {
        ++rep.degenerate;
        continue;
      }
      PointId y = P[std::size_t(m.first())];
      if (first == kNoPoint)
        first = y;
      else if (y != first)
        ++rep.disagreements;
    }
    rep.outside.push_back(P[std::size_t(x)]);
    rep.image.push_back(first);
  }
  return rep;
}

}  // namespace e6

#include "e6/equator.hpp"

#include <algorithm>
#include <map>

#include "e6/gf2.hpp"

namespace e6 {

namespace {

bool sorted_has(const std::vector<HId>& v, HId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<HId> sorted_meet(const std::vector<HId>& a, const std::vector<HId>& b) {
  std::vector<HId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool ExtendedEquator::contains(HId x) const { return sorted_has(points, x); }
bool TropicCircle::contains(HId x) const { return sorted_has(points, x); }
std::size_t ImaginaryCompletion::points() const { return 255 + tags.size(); }

EquatorGeometry Equators::equator(HId p, HId q) const {
  if (!opposite(p, q)) throw GeometryError("NotOpposite");
  EquatorGeometry e{p, q, {}};
  for (auto s : g_.symplecta_through(p)) e.points.push_back(g_.far_pivot(q, s));
  std::sort(e.points.begin(), e.points.end());
  e.points.erase(std::unique(e.points.begin(), e.points.end()), e.points.end());
  return e;
}

EquatorGeometry Equators::equator_by_scan(HId p, HId q) const {
  if (!opposite(p, q)) throw GeometryError("NotOpposite");
  EquatorGeometry e{p, q, {}};
  for (auto s : g_.symplecta_through(p)) {
    auto r = g_.point_symp_relation(q, s);
    if (r.kind != SympRel::Far) throw GeometryError("opposite point not far from symplecton");
    e.points.push_back(r.pivot);
  }
  std::sort(e.points.begin(), e.points.end());
  e.points.erase(std::unique(e.points.begin(), e.points.end()), e.points.end());
  return e;
}

ExtendedEquator Equators::from_points(std::vector<HId> pts) const {
  Span sp;
  for (auto x : pts) sp.insert(g_.vec(x));
  ExtendedEquator e;
  e.basis = sp.basis();
  for (Vec v : sp.elements()) {
    HId h = g_.hid_of_vec(v);
    if (h != kNoH) e.points.push_back(h);
  }
  std::sort(e.points.begin(), e.points.end());
  e.key_a = e.points.front();
  for (auto y : e.points)
    if (opposite(e.key_a, y)) {
      e.key_b = y;
      break;
    }
  return e;
}

ExtendedEquator Equators::extended_equator(HId p, HId q) const {
  auto eq = equator(p, q);
  // Thirds of hyperbolic lines are vector sums; the closure is the set of
  // H-points in the linear span (a 9-space holding 255 of them).
  std::vector<HId> gens = eq.points;
  gens.push_back(p);
  gens.push_back(q);
  return from_points(std::move(gens));
}

std::vector<HId> Equators::extended_equator_by_union(HId p, HId q) const {
  auto eq = equator(p, q);
  std::vector<HId> out;
  for (std::size_t i = 0; i < eq.points.size(); ++i)
    for (std::size_t j = i + 1; j < eq.points.size(); ++j) {
      HId x = eq.points[i], y = eq.points[j];
      if (!opposite(x, y)) continue;
      auto e = equator(x, y);
      out.insert(out.end(), e.points.begin(), e.points.end());
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HId> Equators::hyperbolic_closure(std::vector<HId> pts) const {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t done = 0; done < pts.size();) {
    std::size_t n = pts.size();
    std::vector<HId> add;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = std::max(i + 1, done); j < n; ++j)
        if (g_.symplectic(pts[i], pts[j])) {
          HId t = g_.third(pts[i], pts[j]);
          if (t == kNoH) throw GeometryError("hyperbolic third point outside H");
          if (!sorted_has(pts, t)) add.push_back(t);
        }
    done = n;
    pts.insert(pts.end(), add.begin(), add.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == n) break;
    done = 0;  // new points reorder the list; rescan
  }
  return pts;
}

std::vector<HId> Equators::symp_trace(std::uint32_t s, const ExtendedEquator& e) const {
  const auto& pts = g_.symplecton(s).points;
  std::vector<HId> sp(pts.begin(), pts.end());
  return sorted_meet(sp, e.points);
}

TropicCircle Equators::tropic_circle(const ExtendedEquator& e) const {
  std::vector<std::uint8_t> cnt(g_.size(), 0);
  for (auto a : e.points)
    for (auto n : g_.neighbours(a))
      if (cnt[n] < 255) ++cnt[n];
  TropicCircle t;
  for (HId x = 0; x < g_.size(); ++x)
    if (cnt[x] >= 2) t.points.push_back(x);
  return t;
}

std::vector<HId> Equators::beta(HId x, const ExtendedEquator& e) const {
  auto n = g_.neighbours(x);
  std::vector<HId> out;
  std::set_intersection(n.begin(), n.end(), e.points.begin(), e.points.end(),
                        std::back_inserter(out));
  if (out.size() < 2) throw GeometryError("NotInTropic");
  return out;
}

bool Equators::is_hyperbolic_subspace(const std::vector<HId>& pts) const {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!g_.symplectic(pts[i], pts[j])) return false;
      if (!sorted_has(pts, g_.third(pts[i], pts[j]))) return false;
    }
  return true;
}

HId Equators::beta_inv(const std::vector<HId>& solid) const {
  if (solid.size() != 15 || !std::is_sorted(solid.begin(), solid.end()) ||
      !is_hyperbolic_subspace(solid))
    throw GeometryError("NotASolid");
  auto n0 = g_.neighbours(solid[0]);
  std::vector<HId> cand(n0.begin(), n0.end());
  for (std::size_t i = 1; i < solid.size() && !cand.empty(); ++i) {
    auto n = g_.neighbours(solid[i]);
    std::vector<HId> next;
    std::set_intersection(cand.begin(), cand.end(), n.begin(), n.end(), std::back_inserter(next));
    cand.swap(next);
  }
  if (cand.size() != 1) throw GeometryError("NoPoint");
  return cand[0];
}

SolidRelation Equators::solid_relation(const std::vector<HId>& u,
                                       const std::vector<HId>& v) const {
  auto meet = sorted_meet(u, v);
  HId a = beta_inv(u), b = beta_inv(v);
  auto r = g_.relation(a, b);
  SolidRelation out{meet.size(), r.kind, r.midpoint, false};
  switch (r.kind) {
    case Rel::Collinear: out.consistent = meet.size() == 7; break;
    case Rel::Symplectic: out.consistent = meet.size() == 3; break;
    case Rel::Special:
      out.consistent = meet.size() == 1 && meet[0] == r.midpoint;
      break;
    case Rel::Opposite: out.consistent = meet.empty(); break;
    case Rel::Equal: out.consistent = false; break;
  }
  return out;
}

GrownHyperbolic Equators::grow_hyperbolic(HId u1, HId u2) const {
  if (!g_.symplectic(u1, u2)) throw GeometryError("not a hyperbolic line");
  HId u3 = g_.third(u1, u2);
  std::uint32_t sh = g_.symplecton_of_pair(u1, u2);
  const auto& shp = g_.symplecton(sh).points;

  // Step 1: a line L of S(h) inside h-perp, a plane through L leaving S(h), x in it.
  std::vector<HId> hperp;
  for (auto y : shp)
    if (g_.collinear(y, u1) && g_.collinear(y, u2) && g_.collinear(y, u3)) hperp.push_back(y);
  HId a = kNoH, b = kNoH;
  for (std::size_t i = 0; i < hperp.size() && a == kNoH; ++i)
    for (std::size_t j = i + 1; j < hperp.size(); ++j)
      if (g_.collinear(hperp[i], hperp[j])) {
        a = hperp[i];
        b = hperp[j];
        break;
      }
  if (a == kNoH) throw GeometryError("h-perp has no line");
  std::vector<HId> line{a, b, g_.third(a, b)};
  std::sort(line.begin(), line.end());
  HId x = kNoH;
  for (auto c : g_.common_neighbours(a, b))
    if (g_.collinear(c, line[0]) && g_.collinear(c, line[1]) && g_.collinear(c, line[2]) &&
        !g_.in_symplecton(c, sh)) {
      x = c;
      break;
    }
  if (x == kNoH) throw GeometryError("no plane through L outside S(h)");
  std::vector<HId> plane_pi{line[0], line[1], line[2], x};
  for (auto y : line) plane_pi.push_back(g_.third(x, y));
  std::sort(plane_pi.begin(), plane_pi.end());

  // Steps 3 and 5: from a symplecton through x meeting pi in a line, a point
  // symplectic to x, u1, u2.
  auto pick = [&](std::uint32_t s) -> HId {
    auto r1 = g_.point_symp_relation(u1, s);
    auto r2 = g_.point_symp_relation(u2, s);
    if (r1.kind != SympRel::Close || r2.kind != SympRel::Close)
      throw GeometryError("u_i not close to S_i");
    for (auto p : g_.symplecton(s).points) {
      if (p == x || g_.collinear(p, x)) continue;
      bool ok = true;
      for (auto l : r1.line) ok = ok && g_.collinear(p, l);
      for (auto l : r2.line) ok = ok && g_.collinear(p, l);
      if (ok) return p;
    }
    throw GeometryError("no point over L1, L2");
  };
  std::vector<HId> m1;
  HId p = kNoH, q = kNoH;
  for (auto s : g_.symplecta_through(x)) {
    std::vector<HId> sp(g_.symplecton(s).points.begin(), g_.symplecton(s).points.end());
    auto m = sorted_meet(sp, plane_pi);
    if (m.size() != 3) continue;
    if (p == kNoH) {
      m1 = m;
      p = pick(s);
    } else if (m != m1) {
      q = pick(s);
      if (opposite(p, q)) break;
      throw GeometryError("grown p, q not opposite");
    }
  }
  if (q == kNoH) throw GeometryError("no second symplecton through x");

  GrownHyperbolic out;
  out.p = p;
  out.q = q;
  out.plane = hyperbolic_closure({x, u1, u2});
  out.solid = hyperbolic_closure({p, x, u1, u2});
  out.ext = extended_equator(p, q);
  return out;
}

HyperplaneH Equators::hyperplane_H(const ExtendedEquator& e, const TropicCircle& t) const {
  std::vector<std::uint8_t> in(g_.size(), 0);
  for (auto a : e.points) {
    in[a] = 1;
    for (auto n : g_.neighbours(a)) in[n] = 1;
  }
  HyperplaneH h;
  for (HId x = 0; x < g_.size(); ++x)
    if (in[x]) h.points.push_back(x);
  for (auto x : h.points) {
    bool deep = true;
    for (auto n : g_.neighbours(x))
      if (!in[n]) {
        deep = false;
        break;
      }
    if (deep) h.deep.push_back(x);
  }
  (void)t;
  return h;
}

EquatorPlacement Equators::classify_vs_equator(HId x, const ExtendedEquator& e,
                                               const TropicCircle& t) const {
  EquatorPlacement out{};
  std::vector<HId> coll;
  for (auto a : e.points) {
    auto r = g_.relation(x, a);
    ++out.profile[std::size_t(r.kind)];
    if (r.kind == Rel::Collinear) coll.push_back(a);
    if (r.kind == Rel::Special) out.special_set.push_back(a);
  }
  auto& pr = out.profile;
  if (e.contains(x)) {
    out.where = EquatorLocation::InE;
    out.special_set.clear();
  } else if (t.contains(x)) {
    out.where = EquatorLocation::InT;
    out.special_set.clear();
  } else if (pr[std::size_t(Rel::Collinear)] > 0) {
    out.where = EquatorLocation::InHOnly;
    if (coll.size() != 1) throw GeometryError("point of H-hat with several anchors");
    out.anchor = coll[0];
    out.special_set.clear();
    // The solid through the anchor all of whose other points are symplectic to x.
    std::vector<HId> u{out.anchor};
    for (auto a : e.points)
      if (g_.symplectic(x, a)) u.push_back(a);
    std::sort(u.begin(), u.end());
    out.solid = u;
  } else {
    out.where = EquatorLocation::Outside;
  }
  return out;
}

ImaginaryCompletion Equators::imaginary_completion(const ExtendedEquator& e,
                                                   const TropicCircle& t) const {
  (void)e;
  const std::size_t nt = t.points.size();
  std::vector<std::uint32_t> local(g_.size(), 0xFFFFFFFFu);
  for (std::size_t i = 0; i < nt; ++i) local[t.points[i]] = std::uint32_t(i);

  ImaginaryCompletion c;
  std::vector<std::vector<std::uint32_t>> tags_of(nt);  // tag ids through a T-hat point
  std::vector<Bits> tag_bits;
  for (std::size_t i = 0; i < nt; ++i) {
    HId x = t.points[i];
    auto near = g_.near_bits(x);
    Bits covered(nt);
    for (auto k : tags_of[i]) covered |= tag_bits[k];
    for (std::size_t j = 0; j < nt; ++j) {
      HId y = t.points[j];
      if (test_bit(near, y) || covered.test(j)) continue;
      // x, y opposite inside T-hat: a hyperbolic D4.
      auto ext = extended_equator(x, y);
      std::vector<HId> d4 = sorted_meet(ext.points, t.points);
      Bits b(nt);
      for (auto z : d4) b.set(local[z]);
      std::uint32_t id = std::uint32_t(c.tags.size());
      c.tags.push_back(std::move(d4));
      for (auto z : c.tags.back()) tags_of[local[z]].push_back(id);
      covered |= b;
      tag_bits.push_back(std::move(b));
    }
  }
  return c;
}

LocalSpace Equators::hyperbolic_space(const std::vector<HId>& pts) const {
  std::map<HId, int> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = int(i);
  auto coll = [&](int a, int b) { return g_.symplectic(pts[a], pts[b]); };
  auto third = [&](int a, int b) {
    auto it = idx.find(g_.third(pts[a], pts[b]));
    return it == idx.end() ? -1 : it->second;
  };
  return LocalSpace(int(pts.size()), coll, third);
}

LocalSpace Equators::completion_space(const ExtendedEquator& e, const TropicCircle& t,
                                      const ImaginaryCompletion& c) const {
  const std::size_t nt = t.points.size();
  std::vector<std::uint32_t> local(g_.size(), 0xFFFFFFFFu);
  for (std::size_t i = 0; i < nt; ++i) local[t.points[i]] = std::uint32_t(i);

  // Each element of the completion is a D4 inside T-hat: standard for points of E-hat,
  // hyperbolic for the tags.
  std::vector<Bits> d4;
  for (auto a : e.points) {
    Bits b(nt);
    for (auto n : g_.neighbours(a))
      if (local[n] != 0xFFFFFFFFu) b.set(local[n]);
    d4.push_back(std::move(b));
  }
  for (const auto& tag : c.tags) {
    Bits b(nt);
    for (auto z : tag) b.set(local[z]);
    d4.push_back(std::move(b));
  }
  const int n = int(d4.size());
  std::vector<std::vector<int>> through(nt);
  for (int k = 0; k < n; ++k)
    for (int i : d4[k].items()) through[std::size_t(i)].push_back(k);

  auto meet = [&](int a, int b) {
    Bits m = d4[a];
    m &= d4[b];
    return m;
  };
  auto coll = [&](int a, int b) { return meet(a, b).any(); };
  auto third = [&](int a, int b) {
    Bits m = meet(a, b);
    int f = m.first();
    if (f < 0) return -1;
    for (int k : through[std::size_t(f)])
      if (k != a && k != b && m.subset_of(d4[k])) return k;
    return -1;
  };
  return LocalSpace(n, coll, third);
}

}  // namespace e6

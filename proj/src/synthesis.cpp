#include "e6/synthesis.hpp"

#include <algorithm>

#include "e6/gf2.hpp"

namespace e6 {

namespace {

template <class A, class B>
std::size_t meet_count(const A& a, const B& b) {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

template <class A, class B>
auto meet_of(const A& a, const B& b) {
  std::vector<std::decay_t<decltype(*a.begin())>> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<SId> sorted_intersection(const std::vector<SId>& a, const std::vector<SId>& b) {
  return meet_of(a, b);
}

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Point: return "point";
    case Sort::Line: return "line";
    case Sort::Plane: return "plane";
    case Sort::FiveSpace: return "5-space";
    case Sort::FourSpace: return "4-space";
    case Sort::Quad: return "quad";
  }
  return "?";
}

// ---- catalog ----

void NewPointCatalog::add(const EpsBasis& b, const std::vector<HId>& pts) {
  bases_.push_back(b);
  pts_.insert(pts_.end(), pts.begin(), pts.end());
}

void NewPointCatalog::build_index(std::size_t npoints) {
  off_.assign(npoints + 1, 0);
  for (HId x : pts_) ++off_[x + 1];
  for (std::size_t i = 0; i < npoints; ++i) off_[i + 1] += off_[i];
  idx_.assign(pts_.size(), 0);
  std::vector<std::uint32_t> fill(off_.begin(), off_.end() - 1);
  for (EpsId e = 0; e < bases_.size(); ++e)
    for (HId x : points(e)) idx_[fill[x]++] = e;
}

NewPointCatalog NewPointCatalog::enumerate(const Equators& eq,
                                           const std::function<void(HId)>& progress) {
  const Gamma& g = eq.gamma();
  const std::size_t n = g.size();
  NewPointCatalog cat;
  std::vector<std::vector<EpsId>> through(n);
  std::vector<std::uint64_t> tail_mask((n + 63) / 64, 0);
  for (std::size_t i = n; i < tail_mask.size() * 64; ++i) set_bit(tail_mask, i);

  for (HId p = 0; p < n; ++p) {
    if (progress && p % 4096 == 0) progress(p);
    auto covered = g.near_bits(p);
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= tail_mask[w];
    for (EpsId e : through[p])
      for (HId y : cat.points(e)) set_bit(covered, y);
    for (std::size_t w = 0; w < covered.size(); ++w) {
      while (~covered[w]) {
        HId q = HId(w * 64 + std::size_t(__builtin_ctzll(~covered[w])));
        auto ext = eq.extended_equator(p, q);
        if (ext.points.size() != 255 || ext.basis.size() != 9)
          throw GeometryError("extended equator of unexpected size");
        EpsBasis b{};
        std::copy(ext.basis.begin(), ext.basis.end(), b.begin());
        EpsId id = EpsId(cat.size());
        cat.add(b, ext.points);
        for (HId y : ext.points) {
          through[y].push_back(id);
          set_bit(covered, y);
        }
        if (!test_bit(covered, q)) throw GeometryError("equator misses its base point");
      }
    }
  }
  cat.build_index(n);
  return cat;
}

NewPointCatalog NewPointCatalog::from_bases(const Gamma& g, std::vector<EpsBasis> bases) {
  NewPointCatalog cat;
  std::vector<HId> pts;
  for (const auto& b : bases) {
    Span sp;
    for (Vec v : b) sp.insert(v);
    pts.clear();
    for (Vec v : sp.elements()) {
      HId h = g.hid_of_vec(v);
      if (h != kNoH) pts.push_back(h);
    }
    if (pts.size() != 255) throw GeometryError("cached equator basis gives wrong size");
    std::sort(pts.begin(), pts.end());
    cat.add(b, pts);
  }
  cat.build_index(g.size());
  return cat;
}

// ---- basic queries ----

Synth::Synth(const Equators& eq, const NewPointCatalog& cat)
    : eq_(eq), g_(eq.gamma()), cat_(cat), nh_(eq.gamma().size()) {}

bool Synth::eps_contains(EpsId e, HId x) const {
  auto p = cat_.points(e);
  return std::binary_search(p.begin(), p.end(), x);
}

bool Synth::in_tropic(HId x, EpsId e) const {
  auto a = g_.neighbours(x);
  auto b = cat_.points(e);
  int n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      if (++n == 2) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

std::vector<HId> Synth::tropic(EpsId e) const {
  std::vector<std::uint8_t> cnt(nh_, 0);
  for (HId a : cat_.points(e))
    for (HId n : g_.neighbours(a))
      if (cnt[n] < 2) ++cnt[n];
  std::vector<HId> out;
  for (HId x = 0; x < nh_; ++x)
    if (cnt[x] >= 2) out.push_back(x);
  return out;
}

std::vector<HId> Synth::beta(HId x, EpsId e) const {
  return meet_of(g_.neighbours(x), cat_.points(e));
}

std::vector<EpsId> Synth::eps_containing(std::span<const HId> pts) const {
  if (pts.empty()) return {};
  auto t = cat_.through(pts[0]);
  std::vector<EpsId> cand(t.begin(), t.end());
  for (std::size_t i = 1; i < pts.size() && !cand.empty(); ++i) cand = meet_of(cand, cat_.through(pts[i]));
  return cand;
}

EpsId Synth::eps_of_pair(HId x, HId y) const {
  auto c = meet_of(cat_.through(x), cat_.through(y));
  if (c.size() != 1) throw GeometryError("opposite pair not in exactly one equator");
  return c[0];
}

EpsId Synth::eps_of_points(const std::vector<HId>& pts) const {
  if (pts.size() != 255) return kNoS;
  std::array<HId, 2> two{pts[0], pts[1]};
  for (EpsId e : eps_containing(two)) {
    auto p = cat_.points(e);
    if (std::equal(p.begin(), p.end(), pts.begin())) return e;
  }
  return kNoS;
}

bool Synth::collinear(SId a, SId b) const {
  if (a == b) return false;
  if (!is_new(a) && !is_new(b)) return g_.collinear(a, b) || g_.symplectic(a, b);
  if (is_new(a) && is_new(b)) return meet_count(cat_.points(eps(a)), cat_.points(eps(b))) == 15;
  if (is_new(a)) std::swap(a, b);
  return in_tropic(a, eps(b));
}

SId Synth::third(SId a, SId b) const {
  if (!collinear(a, b)) return kNoS;
  if (!is_new(a) && !is_new(b)) {
    HId t = g_.third(a, b);
    if (t == kNoH) throw GeometryError("third point outside H");
    return t;
  }
  if (is_new(a) && is_new(b)) {
    auto v = meet_of(cat_.points(eps(a)), cat_.points(eps(b)));
    return eq_.beta_inv(v);
  }
  if (is_new(a)) std::swap(a, b);
  auto v = beta(a, eps(b));
  auto c = eps_containing(v);
  if (c.size() != 2) throw GeometryError("solid not in exactly two equators");
  return of_eps(c[0] == eps(b) ? c[1] : c[0]);
}

SynthLine Synth::line(SId a, SId b) const {
  SId c = third(a, b);
  if (c == kNoS) throw GeometryError("points not collinear");
  SynthLine l;
  l.pts = {a, b, c};
  std::sort(l.pts.begin(), l.pts.end());
  if (!is_new(l.pts[1])) {
    l.kind = g_.collinear(l.pts[0], l.pts[1]) ? SLineKind::Gamma : SLineKind::Hyperbolic;
  } else {
    l.kind = SLineKind::New;
    l.solid = meet_of(cat_.points(eps(l.pts[1])), cat_.points(eps(l.pts[2])));
  }
  return l;
}

SynthLine Synth::new_line(const std::vector<HId>& solid) const {
  HId x = eq_.beta_inv(solid);
  auto c = eps_containing(solid);
  if (c.size() != 2) throw GeometryError("solid not in exactly two equators");
  SynthLine l{SLineKind::New, {x, of_eps(c[0]), of_eps(c[1])}, solid};
  std::sort(l.pts.begin(), l.pts.end());
  return l;
}

std::vector<EpsId> Synth::eps_collinear_with(HId x) const {
  std::vector<std::uint8_t> cnt(cat_.size(), 0);
  std::vector<EpsId> out;
  for (HId n : g_.neighbours(x))
    for (EpsId e : cat_.through(n))
      if (++cnt[e] == 2) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SynthLine> Synth::lines_through(SId a) const {
  std::vector<SynthLine> out;
  if (is_new(a)) {
    for (HId t : tropic(eps(a))) out.push_back(line(t, a));
    return out;
  }
  for (HId y : g_.delta_perp(a)) {
    HId t = g_.third(a, y);
    if (y < t) out.push_back(line(a, y));
  }
  auto es = eps_collinear_with(a);
  std::vector<std::uint8_t> done(es.size(), 0);
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (done[i]) continue;
    auto l = line(a, of_eps(es[i]));
    for (SId s : l.pts)
      if (is_new(s)) {
        auto it = std::lower_bound(es.begin(), es.end(), eps(s));
        if (it == es.end() || *it != eps(s)) throw GeometryError("new line member not collinear");
        done[std::size_t(it - es.begin())] = 1;
      }
    out.push_back(std::move(l));
  }
  return out;
}

// ---- quads ----

std::vector<SId> Synth::quad_of_point(HId p) const {
  std::vector<SId> q{p};
  for (HId n : g_.neighbours(p)) q.push_back(n);
  for (EpsId e : cat_.through(p)) q.push_back(of_eps(e));
  std::sort(q.begin(), q.end());
  return q;
}

std::vector<SId> Synth::quad_of_new(EpsId e) const {
  auto t = tropic(e);
  std::vector<std::uint16_t> cnt(cat_.size(), 0);
  for (HId x : t)
    for (EpsId f : cat_.through(x)) ++cnt[f];
  std::vector<SId> q(cat_.points(e).begin(), cat_.points(e).end());
  for (EpsId f = 0; f < cat_.size(); ++f) {
    if (cnt[f] != 135) continue;
    // A hyperbolic D4 holds opposite pairs; a standard one would need Gamma-lines.
    auto d4 = meet_of(cat_.points(f), t);
    bool opp = false;
    for (std::size_t i = 1; i < d4.size() && !opp; ++i) opp = eq_.opposite(d4[0], d4[i]);
    if (opp) q.push_back(of_eps(f));
  }
  std::sort(q.begin(), q.end());
  return q;
}

std::vector<SId> Synth::quad_of_new_by_pairs(EpsId e) const {
  ExtendedEquator ext = eq_.from_points({cat_.points(e).begin(), cat_.points(e).end()});
  TropicCircle t{tropic(e)};
  auto c = eq_.imaginary_completion(ext, t);
  std::vector<SId> q(ext.points.begin(), ext.points.end());
  for (const auto& tag : c.tags) {
    HId y = kNoH;
    for (HId z : tag)
      if (eq_.opposite(tag[0], z)) {
        y = z;
        break;
      }
    if (y == kNoH) throw GeometryError("hyperbolic D4 without opposite pair");
    q.push_back(of_eps(eps_of_pair(tag[0], y)));
  }
  std::sort(q.begin(), q.end());
  return q;
}

// ---- 4-spaces, cones, 5-spaces ----

std::vector<SId> Synth::four_space_of_solid(const std::vector<HId>& v) const {
  HId x = eq_.beta_inv(v);
  std::vector<std::uint8_t> cnt(nh_, 0);
  for (HId a : v)
    for (HId n : g_.neighbours(a))
      if (cnt[n] < 2) ++cnt[n];
  std::vector<SId> u(v.begin(), v.end());
  for (EpsId e : cat_.through(x)) {
    // e cap P_V must be a hyperbolic cone with vertex x over a D3: 1 + 2*35 points.
    std::vector<HId> c;
    for (HId y : cat_.points(e))
      if (cnt[y] >= 2) c.push_back(y);
    if (c.size() != 71) continue;
    bool cone = true;
    for (HId y : c)
      if (y != x && !g_.symplectic(x, y)) {
        cone = false;
        break;
      }
    if (cone) u.push_back(of_eps(e));
  }
  std::sort(u.begin(), u.end());
  return u;
}

std::vector<SId> Synth::four_space(const SynthLine& l) const {
  std::vector<SId> u;
  switch (l.kind) {
    case SLineKind::Gamma: {
      HId a = l.pts[0], b = l.pts[1], c = l.pts[2];
      u.push_back(a);
      for (HId y : g_.neighbours(a))
        if (y == b || y == c || (g_.collinear(y, b) && g_.collinear(y, c))) u.push_back(y);
      break;
    }
    case SLineKind::Hyperbolic: {
      HId a = l.pts[0], b = l.pts[1], c = l.pts[2];
      for (HId y : g_.common_neighbours(a, b))
        if (g_.collinear(y, c)) u.push_back(y);
      std::array<HId, 3> h{a, b, c};
      for (EpsId e : eps_containing(h)) u.push_back(of_eps(e));
      break;
    }
    case SLineKind::New:
      return four_space_of_solid(l.solid);
  }
  std::sort(u.begin(), u.end());
  return u;
}

std::pair<std::vector<HId>, std::vector<HId>> Synth::cone_and_twin(
    const std::vector<HId>& w) const {
  HId x = eq_.beta_inv(w);
  std::vector<HId> plus{x}, minus{x};
  for (HId a : w) {
    plus.push_back(a);
    plus.push_back(g_.third(x, a));
  }
  for (HId y : g_.neighbours(x))
    if (meet_count(g_.neighbours(y), w) >= 2) minus.push_back(y);
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return {plus, minus};
}

HId Synth::cone_vertex(const std::vector<HId>& cone) const {
  HId v = kNoH;
  for (HId a : cone) {
    bool all = true;
    for (HId b : cone)
      if (b != a && !g_.collinear(a, b)) {
        all = false;
        break;
      }
    if (all) {
      if (v != kNoH) return kNoH;
      v = a;
    }
  }
  return v;
}

std::vector<HId> Synth::twin(const std::vector<HId>& cone) const {
  // Points collinear with all points of at least two Gamma-lines of the cone
  // (all such lines pass through the vertex).
  HId x = cone_vertex(cone);
  if (x == kNoH) throw GeometryError("not a hyperbolic cone");
  std::vector<std::array<HId, 2>> lines;
  for (HId a : cone) {
    if (a == x) continue;
    HId b = g_.third(x, a);
    if (a < b) lines.push_back({a, b});
  }
  std::vector<HId> out{x};
  for (HId y : g_.neighbours(x)) {
    int k = 0;
    for (auto& l : lines)
      if ((y == l[0] || g_.collinear(y, l[0])) && (y == l[1] || g_.collinear(y, l[1]))) ++k;
    if (k >= 2) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SId> Synth::five_space(const std::vector<HId>& cone) const {
  HId x = cone_vertex(cone);
  if (x == kNoH) throw GeometryError("not a hyperbolic cone");
  std::vector<SId> m(cone.begin(), cone.end());
  for (EpsId f : eps_collinear_with(x)) {
    bool all = true;
    for (HId y : cone)
      if (!in_tropic(y, f)) {
        all = false;
        break;
      }
    if (all) m.push_back(of_eps(f));
  }
  std::sort(m.begin(), m.end());
  return m;
}

// ---- polarity and incidence ----

namespace {
std::vector<HId> ordinary_part(const std::vector<SId>& s, std::size_t nh) {
  std::vector<HId> o;
  for (SId a : s)
    if (a < nh) o.push_back(a);
  return o;
}
}  // namespace

SId Synth::quad_tag(const std::vector<SId>& q) const {
  auto o = ordinary_part(q, nh_);
  SId tag = kNoS;
  if (o.size() == 271) {
    for (HId a : o)
      if (meet_count(g_.neighbours(a), o) == 270) {
        tag = a;
        break;
      }
  } else if (o.size() == 255) {
    EpsId e = eps_of_points(o);
    if (e != kNoS) tag = of_eps(e);
  }
  if (tag == kNoS || quad(tag) != q) throw GeometryError("not a quad");
  return tag;
}

SynthLine Synth::line_of_four_space(const std::vector<SId>& u) const {
  auto o = ordinary_part(u, nh_);
  SynthLine l;
  if (o.size() == 31) {
    std::vector<HId> rad;
    for (HId a : o)
      if (meet_count(g_.neighbours(a), o) == 30) rad.push_back(a);
    if (rad.size() != 3) throw GeometryError("4-space radical is not a line");
    l = line(rad[0], rad[1]);
  } else if (o.size() == 15) {
    bool has_gamma_line = false;
    for (HId a : o)
      if (meet_count(g_.neighbours(a), o) > 0) has_gamma_line = true;
    if (has_gamma_line) {
      std::vector<HId> h;
      bool first = true;
      for (SId s : u) {
        if (!is_new(s)) continue;
        auto p = cat_.points(eps(s));
        if (first)
          h.assign(p.begin(), p.end());
        else
          h = meet_of(h, p);
        first = false;
      }
      if (h.size() != 3) throw GeometryError("4-space equators do not meet in a line");
      l = line(h[0], h[1]);
    } else {
      l = new_line(o);
    }
  } else {
    throw GeometryError("not a 4-space");
  }
  if (four_space(l) != u) throw GeometryError("4-space is not U of its line");
  return l;
}

std::vector<SId> Synth::plane_image(const std::vector<SId>& plane) const {
  std::vector<SId> out = quad(plane[0]);
  for (std::size_t i = 1; i < plane.size(); ++i) out = meet_of(out, quad(plane[i]));
  return out;
}

Element Synth::theta(const Element& x) const {
  switch (x.sort) {
    case Sort::Point: return {Sort::Quad, quad(x.pts[0])};
    case Sort::Quad: return {Sort::Point, {quad_tag(x.pts)}};
    case Sort::Line: {
      auto l = line(x.pts[0], x.pts[1]);
      return {Sort::FourSpace, four_space(l)};
    }
    case Sort::FourSpace: {
      auto l = line_of_four_space(x.pts);
      return {Sort::Line, {l.pts.begin(), l.pts.end()}};
    }
    case Sort::Plane: return {Sort::Plane, plane_image(x.pts)};
    case Sort::FiveSpace: {
      auto o = ordinary_part(x.pts, nh_);
      if (o.size() == 63) return x;
      if (o.size() != 31) throw GeometryError("not a 5-space");
      return {Sort::FiveSpace, five_space(twin(o))};
    }
  }
  throw GeometryError("bad sort");
}

bool Synth::incident(const Element& a, const Element& b) const {
  if (a.sort == b.sort) return false;
  auto is = [](Sort s, Sort t) { return s == t; };
  bool m_u = (is(a.sort, Sort::FiveSpace) && is(b.sort, Sort::FourSpace)) ||
             (is(b.sort, Sort::FiveSpace) && is(a.sort, Sort::FourSpace));
  bool m_q = (is(a.sort, Sort::FiveSpace) && is(b.sort, Sort::Quad)) ||
             (is(b.sort, Sort::FiveSpace) && is(a.sort, Sort::Quad));
  std::size_t m = meet_count(a.pts, b.pts);
  if (m_u) return m == 15;
  if (m_q) return m == 31;
  const auto& small = a.pts.size() < b.pts.size() ? a.pts : b.pts;
  const auto& big = a.pts.size() < b.pts.size() ? b.pts : a.pts;
  return small.size() < big.size() && m == small.size();
}

LocalSpace Synth::space_on(const std::vector<SId>& pts) const {
  auto idx = [&](SId s) {
    auto it = std::lower_bound(pts.begin(), pts.end(), s);
    return (it != pts.end() && *it == s) ? int(it - pts.begin()) : -1;
  };
  auto coll = [&](int a, int b) { return collinear(pts[a], pts[b]); };
  auto thr = [&](int a, int b) {
    SId t = third(pts[a], pts[b]);
    return t == kNoS ? -1 : idx(t);
  };
  return LocalSpace(int(pts.size()), coll, thr);
}

std::vector<SId> Synth::span_of(std::vector<SId> pts) const {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      SId t = third(pts[i], pts[j]);
      if (t == kNoS) return {};
      if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace e6

#include <algorithm>
#include <set>
#include <string>

#include "e6/suites.hpp"

namespace e6 {

namespace {

std::string nfail(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures of " + std::to_string(of);
}

bool contains(const std::vector<PointId>& s, PointId p) {
  return std::binary_search(s.begin(), s.end(), p);
}

// Vectors of a point set span a space whose nonzero vectors are exactly the set.
bool is_full_space(const Delta& d, const std::vector<PointId>& pts) {
  Span sp;
  for (PointId p : pts) sp.insert(d.vec(p));
  if ((std::size_t{1} << sp.dim()) - 1 != pts.size()) return false;
  for (PointId p : pts)
    if (!sp.contains(d.vec(p))) return false;
  return true;
}

}  // namespace

Report suite_delta(World& w) {
  Report r;
  r.suite = "delta-facts";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const Delta& d = w.delta();
  const std::size_t n = d.size();
  auto rand_point = [&] { return PointId(rng() % n); };
  auto rand_collinear = [&](PointId x) {
    for (;;) {
      PointId y = rand_point();
      if (y != x && d.collinear(x, y)) return y;
    }
  };
  auto rand_noncollinear = [&](PointId x) {
    for (;;) {
      PointId y = rand_point();
      if (y != x && !d.collinear(x, y)) return y;
    }
  };
  const int nquads = w.options().samples > 0 ? w.options().samples : 100;

  {
    const auto& t = d.table();
    bool sorted = std::adjacent_find(t.begin(), t.end(), std::greater_equal<Vec>()) == t.end();
    std::size_t bad = 0, tz = 0;
    for (Vec v : t) {
      bad += albert_rank(v) != 1;
      tz += albert_trace(v) == 0;
    }
    r.counts["points"] = n;
    r.counts["trace_zero_points"] = tz;
    r.add("points.count", "139503 rank-one classes = closed form = 273*511",
          n == 139503 && n == closed_form_point_count() && n == 273u * 511u && sorted && bad == 0,
          std::to_string(n) + " points, " + std::to_string(bad) + " not rank one");
    r.add("points.trace_zero", "69615 trace-zero points = 273*255", tz == 69615 && tz == 273u * 255u,
          std::to_string(tz));
    std::size_t mism = 0;
    for (int i = 0; i < 100000; ++i) {
      Vec v = Vec(rng()) & kMask;
      mism += d.is_point(v) != is_rank_one(v);
    }
    r.add("points.membership", "table membership agrees with the sharp test on random vectors",
          mism == 0, nfail(mism, 100000));
    r.add("points.idempotents", "E1, E2, E3 are points and E1, E2 are not collinear",
          d.is_point(kE1) && d.is_point(kE2) && d.is_point(kE3) &&
              !d.collinear(d.id(kE1), d.id(kE2)));
  }
  {
    std::size_t bad = 0;
    for (int i = 0; i < 5; ++i) bad += d.perp(rand_point()).size() != 4590;
    r.add("perp.size", "every sampled point is collinear with 4590 points", bad == 0, nfail(bad, 5));
  }
  {
    std::size_t bad = 0;
    const int m = 10000;
    for (int i = 0; i < m; ++i) {
      PointId x = rand_point(), y = rand_collinear(x);
      DeltaLine l = d.line_through(x, y);
      PointId z = d.id(d.vec(x) ^ d.vec(y));
      DeltaLine l2 = d.line_through(y, z);
      bool ok = z != kNoPoint && l == l2 && std::is_sorted(l.begin(), l.end());
      for (int a = 0; a < 3 && ok; ++a)
        for (int b = a + 1; b < 3; ++b) ok = ok && d.collinear(l[a], l[b]);
      bad += !ok;
    }
    r.add("lines", "sampled lines are {x, y, x+y}, pairwise collinear, independent of generators",
          bad == 0, nfail(bad, m));
  }

  // One quad by closure, checked in depth.
  PointId e1 = d.id(kE1), e2 = d.id(kE2);
  Quad q0 = d.quad_through(e1, e2);
  {
    std::size_t common = 0;
    for (PointId p : q0.points)
      if (p != e1 && p != e2 && d.collinear(p, e1) && d.collinear(p, e2)) ++common;
    Quad qd = d.quad_of_dual(albert_cross(kE1, kE2));
    r.counts["quad_points"] = q0.points.size();
    r.add("quad.closure", "quad of E1, E2 has 527 = 17*31 points and 135 common neighbours",
          q0.points.size() == 527 && common == 135 && qd.points == q0.points,
          std::to_string(q0.points.size()) + " points, " + std::to_string(common) + " common");
    std::size_t bad = 0;
    for (int i = 0; i < 2; ++i) {
      PointId u = q0.points[rng() % 527], v;
      do v = q0.points[rng() % 527];
      while (v == u || d.collinear(u, v));
      bad += d.quad_through(u, v).points != q0.points;
    }
    r.add("quad.unique", "two non-collinear points of a quad regenerate it", bad == 0, nfail(bad, 2));
    std::size_t cbad = 0;
    for (int i = 0; i < 40; ++i) {
      PointId u = q0.points[rng() % 527], v;
      do v = q0.points[rng() % 527];
      while (v == u);
      if (d.collinear(u, v)) {
        cbad += !contains(q0.points, d.id(d.vec(u) ^ d.vec(v)));
      } else {
        auto pu = d.perp_bits(u);
        for (PointId z : d.perp(v))
          if (pu[z >> 6] >> (z & 63) & 1) cbad += !contains(q0.points, z);
      }
    }
    r.add("quad.convex", "quads hold the lines of collinear pairs and common neighbours of others",
          cbad == 0, nfail(cbad, 40));
    const int qn = int(q0.points.size());
    LocalSpace ls(
        qn, [&](int a, int b) { return d.collinear(q0.points[a], q0.points[b]); },
        [&](int a, int b) {
          PointId z = d.id(d.vec(q0.points[a]) ^ d.vec(q0.points[b]));
          auto it = std::lower_bound(q0.points.begin(), q0.points.end(), z);
          return (it != q0.points.end() && *it == z) ? int(it - q0.points.begin()) : -1;
        });
    auto rep = ls.check();
    auto gens = ls.maximal_singular();
    bool g31 = std::all_of(gens.begin(), gens.end(), [](const Bits& b) { return b.count() == 31; });
    r.counts["quad_generators"] = gens.size();
    r.add("quad.polar", "a quad is a nondegenerate polar space with 4590 generators of 31 points",
          rep.ok() && gens.size() == 4590 && g31,
          std::to_string(rep.lines) + " lines, " + std::to_string(gens.size()) + " generators");

    std::size_t in = 0, nb = 0, op = 0, bad_meet = 0;
    for (PointId x = 0; x < n; ++x) {
      auto rel = d.point_quad_relation(x, q0);
      if (rel.kind == PointQuadKind::Contained) {
        ++in;
      } else if (rel.kind == PointQuadKind::Opposite) {
        ++op;
      } else {
        ++nb;
        if (rel.meet.size() != 31 || (nb <= 50 && !is_full_space(d, rel.meet))) ++bad_meet;
      }
    }
    r.counts["quad_contained"] = in;
    r.counts["quad_neighbouring"] = nb;
    r.counts["quad_opposite"] = op;
    r.add("point.quad", "every point is in the quad, opposite it, or meets it in a 31-point 4-space",
          in == 527 && in + nb + op == n && bad_meet == 0,
          std::to_string(in) + "/" + std::to_string(nb) + "/" + std::to_string(op));
  }

  // Sampled quads from random non-collinear pairs.
  {
    std::vector<Quad> quads;
    std::vector<Vec> tags;
    std::size_t bad = 0, notag = 0;
    for (int i = 0; i < nquads; ++i) {
      PointId x = rand_point(), y = rand_noncollinear(x);
      Vec xi = albert_cross(d.vec(x), d.vec(y));
      Quad q = d.quad_of_dual(xi);
      bad += q.points.size() != 527 || !contains(q.points, x) || !contains(q.points, y);
      try {
        notag += d.quad_dual_point(q, rng(), 10) != xi;
      } catch (const GeometryError&) {
        ++notag;
      }
      quads.push_back(std::move(q));
      tags.push_back(xi);
    }
    r.add("quad.sampled", "random non-collinear pairs lie in a 527-point quad", bad == 0,
          nfail(bad, quads.size()));
    r.add("quad.dual_tag", "X x Y is constant over non-collinear pairs of a quad", notag == 0,
          nfail(notag, quads.size()) + " (10 pairs each)");
    std::size_t tagbad = 0, meetbad = 0, pairs = 0;
    std::set<std::size_t> meet_sizes;
    for (std::size_t i = 0; i < quads.size(); ++i)
      for (std::size_t j = i + 1; j < quads.size(); ++j) {
        bool same = quads[i].points == quads[j].points;
        tagbad += same != (tags[i] == tags[j]);
        if (same) continue;
        ++pairs;
        std::vector<PointId> m;
        std::set_intersection(quads[i].points.begin(), quads[i].points.end(),
                              quads[j].points.begin(), quads[j].points.end(),
                              std::back_inserter(m));
        meet_sizes.insert(m.size());
        meetbad += !(m.size() == 1 || (m.size() == 31 && is_full_space(d, m)));
      }
    r.add("quad.tags_distinct", "distinct sampled quads carry distinct tags", tagbad == 0,
          nfail(tagbad, quads.size() * (quads.size() - 1) / 2));
    std::string sizes;
    for (auto s : meet_sizes) sizes += std::to_string(s) + " ";
    r.add("quad.pairs", "two distinct quads meet in a 4-space or a single point", meetbad == 0,
          nfail(meetbad, pairs) + "; sizes seen " + sizes);
  }

  // Points against symplecta, which are 5-spaces of this geometry.
  {
    const Gamma& g = w.gamma();
    std::size_t bad = 0, one = 0, three = 0;
    const int m = 400;
    for (int i = 0; i < m; ++i) {
      PointId x = rand_point();
      const Symplecton& s = g.symplecton(std::uint32_t(rng() % g.symplecton_count()));
      std::vector<PointId> pts;
      for (HId h : s.points) pts.push_back(g.did(h));
      std::sort(pts.begin(), pts.end());
      if (contains(pts, x)) continue;
      std::vector<PointId> meet;
      for (PointId p : pts)
        if (d.collinear(x, p)) meet.push_back(p);
      if (meet.size() == 1) {
        ++one;
      } else if (meet.size() == 15 && is_full_space(d, meet)) {
        ++three;
        auto ext = meet;
        ext.push_back(x);
        Span sp;
        for (PointId p : ext) sp.insert(d.vec(p));
        std::size_t pts31 = 0;
        for (Vec v : sp.elements()) pts31 += d.is_point(v);
        bad += sp.dim() != 5 || pts31 != 31;
      } else {
        ++bad;
      }
    }
    r.counts["point_five_one"] = one;
    r.counts["point_five_three_space"] = three;
    r.add("point.five_space", "a point off a 5-space sees one point or a 3-space spanning a 4-space",
          bad == 0 && one > 0 && three > 0,
          nfail(bad, m) + "; " + std::to_string(one) + " single, " + std::to_string(three) +
              " 3-spaces");
  }
  return r;
}

}  // namespace e6

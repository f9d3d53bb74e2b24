#include <algorithm>
#include <numeric>
#include <string>

#include "e6/suites.hpp"

namespace e6 {

namespace {

std::string nfail(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures of " + std::to_string(of);
}

std::vector<HId> symp_points(const Gamma& g, std::uint32_t s) {
  const auto& p = g.symplecton(s).points;
  std::vector<HId> v(p.begin(), p.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<HId> meet(const std::vector<HId>& a, const std::vector<HId>& b) {
  std::vector<HId> m;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

// Points of the singular quadric x0x1 + x2x3 + x4x5 + x6x7 and the number of
// its lines through one point.
std::pair<int, int> hyperbolic_quadric_8() {
  auto Q = [](unsigned v) {
    return ((v & 1) & (v >> 1 & 1)) ^ ((v >> 2 & 1) & (v >> 3 & 1)) ^ ((v >> 4 & 1) & (v >> 5 & 1)) ^
           ((v >> 6 & 1) & (v >> 7 & 1));
  };
  std::vector<unsigned> pts;
  for (unsigned v = 1; v < 256; ++v)
    if (!Q(v)) pts.push_back(v);
  int through = 0;
  for (unsigned v : pts)
    if (v != pts[0] && !Q(v ^ pts[0])) ++through;
  return {int(pts.size()), through / 2};
}

}  // namespace

Report suite_gamma(World& w) {
  Report r;
  r.suite = "gamma";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const Delta& d = w.delta();
  const Gamma& g = w.gamma();
  const Equators& eq = w.equators();
  const HId nh = HId(g.size());
  auto rand_h = [&] { return HId(rng() % nh); };
  auto rand_nbr = [&](HId x) { return g.neighbours(x)[rng() % kGammaDegree]; };
  const int ncensus = w.options().samples > 0 ? w.options().samples : 100;

  {
    bool proper = d.is_point(kE1) && g.hid_of_vec(kE1) == kNoH;
    std::size_t bad = 0;
    const int m = 100000;
    for (int i = 0; i < m; ++i) {
      PointId x = PointId(rng() % d.size()), y;
      do y = PointId(rng() % d.size());
      while (y == x || !d.collinear(x, y));
      int k = (g.hid(x) != kNoH) + (g.hid(y) != kNoH) + (g.hid(d.id(d.vec(x) ^ d.vec(y))) != kNoH);
      bad += !(k == 1 || k == 3);
    }
    r.counts["h_points"] = nh;
    r.add("h.count", "69615 trace-zero points, E1 outside", nh == 69615 && proper);
    r.add("h.hyperplane", "every sampled line of Delta meets H in 1 or 3 points", bad == 0,
          nfail(bad, m));
  }
  {
    const std::array<std::size_t, 4> want{270, 2016, 34560, 32768};
    std::size_t bad = 0;
    for (int i = 0; i < ncensus; ++i) bad += g.census(rand_h()) != want;
    r.counts["census_points"] = std::size_t(ncensus);
    r.add("census", "collinear/symplectic/special/opposite = 270/2016/34560/32768 from every sampled point",
          bad == 0 && 1 + 270 + 2016 + 34560 + 32768 == 69615, nfail(bad, ncensus));
  }
  {
    // Delta-collinearity against a purely Gamma-side oracle: 15 common neighbours.
    std::size_t bad = 0, dc = 0;
    const int m = 3000;
    for (int i = 0; i < m; ++i) {
      HId x = rand_h();
      HId y = i % 2 ? rand_h() : rand_nbr(rand_nbr(x));
      if (x == y) continue;
      bool gamma_side = g.collinear(x, y) || g.common_neighbours(x, y).size() == 15;
      dc += g.delta_collinear(x, y);
      bad += g.delta_collinear(x, y) != gamma_side;
    }
    r.add("delta_collinear.gamma", "collinear in Delta iff collinear or symplectic in Gamma",
          bad == 0, nfail(bad, m) + "; " + std::to_string(dc) + " collinear in Delta");
  }
  {
    std::size_t bad = 0, sym = 0, special = 0;
    for (int i = 0; i < 2000; ++i) {
      HId x = rand_h(), y = i % 2 ? rand_h() : rand_nbr(rand_nbr(x));
      auto a = g.relation(x, y), b = g.relation(y, x);
      bool ok = a.kind == b.kind && a.midpoint == b.midpoint;
      if (a.kind == Rel::Special) {
        ++special;
        ok = ok && g.collinear(x, a.midpoint) && g.collinear(y, a.midpoint) &&
             g.common_neighbours(x, y).size() == 1;
      }
      sym += a.kind == Rel::Symplectic;
      bad += !ok;
    }
    r.add("relation.symmetric", "pair relation symmetric; special pairs have one midpoint",
          bad == 0 && special > 0 && sym > 0, nfail(bad, 2000));
  }
  {
    std::size_t bad = 0, gl = 0, hl = 0;
    for (int i = 0; i < 30; ++i) {
      HId x = rand_h();
      HId u = rand_nbr(x);
      auto c = g.classify_line(x, u);
      bad += c.symplecta != 7;
      ++gl;
      HId v;
      do v = rand_nbr(rand_nbr(x));
      while (v == x || !g.symplectic(x, v));
      auto c2 = g.classify_line(x, v);
      bad += c2.symplecta != 1;
      ++hl;
      for (const auto& sp : c.spaces) bad += sp.size() != 63;
    }
    r.add("classify_line", "extension search: 7 symplecta on a Gamma-line, 1 on a hyperbolic line",
          bad == 0, nfail(bad, gl + hl));
  }
  {
    std::size_t bad = 0, full = 0;
    std::vector<std::array<HId, 63>> sorted;
    sorted.reserve(g.symplecton_count());
    for (std::uint32_t s = 0; s < g.symplecton_count(); ++s) {
      const Symplecton& sy = g.symplecton(s);
      Span sp;
      for (Vec b : sy.basis) sp.insert(b);
      auto pts = sy.points;
      std::sort(pts.begin(), pts.end());
      std::vector<HId> from_span;
      for (Vec v : sp.elements()) from_span.push_back(g.hid_of_vec(v));
      std::sort(from_span.begin(), from_span.end());
      bool ok = sp.dim() == 6 && std::equal(pts.begin(), pts.end(), from_span.begin(), from_span.end());
      full += ok;
      sorted.push_back(pts);
    }
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    for (HId x = 0; x < nh; ++x)
      for (auto s : g.symplecta_through(x)) bad += !g.in_symplecton(x, s);
    r.counts["symplecta"] = g.symplecton_count();
    r.add("symplecta.count", "69615 distinct symplecta of 63 points, 63 through each point",
          g.symplecton_count() == 69615 && distinct && bad == 0);
    r.add("symplecta.full_space", "each symplecton is all 63 points of a projective 5-space",
          full == g.symplecton_count(), std::to_string(full) + " of " +
                                             std::to_string(g.symplecton_count()));
  }
  {
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
      HId x = rand_h(), u = rand_nbr(x);
      int c = 0;
      for (auto s : g.symplecta_through(x)) c += g.in_symplecton(u, s);
      bad += c != 7;
      HId v;
      do v = rand_nbr(rand_nbr(x));
      while (v == x || !g.symplectic(x, v));
      c = 0;
      for (auto s : g.symplecta_through(x)) c += g.in_symplecton(v, s);
      bad += c != 1;
    }
    r.add("symplecta.lines", "sampled Gamma-lines lie in 7 symplecta, hyperbolic lines in 1",
          bad == 0, nfail(bad, 400));
  }
  {
    std::size_t bad = 0;
    for (int i = 0; i < 50; ++i) {
      HId x = rand_h(), y;
      do y = rand_nbr(rand_nbr(x));
      while (y == x || !g.symplectic(x, y));
      auto h = g.hyperbolic_line(x, y);
      std::vector<HId> want{x, y, g.third(x, y)};
      std::sort(want.begin(), want.end());
      auto s = g.symplecton_of_pair(x, y);
      bool ok = h == want && g.common_neighbours(x, y).size() == 15;
      for (HId z : h) ok = ok && g.in_symplecton(z, s);
      ok = ok && g.symplecton_of_pair(want[1], want[2]) == s;
      for (HId z : g.symplecton(s).points) {
        if (std::binary_search(h.begin(), h.end(), z)) continue;
        int c = 0;
        for (HId a : h) c += g.collinear(z, a);
        ok = ok && (c == 1 || c == 3);
      }
      bad += !ok;
    }
    r.add("hyperbolic_line", "double perp of a symplectic pair is {x, y, x+y}, a geometric line of its symplecton",
          bad == 0, nfail(bad, 50));
  }
  {
    std::size_t bad = 0, seen[3] = {0, 0, 0};
    for (int i = 0; i < 300; ++i) {
      HId x = rand_h();
      std::uint32_t s = i % 3 ? g.symplecta_through(rand_nbr(rand_nbr(x)))[rng() % 63]
                              : std::uint32_t(rng() % g.symplecton_count());
      auto rel = g.point_symp_relation(x, s);
      const auto& pts = g.symplecton(s).points;
      std::size_t col = 0, symp_or_eq = 0;
      for (HId p : pts) {
        col += g.collinear(x, p);
        symp_or_eq += p == x || g.symplectic(x, p);
      }
      ++seen[int(rel.kind)];
      switch (rel.kind) {
        case SympRel::In:
          bad += !g.in_symplecton(x, s);
          break;
        case SympRel::Close:
          bad += col != 3 || rel.line.size() != 3;
          for (HId p : rel.line) bad += !g.collinear(x, p) || !g.in_symplecton(p, s);
          break;
        case SympRel::Far:
          bad += col != 0 || symp_or_eq != 1 || !g.symplectic(x, rel.pivot) ||
                 g.far_pivot(x, s) != rel.pivot;
          break;
      }
    }
    r.add("point.symplecton", "a point is in a symplecton, close to it along a line, or far with one symplectic pivot",
          bad == 0 && seen[1] > 0 && seen[2] > 0, nfail(bad, 300));
  }
  {
    std::size_t bad = 0;
    for (int i = 0; i < 300; ++i) {
      std::uint32_t a = std::uint32_t(rng() % g.symplecton_count());
      HId x = g.symplecton(a).points[rng() % 63];
      std::uint32_t b = i % 2 ? g.symplecta_through(x)[rng() % 63]
                              : g.symplecta_through(rand_nbr(x))[rng() % 63];
      if (a == b) continue;
      auto m = meet(symp_points(g, a), symp_points(g, b));
      if (m.size() == 7) {
        Span sp;
        for (HId h : m) sp.insert(g.vec(h));
        bad += sp.dim() != 3;
      } else {
        bad += !(m.empty() || m.size() == 1);
      }
    }
    // Symplecta through one point are plane-connected (residue check below);
    // gluing stars along all points therefore gives the global component count.
    std::vector<std::uint32_t> parent(g.symplecton_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (HId x = 0; x < nh; ++x) {
      auto st = g.symplecta_through(x);
      for (auto s : st) parent[find(s)] = find(st[0]);
    }
    std::size_t comps = 0;
    for (std::uint32_t s = 0; s < parent.size(); ++s) comps += find(s) == s;
    r.add("symplecta.pairs", "two symplecta meet in nothing, a point or a plane", bad == 0,
          nfail(bad, 300));
    r.add("symplecta.connected", "the symplecton adjacency graph is connected", comps == 1,
          std::to_string(comps) + " components");
  }
  {
    // Residue at p: symplecta through p, adjacent when they share a plane.
    std::size_t bad = 0, iso_bad = 0;
    for (int i = 0; i < 5; ++i) {
      HId p = rand_h();
      auto st = g.symplecta_through(p);
      std::vector<std::vector<HId>> pts;
      for (auto s : st) pts.push_back(symp_points(g, s));
      LocalSpace res(
          63, [&](int a, int b) { return meet(pts[a], pts[b]).size() == 7; },
          [&](int a, int b) {
            auto m = meet(pts[a], pts[b]);
            for (int c = 0; c < 63; ++c)
              if (c != a && c != b && meet(pts[c], m).size() == 7) return c;
            return -1;
          });
      auto rep = res.check();
      auto ms = res.maximal_singular();
      bool ok = rep.ok() && ms.size() == 135;
      for (const auto& m : ms) ok = ok && m.count() == 7;
      for (auto s : st) {
        int lines = 0;
        for (HId u : g.neighbours(p)) lines += g.in_symplecton(u, s);
        ok = ok && lines == 30;  // 15 lines through p, 2 further points each
      }
      bad += !ok;
      // Equator points map to these symplecta via x -> x and p's symplecton.
      HId q;
      do q = rand_h();
      while (!eq.opposite(p, q));
      auto e = eq.equator(p, q);
      std::vector<int> phi;
      for (HId x : e.points) {
        auto s = g.symplecton_of_pair(p, x);
        phi.push_back(int(std::find(st.begin(), st.end(), s) - st.begin()));
      }
      auto sorted = phi;
      std::sort(sorted.begin(), sorted.end());
      bool bij = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                 sorted.front() >= 0 && sorted.back() < 63;
      auto es = eq.hyperbolic_space(e.points);
      for (auto& l : es.lines())
        bij = bij && res.collinear(phi[l[0]], phi[l[1]]) && res.third(phi[l[0]], phi[l[1]]) == phi[l[2]];
      bij = bij && es.lines().size() == res.lines().size();
      iso_bad += !bij;
      if (i == 0) r.counts["residue_lines"] = rep.lines;
    }
    r.add("residue", "symplecta through a point form a rank-3 polar space with 135 Fano planes",
          bad == 0, nfail(bad, 5));
    r.add("residue.equator", "x -> p-symplecton of x maps the equator isomorphically onto the residue",
          iso_bad == 0, nfail(iso_bad, 5));
  }
  {
    auto [qpts, qthrough] = hyperbolic_quadric_8();
    std::size_t bad = 0;
    for (int i = 0; i < 5; ++i) {
      HId x = rand_h();
      std::vector<HId> reps;
      std::vector<int> line_of(nh, -1);
      for (HId u : g.neighbours(x))
        if (line_of[u] < 0) {
          line_of[u] = line_of[g.third(x, u)] = int(reps.size());
          reps.push_back(u);
        }
      const int nv = int(reps.size());
      LocalSpace d4(
          nv, [&](int a, int b) { return g.delta_collinear(reps[a], reps[b]); },
          [&](int a, int b) {
            HId t = g.third(reps[a], reps[b]);
            return t == kNoH ? -1 : line_of[t];
          });
      auto rep = d4.check();
      auto ms = d4.maximal_singular();
      bool ok = nv == 135 && nv == qpts && rep.ok();
      for (const auto& m : ms) ok = ok && m.count() == 15;
      for (int v = 0; v < nv; ++v) {
        int deg = 0;
        for (int u = 0; u < nv; ++u) deg += d4.collinear(v, u);
        ok = ok && deg / 2 == qthrough;
      }
      bad += !ok;
    }
    r.add("local_d4", "lines through a point form a rank-4 polar space matching x0x1+x2x3+x4x5+x6x7",
          bad == 0, nfail(bad, 5) + "; model has " + std::to_string(qpts) + " points, " +
                        std::to_string(qthrough) + " lines per point");
  }
  {
    std::size_t bad = 0;
    for (int i = 0; i < 20; ++i) {
      HId x = rand_h(), y;
      do y = rand_h();
      while (!eq.opposite(x, y));
      for (HId u : g.neighbours(x)) {
        HId v = g.third(x, u);
        if (v < u) continue;
        int special = 0, opp = 0;
        for (HId z : {x, u, v}) {
          auto k = g.relation(y, z).kind;
          special += k == Rel::Special;
          opp += k == Rel::Opposite;
        }
        bad += special != 1 || opp != 2;
      }
    }
    r.add("line.opposite", "a point opposite x is special to one point of each line on x, opposite the rest",
          bad == 0, nfail(bad, 20 * 135));
  }
  return r;
}

}  // namespace e6

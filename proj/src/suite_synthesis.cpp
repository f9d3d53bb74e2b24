#include <algorithm>
#include <set>
#include <string>

#include "e6/suites.hpp"

namespace e6 {

namespace {

std::string nfail(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures of " + std::to_string(of);
}

template <class V, class T>
bool has(const V& s, T x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::size_t ordinary_count(const std::vector<SId>& s, std::size_t nh) {
  return std::size_t(std::lower_bound(s.begin(), s.end(), SId(nh)) - s.begin());
}

std::vector<HId> meet(const std::vector<HId>& a, const std::vector<HId>& b) {
  std::vector<HId> m;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

// x together with the points of t collinear or symplectic to x.
std::vector<HId> pencil(const Gamma& g, const std::vector<HId>& t, HId x) {
  std::vector<HId> out;
  for (HId y : t)
    if (y == x || g.delta_collinear(x, y)) out.push_back(y);
  return out;
}

// Every line and hyperbolic line inside `a` meets `h` in 1 or 3 points.
bool is_hyperplane_of(const Gamma& g, const std::vector<HId>& a, const std::vector<HId>& h) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!g.delta_collinear(a[i], a[j])) continue;
      HId t = g.third(a[i], a[j]);
      if (!has(a, t)) continue;
      int c = has(h, a[i]) + has(h, a[j]) + has(h, t);
      if (c != 1 && c != 3) return false;
    }
  return true;
}

}  // namespace

Report suite_synthesis(World& w) {
  Report r;
  r.suite = "synthesis";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const Gamma& g = w.gamma();
  const Equators& eq = w.equators();
  const NewPointCatalog& cat = w.catalog();
  const Synth& S = w.synth();
  const std::size_t nh = g.size(), ne = cat.size();
  const int nsamp = w.options().samples > 0 ? w.options().samples : 20;
  auto rand_h = [&] { return HId(rng() % nh); };
  auto rand_e = [&] { return EpsId(rng() % ne); };
  auto rand_point = [&](int i) { return i % 2 ? S.of_eps(rand_e()) : SId(rand_h()); };

  // New points.
  {
    std::size_t bad = 0;
    for (HId x = 0; x < nh; ++x) bad += cat.through(x).size() != 256;
    auto bases = cat.bases();
    std::sort(bases.begin(), bases.end());
    bool distinct = std::adjacent_find(bases.begin(), bases.end()) == bases.end();
    std::size_t xbad = 0;
    for (int i = 0; i < nsamp; ++i) {
      EpsId e = rand_e();
      auto pts = S.points_of(e);
      std::vector<HId> v(pts.begin(), pts.end());
      HId a = v[0], b = kNoH;
      for (HId z : v)
        if (eq.opposite(a, z)) {
          b = z;
          break;
        }
      xbad += b == kNoH || eq.extended_equator(a, b).points != v || S.eps_of_pair(a, b) != e;
    }
    r.counts["new_points"] = ne;
    r.add("new_points.count", "69888 extended equators = 273*256, 256 through each ordinary point",
          ne == 69888 && ne == 273u * 256u && nh * 256 == ne * 255 && bad == 0 && distinct,
          std::to_string(ne) + "; " + std::to_string(bad) + " points with other counts");
    r.add("new_points.lookup", "sampled equators regenerate from an inner opposite pair and are found again",
          xbad == 0, nfail(xbad, std::size_t(nsamp)));
  }

  // Lines through sampled points.
  {
    std::size_t bad = 0, checked = 0, solid_bad = 0, nnew = 0;
    std::array<std::size_t, 3> kinds_ord{}, kinds_new{};
    for (int i = 0; i < 2 * nsamp; ++i) {
      SId a = rand_point(i);
      auto ls = S.lines_through(a);
      std::set<SId> others;
      bad += ls.size() != 2295;
      for (const auto& l : ls) {
        ++checked;
        (S.is_new(a) ? kinds_new : kinds_ord)[int(l.kind)] += i < 2;
        bool ok = std::is_sorted(l.pts.begin(), l.pts.end()) && l.pts[0] != l.pts[1] &&
                  l.pts[1] != l.pts[2] && has(l.pts, a);
        for (SId b : l.pts) {
          if (b == a) continue;
          ok = ok && S.collinear(a, b) && others.insert(b).second;
        }
        ok = ok && S.third(l.pts[0], l.pts[1]) == l.pts[2] && S.line(l.pts[2], l.pts[1]).pts == l.pts;
        bad += !ok;
        if (l.kind == SLineKind::New && nnew < 300) {
          ++nnew;
          SId o = l.pts[0];
          EpsId e1 = S.eps(l.pts[1]), e2 = S.eps(l.pts[2]);
          std::vector<HId> p1(S.points_of(e1).begin(), S.points_of(e1).end());
          std::vector<HId> p2(S.points_of(e2).begin(), S.points_of(e2).end());
          bool sok = !S.is_new(o) && S.is_new(l.pts[1]) && l.solid.size() == 15 &&
                     meet(p1, p2) == l.solid && eq.beta_inv(l.solid) == o &&
                     S.new_line(l.solid).pts == l.pts && eq.is_hyperbolic_subspace(l.solid);
          solid_bad += !sok;
        }
      }
    }
    r.add("lines.partial_linear", "2295 lines through each sampled point, 3 points each, two points on at most one line",
          bad == 0, nfail(bad, checked));
    r.add("lines.new", "a new line is beta(U) and the two equators through U, which meet exactly in U",
          solid_bad == 0 && nnew > 0, nfail(solid_bad, nnew));
    r.add("lines.kinds", "an ordinary point lies on 135 Gamma, 1008 hyperbolic and 1152 new lines",
          kinds_ord[0] == 135 && kinds_ord[1] == 1008 && kinds_ord[2] == 1152,
          std::to_string(kinds_ord[0]) + "/" + std::to_string(kinds_ord[1]) + "/" +
              std::to_string(kinds_ord[2]) + "; new point " + std::to_string(kinds_new[0]) + "/" +
              std::to_string(kinds_new[1]) + "/" + std::to_string(kinds_new[2]));
  }

  // Quads.
  {
    std::size_t bad = 0, polar_bad = 0, gen_bad = 0, pairs_bad = 0, n = 0;
    for (int i = 0; i < 10; ++i) {
      ++n;
      bool is_new = i % 2;
      SId a = rand_point(i);
      auto q = S.quad(a);
      std::size_t o = ordinary_count(q, nh);
      bool ok = q.size() == 527 && std::is_sorted(q.begin(), q.end());
      if (is_new) {
        EpsId e = S.eps(a);
        ok = ok && o == 255 && q.size() - o == 272 && !has(q, a) && S.quad_of_new_by_pairs(e) == q;
        for (HId x : S.points_of(e)) ok = ok && has(q, SId(x));
      } else {
        HId p = a;
        ok = ok && o == 271 && q.size() - o == 256 && has(q, a);
        for (HId u : g.neighbours(p)) ok = ok && has(q, SId(u));
        for (EpsId e : cat.through(p)) ok = ok && has(q, S.of_eps(e));
      }
      ok = ok && S.quad_tag(q) == a;
      bad += !ok;
      LocalSpace ls = S.space_on(q);
      auto rep = ls.check();
      polar_bad += !rep.ok() || rep.lines != 23715;
      if (i < 2) {
        auto gens = ls.maximal_singular();
        bool gok = gens.size() == 4590;
        for (const auto& m : gens) gok = gok && m.count() == 31;
        // Two families by meet parity with the first generator.
        std::vector<int> fam(gens.size());
        std::size_t fam0 = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Bits m = gens[0];
          m &= gens[j];
          std::size_t c = m.count();
          fam[j] = c == 31 || c == 7 || c == 1 ? 0 : 1;
          fam0 += fam[j] == 0;
        }
        gok = gok && fam0 == 2295;
        for (int k = 0; k < 300; ++k) {
          std::size_t x = rng() % gens.size(), y = rng() % gens.size();
          Bits m = gens[x];
          m &= gens[y];
          std::size_t c = m.count();
          bool even = c == 31 || c == 7 || c == 1;
          gok = gok && even == (fam[x] == fam[y]);
        }
        // One family is the 4-spaces U(l); the other family is not.
        std::array<std::size_t, 2> as_u{};
        for (int k = 0; k < 20; ++k) {
          std::size_t x = rng() % gens.size();
          std::vector<SId> u;
          for (int j : gens[x].items()) u.push_back(q[j]);
          bool is_u = false;
          try {
            is_u = S.four_space(S.line_of_four_space(u)) == u;
          } catch (const GeometryError&) {
          }
          as_u[fam[x]] += is_u;
        }
        gok = gok && ((as_u[0] == 0) != (as_u[1] == 0));
        // A 3-space lies in exactly one generator of each family.
        for (int k = 0; k < 10; ++k) {
          std::size_t x = rng() % gens.size(), y;
          Bits m;
          do {
            y = rng() % gens.size();
            m = gens[x];
            m &= gens[y];
          } while (m.count() != 15);
          std::array<int, 2> cont{};
          for (std::size_t j = 0; j < gens.size(); ++j)
            if (m.subset_of(gens[j])) ++cont[fam[j]];
          gok = gok && cont[0] == 1 && cont[1] == 1;
        }
        gen_bad += !gok;
        r.counts["quad_generators"] = gens.size();
      }
    }
    // Two quads sharing a line meet in the 4-space of that line.
    for (int k = 0; k < nsamp; ++k) {
      SId a = rand_point(k);
      auto ls = S.lines_through(a);
      const auto& l = ls[rng() % ls.size()];
      auto u = S.four_space(l);
      SId c = u[rng() % u.size()], c2;
      do c2 = u[rng() % u.size()];
      while (c2 == c || !S.collinear(c, c2));
      auto qc = S.quad(c), qc2 = S.quad(c2);
      bool ok = std::includes(qc.begin(), qc.end(), l.pts.begin(), l.pts.end()) &&
                sorted_intersection(qc, qc2) == S.four_space(S.line(c, c2));
      pairs_bad += !ok;
    }
    r.add("quads.size", "Sigma(p) = 271 + 256 and Sigma(e) = 255 + 272 points, built two ways for e",
          bad == 0, nfail(bad, n));
    r.add("quads.polar", "quads pass the one-or-all axiom exhaustively: 23715 lines", polar_bad == 0,
          nfail(polar_bad, n));
    r.add("quads.generators", "4590 generators of 31 points in two families of 2295; one family is U(l); 3-spaces lie in one of each",
          gen_bad == 0, nfail(gen_bad, 2));
    r.add("quads.pairs", "quads on two collinear points of U(l) contain l and meet in a 4-space",
          pairs_bad == 0, nfail(pairs_bad, std::size_t(nsamp)));
  }

  // 4-spaces U(l).
  {
    std::size_t bad = 0, split_bad = 0, incl_bad = 0, n = 0;
    std::set<std::vector<SId>> seen;
    std::set<std::array<SId, 3>> lines_seen;
    for (int i = 0; i < 3 * nsamp; ++i) {
      SId a = rand_point(i);
      auto ls = S.lines_through(a);
      const auto& l = ls[rng() % ls.size()];
      auto u = S.four_space(l);
      ++n;
      seen.insert(u);
      lines_seen.insert(l.pts);
      std::size_t o = ordinary_count(u, nh);
      split_bad += l.kind == SLineKind::Gamma ? o != 31 : o != 15;
      bool ok = u.size() == 31 && S.line_of_four_space(u).pts == l.pts && S.space_on(u).lines().size() == 155 &&
                S.span_of(u) == u;
      std::vector<std::vector<SId>> q;
      for (SId b : l.pts) q.push_back(S.quad(b));
      ok = ok && sorted_intersection(q[0], q[1]) == u && sorted_intersection(q[0], q[2]) == u &&
           sorted_intersection(q[1], q[2]) == u;
      bad += !ok;
      // U(l) in Sigma(p) iff p on l.
      for (int k = 0; k < 2; ++k) {
        SId p = k == 0 ? u[rng() % 31] : rand_point(k + i);
        auto qp = S.quad(p);
        bool inside = std::includes(qp.begin(), qp.end(), u.begin(), u.end());
        incl_bad += inside != has(l.pts, p);
      }
    }
    r.add("four_space", "U(l) has 31 points, is a projective 4-space, equals the meet of the quads of any two points of l",
          bad == 0, nfail(bad, n));
    r.add("four_space.split", "U(l) is 31 ordinary points for a Gamma-line, 15 + 16 otherwise",
          split_bad == 0, nfail(split_bad, n));
    r.add("four_space.in_quad", "U(l) lies in Sigma(p) iff p is on l", incl_bad == 0,
          nfail(incl_bad, 2 * n));
    r.add("four_space.injective", "distinct sampled lines give distinct 4-spaces",
          seen.size() == lines_seen.size(),
          std::to_string(seen.size()) + " 4-spaces from " + std::to_string(lines_seen.size()) + " lines");
  }

  // Cones, twins and 5-spaces.
  {
    std::size_t bad = 0, mbad = 0, n = 0;
    std::set<std::vector<SId>> fives;
    std::set<std::vector<HId>> cones;
    for (int i = 0; i < nsamp; ++i) {
      EpsId e = rand_e();
      auto ls = S.lines_through(S.of_eps(e));
      const SynthLine* nl = nullptr;
      while (!nl) {
        const auto& l = ls[rng() % ls.size()];
        if (l.kind == SLineKind::New) nl = &l;
      }
      HId x = HId(nl->pts[0]);
      auto [vp, vm] = S.cone_and_twin(nl->solid);
      ++n;
      bool ok = vp.size() == 31 && vm.size() == 31 && S.twin(vm) == vp && S.twin(vp) == vm &&
                has(vp, x) && has(vm, x) && S.cone_vertex(vp) == x && S.cone_vertex(vm) == x;
      for (const auto* c : {&vp, &vm})
        for (HId a : *c)
          for (HId b : *c)
            if (a < b && g.collinear(a, b)) ok = ok && (a == x || b == x || g.third(a, b) == x);
      bad += !ok;
      cones.insert(vp);
      auto m = S.five_space(vp);
      std::vector<SId> ord(vp.begin(), vp.end());
      bool mok = m.size() == 63 && ordinary_count(m, nh) == 31 &&
                 std::equal(ord.begin(), ord.end(), m.begin()) && S.span_of(m) == m;
      LocalSpace ms = S.space_on(m);
      auto mlines = ms.lines();
      mok = mok && mlines.size() == 651;
      for (const auto& l : mlines) {
        int c = (m[l[0]] < nh) + (m[l[1]] < nh) + (m[l[2]] < nh);
        mok = mok && (c == 1 || c == 3);
      }
      mbad += !mok;
      fives.insert(m);
    }
    std::size_t sbad = 0;
    for (int i = 0; i < nsamp; ++i) {
      const auto& sy = g.symplecton(std::uint32_t(rng() % g.symplecton_count()));
      std::vector<SId> m(sy.points.begin(), sy.points.end());
      std::sort(m.begin(), m.end());
      Element el{Sort::FiveSpace, m};
      sbad += S.span_of(m) != m || S.space_on(m).lines().size() != 651 || !(S.theta(el) == el);
    }
    r.add("cones", "V+ and V- have 31 points, vertex x, Gamma-lines only through x, twin is an involution",
          bad == 0, nfail(bad, n));
    r.add("five_space", "M(V+) = 31 ordinary + 32 new points, a projective 5-space with V+ a hyperplane",
          mbad == 0, nfail(mbad, n));
    r.add("five_space.symplecta", "symplecta are projective 5-spaces fixed by the polarity", sbad == 0,
          nfail(sbad, std::size_t(nsamp)));
    r.add("five_space.injective", "distinct cones give distinct 5-spaces", fives.size() == cones.size(),
          std::to_string(cones.size()) + " cones, " + std::to_string(fives.size()) + " 5-spaces");
  }

  // Collinearity of equators through their tropic circles.
  {
    std::size_t bad3 = 0, bad5 = 0, n3 = 0, n5 = 0, col3 = 0;
    for (int i = 0; i < nsamp; ++i) {
      EpsId e = rand_e();
      auto te = S.tropic(e);
      auto ls = S.lines_through(S.of_eps(e));
      auto qe = S.quad_of_new(e);
      for (int k = 0; k < 4; ++k) {
        EpsId f;
        SId centre = kNoS;
        if (k < 2) {
          const SynthLine* nl = nullptr;
          while (!nl) {
            const auto& l = ls[rng() % ls.size()];
            if (l.kind == SLineKind::New) nl = &l;
          }
          f = S.eps(nl->pts[1]) == e ? S.eps(nl->pts[2]) : S.eps(nl->pts[1]);
          centre = nl->pts[0];
        } else {
          SId s;
          do s = qe[ordinary_count(qe, nh) + rng() % (qe.size() - ordinary_count(qe, nh))];
          while (S.collinear(S.of_eps(e), s));
          f = S.eps(s);
        }
        ++n3;
        auto tf = S.tropic(f);
        auto it = meet(te, tf);
        bool collinear = S.collinear(S.of_eps(e), S.of_eps(f));
        col3 += collinear;
        bool found = false;
        HId c = kNoH;
        if (collinear) {
          c = HId(centre);
          found = pencil(g, te, c) == it && pencil(g, tf, c) == it;
        } else {
          for (HId x : it)
            if (pencil(g, te, x) == it && pencil(g, tf, x) == it) found = true;
        }
        bad3 += found != collinear || (k < 2) != collinear;
      }
      // At a shared ordinary point.
      for (int k = 0; k < 2; ++k) {
        auto pe = S.points_of(e);
        HId p, centre = kNoH;
        EpsId f;
        if (k == 0) {
          const SynthLine* nl = nullptr;
          while (!nl) {
            const auto& l = ls[rng() % ls.size()];
            if (l.kind == SLineKind::New) nl = &l;
          }
          p = nl->solid[rng() % 15];
          centre = HId(nl->pts[0]);
          f = S.eps(nl->pts[1]) == e ? S.eps(nl->pts[2]) : S.eps(nl->pts[1]);
        } else {
          p = pe[rng() % 255];
          do f = cat.through(p)[rng() % 256];
          while (f == e || S.collinear(S.of_eps(e), S.of_eps(f)));
        }
        ++n5;
        auto nb = [&](const std::vector<HId>& t) {
          std::vector<HId> out;
          for (HId y : t)
            if (g.collinear(p, y)) out.push_back(y);
          return out;
        };
        auto tf = S.tropic(f);
        auto a = nb(te), b = nb(tf);
        auto h = meet(a, b);
        bool collinear = S.collinear(S.of_eps(e), S.of_eps(f));
        bool ok = a.size() == 135 && b.size() == 135 && is_hyperplane_of(g, a, h) &&
                  is_hyperplane_of(g, b, h);
        // A singular hyperplane is the perp of a deep point; for collinear
        // equators the deep point is the ordinary point of their line.
        HId deep = kNoH;
        for (HId d : h)
          if (pencil(g, a, d) == h) deep = d;
        ok = ok && (deep != kNoH) == collinear && collinear == (k == 0);
        if (collinear) ok = ok && deep == centre && h.size() == 71;
        else ok = ok && h.size() == 63;
        std::vector<HId> pe_v(pe.begin(), pe.end());
        std::vector<HId> pf_v(S.points_of(f).begin(), S.points_of(f).end());
        auto ef = meet(pe_v, pf_v);
        if (!collinear) ok = ok && ef == std::vector<HId>{p};
        bad5 += !ok;
      }
    }
    r.add("new_points.pencil", "two equators are collinear iff their tropic circles share a full pencil, centred on the line",
          bad3 == 0, nfail(bad3, n3) + "; " + std::to_string(col3) + " collinear");
    r.add("new_points.shared_point", "at a shared point the tropic traces meet in a hyperplane, a point-perp iff collinear, else the equators meet only there",
          bad5 == 0, nfail(bad5, n5));
  }

  // Points off the hyperplane of an extended equator.
  {
    std::size_t bad = 0, n = 0;
    for (int i = 0; i < std::min(nsamp, 5); ++i) {
      EpsId e0 = rand_e();
      auto pts = S.points_of(e0);
      HId p = pts[0], q = kNoH;
      for (HId z : pts)
        if (eq.opposite(p, z)) {
          q = z;
          break;
        }
      auto x = eq.extended_equator(p, q);
      auto t = eq.tropic_circle(x);
      auto hh = eq.hyperplane_H(x, t);
      auto c = eq.imaginary_completion(x, t);
      std::set<std::vector<HId>> tags(c.tags.begin(), c.tags.end());
      for (int k = 0; k < 4; ++k) {
        HId rr;
        do rr = rand_h();
        while (has(hh.points, rr));
        ++n;
        auto pl = eq.classify_vs_equator(rr, x, t);
        std::vector<EpsId> hits;
        for (EpsId f : cat.through(rr)) {
          std::vector<HId> fp(S.points_of(f).begin(), S.points_of(f).end());
          auto m = meet(fp, t.points);
          if (m.size() == 135 && tags.count(m)) hits.push_back(f);
        }
        bool ok = hits.size() == 1;
        if (ok) {
          EpsId f = hits[0];
          auto tf = S.tropic(f);
          ok = ok && meet(tf, x.points) == pl.special_set;
          std::vector<HId> fp(S.points_of(f).begin(), S.points_of(f).end());
          for (HId z : fp)
            if (!has(t.points, z)) ok = ok && !has(hh.points, z);
          for (HId z : t.points)
            if (g.symplectic(rr, z)) ok = ok && has(fp, z);
        }
        bad += !ok;
      }
    }
    r.add("outside.unique_equator", "a point off H lies in one equator meeting T in a D4 tag; its circle meets Ehat in the special set; it avoids H off T",
          bad == 0, nfail(bad, n));
  }

  // Polarity.
  {
    std::size_t abs_bad = 0, n_abs = 0;
    for (int i = 0; i < nsamp; ++i) {
      HId p = rand_h();
      abs_bad += !has(S.quad(p), SId(p));
      EpsId e = rand_e();
      auto qe = S.quad_of_new(e);
      bool ok = !has(qe, S.of_eps(e));
      auto ls = S.lines_through(S.of_eps(e));
      for (int k = 0; k < 50; ++k) {
        const auto& l = ls[rng() % ls.size()];
        for (SId b : l.pts)
          if (b != S.of_eps(e)) ok = ok && !has(qe, b);
      }
      abs_bad += !ok;
      // Absolute lines are Gamma-lines.
      auto lp = S.lines_through(p);
      for (int k = 0; k < 6; ++k) {
        const auto& l = lp[rng() % lp.size()];
        auto u = S.four_space(l);
        bool absolute = std::includes(u.begin(), u.end(), l.pts.begin(), l.pts.end());
        abs_bad += absolute != (l.kind == SLineKind::Gamma);
        ++n_abs;
      }
      n_abs += 2;
    }
    r.add("polarity.absolute", "absolute points are the ordinary points and absolute lines the Gamma-lines",
          abs_bad == 0, nfail(abs_bad, n_abs));
  }
  {
    // Planes: Gamma-planes are fixed, other planes are moved and come back.
    std::size_t bad = 0, fixed_ok = 0, moved = 0, n = 0;
    for (int i = 0; i < nsamp; ++i) {
      HId x = rand_h();
      HId u = g.neighbours(x)[rng() % kGammaDegree], v;
      do v = g.neighbours(x)[rng() % kGammaDegree];
      while (!g.collinear(u, v) || v == g.third(x, u) || v == u);
      auto gp = S.span_of({SId(x), SId(u), SId(v)});
      Element gpl{Sort::Plane, gp};
      bool ok = gp.size() == 7 && S.theta(gpl) == gpl;
      fixed_ok += ok;
      bad += !ok;
      ++n;
      // A plane through a new point: a new line plus a point collinear with all of it.
      SId a = S.of_eps(rand_e());
      auto ls = S.lines_through(a);
      std::vector<SId> pl;
      while (pl.empty()) {
        const auto& l1 = ls[rng() % ls.size()];
        const auto& l2 = ls[rng() % ls.size()];
        SId b = l1.pts[0] == a ? l1.pts[1] : l1.pts[0];
        SId c = l2.pts[0] == a ? l2.pts[1] : l2.pts[0];
        if (b == c || !S.collinear(b, c) || has(l1.pts, c)) continue;
        pl = S.span_of({a, b, c});
      }
      Element p2{Sort::Plane, pl};
      auto th = S.theta(p2);
      // The image is the meet of the quads of the plane's points; going back gives the plane.
      std::vector<SId> m = S.quad(pl[0]);
      for (SId s : pl) m = sorted_intersection(m, S.quad(s));
      bool ok2 = pl.size() == 7 && th.pts.size() == 7 && th.pts == m && S.theta(th) == p2;
      moved += !(th == p2);
      bad += !ok2;
      ++n;
    }
    r.add("polarity.planes", "Gamma-planes are fixed; other planes map to the meet of their quads and back",
          bad == 0, nfail(bad, n) + "; " + std::to_string(moved) + " new-point planes moved");
  }
  {
    // Flags among elements built around one point.
    std::size_t inv_bad = 0, inc_bad = 0, pairs = 0, incident = 0, elems = 0;
    int iters = std::max(70, nsamp * 4);
    for (int i = 0; i < iters; ++i) {
      SId a = rand_point(i);
      auto ls = S.lines_through(a);
      const auto& l = ls[rng() % ls.size()];
      std::vector<Element> el;
      el.push_back({Sort::Point, {a}});
      el.push_back({Sort::Line, {l.pts.begin(), l.pts.end()}});
      // plane through l
      for (int t = 0; t < 200; ++t) {
        const auto& l2 = ls[rng() % ls.size()];
        SId c = l2.pts[0] == a ? l2.pts[1] : l2.pts[0];
        if (has(l.pts, c)) continue;
        bool ok = true;
        for (SId b : l.pts) ok = ok && (b == a || S.collinear(b, c));
        if (!ok) continue;
        el.push_back({Sort::Plane, S.span_of({l.pts[0], l.pts[1], l.pts[2], c})});
        break;
      }
      // a 4-space through a: U of a line through a point collinear to a
      {
        SId b = l.pts[0] == a ? l.pts[1] : l.pts[0];
        auto lb = S.lines_through(b);
        el.push_back({Sort::FourSpace, S.four_space(lb[rng() % lb.size()])});
      }
      // a quad: Sigma of a point of Sigma(a)
      {
        auto qa = S.quad(a);
        el.push_back({Sort::Quad, S.quad(qa[rng() % qa.size()])});
      }
      // a 5-space: a symplecton on an ordinary point of l, or a cone from a new line
      if (i % 2 == 0) {
        HId x = HId(l.pts[0]);
        const auto& sy = g.symplecton(g.symplecta_through(x)[rng() % 63]);
        std::vector<SId> m(sy.points.begin(), sy.points.end());
        std::sort(m.begin(), m.end());
        el.push_back({Sort::FiveSpace, m});
      } else {
        for (const auto& l2 : ls)
          if (l2.kind == SLineKind::New) {
            auto [vp, vm] = S.cone_and_twin(l2.solid);
            el.push_back({Sort::FiveSpace, S.five_space(rng() % 2 ? vp : vm)});
            break;
          }
      }
      std::vector<Element> th;
      for (const auto& e : el) {
        th.push_back(S.theta(e));
        inv_bad += !(S.theta(th.back()) == e);
        ++elems;
      }
      for (std::size_t x = 0; x < el.size(); ++x)
        for (std::size_t y = x + 1; y < el.size(); ++y) {
          if (el[x].sort == el[y].sort) continue;
          ++pairs;
          bool inc = S.incident(el[x], el[y]);
          incident += inc;
          inc_bad += inc != S.incident(th[x], th[y]);
        }
    }
    r.counts["flag_pairs"] = pairs;
    r.counts["flag_pairs_incident"] = incident;
    r.add("polarity.involution", "theta(theta(x)) = x on elements of all six sorts", inv_bad == 0,
          nfail(inv_bad, elems));
    r.add("polarity.incidence", "theta preserves incidence and non-incidence on sampled pairs",
          inc_bad == 0 && pairs >= 1000 && incident > 0,
          nfail(inc_bad, pairs) + "; " + std::to_string(incident) + " incident");
  }
  return r;
}

}  // namespace e6

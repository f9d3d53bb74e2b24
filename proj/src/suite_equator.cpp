#include <algorithm>
#include <set>
#include <string>

#include "e6/suites.hpp"

namespace e6 {

namespace {

std::string nfail(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures of " + std::to_string(of);
}

bool has(const std::vector<HId>& s, HId x) { return std::binary_search(s.begin(), s.end(), x); }

std::pair<HId, HId> random_opposite(const Gamma& g, const Equators& eq, std::mt19937_64& rng) {
  HId p = HId(rng() % g.size()), q;
  do q = HId(rng() % g.size());
  while (!eq.opposite(p, q));
  return {p, q};
}

// A 0/1 membership table over H.
std::vector<char> member(std::size_t n, const std::vector<HId>& s) {
  std::vector<char> m(n, 0);
  for (HId x : s) m[x] = 1;
  return m;
}

struct Instance {
  HId p, q;
  EquatorGeometry e;
  ExtendedEquator x;
  TropicCircle t;
};

Instance make_instance(const Equators& eq, HId p, HId q) {
  Instance in{p, q, eq.equator(p, q), eq.extended_equator(p, q), {}};
  in.t = eq.tropic_circle(in.x);
  return in;
}

}  // namespace

Report suite_equator(World& w) {
  Report r;
  r.suite = "equator";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const Gamma& g = w.gamma();
  const Equators& eq = w.equators();
  const std::size_t nh = g.size();
  const int ninst = w.options().samples > 0 ? w.options().samples : 20;
  r.counts["instances"] = std::size_t(ninst);

  std::size_t bad_e = 0, bad_dich = 0, bad_x = 0, bad_union = 0, bad_census = 0, bad_polar = 0,
              bad_base = 0, bad_no_col = 0, bad_hyp = 0, bad_t = 0, bad_beta = 0, bad_gens = 0,
              bad_place = 0, hyp_checks = 0, bad_compl = 0, bad_d4 = 0, bad_systems = 0, bad_grow = 0;
  std::set<std::size_t> span_dims;
  std::set<std::vector<HId>> tropics, equators;
  std::array<std::size_t, 4> places{};

  for (int inst = 0; inst < ninst; ++inst) {
    auto [p, q] = random_opposite(g, eq, rng);
    Instance in = make_instance(eq, p, q);
    const auto& E = in.e.points;
    const auto& X = in.x.points;
    const auto& T = in.t.points;

    // E(p,q): 63 points, each symplectic to p and q, found by both routes.
    {
      bool ok = E.size() == 63 && eq.equator_by_scan(p, q).points == E &&
                eq.equator(q, p).points == E;
      for (HId y : E) ok = ok && g.symplectic(p, y) && g.symplectic(q, y);
      bad_e += !ok;
      std::size_t sym = 0, opp = 0, other = 0;
      for (HId a : E)
        for (HId b : E) {
          if (a >= b) continue;
          auto k = g.relation(a, b).kind;
          sym += k == Rel::Symplectic;
          opp += k == Rel::Opposite;
          other += k != Rel::Symplectic && k != Rel::Opposite;
        }
      bad_dich += other != 0 || sym == 0 || opp == 0;
    }
    // Extended equator: 255 points, union route, the trace of its span on H.
    {
      bool ok = X.size() == 255 && has(X, p) && has(X, q) &&
                std::includes(X.begin(), X.end(), E.begin(), E.end());
      Span sp;
      for (Vec b : in.x.basis) sp.insert(b);
      std::vector<HId> tr;
      for (Vec v : sp.elements())
        if (HId h = g.hid_of_vec(v); h != kNoH) tr.push_back(h);
      std::sort(tr.begin(), tr.end());
      ok = ok && tr == X;
      span_dims.insert(std::size_t(sp.dim()));
      bad_x += !ok;
      bad_union += eq.extended_equator_by_union(p, q) != X;
      for (std::size_t i = 0; i < (inst == 0 ? X.size() : 3); ++i) {
        std::array<std::size_t, 5> c{};
        for (HId b : X) ++c[int(g.relation(X[i], b).kind)];
        bad_census += c != std::array<std::size_t, 5>{1, 0, 126, 0, 128};
      }
      equators.insert(X);
    }
    // Polar space axioms with hyperbolic lines, rank 4.
    LocalSpace xs = eq.hyperbolic_space(X);
    auto gens = xs.maximal_singular();
    {
      auto rep = xs.check();
      bool ok = rep.ok() && rep.lines == 5355 && gens.size() == 2295;
      for (const auto& m : gens) ok = ok && m.count() == 15;
      bad_polar += !ok;
    }
    // Any opposite pair inside generates the same extended equator.
    for (int k = 0; k < 10; ++k) {
      HId a, b;
      do {
        a = X[rng() % 255];
        b = X[rng() % 255];
      } while (!eq.opposite(a, b));
      bad_base += eq.extended_equator(a, b).points != X;
    }
    // No point of the extended equator is collinear or special to a point of E.
    for (HId a : X)
      for (HId b : E) {
        auto k = g.relation(a, b).kind;
        bad_no_col += k == Rel::Collinear || k == Rel::Special;
      }
    // The points of E symplectic or equal to x are E or a hyperplane of it.
    {
      LocalSpace es = eq.hyperbolic_space(E);
      auto lines = es.lines();
      hyp_checks += X.size() * lines.size();
      for (HId x : X) {
        std::vector<char> in_s(E.size());
        for (std::size_t i = 0; i < E.size(); ++i) in_s[i] = E[i] == x || g.symplectic(x, E[i]);
        for (const auto& l : lines) {
          int c = in_s[l[0]] + in_s[l[1]] + in_s[l[2]];
          bad_hyp += c != 1 && c != 3;
        }
      }
    }
    // Tropic circle: points off X with at least two Gamma-neighbours in X.
    {
      std::vector<std::uint16_t> cnt(nh, 0);
      for (HId a : X)
        for (HId u : g.neighbours(a)) ++cnt[u];
      auto inx = member(nh, X);
      std::vector<HId> oracle;
      bool ok = true;
      for (HId y = 0; y < nh; ++y) {
        if (inx[y]) {
          ok = ok && cnt[y] == 0;
        } else if (cnt[y] >= 2) {
          oracle.push_back(y);
          ok = ok && cnt[y] == 15;
        }
      }
      ok = ok && oracle == T && T.size() == 2295;
      bad_t += !ok;
      tropics.insert(T);
    }
    // beta: T onto the generators of X, inverted by beta_inv.
    {
      std::set<std::vector<HId>> gen_sets, images;
      for (const auto& m : gens) {
        std::vector<HId> s;
        for (int i : m.items()) s.push_back(X[i]);
        gen_sets.insert(s);
      }
      for (HId y : T) {
        auto b = eq.beta(y, in.x);
        bool ok = b.size() == 15 && eq.beta_inv(b) == y;
        for (HId z : b) ok = ok && g.collinear(y, z);
        bad_beta += !ok;
        images.insert(b);
      }
      bad_gens += images != gen_sets;
    }
    // Grown hyperbolic plane and solid from a hyperbolic line of X.
    {
      HId a = X[rng() % 255], b;
      do b = X[rng() % 255];
      while (!g.symplectic(a, b));
      auto gh = eq.grow_hyperbolic(a, b);
      bool ok = gh.plane.size() == 7 && gh.solid.size() == 15 && gh.ext.points.size() == 255 &&
                eq.is_hyperbolic_subspace(gh.plane) && eq.is_hyperbolic_subspace(gh.solid) &&
                has(gh.plane, a) && has(gh.plane, b) &&
                std::includes(gh.solid.begin(), gh.solid.end(), gh.plane.begin(), gh.plane.end()) &&
                std::includes(gh.ext.points.begin(), gh.ext.points.end(), gh.solid.begin(),
                              gh.solid.end());
      bad_grow += !ok;
    }
    // Location of sampled points relative to X, T and the hyperplane.
    {
      HyperplaneH hh = eq.hyperplane_H(in.x, in.t);
      for (int k = 0; k < 200; ++k) {
        HId y = HId(rng() % nh);
        auto pl = eq.classify_vs_equator(y, in.x, in.t);
        ++places[int(pl.where)];
        const auto& f = pl.profile;
        bool ok = true;
        switch (pl.where) {
          case EquatorLocation::InE:
            ok = has(X, y) && f[int(Rel::Collinear)] == 0 && f[int(Rel::Special)] == 0;
            break;
          case EquatorLocation::InT:
            ok = has(T, y) && f[int(Rel::Collinear)] + f[int(Rel::Special)] == 255;
            break;
          case EquatorLocation::InHOnly:
            ok = !has(X, y) && !has(T, y) && has(hh.points, y) && f[int(Rel::Collinear)] == 1 &&
                 has(X, pl.anchor) && g.collinear(y, pl.anchor) && pl.solid.size() == 15 &&
                 has(pl.solid, pl.anchor) && eq.is_hyperbolic_subspace(pl.solid);
            for (HId z : pl.solid)
              ok = ok && has(X, z) && (z == pl.anchor || g.symplectic(y, z));
            break;
          case EquatorLocation::Outside: {
            ok = !has(hh.points, y) && pl.special_set.size() == 135 &&
                 f[int(Rel::Special)] == 135 && f[int(Rel::Opposite)] == 120;
            if (places[3] <= 3) {
              LocalSpace ls = eq.hyperbolic_space(pl.special_set);
              auto ms = ls.maximal_singular();
              ok = ok && ls.check().ok() && ms.size() == 270;
              for (const auto& m : ms) ok = ok && m.count() == 15;
            }
            break;
          }
        }
        bad_place += !ok;
      }
    }
    // Imaginary completion: X plus 272 hyperbolic D4 tags forms a rank-5 polar space.
    if (inst < 5) {
      auto c = eq.imaginary_completion(in.x, in.t);
      bool ok = c.tags.size() == 272 && c.points() == 527;
      for (const auto& t : c.tags) ok = ok && t.size() == 135 && std::includes(T.begin(), T.end(), t.begin(), t.end());
      LocalSpace cs = eq.completion_space(in.x, in.t, c);
      auto rep = cs.check();
      ok = ok && rep.ok() && rep.lines == 23715 && cs.size() == 527;
      // X is a geometric hyperplane: the first 255 points are X.
      for (const auto& l : cs.lines()) {
        int k = (l[0] < 255) + (l[1] < 255) + (l[2] < 255);
        ok = ok && (k == 1 || k == 3);
      }
      bad_compl += !ok;
      std::set<std::vector<HId>> tagset(c.tags.begin(), c.tags.end());
      for (int k = 0; k < 3; ++k) {
        HId a = T[rng() % T.size()], b;
        do b = T[rng() % T.size()];
        while (!eq.opposite(a, b));
        auto xy = eq.extended_equator(a, b).points;
        std::vector<HId> d4;
        std::set_intersection(xy.begin(), xy.end(), T.begin(), T.end(), std::back_inserter(d4));
        LocalSpace ls = eq.hyperbolic_space(d4);
        auto ms = ls.maximal_singular();
        bool okd = d4.size() == 135 && ls.check().ok() && ms.size() == 270 && tagset.count(d4);
        // One system of generators is the beta-image of points of X.
        std::vector<int> sys(ms.size());
        std::size_t in_x = 0;
        for (std::size_t i = 0; i < ms.size(); ++i) {
          std::vector<HId> s;
          for (int j : ms[i].items()) s.push_back(d4[j]);
          HId z = eq.beta_inv(s);
          sys[i] = z != kNoH && has(X, z);
          in_x += sys[i];
        }
        okd = okd && in_x == 135;
        for (std::size_t i = 0; i < ms.size() && okd; ++i)
          for (std::size_t j = i + 1; j < ms.size(); ++j) {
            Bits m = ms[i];
            m &= ms[j];
            std::size_t c2 = m.count();
            bool same = sys[i] == sys[j];
            bool even = c2 == 0 || c2 == 3 || c2 == 15;
            if (same != even) {
              ++bad_systems;
              break;
            }
          }
        bad_d4 += !okd;
      }
    }
  }

  std::string dims;
  for (auto d : span_dims) dims += std::to_string(d) + " ";
  const std::size_t n = std::size_t(ninst);
  r.add("equator.size", "|E(p,q)| = 63, symplectic to p and q, same by pivot and scan, symmetric",
        bad_e == 0, nfail(bad_e, n));
  r.add("equator.dichotomy", "two points of E are symplectic or opposite, both occur, exhaustive",
        bad_dich == 0, nfail(bad_dich, n));
  r.add("extended.size", "|Ehat| = 255, contains p, q and E, equals H cut with its linear span",
        bad_x == 0, nfail(bad_x, n) + "; span dimension " + dims);
  r.add("extended.union", "Ehat equals the union of E(x,y) over opposite x, y in E", bad_union == 0,
        nfail(bad_union, n));
  r.add("extended.census", "from each point of Ehat: 126 symplectic, 128 opposite", bad_census == 0,
        nfail(bad_census, 255 + 3 * (n - 1)));
  r.add("extended.polar", "Ehat with hyperbolic lines is a polar space: 5355 lines, 2295 solids",
        bad_polar == 0, nfail(bad_polar, n));
  r.add("extended.base_pairs", "every sampled opposite pair of Ehat regenerates it", bad_base == 0,
        nfail(bad_base, 10 * n));
  r.add("extended.no_collinear", "no point of Ehat is collinear or special to a point of E",
        bad_no_col == 0, nfail(bad_no_col, n * 255 * 63));
  r.add("extended.hyperplane_of_e", "points of E symplectic or equal to x in Ehat form E or a hyperplane of it",
        bad_hyp == 0, nfail(bad_hyp, hyp_checks) + " line checks");
  r.add("tropic.size", "Tropic circle: the 2295 points with >= 2 (in fact 15) neighbours in Ehat",
        bad_t == 0, nfail(bad_t, n));
  r.add("tropic.beta", "beta(x) = x-perp cap Ehat is a 15-point solid inverted by beta_inv",
        bad_beta == 0, nfail(bad_beta, n * 2295));
  r.add("tropic.beta_bijection", "beta maps the tropic circle onto the maximal singular subspaces of Ehat",
        bad_gens == 0, nfail(bad_gens, n));
  r.add("tropic.distinct", "distinct extended equators have distinct tropic circles",
        tropics.size() == equators.size(),
        std::to_string(equators.size()) + " equators, " + std::to_string(tropics.size()) + " circles");
  r.add("grow_hyperbolic", "a hyperbolic line grows to a hyperbolic plane, solid and extended equator",
        bad_grow == 0, nfail(bad_grow, n));
  r.add("placement", "location against Ehat agrees with membership and relation profile",
        bad_place == 0,
        nfail(bad_place, 200 * n) + "; " + std::to_string(places[0]) + "/" +
            std::to_string(places[1]) + "/" + std::to_string(places[2]) + "/" +
            std::to_string(places[3]));
  const std::size_t nc = std::min<std::size_t>(n, 5);
  r.add("completion.polar", "Ehat plus 272 D4 tags is a 527-point polar space with Ehat a hyperplane",
        bad_compl == 0, nfail(bad_compl, nc));
  r.add("completion.d4", "Ehat(x,y) cap T for opposite x, y in T is one of the 135-point D4 tags",
        bad_d4 == 0, nfail(bad_d4, 3 * nc));
  r.add("completion.systems", "beta_inv in Ehat picks one family of D4 generators", bad_systems == 0,
        nfail(bad_systems, 3 * nc));

  // Solid pairs, exhaustive on one instance: meet size against the relation of beta.
  {
    auto [p, q] = random_opposite(g, eq, rng);
    Instance in = make_instance(eq, p, q);
    const auto& X = in.x.points;
    const auto& T = in.t.points;
    std::vector<Bits> b(T.size(), Bits(255));
    std::vector<std::vector<HId>> solids;
    for (std::size_t i = 0; i < T.size(); ++i) {
      solids.push_back(eq.beta(T[i], in.x));
      for (HId z : solids.back()) b[i].set(std::size_t(std::lower_bound(X.begin(), X.end(), z) - X.begin()));
    }
    auto tm = member(g.size(), T);
    std::array<std::size_t, 4> tally{};
    std::size_t bad = 0;
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) {
        Bits m = b[i];
        m &= b[j];
        std::size_t c = m.count();
        auto rel = g.relation(T[i], T[j]);
        int want = c == 7 ? 0 : c == 3 ? 1 : c == 1 ? 2 : c == 0 ? 3 : -1;
        int got = rel.kind == Rel::Collinear    ? 0
                  : rel.kind == Rel::Symplectic ? 1
                  : rel.kind == Rel::Special    ? 2
                                                : 3;
        if (want != got) {
          ++bad;
          continue;
        }
        ++tally[got];
        if (got == 0) {
          HId t3 = g.third(T[i], T[j]);
          bool ok = tm[t3];
          for (int k : m.items()) ok = ok && g.collinear(t3, X[k]);
          bad += !ok;
        } else if (got == 2) {
          bad += X[m.first()] != rel.midpoint;
        }
      }
    std::size_t sbad = 0;
    for (int k = 0; k < 2000; ++k) {
      std::size_t i = rng() % T.size(), j;
      do j = rng() % T.size();
      while (j == i);
      sbad += !eq.solid_relation(solids[i], solids[j]).consistent;
    }
    r.counts["solid_pairs_plane"] = tally[0];
    r.counts["solid_pairs_line"] = tally[1];
    r.counts["solid_pairs_point"] = tally[2];
    r.counts["solid_pairs_empty"] = tally[3];
    r.add("solids.pairs", "solids meet in plane/line/point/nothing iff beta-points are collinear/symplectic/special/opposite",
          bad == 0 && tally[0] && tally[1] && tally[2] && tally[3],
          nfail(bad, T.size() * (T.size() - 1) / 2) + "; tally " + std::to_string(tally[0]) + "/" +
              std::to_string(tally[1]) + "/" + std::to_string(tally[2]) + "/" +
              std::to_string(tally[3]));
    r.add("solids.relation_op", "solid_relation reports consistent cases on sampled pairs", sbad == 0,
          nfail(sbad, 2000));
  }
  return r;
}

Report suite_hyperplane(World& w) {
  Report r;
  r.suite = "hyperplane";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const Gamma& g = w.gamma();
  const Equators& eq = w.equators();
  const std::size_t nh = g.size();
  const int ninst = w.options().samples > 0 ? w.options().samples : 3;

  std::size_t bad_def = 0, bad_desc = 0, bad_deep = 0, bad_lines = 0, bad_lines_r = 0,
              bad_t_on_e = 0, bad_proper = 0, nlines = 0;
  for (int inst = 0; inst < ninst; ++inst) {
    auto [p, q] = random_opposite(g, eq, rng);
    Instance in = make_instance(eq, p, q);
    const auto& X = in.x.points;
    const auto& T = in.t.points;
    HyperplaneH hh = eq.hyperplane_H(in.x, in.t);
    auto hm = member(nh, hh.points);
    auto tm = member(nh, T);

    // Definition: points equal or collinear to a point of Ehat.
    std::vector<char> def(nh, 0);
    for (HId a : X) {
      def[a] = 1;
      for (HId u : g.neighbours(a)) def[u] = 1;
    }
    bad_def += def != hm;
    // Lines meeting Ehat and T; symplecta through Ehat; lines through T.
    std::vector<char> d1(nh, 0), d2(nh, 0), d3(nh, 0);
    for (HId a : X) {
      for (HId u : g.neighbours(a))
        if (tm[u]) d1[a] = d1[u] = d1[g.third(a, u)] = 1;
      for (auto s : g.symplecta_through(a))
        for (HId z : g.symplecton(s).points) d2[z] = 1;
    }
    for (HId t : T) {
      d3[t] = 1;
      for (HId u : g.neighbours(t)) d3[u] = 1;
    }
    bad_desc += (d1 != hm) + (d2 != hm) + (d3 != hm);
    // Deep points: whole perp inside.
    std::vector<HId> deep;
    for (HId x = 0; x < nh; ++x) {
      if (!hm[x]) continue;
      bool all = true;
      for (HId u : g.neighbours(x)) all = all && hm[u];
      if (all) deep.push_back(x);
    }
    std::vector<HId> et;
    std::set_union(X.begin(), X.end(), T.begin(), T.end(), std::back_inserter(et));
    bad_deep += deep != et || hh.deep != et || hh.points.size() != 36975;
    // Every line meets H in one or three points.
    auto meets = [&](HId x, HId u) { return hm[x] + hm[u] + hm[g.third(x, u)]; };
    for (int k = 0; k < 200; ++k) {
      HId x = hh.points[rng() % hh.points.size()];
      for (HId u : g.neighbours(x)) {
        int c = meets(x, u);
        bad_lines += c != 1 && c != 3;
        ++nlines;
      }
    }
    const int nr = inst == 0 ? 100000 : 10000;
    for (int k = 0; k < nr; ++k) {
      HId x = HId(rng() % nh), u = g.neighbours(x)[rng() % kGammaDegree];
      int c = meets(x, u);
      bad_lines_r += c != 1 && c != 3;
    }
    // Each Gamma-line through a point of Ehat has exactly one point in T.
    for (HId a : X)
      for (HId u : g.neighbours(a)) bad_t_on_e += tm[u] + tm[g.third(a, u)] != 1;
    bad_proper += hh.points.size() >= nh;
  }
  const std::size_t n = std::size_t(ninst);
  r.counts["instances"] = n;
  r.add("hyperplane.definition", "H is Ehat together with all Gamma-neighbours of its points",
        bad_def == 0, nfail(bad_def, n));
  r.add("hyperplane.descriptions", "H = union of Ehat-T lines = union of symplecta on Ehat = union of lines on T",
        bad_desc == 0, nfail(bad_desc, 3 * n));
  r.add("hyperplane.deep", "36975 points; deep points are exactly Ehat cup T, 2550 of them",
        bad_deep == 0, nfail(bad_deep, n));
  r.add("hyperplane.lines", "every Gamma-line through 200 sampled points of H meets H in 1 or 3 points",
        bad_lines == 0, nfail(bad_lines, nlines));
  r.add("hyperplane.random_lines", "random Gamma-lines meet H in 1 or 3 points", bad_lines_r == 0,
        nfail(bad_lines_r, 100000 + 10000 * (n - 1)));
  r.add("hyperplane.tropic_on_lines", "a Gamma-line through a point of Ehat has one point of T",
        bad_t_on_e == 0, nfail(bad_t_on_e, n * 255 * 270));
  r.add("hyperplane.proper", "H misses some point", bad_proper == 0);
  return r;
}

}  // namespace e6

#include "e6/thin.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace e6 {

namespace {

int pc(Mask m) { return std::popcount(m); }

int qform(const QuadForm& f, unsigned v) {
  int s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      if (f[i][j] && (v >> i & 1) && (v >> j & 1)) s ^= 1;
  return s;
}

std::vector<Mask> dedup(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool has(const std::vector<Mask>& sorted, Mask m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

std::string fails(std::size_t n, std::size_t of) {
  std::ostringstream s;
  s << n << " failures of " << of;
  return s.str();
}

}  // namespace

QuadForm standard_elliptic_form() {
  QuadForm f{};
  f[0][1] = 1;
  f[2][3] = 1;
  f[4][4] = 1;
  f[4][5] = 1;
  f[5][5] = 1;
  return f;
}

QuadForm permuted_elliptic_form() {
  // x5x2 + x0x4 + x3^2 + x1x3 + x1^2
  QuadForm f{};
  f[2][5] = 1;
  f[0][4] = 1;
  f[3][3] = 1;
  f[1][3] = 1;
  f[1][1] = 1;
  return f;
}

GQ24 build_gq24(const QuadForm& f) {
  GQ24 g;
  for (unsigned v = 1; v < 64; ++v)
    if (!qform(f, v)) g.coords.push_back(std::uint8_t(v));
  const int n = int(g.coords.size());
  std::map<unsigned, int> idx;
  for (int i = 0; i < n; ++i) idx[g.coords[i]] = i;
  g.perp.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    g.perp[a] |= Mask{1} << a;
    for (int b = a + 1; b < n; ++b) {
      unsigned s = g.coords[a] ^ g.coords[b];
      auto it = idx.find(s);
      if (it == idx.end()) continue;
      g.perp[a] |= Mask{1} << b;
      g.perp[b] |= Mask{1} << a;
      if (it->second > b) g.lines.push_back({a, b, it->second});
    }
  }
  return g;
}

ThinE6::ThinE6(GQ24 gq) : gq_(std::move(gq)) {
  const int n = int(gq_.coords.size());
  if (n != 27) throw std::runtime_error("quadrangle does not have 27 points");
  std::vector<Mask> pts, fives, lines, planes, fours, quads;
  for (int p = 0; p < n; ++p) {
    pts.push_back(Mask{1} << p);
    quads.push_back(gq_.perp[p] & ~(Mask{1} << p));
    for (int q = 0; q < n; ++q) {
      if (q == p || gq_.perp[p] >> q & 1) continue;
      fives.push_back((Mask{1} << p) | (gq_.perp[q] & ~gq_.perp[p] & ~(Mask{1} << q)));
      if (q < p) continue;
      lines.push_back((Mask{1} << p) | (Mask{1} << q));
      fours.push_back(gq_.perp[p] & gq_.perp[q]);
      for (int r = q + 1; r < n; ++r)
        if (!(gq_.perp[p] >> r & 1) && !(gq_.perp[q] >> r & 1))
          planes.push_back((Mask{1} << p) | (Mask{1} << q) | (Mask{1} << r));
    }
  }
  sets_[0] = dedup(pts);
  sets_[1] = dedup(fives);
  sets_[2] = dedup(lines);
  sets_[3] = dedup(planes);
  sets_[4] = dedup(fours);
  sets_[5] = dedup(quads);
}

std::array<std::size_t, 6> ThinE6::counts() const {
  std::array<std::size_t, 6> c{};
  for (int i = 0; i < 6; ++i) c[i] = sets_[i].size();
  return c;
}

Mask ThinE6::gperp(Mask s) const {
  Mask r = kAll;
  for (Mask m = s; m; m &= m - 1) r &= gq_.perp[std::countr_zero(m)];
  return r;
}

bool ThinE6::incident(const ThinElement& a, const ThinElement& b) const {
  if (a.type == b.type) return a.pts == b.pts;
  auto is = [&](ThinType x, ThinType y) {
    return (a.type == x && b.type == y) || (a.type == y && b.type == x);
  };
  Mask meet = a.pts & b.pts;
  if (is(ThinType::FiveSpace, ThinType::FourSpace)) return pc(meet) == 4;
  if (is(ThinType::FiveSpace, ThinType::Quad)) return pc(meet) == 5;
  return meet == a.pts || meet == b.pts;
}

ThinElement ThinE6::opposite(const ThinElement& e) const {
  const Mask m = e.pts;
  auto low = [&](Mask s) { return std::countr_zero(s); };
  switch (e.type) {
    case ThinType::Point: {
      int p = low(m);
      return {ThinType::Quad, gq_.perp[p] & ~m};
    }
    case ThinType::Quad:
      // The only point collinear in the quadrangle with the whole quad.
      return {ThinType::Point, gperp(m) & ~m};
    case ThinType::Line:
      return {ThinType::FourSpace, gperp(m)};
    case ThinType::FourSpace:
      return {ThinType::Line, gperp(m)};
    case ThinType::Plane:
      return {ThinType::Plane, gperp(m)};
    case ThinType::FiveSpace: {
      // The apex p is the member collinear in the quadrangle with no other
      // member; the rest is q^perp minus p^perp and q, which fixes q.
      int p = -1;
      for (Mask s = m; s; s &= s - 1) {
        int x = low(s);
        if (!(gq_.perp[x] & m & ~(Mask{1} << x))) {
          p = x;
          break;
        }
      }
      if (p < 0) throw std::logic_error("5-space without apex");
      Mask rest = m & ~(Mask{1} << p);
      Mask q = gperp(rest) & ~gq_.perp[p];
      if (pc(q) != 1) throw std::logic_error("5-space recipe not recoverable");
      int qi = low(q);
      return {ThinType::FiveSpace, q | (gq_.perp[p] & ~gq_.perp[qi] & ~(Mask{1} << p))};
    }
  }
  return e;
}

Report verify_thin(const ThinE6& t) {
  Report r;
  r.suite = "thin";
  const GQ24& gq = t.gq();
  const int n = 27;
  auto bit = [](int i) { return Mask{1} << i; };
  using T = ThinType;
  const std::array<T, 6> types{T::Point, T::FiveSpace, T::Line, T::Plane, T::FourSpace, T::Quad};
  const char* tnames[6] = {"points", "5-spaces", "lines", "planes", "4-spaces", "quads"};

  // Quadrangle.
  {
    bool ok = gq.coords.size() == 27 && gq.lines.size() == 45;
    std::size_t bad = 0;
    for (int p = 0; p < n; ++p) {
      int on = 0;
      for (auto& l : gq.lines) on += (l[0] == p || l[1] == p || l[2] == p);
      bad += on != 5 || pc(gq.perp[p]) != 11;
    }
    std::size_t gqbad = 0;
    for (auto& l : gq.lines) {
      Mask lm = bit(l[0]) | bit(l[1]) | bit(l[2]);
      for (int p = 0; p < n; ++p)
        if (!(lm >> p & 1)) gqbad += pc(gq.perp[p] & lm) != 1;
    }
    r.counts["gq_points"] = gq.coords.size();
    r.counts["gq_lines"] = gq.lines.size();
    r.add("gq.counts", "27 points and 45 lines of the elliptic quadric", ok);
    r.add("gq.order", "every point on 5 lines, collinear with 10 points", bad == 0, fails(bad, 27));
    r.add("gq.axiom", "a point off a line is collinear with exactly one of its points",
          gqbad == 0, fails(gqbad, 45 * 24));
  }

  // Counts and recipes.
  const auto c = t.counts();
  const std::array<std::size_t, 6> want{27, 72, 216, 720, 216, 27};
  for (int i = 0; i < 6; ++i) r.counts[tnames[i]] = c[i];
  r.add("counts", "27, 72, 216, 720, 216, 27 elements of types 1 to 6", c == want);
  {
    std::map<Mask, int> mult;
    int recipes = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (q != p && !gq.collinear(p, q)) {
          ++recipes;
          ++mult[bit(p) | (gq.perp[q] & ~gq.perp[p] & ~bit(q))];
        }
    bool six = std::all_of(mult.begin(), mult.end(), [](auto& kv) { return kv.second == 6; });
    r.add("five_space.recipes", "432 ordered pairs give 72 5-spaces, 6 pairs each",
          recipes == 432 && mult.size() == 72 && six);
  }
  {
    const std::array<int, 6> size{1, 6, 2, 3, 5, 10};
    std::size_t bad = 0;
    for (int i = 0; i < 6; ++i)
      for (Mask m : t.of(types[i])) {
        bad += pc(m) != size[i];
        if (i == 5) continue;
        for (Mask a = m; a; a &= a - 1)
          for (Mask b = a & (a - 1); b; b &= b - 1)
            bad += !t.collinear(std::countr_zero(a), std::countr_zero(b));
      }
    r.add("sizes", "singular elements are cliques of 1, 6, 2, 3, 5 points; quads have 10",
          bad == 0, fails(bad, 1278));
  }
  {
    ThinE6 other(build_gq24(permuted_elliptic_form()));
    r.add("relabel", "counts agree for a second coordinatization", other.counts() == c);
  }

  // Opposition.
  {
    std::size_t bad = 0;
    const std::array<T, 6> opp{T::Quad, T::FiveSpace, T::FourSpace, T::Plane, T::Line, T::Point};
    for (int i = 0; i < 6; ++i)
      for (Mask m : t.of(types[i])) {
        ThinElement e{types[i], m};
        ThinElement o = t.opposite(e);
        ThinElement back = t.opposite(o);
        bad += o.type != opp[i] || !has(t.of(o.type), o.pts) || back.type != e.type ||
               back.pts != e.pts;
      }
    r.add("opposition.involution", "opposition is an involution swapping 1/6 and 3/5",
          bad == 0, fails(bad, 1278));
    std::size_t rbad = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (q != p && !gq.collinear(p, q)) {
          Mask v = bit(p) | (gq.perp[q] & ~gq.perp[p] & ~bit(q));
          Mask w = bit(q) | (gq.perp[p] & ~gq.perp[q] & ~bit(p));
          rbad += t.opposite({T::FiveSpace, v}).pts != w;
        }
    r.add("opposition.five_spaces", "the 5-space opposite follows the recipe for every pair",
          rbad == 0, fails(rbad, 432));
  }

  // Incidence matrix over all elements, then chambers and thinness.
  std::vector<ThinElement> all;
  std::array<std::size_t, 7> start{};
  for (int i = 0; i < 6; ++i) {
    start[i] = all.size();
    for (Mask m : t.of(types[i])) all.push_back({types[i], m});
  }
  start[6] = all.size();
  const std::size_t N = all.size();
  const std::size_t W = (N + 63) / 64;
  std::vector<std::uint64_t> inc(N * W, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (all[a].type != all[b].type && t.incident(all[a], all[b])) {
        inc[a * W + b / 64] |= std::uint64_t{1} << (b % 64);
        inc[b * W + a / 64] |= std::uint64_t{1} << (a % 64);
      }
  auto isinc = [&](std::size_t a, std::size_t b) { return inc[a * W + b / 64] >> (b % 64) & 1; };
  {
    std::vector<std::array<std::size_t, 6>> chambers;
    std::array<std::size_t, 6> ch{};
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == 6) {
        chambers.push_back(ch);
        return;
      }
      for (std::size_t e = start[depth]; e < start[depth + 1]; ++e) {
        bool ok = true;
        for (int k = 0; k < depth && ok; ++k) ok = isinc(ch[k], e);
        if (!ok) continue;
        ch[depth] = e;
        self(self, depth + 1);
      }
    };
    rec(rec, 0);
    std::size_t thick = 0;
    std::vector<std::uint64_t> acc(W);
    for (const auto& cc : chambers)
      for (int i = 0; i < 6; ++i) {
        std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
        for (int k = 0; k < 6; ++k)
          if (k != i)
            for (std::size_t w = 0; w < W; ++w) acc[w] &= inc[cc[k] * W + w];
        std::size_t cnt = 0;
        for (std::size_t e = start[i]; e < start[i + 1]; ++e) cnt += acc[e / 64] >> (e % 64) & 1;
        thick += cnt != 2;
      }
    r.counts["chambers"] = chambers.size();
    r.add("chambers", "51840 chambers, the order of the Weyl group of E6", chambers.size() == 51840);
    r.add("thin", "every panel lies in exactly two chambers", thick == 0,
          fails(thick, chambers.size() * 6));
  }

  const auto& quads = t.of(T::Quad);
  const auto& fives = t.of(T::FiveSpace);
  const auto& fours = t.of(T::FourSpace);
  const auto& lines = t.of(T::Line);
  const auto& planes = t.of(T::Plane);
  auto opp_of = [&](T ty, Mask m) { return t.opposite({ty, m}).pts; };
  auto coll_set = [&](Mask s) {  // points equal or collinear with some point of s
    Mask out = s;
    for (Mask x = s; x; x &= x - 1) out |= t.collinear_with(std::countr_zero(x));
    return out;
  };

  // Unique line or quad through a pair.
  {
    std::size_t bad = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Mask pr = bit(a) | bit(b);
        int nl = 0, nq = 0;
        for (Mask l : lines) nl += (l & pr) == pr;
        for (Mask q : quads) nq += (q & pr) == pr;
        bad += t.collinear(a, b) ? (nl != 1) : (nl != 0 || nq != 1);
      }
    r.add("pair.unique", "collinear points lie on a unique line, others in a unique quad",
          bad == 0, fails(bad, 351));
  }
  // Quad pairs.
  {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < quads.size(); ++i)
      for (std::size_t j = i + 1; j < quads.size(); ++j) {
        Mask m = quads[i] & quads[j];
        bad += !(pc(m) == 1 || has(fours, m));
      }
    r.add("quad.pairs", "two quads meet in a 4-space or a point", bad == 0, fails(bad, 351));
  }
  // Point and quad.
  {
    std::size_t bad = 0;
    for (int x = 0; x < n; ++x)
      for (Mask q : quads) {
        bool in = q >> x & 1;
        bool none = !(q & t.collinear_with(x));
        bool opp = opp_of(T::Point, bit(x)) == q;
        int nv = 0;
        Mask vq = 0;
        for (Mask v : fives)
          if ((v >> x & 1) && pc(v & q) == 5) {
            ++nv;
            vq = v & q;
          }
        int cases = int(in) + int(none) + int(nv == 1);
        bool ok = cases == 1 && none == opp;
        if (!in && !none) ok = ok && vq == (q & t.collinear_with(x));
        bad += !ok;
      }
    r.add("point.quad", "a point is in a quad, opposite it, or shares a unique 5-space with it",
          bad == 0, fails(bad, 729));
  }
  // Quads are convex.
  {
    std::size_t bad = 0;
    for (Mask q : quads)
      for (Mask a = q; a; a &= a - 1)
        for (Mask b = a & (a - 1); b; b &= b - 1) {
          int x = std::countr_zero(a), y = std::countr_zero(b);
          if (t.collinear(x, y)) continue;
          Mask common = t.collinear_with(x) & t.collinear_with(y);
          bad += (common & ~q) != 0;
        }
    r.add("quad.convex", "common neighbours of non-collinear quad points stay in the quad",
          bad == 0, fails(bad, 27 * 5));
  }
  // Quad through a 4-space not opposite a point.
  {
    std::size_t bad = 0;
    for (Mask w : fours)
      for (int x = 0; x < n; ++x) {
        bool found = false;
        for (Mask q : quads)
          if ((q & w) == w && opp_of(T::Point, bit(x)) != q) found = true;
        bad += !found;
      }
    r.add("four_space.quads", "some quad on a 4-space is not opposite a given point", bad == 0,
          fails(bad, 216 * 27));
  }
  // 5-space pairs and 3-spaces.
  std::set<Mask> three_from_five, three_from_four;
  for (Mask v : fives)
    for (Mask s = v; s; s &= s - 1) {
      Mask hp = v & ~(s & -s);
      for (Mask u = hp; u; u &= u - 1) three_from_five.insert(hp & ~(u & -u));
    }
  for (Mask w : fours)
    for (Mask s = w; s; s &= s - 1) three_from_four.insert(w & ~(s & -s));
  {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < fives.size(); ++i)
      for (std::size_t j = i + 1; j < fives.size(); ++j) {
        Mask m = fives[i] & fives[j];
        int k = pc(m);
        bool common_plane = false;
        for (Mask p : planes)
          if ((p & fives[i]) == p && (p & fives[j]) == p) common_plane = true;
        bad += !(k == 0 || k == 1 || k == 3) || ((k == 3) != common_plane) ||
               (k == 3 && !has(planes, m));
      }
    std::size_t ubad = 0;
    for (Mask s : three_from_five) {
      int nv = 0;
      for (Mask v : fives) nv += (v & s) == s;
      ubad += nv != 1;
    }
    r.add("five.pairs", "two 5-spaces are disjoint or meet in a point or a common plane",
          bad == 0, fails(bad, 72 * 71 / 2));
    r.add("three_space.five", "every 3-space lies in a unique 5-space", ubad == 0,
          fails(ubad, three_from_five.size()));
  }
  {
    std::size_t bad = 0, both = 0, total = 0;
    for (std::size_t i = 0; i < fives.size(); ++i)
      for (std::size_t j = i + 1; j < fives.size(); ++j) {
        if (fives[i] & fives[j]) continue;
        ++total;
        bool opp = opp_of(T::FiveSpace, fives[i]) == fives[j];
        bool bridge = false;
        for (Mask u : fives)
          if (pc(u & fives[i]) == 3 && pc(u & fives[j]) == 3) bridge = true;
        bad += !(opp || bridge);
        both += opp && bridge;
      }
    r.counts["disjoint_five_pairs"] = total;
    r.add("five.disjoint", "disjoint 5-spaces are opposite or bridged by a 5-space", bad == 0,
          fails(bad, total) + ", " + std::to_string(both) + " both");
  }
  {
    std::size_t bad = three_from_five == three_from_four ? 0 : 1;
    for (Mask s : three_from_four) {
      int nw = 0;
      for (Mask w : fours) nw += (w & s) == s;
      bad += nw != 1;
    }
    r.add("three_space.four", "every 3-space lies in a unique 4-space", bad == 0,
          fails(bad, three_from_four.size()));
  }
  {
    std::set<Mask> hyper;
    for (Mask v : fives)
      for (Mask s = v; s; s &= s - 1) hyper.insert(v & ~(s & -s));
    std::size_t bad = 0;
    for (Mask h : hyper) {
      int nq = 0, nv = 0;
      for (Mask q : quads) nq += (q & h) == h;
      for (Mask v : fives) nv += (v & h) == h;
      bad += nq != 1 || nv != 1 || has(fours, h);
    }
    r.counts["four_prime_spaces"] = hyper.size();
    r.add("four_prime", "every 4'-space lies in a unique quad and a unique 5-space", bad == 0,
          fails(bad, hyper.size()));
  }
  // Point and 5-space.
  {
    std::size_t bad = 0;
    for (int x = 0; x < n; ++x)
      for (Mask v : fives) {
        if (v >> x & 1) continue;
        Mask cw = v & t.collinear_with(x);
        int k = pc(cw);
        bad += !(k == 1 || (k == 4 && has(fours, cw | bit(x))));
      }
    r.add("point.five", "a point off a 5-space sees one point or a 3-space spanning a 4-space",
          bad == 0, fails(bad, 27 * 72));
  }
  // Opposition as empty collinearity.
  {
    std::size_t bad = 0;
    for (int x = 0; x < n; ++x)
      for (Mask q : quads) bad += (opp_of(T::Point, bit(x)) == q) != !(coll_set(bit(x)) & q);
    for (Mask l : lines)
      for (Mask w : fours) bad += (opp_of(T::Line, l) == w) != !(coll_set(l) & w);
    for (Mask a : planes)
      for (Mask b : planes) bad += (opp_of(T::Plane, a) == b) != !(coll_set(a) & b);
    for (Mask a : fives)
      for (Mask b : fives) {
        auto unique_partner = [&](Mask s, Mask o) {
          for (Mask m = s; m; m &= m - 1)
            if (pc(t.collinear_with(std::countr_zero(m)) & o) != 1) return false;
          return true;
        };
        bool opp = opp_of(T::FiveSpace, a) == b;
        bool one = unique_partner(a, b);
        bool two = one && unique_partner(b, a);
        bad += opp != one || opp != two;
      }
    r.add("opposition.collinearity",
          "opposite iff no collinearity; opposite 5-spaces pair their points bijectively",
          bad == 0, fails(bad, 729 + 216 * 216 + 720 * 720 + 72 * 72));
  }
  // Each quad: 16 4-spaces and 16 4'-spaces, parity of meets by family.
  {
    std::size_t bad = 0;
    for (Mask q : quads) {
      std::vector<Mask> a, b;
      for (Mask w : fours)
        if ((w & q) == w) a.push_back(w);
      for (Mask v : fives)
        if (pc(v & q) == 5) b.push_back(v & q);
      bad += a.size() != 16 || b.size() != 16;
      for (auto* fam : {&a, &b})
        for (Mask x : *fam)
          for (Mask y : *fam)
            if (x != y) bad += pc(x & y) % 2 == 0;
      for (Mask x : a)
        for (Mask y : b) bad += pc(x & y) % 2 == 1;
    }
    r.add("quad.families", "each quad has 16 4-spaces and 16 4'-spaces in opposite families",
          bad == 0, fails(bad, 27));
  }
  return r;
}

}  // namespace e6

#include "e6/gamma.hpp"

#include <algorithm>
#include <functional>

namespace e6 {

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::Equal: return "equal";
    case Rel::Collinear: return "collinear";
    case Rel::Symplectic: return "symplectic";
    case Rel::Special: return "special";
    case Rel::Opposite: return "opposite";
  }
  return "?";
}

Gamma::Gamma(const Delta& d, bool with_symplecta) : d_(d) {
  build_points();
  build_neighbours();
  if (with_symplecta) {
    build_symplecta();
    index_symplecta();
  }
}

Gamma::Gamma(const Delta& d, const std::vector<std::array<Vec, 6>>& bases) : d_(d) {
  build_points();
  build_neighbours();
  symp_.reserve(bases.size());
  for (const auto& b : bases) symp_.push_back(make_symplecton({b.begin(), b.end()}));
  std::sort(symp_.begin(), symp_.end(),
            [](const Symplecton& a, const Symplecton& b) { return a.points < b.points; });
  index_symplecta();
}

void Gamma::build_points() {
  inv_.assign(d_.size(), kNoH);
  for (PointId p = 0; p < d_.size(); ++p)
    if (albert_trace(d_.vec(p)) == 0) {
      inv_[p] = HId(h_.size());
      h_.push_back(p);
    }
}

// Collinearity in Gamma: the absolute points in the tangent quad of x, i.e.
// rank-one trace-zero vectors of the image of Y -> x cross Y (other than x).
// Checked against the extension search in the tests.
void Gamma::build_neighbours() {
  nbr_.assign(h_.size() * kGammaDegree, 0);
  for (HId x = 0; x < h_.size(); ++x) {
    Vec X = vec(x);
    std::size_t k = 0;
    for (Vec v : cross_image(X).elements()) {
      if (v == X || albert_trace(v)) continue;
      HId y = hid_of_vec(v);
      if (y == kNoH) continue;
      if (k == kGammaDegree) throw GeometryError("Gamma degree exceeds 270");
      nbr_[std::size_t(x) * kGammaDegree + k++] = y;
    }
    if (k != kGammaDegree) throw GeometryError("Gamma degree below 270");
    auto b = nbr_.begin() + std::ptrdiff_t(x) * kGammaDegree;
    std::sort(b, b + kGammaDegree);
  }
}

bool Gamma::collinear(HId x, HId y) const {
  auto n = neighbours(x);
  return std::binary_search(n.begin(), n.end(), y);
}

std::vector<HId> Gamma::common_neighbours(HId x, HId y) const {
  auto a = neighbours(x), b = neighbours(y);
  std::vector<HId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

GammaRelation Gamma::relation(HId x, HId y) const {
  if (x == y) return {Rel::Equal};
  if (delta_collinear(x, y)) return {collinear(x, y) ? Rel::Collinear : Rel::Symplectic};
  auto c = common_neighbours(x, y);
  if (c.empty()) return {Rel::Opposite};
  if (c.size() != 1) throw GeometryError("special pair with several midpoints");
  return {Rel::Special, c[0]};
}

std::vector<HId> Gamma::delta_perp(HId x) const {
  std::vector<HId> out;
  Vec X = vec(x);
  for (HId y = 0; y < h_.size(); ++y)
    if (y != x && d_.is_point(X ^ vec(y))) out.push_back(y);
  return out;
}

// Include/exclude search over candidates collinear with the whole current
// span. A branch dies when an excluded point enters the span, so every
// singular subspace through the line is visited once. Leaves are maximal
// when no excluded point could still be added.
LineClass Gamma::classify_line(HId x, HId y) const {
  if (!delta_collinear(x, y)) throw GeometryError("NotCollinear");
  HId z0 = third(x, y);
  if (z0 == kNoH) throw GeometryError("NotInH");
  std::vector<HId> cand;
  {
    Vec Y = vec(y);
    for (HId c : delta_perp(x))
      if (c != y && c != z0 && d_.is_point(Y ^ vec(c))) cand.push_back(c);
  }
  LineClass out{LineKind::HyperbolicLine, 0, {}};
  std::vector<HId> forbidden;
  std::vector<std::uint8_t> is_forbidden(h_.size(), 0);

  std::function<void(const Span&, const std::vector<Vec>&, std::vector<HId>)> rec =
      [&](const Span& span, const std::vector<Vec>& gens, std::vector<HId> cands) {
        if (cands.empty()) {
          for (HId f : forbidden) {
            if (span.contains(vec(f))) continue;
            bool all = true;
            for (Vec g : gens)
              if (!d_.is_point(g ^ vec(f))) { all = false; break; }
            if (all) return;
          }
          if (span.dim() == 6) {
            std::vector<HId> pts;
            for (Vec v : span.elements()) pts.push_back(hid_of_vec(v));
            std::sort(pts.begin(), pts.end());
            out.spaces.push_back(std::move(pts));
          }
          return;
        }
        HId z = cands.front();
        Vec Z = vec(z);
        // include z
        {
          Span s2 = span;
          s2.insert(Z);
          bool ok = true;
          std::vector<Vec> fresh;
          for (Vec v : span.elements()) fresh.push_back(v ^ Z);
          fresh.push_back(Z);
          for (Vec v : fresh) {
            HId h = hid_of_vec(v);
            if (h == kNoH) throw GeometryError("span left H");
            if (is_forbidden[h]) { ok = false; break; }
          }
          if (ok) {
            std::vector<HId> next;
            for (std::size_t i = 1; i < cands.size(); ++i) {
              HId c = cands[i];
              if (s2.contains(vec(c))) continue;
              if (d_.is_point(Z ^ vec(c))) next.push_back(c);
            }
            std::vector<Vec> g2 = gens;
            g2.push_back(Z);
            rec(s2, g2, std::move(next));
          }
        }
        // exclude z
        is_forbidden[z] = 1;
        forbidden.push_back(z);
        cands.erase(cands.begin());
        rec(span, gens, std::move(cands));
        forbidden.pop_back();
        is_forbidden[z] = 0;
      };
  Span base;
  base.insert(vec(x));
  base.insert(vec(y));
  rec(base, {vec(x), vec(y)}, cand);
  out.symplecta = int(out.spaces.size());
  if (out.symplecta == 0) throw GeometryError("NoExtension");
  out.kind = out.symplecta >= 2 ? LineKind::GammaLine : LineKind::HyperbolicLine;
  return out;
}

std::vector<HId> Gamma::hyperbolic_line(HId x, HId y) const {
  if (relation(x, y).kind != Rel::Symplectic) throw GeometryError("NotSymplectic");
  std::vector<HId> c = common_neighbours(x, y);
  // points collinear-or-equal with every member of c
  std::vector<std::uint16_t> count(h_.size(), 0);
  for (HId u : c) {
    ++count[u];
    for (HId w : neighbours(u)) ++count[w];
  }
  std::vector<HId> out;
  for (HId h = 0; h < h_.size(); ++h)
    if (count[h] == c.size()) out.push_back(h);
  return out;
}

Symplecton Gamma::make_symplecton(const std::vector<Vec>& gens) const {
  Span s;
  for (Vec g : gens) s.insert(g);
  if (s.dim() != 6) throw GeometryError("symplecton span is not 6-dimensional");
  Symplecton S;
  auto b = s.basis();
  std::copy(b.begin(), b.end(), S.basis.begin());
  auto el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (albert_trace(el[i])) throw GeometryError("symplecton leaves H");
    HId h = hid_of_vec(el[i]);
    if (h == kNoH) throw GeometryError("symplecton has a non-point");
    S.points[i] = h;
  }
  std::sort(S.points.begin(), S.points.end());
  return S;
}

// For each p, symplectic pairs u, v among the neighbours of p give the
// symplecton spanned by u, v and their common neighbours. Kept only where p
// is the least point, so each symplecton appears once.
void Gamma::build_symplecta() {
  std::vector<std::uint64_t> done(kGammaDegree * 5);  // 270 x 270 bits
  for (HId p = 0; p < h_.size(); ++p) {
    auto n = neighbours(p);
    std::fill(done.begin(), done.end(), 0);
    auto pos = [&](HId h) {
      auto it = std::lower_bound(n.begin(), n.end(), h);
      return (it != n.end() && *it == h) ? int(it - n.begin()) : -1;
    };
    int found = 0;
    for (int i = 0; i < kGammaDegree && found < kSympPerPoint; ++i) {
      for (int j = i + 1; j < kGammaDegree; ++j) {
        if (done[i * 5 + (j >> 6)] >> (j & 63) & 1) continue;
        HId u = n[i], v = n[j];
        if (!delta_collinear(u, v) || collinear(u, v)) continue;
        std::vector<Vec> gens{vec(u), vec(v)};
        for (HId c : common_neighbours(u, v)) gens.push_back(vec(c));
        Symplecton S = make_symplecton(gens);
        ++found;
        std::vector<int> local;
        for (HId h : S.points) {
          int k = pos(h);
          if (k >= 0) local.push_back(k);
        }
        for (int a : local)
          for (int b : local) done[a * 5 + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        if (S.points[0] == p) symp_.push_back(S);
      }
    }
    if (found != kSympPerPoint) throw GeometryError("point not on 63 symplecta");
  }
  std::sort(symp_.begin(), symp_.end(),
            [](const Symplecton& a, const Symplecton& b) { return a.points < b.points; });
}

void Gamma::index_symplecta() {
  symp_of_.assign(h_.size() * kSympPerPoint, 0);
  std::vector<std::uint8_t> fill(h_.size(), 0);
  for (std::uint32_t s = 0; s < symp_.size(); ++s)
    for (HId h : symp_[s].points) {
      if (fill[h] == kSympPerPoint) throw GeometryError("point on more than 63 symplecta");
      symp_of_[std::size_t(h) * kSympPerPoint + fill[h]++] = s;
    }
  for (HId h = 0; h < h_.size(); ++h)
    if (fill[h] != kSympPerPoint) throw GeometryError("point on fewer than 63 symplecta");
}

bool Gamma::in_symplecton(HId x, std::uint32_t s) const {
  const auto& p = symp_[s].points;
  return std::binary_search(p.begin(), p.end(), x);
}

std::uint32_t Gamma::symplecton_of_pair(HId x, HId y) const {
  if (relation(x, y).kind != Rel::Symplectic) throw GeometryError("NotSymplectic");
  std::uint32_t hit = 0xFFFFFFFFu;
  for (std::uint32_t s : symplecta_through(x))
    if (in_symplecton(y, s)) {
      if (hit != 0xFFFFFFFFu) throw GeometryError("symplectic pair in two symplecta");
      hit = s;
    }
  if (hit == 0xFFFFFFFFu) throw GeometryError("symplectic pair in no symplecton");
  return hit;
}

PointSympRelation Gamma::point_symp_relation(HId x, std::uint32_t s) const {
  PointSympRelation r{SympRel::Far, {}, kNoH};
  if (in_symplecton(x, s)) {
    r.kind = SympRel::In;
    return r;
  }
  std::vector<HId> symp;
  for (HId p : symp_[s].points) {
    if (!delta_collinear(x, p)) continue;
    if (collinear(x, p))
      r.line.push_back(p);
    else
      symp.push_back(p);
  }
  if (!r.line.empty()) {
    r.kind = SympRel::Close;
    return r;
  }
  if (symp.size() != 1) throw GeometryError("far point without a unique pivot");
  r.pivot = symp[0];
  return r;
}

HId Gamma::far_pivot(HId x, std::uint32_t s) const {
  const auto& b = symp_[s].basis;
  auto k = cross_kernel_in(vec(x), {b.begin(), b.end()});
  if (k.size() != 1) throw GeometryError("pivot kernel is not one point");
  return hid_of_vec(k[0]);
}

std::vector<std::uint64_t> Gamma::near_bits(HId x) const {
  std::vector<std::uint64_t> b((h_.size() + 63) / 64, 0);
  set_bit(b, x);
  for (HId u : neighbours(x)) {
    set_bit(b, u);
    for (HId w : neighbours(u)) set_bit(b, w);
  }
  return b;
}

std::array<std::size_t, 4> Gamma::census(HId x) const {
  std::vector<std::uint64_t> n1((h_.size() + 63) / 64, 0);
  for (HId u : neighbours(x)) set_bit(n1, u);
  std::vector<std::uint64_t> n2 = near_bits(x);
  std::array<std::size_t, 4> c{0, 0, 0, 0};
  Vec X = vec(x);
  for (HId y = 0; y < h_.size(); ++y) {
    if (y == x) continue;
    if (test_bit(n1, y))
      ++c[0];
    else if (d_.is_point(X ^ vec(y)))
      ++c[1];
    else if (test_bit(n2, y))
      ++c[2];
    else
      ++c[3];
  }
  return c;
}

}  // namespace e6

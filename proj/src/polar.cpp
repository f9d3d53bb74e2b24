#include "e6/polar.hpp"

#include <stdexcept>

namespace e6 {

LocalSpace::LocalSpace(int n, const Rel& collinear, const Third& third)
    : n_(n), adj_(std::size_t(n), Bits(std::size_t(n))), third_(std::size_t(n) * n, -1) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (collinear(a, b)) {
        adj_[a].set(b);
        adj_[b].set(a);
        int c = third(a, b);
        third_[std::size_t(a) * n + b] = c;
        third_[std::size_t(b) * n + a] = c;
      }
}

std::vector<std::array<int, 3>> LocalSpace::lines() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n_; ++a)
    for (int b : adj_[a].items()) {
      if (b <= a) continue;
      int c = third(a, b);
      if (c > b) out.push_back({a, b, c});
    }
  return out;
}

PolarReport LocalSpace::check() const {
  PolarReport r;
  r.points = std::size_t(n_);
  for (int a = 0; a < n_; ++a)
    for (int b : adj_[a].items()) {
      int c = third(a, b);
      if (c < 0 || c == a || c == b || !adj_[a].test(c) || !adj_[b].test(c) ||
          third(a, c) != b) {
        r.lines_full = false;
        ++r.violations;
      }
    }
  auto ls = lines();
  r.lines = ls.size();
  for (const auto& l : ls)
    for (int x = 0; x < n_; ++x) {
      if (x == l[0] || x == l[1] || x == l[2]) continue;
      int k = int(adj_[x].test(l[0])) + int(adj_[x].test(l[1])) + int(adj_[x].test(l[2]));
      if (k != 1 && k != 3) {
        r.one_or_all = false;
        ++r.violations;
      }
    }
  for (int x = 0; x < n_; ++x)
    if (int(adj_[x].count()) == n_ - 1) {
      r.nondegenerate = false;
      ++r.violations;
    }
  return r;
}

Bits LocalSpace::singular_closure(const Bits& s) const {
  Bits cur = s;
  std::vector<int> items = cur.items();
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      int a = items[i], b = items[j];
      if (!adj_[a].test(b)) return Bits();
      int c = third(a, b);
      if (c < 0) return Bits();
      if (!cur.test(std::size_t(c))) {
        cur.set(std::size_t(c));
        items.push_back(c);
      }
    }
  return cur;
}

// Include/exclude over the lowest candidate; a branch dies when an excluded
// point enters the span. perp holds every point outside the span collinear
// with all of it, so a leaf is maximal exactly when perp is empty.
std::vector<Bits> LocalSpace::maximal_singular() const {
  std::vector<Bits> out;
  Bits forbidden{std::size_t(n_)};
  auto rec = [&](auto&& self, const Bits& span, const Bits& perp) -> void {
    Bits cand = perp;
    cand.and_not(forbidden);
    int z = cand.first();
    if (z < 0) {
      if (!perp.any()) out.push_back(span);
      return;
    }
    // span is a projective subspace and z sees all of it, so the join is
    // span, z and the third points z + s.
    Bits cl = span;
    cl.set(std::size_t(z));
    for (int s : span.items()) {
      int c = third(z, s);
      if (c < 0) throw std::logic_error("candidate not collinear with span");
      cl.set(std::size_t(c));
    }
    Bits clash = cl;
    clash &= forbidden;
    if (!clash.any()) {
      Bits next = perp;
      next &= adj_[z];
      next.and_not(cl);
      self(self, cl, next);
    }
    forbidden.set(std::size_t(z));
    self(self, span, perp);
    forbidden.reset(std::size_t(z));
  };
  for (int p = 0; p < n_; ++p) {
    // subspaces whose least point is p
    Bits span{std::size_t(n_)};
    span.set(std::size_t(p));
    for (int q = 0; q < p; ++q) forbidden.set(std::size_t(q));
    rec(rec, span, adj_[p]);
    for (int q = 0; q < p; ++q) forbidden.reset(std::size_t(q));
  }
  return out;
}

int projective_dim(std::size_t points) {
  int d = -1;
  std::size_t k = points + 1;
  while (k > 1) {
    k >>= 1;
    ++d;
  }
  return d;
}

}  // namespace e6

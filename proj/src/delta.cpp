#include "e6/delta.hpp"

#include <algorithm>
#include <random>

namespace e6 {

namespace {
constexpr std::size_t kWords = std::size_t{1} << (kDim - 6);
}

Delta Delta::enumerate() {
  Delta d;
  d.pts_.reserve(140000);
  for (Vec v = 1; v <= kMask; ++v)
    if (albert_adjoint(v) == 0) d.pts_.push_back(v);
  d.build_index();
  return d;
}

Delta Delta::from_table(std::vector<Vec> table) {
  if (!std::is_sorted(table.begin(), table.end()))
    throw GeometryError("point table not sorted");
  Delta d;
  d.pts_ = std::move(table);
  d.build_index();
  return d;
}

void Delta::build_index() {
  bits_.assign(kWords, 0);
  prefix_.assign(kWords, 0);
  for (Vec v : pts_) bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::uint32_t run = 0;
  for (std::size_t w = 0; w < kWords; ++w) {
    prefix_[w] = run;
    run += std::uint32_t(__builtin_popcountll(bits_[w]));
  }
}

PointId Delta::id(Vec v) const {
  if (!is_point(v)) return kNoPoint;
  std::uint64_t below = bits_[v >> 6] & ((std::uint64_t{1} << (v & 63)) - 1);
  return prefix_[v >> 6] + std::uint32_t(__builtin_popcountll(below));
}

bool Delta::collinear(PointId x, PointId y) const {
  if (x == y) throw GeometryError("EqualPoints");
  return is_point(pts_[x] ^ pts_[y]);
}

DeltaLine Delta::line_through(PointId x, PointId y) const {
  if (!collinear(x, y)) throw GeometryError("NotCollinear");
  DeltaLine l{x, y, id(pts_[x] ^ pts_[y])};
  std::sort(l.begin(), l.end());
  return l;
}

std::vector<PointId> Delta::perp(PointId x) const {
  std::vector<PointId> out;
  out.reserve(4590);
  Vec X = pts_[x];
  for (PointId i = 0; i < pts_.size(); ++i)
    if (i != x && is_point(X ^ pts_[i])) out.push_back(i);
  return out;
}

std::vector<std::uint64_t> Delta::perp_bits(PointId x) const {
  std::vector<std::uint64_t> out((pts_.size() + 63) / 64, 0);
  Vec X = pts_[x];
  for (PointId i = 0; i < pts_.size(); ++i)
    if (i != x && is_point(X ^ pts_[i])) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  return out;
}

// Fixpoint of: common neighbours of non-collinear pairs, third points of
// collinear pairs. Each member keeps its perp as a bitset.
Quad Delta::quad_through(PointId x, PointId y) const {
  if (x == y || collinear(x, y)) throw GeometryError("CollinearInput");
  const std::size_t words = (pts_.size() + 63) / 64;
  std::vector<PointId> members;
  std::vector<std::vector<std::uint64_t>> perps;
  std::vector<std::uint64_t> in(words, 0);
  std::vector<PointId> queue{x, y};
  in[x >> 6] |= std::uint64_t{1} << (x & 63);
  in[y >> 6] |= std::uint64_t{1} << (y & 63);
  auto add = [&](PointId p) {
    if (in[p >> 6] >> (p & 63) & 1) return;
    in[p >> 6] |= std::uint64_t{1} << (p & 63);
    queue.push_back(p);
  };
  std::size_t head = 0;
  while (head < queue.size()) {
    PointId p = queue[head++];
    std::vector<std::uint64_t> pp = perp_bits(p);
    for (std::size_t k = 0; k < members.size(); ++k) {
      PointId m = members[k];
      if (pp[m >> 6] >> (m & 63) & 1) {
        add(id(pts_[p] ^ pts_[m]));
      } else {
        const auto& mp = perps[k];
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t c = pp[w] & mp[w] & ~in[w];
          while (c) {
            add(PointId(w * 64 + __builtin_ctzll(c)));
            c &= c - 1;
          }
        }
      }
    }
    members.push_back(p);
    perps.push_back(std::move(pp));
  }
  Quad q;
  q.points = std::move(members);
  std::sort(q.points.begin(), q.points.end());
  return q;
}

Quad Delta::quad_of_dual(Vec xi) const {
  Quad q;
  for (Vec v : cross_image(xi).elements()) {
    PointId p = id(v);
    if (p != kNoPoint) q.points.push_back(p);
  }
  std::sort(q.points.begin(), q.points.end());
  q.dual_vec = xi;
  return q;
}

PointQuadRelation Delta::point_quad_relation(PointId x, const Quad& q) const {
  PointQuadRelation r;
  if (std::binary_search(q.points.begin(), q.points.end(), x)) {
    r.kind = PointQuadKind::Contained;
    return r;
  }
  Vec X = pts_[x];
  for (PointId p : q.points)
    if (is_point(X ^ pts_[p])) r.meet.push_back(p);
  r.kind = r.meet.empty() ? PointQuadKind::Opposite : PointQuadKind::Neighboring;
  return r;
}

Vec Delta::quad_dual_point(const Quad& q, std::uint64_t seed, int pairs) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, q.points.size() - 1);
  Vec tag = 0;
  int found = 0;
  while (found < pairs) {
    PointId a = q.points[pick(rng)], b = q.points[pick(rng)];
    if (a == b || collinear(a, b)) continue;
    Vec t = albert_cross(pts_[a], pts_[b]);
    if (found == 0)
      tag = t;
    else if (t != tag)
      throw GeometryError("NotConstant");
    ++found;
  }
  return tag;
}

}  // namespace e6

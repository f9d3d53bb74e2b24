#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace e6;
using e6::test::has;

namespace {

std::pair<HId, HId> opposite_pair(const Gamma& g, std::mt19937_64& rng) {
  for (;;) {
    HId p = HId(rng() % g.size()), q = HId(rng() % g.size());
    if (g.relation(p, q).kind == Rel::Opposite) return {p, q};
  }
}

}  // namespace

TEST_CASE("equator: pivots symplectic to q in the symplecta through p") {
  const Gamma& g = test::world().gamma();
  const Equators& eq = test::world().equators();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 3; ++t) {
    auto [p, q] = opposite_pair(g, rng);
    // Oracle: points symplectic to both p and q.
    std::vector<HId> brute;
    for (HId x = 0; x < g.size(); ++x)
      if (g.symplectic(x, p) && g.symplectic(x, q)) brute.push_back(x);
    auto e = eq.equator(p, q);
    CHECK(e.points.size() == 63);
    CHECK(e.points == brute);
    CHECK(eq.equator_by_scan(p, q).points == e.points);
  }
}

TEST_CASE("extended equator is a 255-point section of a 9-space") {
  const Gamma& g = test::world().gamma();
  const Equators& eq = test::world().equators();
  std::mt19937_64 rng(32);
  auto [p, q] = opposite_pair(g, rng);
  auto e = eq.extended_equator(p, q);
  CHECK(e.points.size() == 255);
  Span sp;
  for (HId x : e.points) sp.insert(g.vec(x));
  CHECK(sp.dim() == 9);
  // Every point of the span lying in H is in the extended equator.
  std::vector<HId> in_h;
  for (Vec v : sp.elements())
    if (HId h = g.hid_of_vec(v); h != kNoH) in_h.push_back(h);
  std::sort(in_h.begin(), in_h.end());
  CHECK(in_h == e.points);
  CHECK(has(e.points, p));
  CHECK(has(e.points, q));
}

TEST_CASE("tropic circle: points collinear with at least two equator points") {
  const Gamma& g = test::world().gamma();
  const Equators& eq = test::world().equators();
  std::mt19937_64 rng(33);
  auto [p, q] = opposite_pair(g, rng);
  auto e = eq.extended_equator(p, q);
  std::vector<int> hits(g.size());
  for (HId x : e.points)
    for (HId u : g.neighbours(x)) ++hits[u];
  std::vector<HId> brute;
  for (HId x = 0; x < g.size(); ++x)
    if (hits[x] >= 2 && !has(e.points, x)) brute.push_back(x);
  auto t = eq.tropic_circle(e);
  CHECK(t.points.size() == 2295);
  CHECK(t.points == brute);
  for (int i = 0; i < 20; ++i) {
    HId x = t.points[rng() % t.points.size()];
    auto s = eq.beta(x, e);
    CHECK(s.size() == 15);
    CHECK(eq.beta_inv(s) == x);
  }
}

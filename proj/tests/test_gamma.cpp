#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace e6;
using e6::test::has;

TEST_CASE("Gamma relations from common-neighbour counts") {
  // Oracle: collinear pairs are adjacent; otherwise 15 common neighbours
  // means symplectic, 1 means special, 0 means opposite.
  const Gamma& g = test::world().gamma();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2; ++t) {
    HId x = HId(rng() % g.size());
    std::vector<std::uint8_t> nx(g.size()), cnt(g.size());
    for (HId u : g.neighbours(x)) nx[u] = 1;
    for (HId u : g.neighbours(x))
      for (HId v : g.neighbours(u)) ++cnt[v];
    std::size_t tally[4] = {};
    int mismatch = 0;
    for (HId y = 0; y < g.size(); ++y) {
      if (y == x) continue;
      Rel want = nx[y] ? Rel::Collinear
                 : cnt[y] == 15 ? Rel::Symplectic
                 : cnt[y] == 1  ? Rel::Special
                 : cnt[y] == 0  ? Rel::Opposite
                                : Rel::Equal;
      REQUIRE(want != Rel::Equal);
      mismatch += g.relation(x, y).kind != want;
      ++tally[want == Rel::Collinear ? 0 : want == Rel::Symplectic ? 1 : want == Rel::Special ? 2 : 3];
    }
    CHECK(mismatch == 0);
    CHECK(tally[0] == 270);
    CHECK(tally[1] == 2016);
    CHECK(tally[2] == 34560);
    CHECK(tally[3] == 32768);
    auto c = g.census(x);
    CHECK(c == std::array<std::size_t, 4>{270, 2016, 34560, 32768});
  }
}

TEST_CASE("Gamma is the trace-zero section and its lines are Delta-lines") {
  const Gamma& g = test::world().gamma();
  CHECK(g.size() == 69615);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    HId x = HId(rng() % g.size());
    CHECK(albert_trace(g.vec(x)) == 0);
    HId y = g.neighbours(x)[rng() % kGammaDegree];
    HId z = g.third(x, y);
    REQUIRE(z != kNoH);
    CHECK(g.collinear(x, z));
    CHECK(g.collinear(y, z));
  }
}

TEST_CASE("symplecta are projective 5-spaces inside H") {
  const Gamma& g = test::world().gamma();
  CHECK(g.symplecton_count() == 69615);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto& s = g.symplecton(std::uint32_t(rng() % g.symplecton_count()));
    Span sp;
    for (Vec b : s.basis) sp.insert(b);
    CHECK(sp.dim() == 6);
    std::vector<HId> pts;
    for (Vec v : sp.elements()) pts.push_back(g.hid_of_vec(v));
    std::sort(pts.begin(), pts.end());
    CHECK(std::find(pts.begin(), pts.end(), kNoH) == pts.end());
    CHECK(std::equal(pts.begin(), pts.end(), s.points.begin(), s.points.end()));
  }
}

TEST_CASE("Gamma-lines lie in seven symplecta, hyperbolic lines in one") {
  const Gamma& g = test::world().gamma();
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    HId x = HId(rng() % g.size());
    HId y = g.neighbours(x)[rng() % kGammaDegree];
    int n = 0;
    for (auto s : g.symplecta_through(x)) n += g.in_symplecton(y, s);
    CHECK(n == 7);
  }
  int found = 0;
  while (found < 20) {
    HId x = HId(rng() % g.size()), y = HId(rng() % g.size());
    if (!g.symplectic(x, y)) continue;
    int n = 0;
    for (auto s : g.symplecta_through(x)) n += g.in_symplecton(y, s);
    CHECK(n == 1);
    ++found;
  }
}

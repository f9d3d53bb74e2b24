#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace e6;
using e6::test::has;

TEST_CASE("new points are the extended equators") {
  const Synth& s = test::world().synth();
  CHECK(s.ordinary_count() == 69615);
  CHECK(s.catalog().size() == 69888);
  CHECK(s.size() == test::world().delta().size());
  // Each extended equator is determined by any opposite pair in it.
  const Gamma& g = s.gamma();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    EpsId e = EpsId(rng() % s.catalog().size());
    auto pts = s.points_of(e);
    REQUIRE(pts.size() == 255);
    for (;;) {
      HId a = pts[rng() % 255], b = pts[rng() % 255];
      if (g.relation(a, b).kind != Rel::Opposite) continue;
      CHECK(s.eps_of_pair(a, b) == e);
      break;
    }
  }
}

TEST_CASE("every line has three pairwise collinear points") {
  const Synth& s = test::world().synth();
  std::mt19937_64 rng(42);
  for (int t = 0; t < 4; ++t) {
    SId a = t % 2 ? s.of_eps(EpsId(rng() % s.catalog().size())) : SId(rng() % s.ordinary_count());
    auto lines = s.lines_through(a);
    CHECK(lines.size() == (s.is_new(a) ? 2295u : 135u + 1008u + 1152u));
    std::set<SId> seen;
    for (const auto& l : lines) {
      CHECK(has(l.pts, a));
      CHECK(l.pts[0] < l.pts[1]);
      CHECK(l.pts[1] < l.pts[2]);
      for (SId b : l.pts)
        if (b != a) {
          CHECK(s.collinear(a, b));
          CHECK(seen.insert(b).second);  // lines through a share only a
        }
    }
  }
}

TEST_CASE("point quads have 527 points and polarity is an involution") {
  const Synth& s = test::world().synth();
  std::mt19937_64 rng(43);
  for (int t = 0; t < 6; ++t) {
    SId a = SId(rng() % s.size());
    auto q = s.quad(a);
    CHECK(q.size() == 527);
    CHECK(s.quad_tag(q) == a);
    Element e{Sort::Point, {a}};
    Element th = s.theta(e);
    CHECK(th.sort == Sort::Quad);
    CHECK(s.theta(th) == e);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace e6;
using e6::test::has;

TEST_CASE("tangent quad meets H in the point-perp") {
  const Recognition& r = test::world().recognition();
  const Gamma& g = test::world().gamma();
  std::mt19937_64 rng(51);
  for (int t = 0; t < 5; ++t) {
    HId x = HId(rng() % g.size());
    std::vector<HId> perp{x};
    for (HId u : g.neighbours(x)) perp.push_back(u);
    std::sort(perp.begin(), perp.end());
    Quad q = r.tangent_quad(x);
    CHECK(q.points.size() == 527);
    CHECK(r.h_part(q) == perp);
    auto c = r.classify_quad(q);
    CHECK(c.kind == QuadKind::Tangent);
    CHECK(c.point == x);
  }
}

TEST_CASE("secant quad meets H in the extended equator") {
  const Recognition& r = test::world().recognition();
  const Gamma& g = test::world().gamma();
  const Equators& eq = test::world().equators();
  std::mt19937_64 rng(52);
  int done = 0;
  while (done < 3) {
    HId x = HId(rng() % g.size()), y = HId(rng() % g.size());
    if (g.relation(x, y).kind != Rel::Opposite) continue;
    Quad q = r.secant_quad(x, y);
    CHECK(q.points.size() == 527);
    CHECK(r.h_part(q) == eq.extended_equator(x, y).points);
    CHECK(r.classify_quad(q).kind == QuadKind::Secant);
    ++done;
  }
}

TEST_CASE("isomorphism table is a bijection onto Delta") {
  const auto& iso = test::world().iso();
  const Delta& d = test::world().delta();
  REQUIRE(iso.size() == d.size());
  std::vector<std::uint8_t> hit(d.size());
  for (PointId p : iso) {
    REQUIRE(p < d.size());
    CHECK_FALSE(hit[p]);
    hit[p] = 1;
  }
  const Gamma& g = test::world().gamma();
  for (HId x = 0; x < g.size(); x += 101) CHECK(iso[x] == g.did(x));
}

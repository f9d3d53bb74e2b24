#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e6/cache.hpp"
#include "support.hpp"

using namespace e6;
using e6::test::has;

TEST_CASE("point count matches the Gaussian binomial closed form") {
  const Delta& d = test::world().delta();
  // [27 choose 1] points of the E6,1 geometry over GF(2): (2^12-1)(2^9-1)/(2^4-1)
  CHECK(d.size() == (4095u * 511u) / 15u);
  CHECK(d.size() == 139503);
  std::size_t tz = 0;
  for (Vec v : d.table()) tz += albert_trace(v) == 0;
  CHECK(tz == 273u * 255u);
}

TEST_CASE("table holds exactly the nonzero vectors with vanishing sharp") {
  const Delta& d = test::world().delta();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200000; ++i) {
    Vec v = Vec(rng()) & kMask;
    REQUIRE(d.is_point(v) == is_rank_one(v));
  }
  for (PointId p = 0; p < d.size(); p += 97) {
    REQUIRE(is_rank_one(d.vec(p)));
    REQUIRE(d.id(d.vec(p)) == p);
  }
  CHECK(std::is_sorted(d.table().begin(), d.table().end()));
}

TEST_CASE("perp of a point by brute force") {
  const Delta& d = test::world().delta();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 3; ++t) {
    PointId x = PointId(rng() % d.size());
    std::vector<PointId> brute;
    for (PointId y = 0; y < d.size(); ++y)
      if (y != x && is_rank_one(d.vec(x) ^ d.vec(y))) brute.push_back(y);
    CHECK(brute.size() == 4590);
    CHECK(d.perp(x) == brute);
  }
}

TEST_CASE("quads are hyperbolic quadrics of 527 points") {
  const Delta& d = test::world().delta();
  Quad q = d.quad_through(d.id(kE1), d.id(kE2));
  CHECK(q.points.size() == 31u * 17u);  // (q^5 - 1)(q^4 + 1)/(q - 1)
  // Any two non-collinear points of the quad regenerate it.
  std::mt19937_64 rng(1);
  int tries = 0;
  while (tries < 5) {
    PointId a = q.points[rng() % q.points.size()], b = q.points[rng() % q.points.size()];
    if (a == b || d.collinear(a, b)) continue;
    CHECK(d.quad_through(a, b).points == q.points);
    ++tries;
  }
}

TEST_CASE("point table survives a cache round trip") {
  const Delta& d = test::world().delta();
  auto f = std::filesystem::temp_directory_path() / "e6f4_test_points.bin";
  write_words(f, d.table(), 1);
  std::vector<Vec> back;
  REQUIRE(read_words(f, 1, back));
  CHECK(back == d.table());
  Delta again = Delta::from_table(back);
  CHECK(again.id(d.vec(1234)) == 1234);
  std::filesystem::remove(f);
}

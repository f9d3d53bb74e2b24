#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6/thin.hpp"

using namespace e6;

TEST_CASE("quadrangle from the elliptic quadric in PG(5,2)") {
  // Oracle: singular points of x0x1 + x2x3 + x4^2 + x4x5 + x5^2.
  auto Q = [](int v) {
    auto b = [&](int i) { return (v >> i) & 1; };
    return (b(0) & b(1)) ^ (b(2) & b(3)) ^ b(4) ^ (b(4) & b(5)) ^ b(5);
  };
  int singular = 0;
  for (int v = 1; v < 64; ++v) singular += Q(v) == 0;
  GQ24 gq = build_gq24();
  CHECK(gq.coords.size() == std::size_t(singular));
  CHECK(singular == 27);
  CHECK(gq.lines.size() == 45);
  for (const auto& l : gq.lines) CHECK((gq.coords[l[0]] ^ gq.coords[l[1]]) == gq.coords[l[2]]);
  for (std::size_t a = 0; a < gq.coords.size(); ++a) {
    int nb = 0;
    for (std::size_t b = 0; b < gq.coords.size(); ++b) nb += gq.collinear(int(a), int(b));
    CHECK(nb == 10);  // s(t+1) with s = 2, t = 4
  }
}

TEST_CASE("thin E6 element counts") {
  ThinE6 t(build_gq24());
  CHECK(t.counts() == std::array<std::size_t, 6>{27, 72, 216, 720, 216, 27});
  // Two points of the thin geometry are collinear iff non-collinear in the quadrangle.
  for (int a = 0; a < 27; ++a) {
    int n = 0;
    for (int b = 0; b < 27; ++b) n += t.collinear(a, b);
    CHECK(n == 16);
  }
}

TEST_CASE("full thin verification passes") {
  Report r = verify_thin(ThinE6(build_gq24()));
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.ok);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "e6/algebra.hpp"
#include "e6/gf2.hpp"

using namespace e6;

namespace {

// Hyperbolic form alpha*beta + u.v read straight off the bit layout.
int norm_oracle(Oct a) {
  int al = a & 1, be = (a >> 1) & 1;
  return (al & be) ^ __builtin_parity(unsigned((a >> 2) & 7 & (a >> 5)));
}

// Freudenthal cubic with signs dropped: abc + a n(x) + b n(y) + c n(z) + t(xyz).
int cubic_oracle(Vec X) {
  int a = diag_a(X), b = diag_b(X), c = diag_c(X);
  Oct x = off_x(X), y = off_y(X), z = off_z(X);
  return (a & b & c) ^ (a & norm_oracle(x)) ^ (b & norm_oracle(y)) ^ (c & norm_oracle(z)) ^
         oct_trace(oct_mul(oct_mul(x, y), z));
}

int polar(Oct a, Oct b) { return norm_oracle(a ^ b) ^ norm_oracle(a) ^ norm_oracle(b); }

int trace_oracle(Vec X, Vec Y) {
  return (diag_a(X) & diag_a(Y)) ^ (diag_b(X) & diag_b(Y)) ^ (diag_c(X) & diag_c(Y)) ^
         polar(off_x(X), off_x(Y)) ^ polar(off_y(X), off_y(Y)) ^ polar(off_z(X), off_z(Y));
}

Vec rand_vec(std::mt19937_64& rng) { return Vec(rng()) & kMask; }

}  // namespace

TEST_CASE("octonion norm is the hyperbolic form and composes") {
  int zeros = 0;
  for (int a = 0; a < 256; ++a) {
    CHECK(oct_norm(Oct(a)) == norm_oracle(Oct(a)));
    zeros += norm_oracle(Oct(a)) == 0;
  }
  CHECK(zeros == 128 + 16 - 8);  // q^7 + q^4 - q^3 zeros of a split form in 8 variables
  int bad = 0;
  for (int a = 0; a < 256; ++a)
    for (int b = 0; b < 256; ++b)
      bad += norm_oracle(oct_mul(Oct(a), Oct(b))) != (norm_oracle(Oct(a)) & norm_oracle(Oct(b)));
  CHECK(bad == 0);
}

TEST_CASE("octonions satisfy the Moufang identity and are not associative") {
  std::mt19937_64 rng(7);
  int moufang = 0, assoc = 0;
  for (int i = 0; i < 200000; ++i) {
    Oct x = Oct(rng()), y = Oct(rng()), z = Oct(rng());
    // z(x(zy)) = ((zx)z)y
    moufang += oct_mul(z, oct_mul(x, oct_mul(z, y))) != oct_mul(oct_mul(oct_mul(z, x), z), y);
    assoc += oct_mul(oct_mul(x, y), z) != oct_mul(x, oct_mul(y, z));
  }
  CHECK(moufang == 0);
  CHECK(assoc > 0);
}

TEST_CASE("conjugation fixes the scalars and reverses products") {
  for (int a = 0; a < 256; ++a) {
    Oct x = Oct(a);
    CHECK(oct_mul(x, oct_conj(x)) == (norm_oracle(x) ? kOctOne : 0));
    CHECK(Oct(x ^ oct_conj(x)) == (oct_trace(x) ? kOctOne : 0));
  }
  CHECK(oct_mul(kOctOne, 0x5C) == 0x5C);
}

TEST_CASE("Albert norm and trace form match the Freudenthal formulas") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100000; ++i) {
    Vec X = rand_vec(rng), Y = rand_vec(rng);
    REQUIRE(albert_norm(X) == cubic_oracle(X));
    REQUIRE(albert_trace_form(X, Y) == trace_oracle(X, Y));
  }
  CHECK(albert_norm(kIdentity) == 1);
  CHECK(albert_trace(kIdentity) == 1);
}

TEST_CASE("sharp is the quadratic map polar to the norm") {
  // N(X + Y) = N(X) + T(X#, Y) + T(X, Y#) + N(Y) and X## = N(X) X.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100000; ++i) {
    Vec X = rand_vec(rng), Y = rand_vec(rng);
    Vec Xs = albert_adjoint(X), Ys = albert_adjoint(Y);
    REQUIRE((cubic_oracle(X ^ Y) ^ cubic_oracle(X) ^ cubic_oracle(Y)) ==
            (trace_oracle(Xs, Y) ^ trace_oracle(X, Ys)));
    REQUIRE(albert_adjoint(Xs) == (cubic_oracle(X) ? X : 0));
    REQUIRE(albert_cross(X, Y) == (albert_adjoint(X ^ Y) ^ Xs ^ Ys));
  }
}

TEST_CASE("rank-one elements of a 2x2 block") {
  // [[1, z], [conj z, n(z)]] has vanishing sharp for every z.
  for (int z = 0; z < 256; ++z) {
    Vec X = make_vec(1, norm_oracle(Oct(z)), 0, 0, 0, Oct(z));
    CHECK(is_rank_one(X));
    CHECK(albert_rank(X) == 1);
  }
  CHECK(albert_rank(0) == 0);
  CHECK(albert_rank(kE1 | kE2) == 2);
  CHECK(albert_rank(kIdentity) == 3);
}

TEST_CASE("span dimension agrees with closure under addition") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Span s;
    std::set<Vec> closure{0};
    int k = 1 + int(rng() % 8);
    for (int i = 0; i < k; ++i) {
      Vec v = (i && rng() % 3 == 0) ? *std::next(closure.begin(), rng() % closure.size())
                                    : rand_vec(rng);
      s.insert(v);
      std::set<Vec> next = closure;
      for (Vec c : closure) next.insert(c ^ v);
      closure = std::move(next);
    }
    CHECK(closure.size() == (std::size_t{1} << s.dim()));
    auto el = s.elements();
    CHECK(std::set<Vec>(el.begin(), el.end()).size() == closure.size() - 1);
    for (Vec c : closure) CHECK(s.contains(c));
  }
}

TEST_CASE("cross image of a rank-one element") {
  // Y -> E1 x Y has image of dimension 10: the quad spanned through E1's dual.
  Span im = cross_image(kE1);
  int dim = 0;
  Span brute;
  for (int i = 0; i < kDim; ++i) brute.insert(albert_cross(kE1, Vec(1) << i));
  CHECK(im.dim() == brute.dim());
  for (Vec v : brute.basis()) CHECK(im.contains(v));
  dim = im.dim();
  CHECK(dim == 10);
}

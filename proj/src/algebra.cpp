#include "e6/algebra.hpp"

#include <array>

namespace e6 {
namespace {

int dot3(int a, int b) { return __builtin_parity(unsigned(a & b)); }

int cross3(int a, int b) {
  int a1 = a & 1, a2 = (a >> 1) & 1, a3 = (a >> 2) & 1;
  int b1 = b & 1, b2 = (b >> 1) & 1, b3 = (b >> 2) & 1;
  return ((a2 & b3) ^ (a3 & b2)) | (((a3 & b1) ^ (a1 & b3)) << 1) |
         (((a1 & b2) ^ (a2 & b1)) << 2);
}

Oct zorn_mul(Oct p, Oct q) {
  int a1 = p & 1, b1 = (p >> 1) & 1, u1 = (p >> 2) & 7, v1 = (p >> 5) & 7;
  int a2 = q & 1, b2 = (q >> 1) & 1, u2 = (q >> 2) & 7, v2 = (q >> 5) & 7;
  int al = (a1 & a2) ^ dot3(u1, v2);
  int be = (b1 & b2) ^ dot3(v1, u2);
  int u = (a1 ? u2 : 0) ^ (b2 ? u1 : 0) ^ cross3(v1, v2);
  int v = (b1 ? v2 : 0) ^ (a2 ? v1 : 0) ^ cross3(u1, u2);
  return Oct(al | be << 1 | u << 2 | v << 5);
}

struct Tables {
  std::array<std::array<Oct, 256>, 256> mul;
  std::array<std::uint8_t, 256> norm;
  Tables() {
    for (int i = 0; i < 256; ++i) {
      for (int j = 0; j < 256; ++j) mul[i][j] = zorn_mul(Oct(i), Oct(j));
      norm[i] = std::uint8_t((i & 1 & (i >> 1)) ^ dot3((i >> 2) & 7, (i >> 5) & 7));
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

inline Oct conj(Oct p) { return Oct((p & 0xFC) | ((p & 1) << 1) | ((p >> 1) & 1)); }
inline int tr(Oct p) { return (p ^ (p >> 1)) & 1; }

}  // namespace

Oct oct_mul(Oct a, Oct b) { return tables().mul[a][b]; }
Oct oct_conj(Oct a) { return conj(a); }
int oct_norm(Oct a) { return tables().norm[a]; }
int oct_trace(Oct a) { return tr(a); }
int oct_bilinear(Oct a, Oct b) { return tr(tables().mul[a][conj(b)]); }

// McCrimmon adjoint with all signs dropped:
//   diagonal (bc + n(x), ca + n(y), ab + n(z)),
//   off-diagonal conj(yz) + a x, conj(zx) + b y, conj(xy) + c z.
Vec albert_adjoint(Vec X) {
  const Tables& t = tables();
  int a = diag_a(X), b = diag_b(X), c = diag_c(X);
  Oct x = off_x(X), y = off_y(X), z = off_z(X);
  Oct xs = Oct(conj(t.mul[y][z]) ^ (a ? x : 0));
  Oct ys = Oct(conj(t.mul[z][x]) ^ (b ? y : 0));
  Oct zs = Oct(conj(t.mul[x][y]) ^ (c ? z : 0));
  return make_vec((b & c) ^ t.norm[x], (c & a) ^ t.norm[y], (a & b) ^ t.norm[z], xs, ys, zs);
}

Vec albert_cross(Vec X, Vec Y) {
  return albert_adjoint(X ^ Y) ^ albert_adjoint(X) ^ albert_adjoint(Y);
}

int albert_norm(Vec X) {
  const Tables& t = tables();
  int a = diag_a(X), b = diag_b(X), c = diag_c(X);
  Oct x = off_x(X), y = off_y(X), z = off_z(X);
  return (a & b & c) ^ (a & t.norm[x]) ^ (b & t.norm[y]) ^ (c & t.norm[z]) ^
         tr(t.mul[t.mul[x][y]][z]);
}

int albert_trace(Vec X) { return (X ^ (X >> 1) ^ (X >> 2)) & 1; }

int albert_trace_form(Vec X, Vec Y) {
  int d = __builtin_parity((X & Y) & 7u);
  return d ^ oct_bilinear(off_x(X), off_x(Y)) ^ oct_bilinear(off_y(X), off_y(Y)) ^
         oct_bilinear(off_z(X), off_z(Y));
}

int albert_rank(Vec X) {
  if (X == 0) return 0;
  if (albert_adjoint(X) == 0) return 1;
  return albert_norm(X) ? 3 : 2;
}

}  // namespace e6

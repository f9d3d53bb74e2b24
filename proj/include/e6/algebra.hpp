#pragma once
// Split octonions (Zorn vector matrices) and the split Albert algebra over GF(2).
//
// Oct bit layout: bit 0 alpha, bit 1 beta, bits 2-4 u, bits 5-7 v.
// Albert bit layout: bits 0-2 diagonal a,b,c; bits 3-10 x (slot 2,3),
// bits 11-18 y (slot 3,1), bits 19-26 z (slot 1,2).

#include <cstdint>

namespace e6 {

using Oct = std::uint8_t;
using Vec = std::uint32_t;  // 27-bit Albert element

constexpr int kDim = 27;
constexpr Vec kMask = (Vec{1} << kDim) - 1;

Oct oct_mul(Oct a, Oct b);
Oct oct_conj(Oct a);
int oct_norm(Oct a);
int oct_trace(Oct a);
// polar form of the norm: n(a+b) + n(a) + n(b) = t(a * conj b)
int oct_bilinear(Oct a, Oct b);

constexpr Oct kOctOne = 0x03;

inline Vec make_vec(int a, int b, int c, Oct x, Oct y, Oct z) {
  return Vec(a & 1) | Vec(b & 1) << 1 | Vec(c & 1) << 2 | Vec(x) << 3 | Vec(y) << 11 |
         Vec(z) << 19;
}
inline int diag_a(Vec v) { return v & 1; }
inline int diag_b(Vec v) { return (v >> 1) & 1; }
inline int diag_c(Vec v) { return (v >> 2) & 1; }
inline Oct off_x(Vec v) { return Oct(v >> 3); }
inline Oct off_y(Vec v) { return Oct(v >> 11); }
inline Oct off_z(Vec v) { return Oct(v >> 19); }

constexpr Vec kE1 = 1, kE2 = 2, kE3 = 4, kIdentity = 7;

Vec albert_adjoint(Vec X);  // X^#
Vec albert_cross(Vec X, Vec Y);
int albert_norm(Vec X);
int albert_trace(Vec X);
int albert_trace_form(Vec X, Vec Y);
int albert_rank(Vec X);

inline bool is_rank_one(Vec X) { return X != 0 && albert_adjoint(X) == 0; }

}  // namespace e6

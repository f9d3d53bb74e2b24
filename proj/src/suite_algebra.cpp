#include <array>
#include <string>

#include "e6/suites.hpp"

namespace e6 {

namespace {

std::string nfail(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures of " + std::to_string(of);
}

Vec cyc(Vec X) {
  return make_vec(diag_b(X), diag_c(X), diag_a(X), off_y(X), off_z(X), off_x(X));
}
Vec swap12(Vec X) {
  return make_vec(diag_b(X), diag_a(X), diag_c(X), oct_conj(off_y(X)), oct_conj(off_x(X)),
                  oct_conj(off_z(X)));
}

}  // namespace

Report suite_algebra(World& w) {
  Report r;
  r.suite = "algebra";
  r.seed = w.options().seed;
  auto rng = suite_rng(r.seed, r.suite);
  const std::size_t n_adj = w.options().samples > 0 ? std::size_t(w.options().samples) : 1000000;

  {
    std::size_t bad = 0;
    for (int a = 0; a < 256; ++a)
      bad += oct_mul(kOctOne, Oct(a)) != a || oct_mul(Oct(a), kOctOne) != a;
    r.add("oct.unit", "1 x = x 1 = x for all 256 octonions", bad == 0, nfail(bad, 256));
  }
  {
    std::size_t bad = 0, alt = 0, anti = 0;
    for (int a = 0; a < 256; ++a)
      for (int b = 0; b < 256; ++b) {
        Oct A = Oct(a), B = Oct(b);
        Oct ab = oct_mul(A, B);
        bad += oct_norm(ab) != (oct_norm(A) & oct_norm(B));
        alt += oct_mul(A, oct_mul(A, B)) != oct_mul(oct_mul(A, A), B) ||
               oct_mul(ab, B) != oct_mul(A, oct_mul(B, B));
        anti += oct_conj(ab) != oct_mul(oct_conj(B), oct_conj(A));
      }
    r.counts["oct_pairs"] = 65536;
    r.add("oct.norm_multiplicative", "n(ab) = n(a) n(b), all 65536 pairs", bad == 0,
          nfail(bad, 65536));
    r.add("oct.alternative", "a(ab) = (aa)b and (ab)b = a(bb), all pairs", alt == 0,
          nfail(alt, 65536));
    r.add("oct.conj_antihom", "conj(ab) = conj(b) conj(a), all pairs", anti == 0,
          nfail(anti, 65536));
  }
  {
    std::size_t bad = 0, zeros = 0;
    for (int a = 0; a < 256; ++a) {
      Oct A = Oct(a);
      Oct t1 = oct_trace(A) ? kOctOne : 0;
      Oct n1 = oct_norm(A) ? kOctOne : 0;
      bad += oct_conj(oct_conj(A)) != A || Oct(A ^ oct_conj(A)) != t1 ||
             oct_mul(A, oct_conj(A)) != n1;
      zeros += oct_norm(A) == 0;
    }
    bad += oct_conj(kOctOne) != kOctOne;
    bad += oct_conj(Oct(0x01 | 0x1C)) != Oct(0x02 | 0x1C);
    r.add("oct.conjugation", "conj is an involution, a + conj a = t(a) 1, a conj a = n(a) 1",
          bad == 0, nfail(bad, 256));
    // Zeros of a hyperbolic form in 2m = 8 variables: 2^(2m-1) + 2^(m-1).
    r.counts["oct_norm_zeros"] = zeros;
    r.add("oct.norm_zeros", "136 octonions of norm 0 (hyperbolic form in 8 variables)",
          zeros == 136 && oct_norm(0) == 0 && oct_norm(kOctOne) == 1, std::to_string(zeros));
    Oct e = 0x01;
    r.add("oct.idempotent", "e e = e for e = (1,0;0,0)", oct_mul(e, e) == e);
  }
  {
    bool ok = albert_adjoint(kE1) == 0 && albert_adjoint(kE1 | kE2) == kE3 &&
              albert_norm(kIdentity) == 1 && albert_norm(kE1 | kE2) == 0 &&
              albert_cross(kE1, kE2) == kE3 && albert_rank(0) == 0 && albert_rank(kE1) == 1 &&
              albert_rank(kE1 | kE2) == 2 && albert_rank(kIdentity) == 3 &&
              albert_trace_form(kE1, kE1) == 1 && albert_trace_form(kE1, kE2) == 0;
    r.add("albert.basics", "diagonal sharps, norms, cross E1 x E2 = E3, ranks 0..3, trace form",
          ok);
  }
  {
    std::size_t bad = 0, n = 0;
    auto test = [&](Vec X) {
      ++n;
      Vec s = albert_adjoint(albert_adjoint(X));
      bad += s != (albert_norm(X) ? X : 0);
    };
    for (int i = 0; i < 27; ++i) {
      test(Vec{1} << i);
      for (int j = i + 1; j < 27; ++j) {
        test(Vec{1} << i | Vec{1} << j);
        for (int k = j + 1; k < 27; ++k) test(Vec{1} << i | Vec{1} << j | Vec{1} << k);
      }
    }
    std::size_t basis_n = n;
    for (std::size_t i = 0; i < n_adj; ++i) test(Vec(rng()) & kMask);
    r.counts["adjoint_samples"] = n_adj;
    r.add("albert.adjoint_identity", "X## = N(X) X on all basis sums of weight <= 3 and a seeded sample",
          bad == 0, nfail(bad, n) + " (" + std::to_string(basis_n) + " basis sums)");
  }
  {
    const std::size_t m = 100000;
    std::size_t bil = 0, self = 0, sym = 0, lin = 0, tr1 = 0, perm = 0, rk = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Vec X = Vec(rng()) & kMask, Y = Vec(rng()) & kMask, Z = Vec(rng()) & kMask;
      bil += albert_cross(X ^ Y, Z) != (albert_cross(X, Z) ^ albert_cross(Y, Z));
      self += albert_cross(X, X) != 0;
      sym += albert_trace_form(X, Y) != albert_trace_form(Y, X);
      tr1 += albert_trace_form(X, kIdentity) != albert_trace(X);
      int lhs = albert_norm(X ^ Y) ^ albert_norm(X) ^ albert_norm(Y);
      int rhs = albert_trace_form(albert_adjoint(X), Y) ^ albert_trace_form(X, albert_adjoint(Y));
      lin += lhs != rhs;
      perm += albert_norm(cyc(X)) != albert_norm(X) || albert_norm(swap12(X)) != albert_norm(X);
      int want = X == 0 ? 0 : albert_adjoint(X) == 0 ? 1 : albert_norm(X) == 0 ? 2 : 3;
      rk += albert_rank(X) != want;
    }
    r.add("albert.cross_bilinear", "(X+Y) x Z = X x Z + Y x Z and X x X = 0, sampled",
          bil == 0 && self == 0, nfail(bil + self, 2 * m));
    r.add("albert.trace_form", "T symmetric and T(X,1) = trace X, sampled", sym == 0 && tr1 == 0,
          nfail(sym + tr1, 2 * m));
    r.add("albert.linearized_norm", "N(X+Y) + N(X) + N(Y) = T(X#,Y) + T(X,Y#), sampled", lin == 0,
          nfail(lin, m));
    r.add("albert.norm_symmetry", "N invariant under cyclic and conjugating slot permutations",
          perm == 0, nfail(perm, m));
    r.add("albert.rank", "rank strata agree with sharp and norm, sampled", rk == 0, nfail(rk, m));
  }
  return r;
}

}  // namespace e6

#include "e6/gf2.hpp"

namespace e6 {

Span cross_image(Vec X) {
  Span s;
  for (int i = 0; i < kDim; ++i) s.insert(albert_cross(X, Vec{1} << i));
  return s;
}

// Gaussian elimination on pairs (image | combination mask).
std::vector<Vec> cross_kernel_in(Vec X, const std::vector<Vec>& gens) {
  const std::size_t n = gens.size();
  std::vector<std::pair<Vec, std::uint64_t>> rows;
  std::vector<std::uint64_t> kernel_masks;
  for (std::size_t i = 0; i < n; ++i) {
    Vec img = albert_cross(X, gens[i]);
    std::uint64_t mask = std::uint64_t{1} << i;
    for (auto& [r, m] : rows) {
      int lead = 31 - __builtin_clz(r);
      if (img >> lead & 1) {
        img ^= r;
        mask ^= m;
      }
    }
    if (img)
      rows.emplace_back(img, mask);
    else
      kernel_masks.push_back(mask);
  }
  // each row is free of the leading bits of earlier rows, so a single pass
  // in insertion order reduces fully.
  std::vector<Vec> out;
  std::size_t k = kernel_masks.size();
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << k); ++c) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (c >> j & 1) mask ^= kernel_masks[j];
    Vec v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v ^= gens[i];
    if (v) out.push_back(v);
  }
  return out;
}

Span intersect(const Span& a, const Span& b) {
  // Zassenhaus: rows (u | u) for u in a, (w | 0) for w in b, over 54 bits.
  std::vector<std::uint64_t> rows;
  for (Vec u : a.basis()) rows.push_back(std::uint64_t(u) << 27 | u);
  for (Vec w : b.basis()) rows.push_back(std::uint64_t(w) << 27);
  std::vector<std::uint64_t> ech;
  for (std::uint64_t r : rows) {
    for (std::uint64_t e : ech) {
      int lead = 63 - __builtin_clzll(e);
      if (r >> lead & 1) r ^= e;
    }
    if (r) {
      ech.push_back(r);
      // keep ech sorted by lead descending so one pass reduces
      for (std::size_t i = ech.size() - 1; i > 0; --i) {
        if (__builtin_clzll(ech[i]) < __builtin_clzll(ech[i - 1]))
          std::swap(ech[i], ech[i - 1]);
        else
          break;
      }
    }
  }
  Span out;
  for (std::uint64_t e : ech)
    if ((e >> 27) == 0) out.insert(Vec(e & kMask));
  return out;
}

}  // namespace e6

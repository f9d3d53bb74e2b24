#pragma once
// Small dense linear algebra over GF(2) on 27-bit words.

#include <array>
#include <cstdint>
#include <vector>

#include "e6/algebra.hpp"

namespace e6 {

// Echelon basis keyed by leading bit. Insertion reduces fully, so two bases
// spanning the same space end up with the same reduced rows after normalize().
class Span {
 public:
  Span() { rows_.fill(0); }

  // Returns true if v enlarged the span.
  bool insert(Vec v) {
    v = reduce(v);
    if (!v) return false;
    int lead = 31 - __builtin_clz(v);
    rows_[lead] = v;
    ++dim_;
    return true;
  }
  Vec reduce(Vec v) const {
    while (v) {
      int lead = 31 - __builtin_clz(v);
      if (!rows_[lead]) return v;
      v ^= rows_[lead];
    }
    return 0;
  }
  bool contains(Vec v) const { return reduce(v) == 0; }
  int dim() const { return dim_; }

  // Reduced row echelon basis, ascending by leading bit.
  std::vector<Vec> basis() const {
    std::array<Vec, 32> r = rows_;
    for (int i = 0; i < 32; ++i) {
      if (!r[i]) continue;
      for (int j = i + 1; j < 32; ++j)
        if (r[j] && (r[j] >> i & 1)) r[j] ^= r[i];
    }
    std::vector<Vec> out;
    for (int i = 0; i < 32; ++i)
      if (r[i]) out.push_back(r[i]);
    return out;
  }

  // All nonzero vectors of the span (2^dim - 1 of them), Gray-code order.
  std::vector<Vec> elements() const {
    std::vector<Vec> b = basis();
    std::vector<Vec> out;
    out.reserve((std::size_t{1} << b.size()) - 1);
    Vec cur = 0;
    for (std::uint32_t i = 1; i < (std::uint32_t{1} << b.size()); ++i) {
      cur ^= b[__builtin_ctz(i)];
      out.push_back(cur);
    }
    return out;
  }

 private:
  std::array<Vec, 32> rows_;
  int dim_ = 0;
};

// Image of the linear map Y -> X x Y.
Span cross_image(Vec X);

// Kernel of Y -> X x Y restricted to span(gens): returns nonzero combinations.
std::vector<Vec> cross_kernel_in(Vec X, const std::vector<Vec>& gens);

Span intersect(const Span& a, const Span& b);

}  // namespace e6

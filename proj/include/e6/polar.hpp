#pragma once
// Finite point-line spaces with three points per line, given by a local
// collinearity relation and a third-point function. Used to check polar
// space axioms and to list maximal singular subspaces.

#include <cstdint>
#include <array>
#include <functional>
#include <vector>

namespace e6 {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::size_t(__builtin_ctzll(w_[i])));
    return -1;
  }
  std::vector<int> items() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(int(i * 64 + std::size_t(__builtin_ctzll(w))));
        w &= w - 1;
      }
    }
    return out;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct PolarReport {
  std::size_t points = 0;
  std::size_t lines = 0;
  bool lines_full = true;      // every collinear pair has its third point inside
  bool one_or_all = true;      // every point sees 1 or all points of every line
  bool nondegenerate = true;   // no point collinear with all others
  std::size_t violations = 0;
  bool ok() const { return lines_full && one_or_all && nondegenerate; }
};

class LocalSpace {
 public:
  using Rel = std::function<bool(int, int)>;
  using Third = std::function<int(int, int)>;  // -1 when the third point is outside
  LocalSpace(int n, const Rel& collinear, const Third& third);

  int size() const { return n_; }
  bool collinear(int a, int b) const { return adj_[a].test(b); }
  int third(int a, int b) const { return third_[std::size_t(a) * n_ + b]; }
  const Bits& adj(int a) const { return adj_[a]; }

  PolarReport check() const;
  // Smallest subspace containing the set; empty Bits if a pair is not collinear.
  Bits singular_closure(const Bits& s) const;
  // All maximal singular subspaces.
  std::vector<Bits> maximal_singular() const;
  // Lines as sorted triples.
  std::vector<std::array<int, 3>> lines() const;

 private:
  int n_;
  std::vector<Bits> adj_;
  std::vector<int> third_;
};

// Projective rank of a singular subspace with k points over GF(2): log2(k+1) - 1.
int projective_dim(std::size_t points);

}  // namespace e6

#pragma once
// Binary caches: "E6F4", u32 version, u32 q, u64 count, then records of
// little-endian u32 words (1 per point, 6 per symplecton, 9 per equator).

#include <array>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "e6/algebra.hpp"

namespace e6 {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint32_t kCacheVersion = 1;

void write_words(const std::filesystem::path& file, const std::vector<Vec>& words,
                 std::size_t per_record);
// Empty optional-like result: returns false if the file does not exist.
// Throws CacheError on a bad header or truncated body.
bool read_words(const std::filesystem::path& file, std::size_t per_record,
                std::vector<Vec>& out);

template <std::size_t N>
std::vector<Vec> flatten(const std::vector<std::array<Vec, N>>& recs) {
  std::vector<Vec> w;
  w.reserve(recs.size() * N);
  for (const auto& r : recs) w.insert(w.end(), r.begin(), r.end());
  return w;
}

template <std::size_t N>
std::vector<std::array<Vec, N>> unflatten(const std::vector<Vec>& w) {
  std::vector<std::array<Vec, N>> out(w.size() / N);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < N; ++k) out[i][k] = w[i * N + k];
  return out;
}

}  // namespace e6

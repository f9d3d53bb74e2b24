#include "e6/cache.hpp"

#include <cstring>
#include <fstream>

namespace e6 {

namespace {

void put32(std::ostream& o, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  o.write(reinterpret_cast<const char*>(b), 4);
}

std::uint64_t get_le(const unsigned char* b, int n) {
  std::uint64_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

}  // namespace

void write_words(const std::filesystem::path& file, const std::vector<Vec>& words,
                 std::size_t per_record) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw CacheError("cannot write " + tmp.string());
    o.write("E6F4", 4);
    put32(o, kCacheVersion);
    put32(o, 2);
    std::uint64_t count = words.size() / per_record;
    put32(o, std::uint32_t(count));
    put32(o, std::uint32_t(count >> 32));
    for (Vec w : words) put32(o, w);
    if (!o) throw CacheError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

bool read_words(const std::filesystem::path& file, std::size_t per_record,
                std::vector<Vec>& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  unsigned char h[20];
  if (!in.read(reinterpret_cast<char*>(h), 20) || std::memcmp(h, "E6F4", 4) != 0)
    throw CacheError(file.string() + ": bad magic");
  if (get_le(h + 4, 4) != kCacheVersion) throw CacheError(file.string() + ": version mismatch");
  if (get_le(h + 8, 4) != 2) throw CacheError(file.string() + ": field size is not 2");
  std::uint64_t count = get_le(h + 12, 8);
  std::vector<unsigned char> body(count * per_record * 4);
  if (!in.read(reinterpret_cast<char*>(body.data()), std::streamsize(body.size())))
    throw CacheError(file.string() + ": truncated");
  out.resize(count * per_record);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Vec(get_le(&body[i * 4], 4));
  return true;
}

}  // namespace e6

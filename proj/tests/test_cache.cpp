#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "e6/cache.hpp"

using namespace e6;
namespace fs = std::filesystem;

namespace {

fs::path tmp(const char* name) { return fs::temp_directory_path() / name; }

std::vector<unsigned char> bytes(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("header layout is little-endian") {
  auto f = tmp("e6f4_hdr.bin");
  write_words(f, {0x01020304u, 0x7FFFFFFu, 5u, 6u}, 2);
  auto b = bytes(f);
  REQUIRE(b.size() == 4 + 4 + 4 + 8 + 16);
  CHECK(std::string(b.begin(), b.begin() + 4) == "E6F4");
  CHECK(b[4] == kCacheVersion);
  CHECK(b[8] == 2);   // q
  CHECK(b[12] == 2);  // two records
  CHECK(b[20] == 0x04);
  CHECK(b[23] == 0x01);
  std::vector<Vec> back;
  CHECK(read_words(f, 2, back));
  CHECK(back == std::vector<Vec>{0x01020304u, 0x7FFFFFFu, 5u, 6u});
  fs::remove(f);
}

TEST_CASE("missing file reads as absent") {
  std::vector<Vec> out;
  CHECK_FALSE(read_words(tmp("e6f4_nothing_here.bin"), 1, out));
}

TEST_CASE("bad magic and truncation are rejected") {
  auto f = tmp("e6f4_bad.bin");
  write_words(f, {1, 2, 3}, 1);
  auto b = bytes(f);
  {
    auto c = b;
    c[0] = 'X';
    std::ofstream(f, std::ios::binary).write(reinterpret_cast<char*>(c.data()), c.size());
    std::vector<Vec> out;
    CHECK_THROWS_AS(read_words(f, 1, out), CacheError);
  }
  {
    std::ofstream(f, std::ios::binary).write(reinterpret_cast<char*>(b.data()), b.size() - 2);
    std::vector<Vec> out;
    CHECK_THROWS_AS(read_words(f, 1, out), CacheError);
  }
  fs::remove(f);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli() {
  const char* p = std::getenv("E6F4_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string cache() {
  const char* c = std::getenv("E6F4_CACHE");
  return c ? c : "";
}

int run(const std::string& args) {
  std::string cmd = cli() + " " + args + " -q > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

json load(const fs::path& f) {
  std::ifstream in(f);
  return json::parse(in);
}

// Report with timing fields removed.
json untimed(json j) {
  j.erase("wall_ms");
  j.erase("timings_ms");
  return j;
}

}  // namespace

TEST_CASE("thin runs without a cache and reports the schema") {
  auto out = fs::temp_directory_path() / "e6f4_cli_thin.json";
  CHECK(run("thin --cache-dir '' --json " + out.string()) == 0);
  json j = load(out);
  for (const char* k : {"suite", "seed", "q", "counts", "checks", "wall_ms"}) CHECK(j.contains(k));
  CHECK(j["q"] == 2);
  CHECK(j["suite"] == "thin");
  REQUIRE(j["checks"].size() > 0);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("paper_ref"));
    CHECK(c["status"] == "pass");
  }
  CHECK(j["wall_ms"].get<double>() < 1000.0);
  fs::remove(out);
}

TEST_CASE("same seed gives the same report") {
  auto a = fs::temp_directory_path() / "e6f4_cli_a.json";
  auto b = fs::temp_directory_path() / "e6f4_cli_b.json";
  std::string common = "verify gamma --samples 20 --seed 7 --cache-dir '" + cache() + "' --json ";
  CHECK(run(common + a.string()) == 0);
  CHECK(run(common + b.string()) == 0);
  CHECK(untimed(load(a)) == untimed(load(b)));
  CHECK(load(a)["seed"] == 7);
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("bad arguments exit nonzero") {
  CHECK(run("verify no-such-suite") != 0);
  CHECK(run("") != 0);
}

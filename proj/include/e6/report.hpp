#pragma once
// Check records collected by the verification suites.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace e6 {

struct Check {
  std::string name;
  std::string ref;  // the statement being checked, in words
  bool ok = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<Check> checks;
  double wall_ms = 0;
  std::map<std::string, double> timings_ms;  // excluded from determinism

  Check& add(std::string name, std::string ref, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(ref), ok, std::move(detail)});
    return checks.back();
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.ok;
    return n;
  }
};

}  // namespace e6

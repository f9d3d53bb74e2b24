#include <stdexcept>

#include "e6/suites.hpp"
#include "e6/thin.hpp"

namespace e6 {

std::mt19937_64 suite_rng(std::uint64_t seed, const std::string& suite) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a, stable across platforms
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(h),
                    std::uint32_t(h >> 32)};
  return std::mt19937_64(seq);
}

Report suite_thin(World& w) {
  Report r = verify_thin(ThinE6(build_gq24()));
  r.suite = "thin";
  r.seed = w.options().seed;
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra",   "delta-facts", "gamma",
                                              "equator",   "hyperplane",  "synthesis",
                                              "compare",   "recognition", "thin"};
  return names;
}

Report run_suite(const std::string& name, World& w) {
  if (name == "algebra") return suite_algebra(w);
  if (name == "delta-facts") return suite_delta(w);
  if (name == "gamma") return suite_gamma(w);
  if (name == "equator") return suite_equator(w);
  if (name == "hyperplane") return suite_hyperplane(w);
  if (name == "synthesis") return suite_synthesis(w);
  if (name == "compare") return suite_compare(w);
  if (name == "recognition") return suite_recognition(w);
  if (name == "thin") return suite_thin(w);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace e6

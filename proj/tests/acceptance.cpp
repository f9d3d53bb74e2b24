// Acceptance run: builds every layer from scratch in memory and prints one
// line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "e6/suites.hpp"

using namespace e6;

namespace {

struct Line {
  int n;
  std::string what;
  bool ok;
  std::string detail;
};

std::vector<Line> lines;

Report run(World& w, const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = run_suite(name, w);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& c : r.checks)
    if (!c.ok) std::fprintf(stderr, "  %s/%s failed: %s\n", name.c_str(), c.name.c_str(), c.detail.c_str());
  return r;
}

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool passed(const Report& r, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const Check* c = find(r, n);
    if (!c || !c->ok) return false;
  }
  return true;
}

std::string secs(double ms) {
  char b[32];
  std::snprintf(b, sizeof b, "%.1f s", ms / 1000);
  return b;
}

void emit(int n, std::string what, bool ok, std::string detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  lines.push_back({n, std::move(what), ok, std::move(detail)});
}

}  // namespace

int main() {
  Options o;
  o.seed = 42;
  o.log = [](const std::string& s) { std::fprintf(stderr, "  .. %s\n", s.c_str()); };
  World w(o);

  {
    Report r = run(w, "algebra");
    emit(1, "algebra identities", r.ok() && r.wall_ms < 60000, secs(r.wall_ms) + ", limit 60 s");
  }
  {
    Report r = run(w, "delta-facts");
    double scan = w.build_ms().at("points");
    emit(2, "Delta enumeration 139503 / 69615", r.ok() && passed(r, {"points.count", "points.trace_zero"}) &&
                                                   scan < 300000,
         "scan " + secs(scan) + ", limit 300 s");
  }
  {
    Report r = run(w, "gamma");
    double cat = w.build_ms().at("symplecta");
    bool census = passed(r, {"census"}) && r.counts["census_points"] >= 100;
    emit(3, "Gamma census 270/2016/34560/32768", census,
         std::to_string(r.counts["census_points"]) + " points");
    emit(4, "symplecton catalog", r.ok() && cat < 900000,
         "catalog " + secs(cat) + ", limit 900 s; " + std::to_string(r.failures()) + " failed checks");
  }
  {
    Report r = run(w, "equator");
    emit(5, "equator suite", r.ok(), std::to_string(r.checks.size()) + " checks, " + secs(r.wall_ms));
  }
  {
    Report r = run(w, "hyperplane");
    emit(6, "hyperplane suite", r.ok(), std::to_string(r.checks.size()) + " checks, " + secs(r.wall_ms));
  }
  {
    Report r = run(w, "synthesis");
    emit(7, "synthesis suite", r.ok(), std::to_string(r.checks.size()) + " checks, " + secs(r.wall_ms));
  }
  {
    Report r = run(w, "compare");
    emit(8, "end-to-end isomorphism", r.ok(), std::to_string(r.checks.size()) + " checks, " + secs(r.wall_ms));
  }
  {
    Report r = run(w, "recognition");
    emit(9, "recognition suite", r.ok(), std::to_string(r.checks.size()) + " checks, " + secs(r.wall_ms));
  }
  {
    Report r = run(w, "thin");
    emit(10, "thin suite", r.ok() && r.wall_ms < 1000, secs(r.wall_ms) + ", limit 1 s");
  }

  std::size_t fails = 0;
  for (const auto& l : lines) fails += !l.ok;
  std::printf("%zu of %zu criteria passed\n", lines.size() - fails, lines.size());
  return fails ? 1 : 0;
}

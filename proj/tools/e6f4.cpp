// Command line front end: builds and caches the geometries, runs the
// verification suites and writes JSON reports.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "e6/cache.hpp"
#include "e6/suites.hpp"

using nlohmann::ordered_json;
using namespace e6;

namespace {

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["q"] = 2;
  j["counts"] = r.counts;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"paper_ref", c.ref},
                           {"status", c.ok ? "pass" : "fail"},
                           {"detail", c.detail}});
  j["wall_ms"] = r.wall_ms;
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  return j;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
Report timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  r.wall_ms = ms_since(t0);
  return r;
}

// Merges per-suite reports into one, prefixing names with the suite.
Report merge(const std::vector<Report>& parts, std::uint64_t seed) {
  Report all;
  all.suite = "all";
  all.seed = seed;
  for (const auto& p : parts) {
    for (const auto& [k, v] : p.counts) all.counts[p.suite + "." + k] = v;
    for (const auto& c : p.checks) all.checks.push_back({p.suite + "/" + c.name, c.ref, c.ok, c.detail});
    for (const auto& [k, v] : p.timings_ms) all.timings_ms[p.suite + "." + k] = v;
    all.timings_ms[p.suite] = p.wall_ms;
  }
  return all;
}

Report build_caches(World& w) {
  Report r;
  r.suite = "build";
  r.seed = w.options().seed;
  const Delta& d = w.delta();
  const Gamma& g = w.gamma();
  w.save();
  r.counts["points"] = d.size();
  r.counts["h_points"] = g.size();
  r.counts["symplecta"] = g.symplecton_count();
  r.add("points.count", "139503 rank-one points of the E6 geometry", d.size() == 139503);
  r.add("symplecta.count", "69615 symplecta", g.symplecton_count() == 69615);
  if (!w.options().cache_dir.empty()) {
    std::vector<Vec> pts, sym;
    read_words(w.options().cache_dir / "points.bin", 1, pts);
    read_words(w.options().cache_dir / "symplecta.bin", 6, sym);
    bool same = pts == d.table();
    r.add("cache.points", "reloaded point table gives the same ids", same);
    std::vector<std::array<Vec, 6>> b;
    for (const auto& s : g.symplecta()) b.push_back(s.basis);
    r.add("cache.symplecta", "reloaded symplecton bases match", unflatten<6>(sym) == b);
  }
  for (const auto& [k, v] : w.build_ms()) r.timings_ms[k] = v;
  return r;
}

Report synth_report(World& w) {
  Report r;
  r.suite = "synth";
  r.seed = w.options().seed;
  const Synth& s = w.synth();
  w.save();
  r.counts["ordinary_points"] = s.ordinary_count();
  r.counts["new_points"] = s.catalog().size();
  r.counts["points"] = s.size();
  r.add("points", "69615 ordinary and 69888 new points", s.size() == 139503 && s.catalog().size() == 69888);
  auto rng = suite_rng(w.options().seed, "synth");
  int n = w.options().samples > 0 ? w.options().samples : 50;
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    SId a = SId(rng() % s.size());
    Element e{Sort::Point, {a}};
    Element t = s.theta(e);
    bad += t.sort != Sort::Quad || s.theta(t) != e;
  }
  r.counts["theta_samples"] = std::size_t(n);
  r.add("theta", "theta maps points to quads and squares to the identity", bad == 0,
        std::to_string(bad) + " of " + std::to_string(n));
  for (const auto& [k, v] : w.build_ms()) r.timings_ms[k] = v;
  return r;
}

Report stats_report(World& w) {
  Report r;
  r.suite = "stats";
  r.seed = w.options().seed;
  const Gamma& g = w.gamma();
  const Delta& d = g.delta();
  std::printf("%-28s %10zu\n", "delta points", d.size());
  std::printf("%-28s %10zu\n", "trace-zero points", g.size());
  std::printf("%-28s %10zu\n", "symplecta", g.symplecton_count());
  r.counts["delta_points"] = d.size();
  r.counts["h_points"] = g.size();
  r.counts["symplecta"] = g.symplecton_count();

  auto rng = suite_rng(w.options().seed, "stats");
  int n = w.options().samples > 0 ? w.options().samples : 5;
  std::printf("\n%8s %10s %10s %10s %10s\n", "point", "collinear", "symplectic", "special", "opposite");
  bool uniform = true;
  for (int i = 0; i < n; ++i) {
    HId x = HId(rng() % g.size());
    auto c = g.census(x);
    std::printf("%8u %10zu %10zu %10zu %10zu\n", x, c[0], c[1], c[2], c[3]);
    uniform = uniform && c == g.census(0);
  }
  auto c0 = g.census(0);
  r.counts["collinear"] = c0[0];
  r.counts["symplectic"] = c0[1];
  r.counts["special"] = c0[2];
  r.counts["opposite"] = c0[3];
  r.add("census.uniform", "every sampled point has the same census", uniform);

  const Synth& s = w.synth();
  std::size_t kinds[3] = {};
  for (const auto& l : s.lines_through(0)) ++kinds[int(l.kind)];
  std::size_t newl = s.lines_through(s.of_eps(0)).size();
  std::printf("\n%-28s %10zu\n", "new points", s.catalog().size());
  std::printf("%-28s %10zu\n", "gamma lines per point", kinds[0]);
  std::printf("%-28s %10zu\n", "hyperbolic lines per point", kinds[1]);
  std::printf("%-28s %10zu\n", "new lines per point", kinds[2]);
  std::printf("%-28s %10zu\n", "lines per new point", newl);
  r.counts["new_points"] = s.catalog().size();
  r.counts["gamma_lines_per_point"] = kinds[0];
  r.counts["hyperbolic_lines_per_point"] = kinds[1];
  r.counts["new_lines_per_point"] = kinds[2];
  r.counts["lines_per_new_point"] = newl;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GF(2) models of the E6 and F4 geometries"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string cache_dir = "cache";
  std::uint64_t seed = 42;
  int samples = 0;
  int threads = 1;
  std::string json_path;
  bool quiet = false;
  app.add_option("--cache-dir", cache_dir, "directory for binary caches (empty: none)");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--samples", samples, "sample count override (0: suite defaults)");
  app.add_option("--threads", threads, "worker count (work runs on one thread)");
  app.add_option("--json", json_path, "write the report here");
  app.add_flag("-q,--quiet", quiet, "no progress messages");

  auto* build = app.add_subcommand("build", "build and cache the point table and symplecton catalog");
  auto* thin = app.add_subcommand("thin", "run the thin Q(2,4) suite");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "suite name or all")->required()->check(CLI::IsMember(choices));
  auto* synth = app.add_subcommand("synth", "build the synthesized geometry and its polarity");
  auto* compare = app.add_subcommand("compare", "check the isomorphism with the E6 geometry");
  auto* stats = app.add_subcommand("stats", "print census tables");
  CLI11_PARSE(app, argc, argv);

  Options o;
  o.cache_dir = cache_dir;
  o.seed = seed;
  o.samples = samples;
  if (!quiet) o.log = [](const std::string& s) { std::fprintf(stderr, "e6f4: %s\n", s.c_str()); };
  if (!o.cache_dir.empty()) std::filesystem::create_directories(o.cache_dir);

  Report r;
  try {
    World w(o);
    auto one = [&](const std::string& name) {
      Report x = timed([&] { return run_suite(name, w); });
      if (!quiet)
        std::fprintf(stderr, "e6f4: %s %s (%.0f ms)\n", name.c_str(), x.ok() ? "pass" : "FAIL", x.wall_ms);
      return x;
    };
    if (build->parsed()) r = timed([&] { return build_caches(w); });
    else if (thin->parsed()) r = one("thin");
    else if (compare->parsed()) r = one("compare");
    else if (synth->parsed()) r = timed([&] { return synth_report(w); });
    else if (stats->parsed()) r = timed([&] { return stats_report(w); });
    else if (verify->parsed()) {
      if (suite == "all") {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> parts;
        for (const auto& n : suite_names()) parts.push_back(one(n));
        r = merge(parts, seed);
        r.wall_ms = ms_since(t0);
      } else {
        r = one(suite);
      }
    }
  } catch (const std::exception& e) {
    r.suite = app.get_subcommands().front()->get_name();
    r.seed = seed;
    r.add("error", "run completed", false, e.what());
  }
  r.seed = seed;

  ordered_json j = to_json(r);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    f << j.dump(2) << '\n';
  }
  if (!r.ok() || json_path.empty()) {
    ordered_json out = j;
    if (!r.ok()) {
      ordered_json failed = ordered_json::array();
      for (const auto& c : j["checks"])
        if (c["status"] == "fail") failed.push_back(c);
      out = {{"suite", r.suite}, {"failures", failed}};
    }
    std::cout << out.dump(2) << '\n';
  }
  for (const auto& c : r.checks)
    if (!quiet) std::fprintf(stderr, "%s %s\n", c.ok ? "pass" : "FAIL", c.name.c_str());
  return r.ok() ? 0 : 1;
}

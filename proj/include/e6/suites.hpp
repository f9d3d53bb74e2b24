#pragma once
// Verification suites over the concrete GF(2) model, shared by the command
// line tool and the acceptance runner. A World builds or loads each layer on
// first use.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "e6/recognition.hpp"
#include "e6/report.hpp"

namespace e6 {

struct Options {
  std::filesystem::path cache_dir;  // empty: build everything in memory
  std::uint64_t seed = 42;
  int samples = 0;                  // 0: per-suite defaults
  std::function<void(const std::string&)> log;
};

class World {
 public:
  explicit World(Options o);
  ~World();

  const Options& options() const { return opt_; }
  const Delta& delta();
  const Gamma& gamma();
  const Equators& equators();
  const NewPointCatalog& catalog();
  const Synth& synth();
  const Recognition& recognition();
  const std::vector<PointId>& iso();
  const std::vector<EpsId>& eps_of_delta_point();

  // Build times in ms of layers built here (not loaded from cache).
  const std::map<std::string, double>& build_ms() const { return build_ms_; }
  bool loaded_from_cache(const std::string& layer) const;
  // Writes any cache file not yet present.
  void save();

  void say(const std::string& s) const {
    if (opt_.log) opt_.log(s);
  }

 private:
  Options opt_;
  std::unique_ptr<Delta> delta_;
  std::unique_ptr<Gamma> gamma_;
  std::unique_ptr<Equators> eq_;
  std::unique_ptr<NewPointCatalog> cat_;
  std::unique_ptr<Synth> synth_;
  std::unique_ptr<Recognition> rec_;
  std::vector<PointId> iso_;
  std::vector<EpsId> eps_of_;
  std::map<std::string, double> build_ms_;
  std::map<std::string, bool> cached_;
};

// Seeded generator for one suite; independent of the order suites run in.
std::mt19937_64 suite_rng(std::uint64_t seed, const std::string& suite);

Report suite_algebra(World& w);
Report suite_delta(World& w);
Report suite_gamma(World& w);
Report suite_equator(World& w);
Report suite_hyperplane(World& w);
Report suite_synthesis(World& w);
Report suite_compare(World& w);
Report suite_recognition(World& w);
Report suite_thin(World& w);

const std::vector<std::string>& suite_names();  // in run order
Report run_suite(const std::string& name, World& w);

}  // namespace e6

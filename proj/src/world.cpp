#include <chrono>

#include "e6/cache.hpp"
#include "e6/suites.hpp"

namespace e6 {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

World::World(Options o) : opt_(std::move(o)) {}
World::~World() = default;

bool World::loaded_from_cache(const std::string& layer) const {
  auto it = cached_.find(layer);
  return it != cached_.end() && it->second;
}

const Delta& World::delta() {
  if (delta_) return *delta_;
  std::vector<Vec> words;
  if (!opt_.cache_dir.empty() && read_words(opt_.cache_dir / "points.bin", 1, words)) {
    delta_ = std::make_unique<Delta>(Delta::from_table(std::move(words)));
    cached_["points"] = true;
    say("points loaded from cache");
  } else {
    auto t0 = std::chrono::steady_clock::now();
    say("scanning 2^27 vectors for rank-one points");
    delta_ = std::make_unique<Delta>(Delta::enumerate());
    build_ms_["points"] = ms_since(t0);
  }
  return *delta_;
}

const Gamma& World::gamma() {
  if (gamma_) return *gamma_;
  const Delta& d = delta();
  std::vector<Vec> words;
  if (!opt_.cache_dir.empty() && read_words(opt_.cache_dir / "symplecta.bin", 6, words)) {
    gamma_ = std::make_unique<Gamma>(d, unflatten<6>(words));
    cached_["symplecta"] = true;
    say("symplecta loaded from cache");
  } else {
    auto t0 = std::chrono::steady_clock::now();
    say("building the symplecton catalog");
    gamma_ = std::make_unique<Gamma>(d);
    build_ms_["symplecta"] = ms_since(t0);
  }
  return *gamma_;
}

const Equators& World::equators() {
  if (!eq_) eq_ = std::make_unique<Equators>(gamma());
  return *eq_;
}

const NewPointCatalog& World::catalog() {
  if (cat_) return *cat_;
  const Equators& eq = equators();
  std::vector<Vec> words;
  if (!opt_.cache_dir.empty() && read_words(opt_.cache_dir / "equators.bin", 9, words)) {
    cat_ = std::make_unique<NewPointCatalog>(
        NewPointCatalog::from_bases(eq.gamma(), unflatten<9>(words)));
    cached_["equators"] = true;
    say("extended equators loaded from cache");
  } else {
    auto t0 = std::chrono::steady_clock::now();
    say("enumerating extended equator geometries");
    cat_ = std::make_unique<NewPointCatalog>(NewPointCatalog::enumerate(eq));
    build_ms_["equators"] = ms_since(t0);
  }
  return *cat_;
}

const Synth& World::synth() {
  if (!synth_) synth_ = std::make_unique<Synth>(equators(), catalog());
  return *synth_;
}

const Recognition& World::recognition() {
  if (!rec_) rec_ = std::make_unique<Recognition>(synth());
  return *rec_;
}

const std::vector<PointId>& World::iso() {
  if (iso_.empty()) {
    auto t0 = std::chrono::steady_clock::now();
    iso_ = recognition().iso_table();
    build_ms_["iso"] = ms_since(t0);
  }
  return iso_;
}

const std::vector<EpsId>& World::eps_of_delta_point() {
  if (eps_of_.empty()) eps_of_ = eps_by_delta_point(iso(), gamma().size(), delta().size());
  return eps_of_;
}

void World::save() {
  if (opt_.cache_dir.empty()) return;
  namespace fs = std::filesystem;
  auto need = [&](const char* f) { return !fs::exists(opt_.cache_dir / f); };
  if (need("points.bin")) write_words(opt_.cache_dir / "points.bin", delta().table(), 1);
  if (need("symplecta.bin")) {
    std::vector<std::array<Vec, 6>> b;
    for (const auto& s : gamma().symplecta()) b.push_back(s.basis);
    write_words(opt_.cache_dir / "symplecta.bin", flatten(b), 6);
  }
  if (need("equators.bin")) write_words(opt_.cache_dir / "equators.bin", flatten(catalog().bases()), 9);
}

}  // namespace e6

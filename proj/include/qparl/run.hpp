#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "qparl/scenario.hpp"
#include "qparl/timeseries.hpp"

namespace qparl {

enum class Engine { Rk4, Exact, Trajectories };

Engine parse_engine(const std::string& name);  // ConfigError on unknown name
std::string engine_name(Engine engine);

// Everything needed to execute and reproduce one run. The trajectories
// engine requires both n_traj and seed.
struct RunManifest {
  std::string scenario;
  Engine engine = Engine::Rk4;
  ScenarioConfig config;
  std::filesystem::path out_csv;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_traj;
};

// Executes the manifest, writes the CSV and an adjacent .meta.json file
// recording config, engine, seed, tool version and wall-clock time.
TimeSeries run(const RunManifest& manifest);

struct OracleReport {
  std::string preset;
  double max_abs_deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// RK4 vs exact-propagator cross-check on one preset.
OracleReport oracle_check(const std::string& preset_name, double threshold = 1e-5);

}  // namespace qparl

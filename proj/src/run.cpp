#include "qparl/run.hpp"

#include <chrono>
#include <fstream>

#include "json.hpp"

#include "qparl/errors.hpp"
#include "qparl/integrator.hpp"
#include "qparl/io.hpp"
#include "qparl/presets.hpp"
#include "qparl/trajectories.hpp"
#include "qparl/version.hpp"

namespace qparl {

Engine parse_engine(const std::string& name) {
  if (name == "rk4") return Engine::Rk4;
  if (name == "exact") return Engine::Exact;
  if (name == "trajectories") return Engine::Trajectories;
  throw ConfigError("unknown engine '" + name + "' (expected rk4, exact or trajectories)");
}

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::Rk4:
      return "rk4";
    case Engine::Exact:
      return "exact";
    case Engine::Trajectories:
      return "trajectories";
  }
  return "unknown";
}

namespace {

void write_metadata(const RunManifest& manifest, const TimeSeries& series,
                    double wall_clock_seconds) {
  nlohmann::json meta;
  meta["tool"] = "qparl";
  meta["version"] = kVersion;
  meta["scenario"] = manifest.scenario;
  meta["engine"] = engine_name(manifest.engine);
  if (manifest.seed) meta["seed"] = *manifest.seed;
  if (manifest.n_traj) meta["n_traj"] = *manifest.n_traj;
  meta["config"] = serialize_config(manifest.config);
  meta["csv"] = manifest.out_csv.filename().string();
  meta["samples"] = series.n_samples();
  meta["wall_clock_seconds"] = wall_clock_seconds;

  std::filesystem::path meta_path = manifest.out_csv;
  meta_path.replace_extension(".meta.json");
  std::ofstream out(meta_path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + meta_path.string());
  out << meta.dump(2) << "\n";
  if (!out.flush()) throw IoError("write failed: " + meta_path.string());
}

}  // namespace

TimeSeries run(const RunManifest& manifest) {
  validate(manifest.config);
  if (manifest.engine == Engine::Trajectories && (!manifest.n_traj || !manifest.seed)) {
    throw ConfigError("trajectories engine requires both n_traj and seed");
  }

  const auto parent = manifest.out_csv.parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
    if (ec) throw IoError("cannot create output directory " + parent.string());
  }

  const auto start = std::chrono::steady_clock::now();
  TimeSeries series;
  switch (manifest.engine) {
    case Engine::Rk4:
      series = evolve(manifest.config);
      break;
    case Engine::Exact:
      series = evolve_exact(manifest.config);
      break;
    case Engine::Trajectories:
      series = ensemble_average(manifest.config, *manifest.n_traj, *manifest.seed);
      break;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_csv(manifest.out_csv, series);
  write_metadata(manifest, series, seconds);
  return series;
}

OracleReport oracle_check(const std::string& preset_name, double threshold) {
  const Preset& preset = find_preset(preset_name);
  const TimeSeries rk4 = evolve(preset.config);
  const TimeSeries exact = evolve_exact(preset.config);

  OracleReport report;
  report.preset = preset_name;
  report.threshold = threshold;
  report.max_abs_deviation = max_abs_deviation(rk4, exact);
  report.pass = report.max_abs_deviation < threshold;
  return report;
}

}  // namespace qparl

// qparl — GKSL master-equation simulator for multi-party voting dynamics.
//
// Subcommands: run, oracle-check, list-presets, sweep.
// Exit codes: 0 success, 1 config error, 2 numerical-invariant failure,
// 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qparl/errors.hpp"
#include "qparl/io.hpp"
#include "qparl/presets.hpp"
#include "qparl/run.hpp"
#include "qparl/scenario.hpp"
#include "qparl/version.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string preset;
  std::string config_file;
  std::string engine = "rk4";
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<int> n_traj;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_engine) {
  cmd->add_option("--preset", opt.preset, "Named preset scenario (see list-presets)");
  cmd->add_option("--config", opt.config_file, "Scenario config file (key = value format)");
  if (with_engine) {
    cmd->add_option("--engine", opt.engine, "rk4 | exact | trajectories")
        ->default_val("rk4");
    cmd->add_option("--n-traj", opt.n_traj, "Trajectory count (trajectories engine)");
    cmd->add_option("--seed", opt.seed, "Base RNG seed (trajectories engine)");
  }
  cmd->add_option("--dt", opt.dt, "Override integration step");
  cmd->add_option("--t-end", opt.t_end, "Override end time");
  cmd->add_option("--out", opt.out_dir, "Output directory (default $QPARL_OUT_DIR or .)");
}

fs::path output_dir(const CommonOptions& opt) {
  if (!opt.out_dir.empty()) return opt.out_dir;
  if (const char* env = std::getenv("QPARL_OUT_DIR"); env && *env) return env;
  return ".";
}

// Resolve the scenario from --preset or --config, applying any overrides.
std::pair<std::string, qparl::ScenarioConfig> resolve_scenario(const CommonOptions& opt) {
  if (opt.preset.empty() == opt.config_file.empty()) {
    throw qparl::ConfigError("exactly one of --preset or --config is required");
  }
  std::string label;
  qparl::ScenarioConfig cfg;
  if (!opt.preset.empty()) {
    cfg = qparl::find_preset(opt.preset).config;
    label = opt.preset;
  } else {
    cfg = qparl::load_config(opt.config_file);
    label = fs::path(opt.config_file).stem().string();
  }
  if (opt.dt) cfg.dt = *opt.dt;
  if (opt.t_end) cfg.t_end = *opt.t_end;
  qparl::validate(cfg);
  return {label, cfg};
}

qparl::RunManifest make_manifest(const std::string& label, const qparl::ScenarioConfig& cfg,
                                 const CommonOptions& opt) {
  qparl::RunManifest manifest;
  manifest.scenario = label;
  manifest.engine = qparl::parse_engine(opt.engine);
  manifest.config = cfg;
  manifest.seed = opt.seed;
  manifest.n_traj = opt.n_traj;
  manifest.out_csv = output_dir(opt) / (label + "-" + opt.engine + ".csv");
  return manifest;
}

int cmd_run(const CommonOptions& opt) {
  const auto [label, cfg] = resolve_scenario(opt);
  const auto manifest = make_manifest(label, cfg, opt);
  const qparl::TimeSeries series = qparl::run(manifest);
  std::cout << "wrote " << manifest.out_csv.string() << " (" << series.n_samples()
            << " samples)\n";
  return 0;
}

int cmd_oracle_check(const std::string& preset, bool all) {
  std::vector<std::string> names;
  if (all) {
    for (const auto& p : qparl::preset_catalog()) names.push_back(p.name);
  } else if (!preset.empty()) {
    names.push_back(preset);
  } else {
    throw qparl::ConfigError("oracle-check requires --preset NAME or --all");
  }

  bool ok = true;
  for (const auto& name : names) {
    const auto report = qparl::oracle_check(name);
    std::cout << (report.pass ? "ok   " : "FAIL ") << name
              << "  max-abs deviation = " << qparl::format_double(report.max_abs_deviation, 6)
              << " (threshold " << qparl::format_double(report.threshold, 6) << ")\n";
    ok = ok && report.pass;
  }
  if (!ok) throw qparl::NumericError("oracle check failed");
  return 0;
}

std::string describe_config(const qparl::ScenarioConfig& cfg) {
  auto list = [](const std::vector<double>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ",";
      s += qparl::format_double(vs[i], 12);
    }
    return s;
  };
  std::string s = "n_modes=" + std::to_string(cfg.n_modes);
  s += " omega=" + list(cfg.omega);
  s += " lambda=" + list(cfg.lambda);
  if (cfg.gamma_c != 0.0) s += " gamma_c=" + qparl::format_double(cfg.gamma_c, 12);
  if (cfg.gamma_nc != 0.0) s += " gamma_nc=" + qparl::format_double(cfg.gamma_nc, 12);
  for (int k = 0; k < 4; ++k) {
    if (cfg.gamma[static_cast<size_t>(k)] != 0.0) {
      s += " gamma_" + std::to_string(k + 1) + "=" +
           qparl::format_double(cfg.gamma[static_cast<size_t>(k)], 12);
    }
  }
  if (cfg.tau1 != 0.0) s += " tau1=" + qparl::format_double(cfg.tau1, 12);
  if (cfg.tau2 != 0.0) s += " tau2=" + qparl::format_double(cfg.tau2, 12);
  if (cfg.kappa != 0.0) s += " kappa=" + qparl::format_double(cfg.kappa, 12);
  s += " p0=" + list(cfg.p0);
  s += " t_end=" + qparl::format_double(cfg.t_end, 12);
  s += " dt=" + qparl::format_double(cfg.dt, 12);
  return s;
}

int cmd_list_presets() {
  for (const auto& p : qparl::preset_catalog()) {
    std::cout << p.name << "  [" << p.family << "]  " << p.summary << "\n    "
              << describe_config(p.config) << "\n";
    if (!p.sweep_key.empty()) {
      std::cout << "    sweep: " << p.sweep_key << " over ";
      for (size_t i = 0; i < p.sweep_values.size(); ++i) {
        std::cout << (i ? ", " : "") << qparl::format_double(p.sweep_values[i], 6);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_sweep(const CommonOptions& opt, std::string param, std::vector<double> values) {
  const auto [label, cfg] = resolve_scenario(opt);
  if (param.empty() && !opt.preset.empty()) {
    const auto& preset = qparl::find_preset(opt.preset);
    param = preset.sweep_key;
    if (values.empty()) values = preset.sweep_values;
  }
  if (param.empty()) throw qparl::ConfigError("sweep requires --param (preset has no default)");
  if (values.empty()) throw qparl::ConfigError("sweep requires --values");

  for (double v : values) {
    qparl::ScenarioConfig swept = cfg;
    qparl::set_parameter(swept, param, v);
    qparl::validate(swept);
    CommonOptions per_run = opt;
    auto manifest =
        make_manifest(label + "-" + param + "-" + qparl::format_double(v, 12), swept, per_run);
    const qparl::TimeSeries series = qparl::run(manifest);
    std::cout << "wrote " << manifest.out_csv.string() << " (" << series.n_samples()
              << " samples)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKSL master-equation simulator for multi-party voting dynamics"};
  app.set_version_flag("--version", std::string("qparl ") + qparl::kVersion);
  app.require_subcommand(1);

  CommonOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario and write CSV + metadata");
  add_common(run_cmd, run_opt, /*with_engine=*/true);

  std::string oracle_preset;
  bool oracle_all = false;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle-check", "Compare the rk4 and exact engines on a preset");
  oracle_cmd->add_option("--preset", oracle_preset, "Preset to check");
  oracle_cmd->add_flag("--all", oracle_all, "Check every shipped preset");

  CLI::App* list_cmd = app.add_subcommand("list-presets", "Print the preset catalog");

  CommonOptions sweep_opt;
  std::string sweep_param;
  std::vector<double> sweep_values;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run a scenario once per value of one parameter");
  add_common(sweep_cmd, sweep_opt, /*with_engine=*/true);
  sweep_cmd->add_option("--param", sweep_param, "Scalar config key to vary");
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->delimiter(',');

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return cmd_run(run_opt);
    if (oracle_cmd->parsed()) return cmd_oracle_check(oracle_preset, oracle_all);
    if (list_cmd->parsed()) return cmd_list_presets();
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, sweep_param, sweep_values);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qparl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const qparl::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const qparl::NumericError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "qparl/presets.hpp"

#include "qparl/errors.hpp"

namespace qparl {

namespace {

ScenarioConfig single_party(double tau1, double tau2) {
  ScenarioConfig cfg;
  cfg.n_modes = 1;
  cfg.omega = {1.0};
  cfg.lambda = {0.25};
  cfg.tau1 = tau1;
  cfg.tau2 = tau2;
  cfg.p0 = {0.7};
  return cfg;
}

ScenarioConfig two_party(double gamma_c, double gamma_nc) {
  ScenarioConfig cfg;
  cfg.n_modes = 2;
  cfg.omega = {1.0, 1.0};
  cfg.lambda = {0.25, 0.25};
  cfg.gamma_c = gamma_c;
  cfg.gamma_nc = gamma_nc;
  cfg.tau1 = 0.5;
  cfg.p0 = {0.6, 0.4};
  return cfg;
}

ScenarioConfig three_party(int cubic_index, double kappa) {
  ScenarioConfig cfg;
  cfg.n_modes = 3;
  cfg.omega = {0.1, 0.1, 0.1};
  cfg.lambda = {0.025, 0.025, 0.025};
  cfg.gamma[static_cast<size_t>(cubic_index - 1)] = 1.0;
  cfg.tau1 = 0.5;
  cfg.kappa = kappa;
  cfg.p0 = {0.7, 0.6, 0.5};
  return cfg;
}

ScenarioConfig null_scenario() {
  ScenarioConfig cfg;
  cfg.n_modes = 1;
  cfg.omega = {0.0};
  cfg.lambda = {0.0};
  cfg.p0 = {0.7};
  return cfg;
}

const std::vector<double> kSweepValues = {0.0, 0.1, 0.25, 0.5, 1.0};

std::vector<Preset> make_catalog() {
  std::vector<Preset> presets;

  presets.push_back({"null", "diagnostic", "all couplings and strengths zero; frozen state",
                     null_scenario(), "", {}});

  struct Tau1Entry {
    const char* name;
    double tau1;
    const char* summary;
  };
  const Tau1Entry tau1_values[] = {
      {"fig1-tau01", 0.1, "single party, yes-leader strength 0.1"},
      {"fig1-tau05", 0.5, "single party, yes-leader strength 0.5"},
      {"fig1-tau10", 1.0, "single party, yes-leader strength 1.0"},
      {"fig1-tau20", 2.0, "single party, yes-leader strength 2.0"}};
  for (const auto& e : tau1_values) {
    presets.push_back({e.name, "fig1", e.summary, single_party(e.tau1, 0.0), "", {}});
  }

  presets.push_back({"fig2-tau2-sweep", "fig2", "single party, competing leaders; sweep tau2",
                     single_party(0.5, 0.0), "tau2", kSweepValues});
  presets.push_back({"fig2-balanced", "fig2", "single party, equally strong opposing leaders",
                     single_party(0.5, 0.5), "", {}});

  presets.push_back({"fig3-gammac-sweep", "fig3", "two parties, cooperative coupling; sweep gamma_c",
                     two_party(0.0, 0.0), "gamma_c", kSweepValues});
  presets.push_back({"fig4-gammanc-sweep", "fig4",
                     "two parties, non-cooperative coupling; sweep gamma_nc", two_party(0.0, 0.0),
                     "gamma_nc", kSweepValues});

  for (int k = 1; k <= 4; ++k) {
    presets.push_back({"fig5-gamma" + std::to_string(k), "fig5",
                       "three parties, cubic coupling gamma_" + std::to_string(k),
                       three_party(k, 0.0), "", {}});
  }
  for (int k = 1; k <= 4; ++k) {
    presets.push_back({"fig6-gamma" + std::to_string(k), "fig6",
                       "three parties, cubic coupling gamma_" + std::to_string(k) +
                           " plus a weak no-leader on party 2",
                       three_party(k, 0.1), "", {}});
  }
  return presets;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = make_catalog();
  return catalog;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : preset_catalog()) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown preset '" + name + "' (see list-presets)");
}

}  // namespace qparl

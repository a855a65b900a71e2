#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace qparl {

// Complete parameter set for one run. A single schema spans every supported
// scenario; couplings that do not apply to the configured mode count must be
// zero, which validate() enforces.
//
// Parameters:
//   omega   per-mode inertial frequency (keeps a member on its initial choice)
//   lambda  per-mode indecision strength (drives yes <-> no flipping)
//   gamma_c / gamma_nc   two-party exchange / pair couplings
//   gamma_1..gamma_4     three-party cubic couplings
//   tau1, tau2           leader strengths on mode 1 (toward yes / toward no)
//   kappa                leader strength on mode 2 (toward no)
//   p0, phi              initial per-mode yes-probability and phase
struct ScenarioConfig {
  int n_modes = 1;
  std::vector<double> omega{0.0};
  std::vector<double> lambda{0.0};
  double gamma_c = 0.0;
  double gamma_nc = 0.0;
  std::array<double, 4> gamma{0.0, 0.0, 0.0, 0.0};
  double tau1 = 0.0;
  double tau2 = 0.0;
  double kappa = 0.0;
  std::vector<double> p0{1.0};
  std::vector<double> phi{};  // empty means all zero
  double t_end = 100.0;
  double dt = 0.01;
  int sample_stride = 10;
};

// Throws ConfigError on any violated constraint.
void validate(const ScenarioConfig& cfg);

// Flat key = value text, '#' comments, comma-separated lists. Unknown and
// duplicate keys are errors.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& file);
std::string serialize_config(const ScenarioConfig& cfg);

// Scalar keys a sweep may vary (list-valued and structural keys excluded).
const std::vector<std::string>& sweepable_keys();
void set_parameter(ScenarioConfig& cfg, const std::string& key, double value);

}  // namespace qparl

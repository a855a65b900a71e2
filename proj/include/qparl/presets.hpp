#pragma once

#include <string>
#include <vector>

#include "qparl/scenario.hpp"

namespace qparl {

// A named, fully-parameterized scenario. Sweep-style presets carry the key
// they vary and the default value list for the `sweep` subcommand.
struct Preset {
  std::string name;
  std::string family;  // figure family the preset reproduces, e.g. "fig3"
  std::string summary;
  ScenarioConfig config;
  std::string sweep_key;
  std::vector<double> sweep_values;
};

const std::vector<Preset>& preset_catalog();

// Throws ConfigError for unknown names.
const Preset& find_preset(const std::string& name);

}  // namespace qparl

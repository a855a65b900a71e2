#include "qparl/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "qparl/errors.hpp"

namespace qparl {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const std::string& key) {
  const std::string t = trim(s);
  if (t.empty()) throw ConfigError("empty value for key '" + key + "'");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number '" + t + "' for key '" + key + "'");
  }
  return v;
}

long parse_int(const std::string& s, const std::string& key) {
  const std::string t = trim(s);
  long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) {
    throw ConfigError("invalid integer '" + t + "' for key '" + key + "'");
  }
  return v;
}

std::vector<double> parse_real_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, key));
  if (out.empty()) throw ConfigError("empty list for key '" + key + "'");
  return out;
}

// Shortest representation that round-trips through strtod.
std::string fmt(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string fmt_list(const std::vector<double>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += fmt(vs[i]);
  }
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
  require(cfg.n_modes >= 1 && cfg.n_modes <= 3, "n_modes must be 1, 2 or 3");
  const size_t n = static_cast<size_t>(cfg.n_modes);
  require(cfg.omega.size() == n, "omega must list one value per mode");
  require(cfg.lambda.size() == n, "lambda must list one value per mode");
  require(cfg.p0.size() == n, "p0 must list one value per mode");
  require(cfg.phi.empty() || cfg.phi.size() == n,
          "phi must be empty or list one value per mode");

  for (double w : cfg.omega) require(w >= 0.0, "omega entries must be >= 0");
  for (double l : cfg.lambda) require(l >= 0.0, "lambda entries must be >= 0");
  for (double p : cfg.p0) require(p >= 0.0 && p <= 1.0, "p0 entries must lie in [0, 1]");
  require(cfg.gamma_c >= 0.0 && cfg.gamma_nc >= 0.0, "gamma_c and gamma_nc must be >= 0");
  for (double g : cfg.gamma) require(g >= 0.0, "gamma_1..gamma_4 must be >= 0");
  require(cfg.tau1 >= 0.0 && cfg.tau2 >= 0.0 && cfg.kappa >= 0.0,
          "tau1, tau2 and kappa must be >= 0");

  // Couplings that do not exist at the configured mode count must stay zero.
  if (cfg.n_modes != 2) {
    require(cfg.gamma_c == 0.0, "gamma_c requires n_modes = 2");
    require(cfg.gamma_nc == 0.0, "gamma_nc requires n_modes = 2");
  }
  if (cfg.n_modes != 3) {
    for (double g : cfg.gamma) require(g == 0.0, "gamma_1..gamma_4 require n_modes = 3");
  }
  if (cfg.kappa > 0.0) require(cfg.n_modes >= 2, "kappa requires n_modes >= 2");

  require(cfg.t_end > 0.0, "t_end must be > 0");
  require(cfg.dt > 0.0, "dt must be > 0");
  require(cfg.dt <= cfg.t_end, "dt must not exceed t_end");
  require(cfg.sample_stride >= 1, "sample_stride must be >= 1");
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  cfg.phi.clear();
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }

    if (key == "n_modes") {
      cfg.n_modes = static_cast<int>(parse_int(value, key));
    } else if (key == "omega") {
      cfg.omega = parse_real_list(value, key);
    } else if (key == "lambda") {
      cfg.lambda = parse_real_list(value, key);
    } else if (key == "gamma_c") {
      cfg.gamma_c = parse_real(value, key);
    } else if (key == "gamma_nc") {
      cfg.gamma_nc = parse_real(value, key);
    } else if (key == "gamma_1") {
      cfg.gamma[0] = parse_real(value, key);
    } else if (key == "gamma_2") {
      cfg.gamma[1] = parse_real(value, key);
    } else if (key == "gamma_3") {
      cfg.gamma[2] = parse_real(value, key);
    } else if (key == "gamma_4") {
      cfg.gamma[3] = parse_real(value, key);
    } else if (key == "tau1") {
      cfg.tau1 = parse_real(value, key);
    } else if (key == "tau2") {
      cfg.tau2 = parse_real(value, key);
    } else if (key == "kappa") {
      cfg.kappa = parse_real(value, key);
    } else if (key == "p0") {
      cfg.p0 = parse_real_list(value, key);
    } else if (key == "phi") {
      cfg.phi = parse_real_list(value, key);
    } else if (key == "t_end") {
      cfg.t_end = parse_real(value, key);
    } else if (key == "dt") {
      cfg.dt = parse_real(value, key);
    } else if (key == "sample_stride") {
      cfg.sample_stride = static_cast<int>(parse_int(value, key));
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open config file: " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::vector<double> phi = cfg.phi;
  if (phi.empty()) phi.assign(static_cast<size_t>(cfg.n_modes), 0.0);
  std::string out;
  out += "n_modes = " + std::to_string(cfg.n_modes) + "\n";
  out += "omega = " + fmt_list(cfg.omega) + "\n";
  out += "lambda = " + fmt_list(cfg.lambda) + "\n";
  out += "gamma_c = " + fmt(cfg.gamma_c) + "\n";
  out += "gamma_nc = " + fmt(cfg.gamma_nc) + "\n";
  for (int k = 0; k < 4; ++k) {
    out += "gamma_" + std::to_string(k + 1) + " = " + fmt(cfg.gamma[static_cast<size_t>(k)]) + "\n";
  }
  out += "tau1 = " + fmt(cfg.tau1) + "\n";
  out += "tau2 = " + fmt(cfg.tau2) + "\n";
  out += "kappa = " + fmt(cfg.kappa) + "\n";
  out += "p0 = " + fmt_list(cfg.p0) + "\n";
  out += "phi = " + fmt_list(phi) + "\n";
  out += "t_end = " + fmt(cfg.t_end) + "\n";
  out += "dt = " + fmt(cfg.dt) + "\n";
  out += "sample_stride = " + std::to_string(cfg.sample_stride) + "\n";
  return out;
}

const std::vector<std::string>& sweepable_keys() {
  static const std::vector<std::string> keys = {
      "gamma_c", "gamma_nc", "gamma_1", "gamma_2", "gamma_3", "gamma_4",
      "tau1",    "tau2",     "kappa",   "t_end",   "dt"};
  return keys;
}

void set_parameter(ScenarioConfig& cfg, const std::string& key, double value) {
  if (key == "gamma_c") {
    cfg.gamma_c = value;
  } else if (key == "gamma_nc") {
    cfg.gamma_nc = value;
  } else if (key == "gamma_1") {
    cfg.gamma[0] = value;
  } else if (key == "gamma_2") {
    cfg.gamma[1] = value;
  } else if (key == "gamma_3") {
    cfg.gamma[2] = value;
  } else if (key == "gamma_4") {
    cfg.gamma[3] = value;
  } else if (key == "tau1") {
    cfg.tau1 = value;
  } else if (key == "tau2") {
    cfg.tau2 = value;
  } else if (key == "kappa") {
    cfg.kappa = value;
  } else if (key == "t_end") {
    cfg.t_end = value;
  } else if (key == "dt") {
    cfg.dt = value;
  } else {
    throw ConfigError("'" + key + "' is not a sweepable scalar parameter");
  }
}

}  // namespace qparl

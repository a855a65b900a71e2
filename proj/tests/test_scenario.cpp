#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qparl/errors.hpp"
#include "qparl/presets.hpp"
#include "qparl/scenario.hpp"

using namespace qparl;

TEST_CASE("config text parses into the expected fields") {
  const std::string text =
      "# two interacting parties\n"
      "n_modes = 2\n"
      "omega = 1, 1\n"
      "lambda = 0.25, 0.25\n"
      "gamma_c = 0.5\n"
      "tau1 = 0.5   # Alice pushes yes\n"
      "p0 = 0.6, 0.4\n"
      "t_end = 50\n"
      "dt = 0.02\n"
      "sample_stride = 5\n";
  const ScenarioConfig cfg = parse_config(text);
  CHECK(cfg.n_modes == 2);
  CHECK(cfg.omega == std::vector<double>{1.0, 1.0});
  CHECK(cfg.lambda == std::vector<double>{0.25, 0.25});
  CHECK(cfg.gamma_c == 0.5);
  CHECK(cfg.gamma_nc == 0.0);
  CHECK(cfg.tau1 == 0.5);
  CHECK(cfg.p0 == std::vector<double>{0.6, 0.4});
  CHECK(cfg.phi.empty());
  CHECK(cfg.t_end == 50.0);
  CHECK(cfg.dt == 0.02);
  CHECK(cfg.sample_stride == 5);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_config("n_modes = 1\nomega = 1\nlambda = 0\np0 = 1\ntua1 = 0.5\n"),
                       doctest::Contains("unknown key"), ConfigError);
}

TEST_CASE("duplicate keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_config("n_modes = 1\nn_modes = 2\n"),
                       doctest::Contains("duplicate"), ConfigError);
}

TEST_CASE("malformed lines and numbers are rejected") {
  CHECK_THROWS_AS(parse_config("n_modes 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("dt = fast\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("omega = 1,, 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n_modes = 1.5\n"), ConfigError);
}

TEST_CASE("validation enforces coupling applicability") {
  ScenarioConfig cfg;
  cfg.n_modes = 1;
  cfg.omega = {1.0};
  cfg.lambda = {0.25};
  cfg.p0 = {0.7};

  SUBCASE("valid base") { CHECK_NOTHROW(validate(cfg)); }
  SUBCASE("pair coupling needs two modes") {
    cfg.gamma_c = 0.1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("cubic couplings need three modes") {
    cfg.gamma[2] = 0.1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("kappa needs a second mode") {
    cfg.kappa = 0.1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("probabilities must stay in range") {
    cfg.p0 = {1.2};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("negative strengths are rejected") {
    cfg.tau1 = -0.5;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("list lengths must match the mode count") {
    cfg.omega = {1.0, 1.0};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
  SUBCASE("time grid sanity") {
    cfg.dt = 0.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.dt = 200.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
  }
}

TEST_CASE("serialization is a fixed point of parse") {
  for (const auto& preset : preset_catalog()) {
    CAPTURE(preset.name);
    const std::string once = serialize_config(preset.config);
    const std::string twice = serialize_config(parse_config(once));
    CHECK(once == twice);
  }
}

TEST_CASE("sweepable keys cover the scalar couplings") {
  ScenarioConfig cfg;
  cfg.n_modes = 2;
  cfg.omega = {1.0, 1.0};
  cfg.lambda = {0.25, 0.25};
  cfg.p0 = {0.6, 0.4};
  set_parameter(cfg, "gamma_c", 0.75);
  CHECK(cfg.gamma_c == 0.75);
  set_parameter(cfg, "tau2", 0.25);
  CHECK(cfg.tau2 == 0.25);
  CHECK_THROWS_AS(set_parameter(cfg, "omega", 1.0), ConfigError);
  CHECK_THROWS_AS(set_parameter(cfg, "nope", 1.0), ConfigError);
  for (const auto& key : sweepable_keys()) {
    CAPTURE(key);
    CHECK_NOTHROW(set_parameter(cfg, key, cfg.n_modes == 2 ? 0.1 : 0.0));
  }
}

TEST_CASE("preset catalog carries the documented parameter sets") {
  CHECK(preset_catalog().size() == 17);

  const Preset& tau05 = find_preset("fig1-tau05");
  CHECK(tau05.config.n_modes == 1);
  CHECK(tau05.config.omega == std::vector<double>{1.0});
  CHECK(tau05.config.lambda == std::vector<double>{0.25});
  CHECK(tau05.config.tau1 == 0.5);
  CHECK(tau05.config.tau2 == 0.0);
  CHECK(tau05.config.p0 == std::vector<double>{0.7});

  CHECK(find_preset("fig1-tau01").config.tau1 == 0.1);
  CHECK(find_preset("fig1-tau10").config.tau1 == 1.0);
  CHECK(find_preset("fig1-tau20").config.tau1 == 2.0);

  const Preset& balanced = find_preset("fig2-balanced");
  CHECK(balanced.config.tau1 == 0.5);
  CHECK(balanced.config.tau2 == 0.5);

  const Preset& tau2_sweep = find_preset("fig2-tau2-sweep");
  CHECK(tau2_sweep.sweep_key == "tau2");
  CHECK(tau2_sweep.sweep_values == std::vector<double>{0.0, 0.1, 0.25, 0.5, 1.0});

  const Preset& coop = find_preset("fig3-gammac-sweep");
  CHECK(coop.config.n_modes == 2);
  CHECK(coop.config.omega == std::vector<double>{1.0, 1.0});
  CHECK(coop.config.lambda == std::vector<double>{0.25, 0.25});
  CHECK(coop.config.tau1 == 0.5);
  CHECK(coop.config.gamma_nc == 0.0);
  CHECK(coop.config.p0 == std::vector<double>{0.6, 0.4});
  CHECK(coop.sweep_key == "gamma_c");

  const Preset& contra = find_preset("fig4-gammanc-sweep");
  CHECK(contra.config.gamma_c == 0.0);
  CHECK(contra.sweep_key == "gamma_nc");

  const Preset& cubic = find_preset("fig5-gamma1");
  CHECK(cubic.config.n_modes == 3);
  CHECK(cubic.config.omega == std::vector<double>{0.1, 0.1, 0.1});
  CHECK(cubic.config.lambda == std::vector<double>{0.025, 0.025, 0.025});
  CHECK(cubic.config.gamma[0] == 1.0);
  CHECK(cubic.config.tau1 == 0.5);
  CHECK(cubic.config.kappa == 0.0);
  CHECK(cubic.config.p0 == std::vector<double>{0.7, 0.6, 0.5});

  for (int k = 1; k <= 4; ++k) {
    const Preset& weak_bob = find_preset("fig6-gamma" + std::to_string(k));
    CHECK(weak_bob.config.kappa == 0.1);
    CHECK(weak_bob.config.gamma[static_cast<size_t>(k - 1)] == 1.0);
  }

  const Preset& frozen = find_preset("null");
  CHECK(frozen.config.tau1 == 0.0);
  CHECK(frozen.config.omega == std::vector<double>{0.0});

  for (const auto& preset : preset_catalog()) {
    CAPTURE(preset.name);
    CHECK_NOTHROW(validate(preset.config));
    CHECK(preset.config.t_end == 100.0);
    CHECK(preset.config.dt == 0.01);
  }

  CHECK_THROWS_AS(find_preset("fig9-unknown"), ConfigError);
}

#include <gtest/gtest.h>

#include <string>

#include "uavvlc/config.hpp"

namespace {

using namespace uavvlc;

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, EmptyObjectGivesDefaults) {
  const RunConfig c = parse_config_text("{}");
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(c.vlc.semi_angle_half_power_deg, 60.0);
  EXPECT_EQ(c.vlc.fov_semi_angle_deg, 60.0);
  EXPECT_EQ(c.vlc.detector_area_m2, 1e-4);
  EXPECT_EQ(c.vlc.refractive_index, 1.5);
  EXPECT_EQ(c.vlc.noise_db, -110.0);
  EXPECT_EQ(c.rotor.rotor_disc_area, 0.503);
  EXPECT_EQ(c.rotor.mean_induced_velocity, 4.03);
  EXPECT_EQ(c.rotor.fuselage_drag_ratio, 0.6);
  EXPECT_EQ(c.rotor.tip_speed, 120.0);
  EXPECT_EQ(c.rotor.rotor_solidity, 0.05);
  EXPECT_EQ(c.rotor.air_density, 1.225);
  EXPECT_EQ(c.scenario.cruise_speed, 16.0);
}

TEST(Config, EmptyPowerBoundsUseDefaults) {
  const RunConfig c = parse_config_text(R"({"scenario": {"power_bounds": {}}})");
  EXPECT_EQ(c.scenario.power_bounds.min_w, 0.1);
  EXPECT_EQ(c.scenario.power_bounds.max_w, 10.0);
}

TEST(Config, OmittedSemiAngle) {
  const RunConfig c = parse_config_text(R"({"vlc": {"fov_semi_angle_deg": 70}})");
  EXPECT_EQ(c.vlc.semi_angle_half_power_deg, 60.0);
  EXPECT_EQ(c.vlc.fov_semi_angle_deg, 70.0);
}

TEST(Config, NegativeDetectorAreaNamesField) {
  const std::string e = error_of(R"({"vlc": {"detector_area_m2": -1e-4}})");
  EXPECT_NE(e.find("detector_area"), std::string::npos) << e;
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_NE(error_of(R"({"scenario": {"altitud": 8}})").find("scenario.altitud"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"extra": 1})").find("extra"), std::string::npos);
}

TEST(Config, SyntaxErrorHasLineAndColumn) {
  const std::string e = error_of("{\n  \"vlc\": {\n    \"noise_db\": ,\n  }\n}");
  EXPECT_NE(e.find("cfg.json:3:"), std::string::npos) << e;
}

TEST(Config, TypeErrorsNameField) {
  EXPECT_NE(error_of(R"({"algorithm": {"population": -3}})").find("algorithm.population"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algorithm": {"name": "pso"}})").find("pso"), std::string::npos);
}

TEST(Config, ValidationFailures) {
  EXPECT_NE(error_of(R"({"scenario": {"power_bounds": {"min_w": 5, "max_w": 1}}})")
                .find("power_bounds"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"scenario": {"grid_per_side": 1}})").find("grid_per_side"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"rotor": {"air_density": 0}})").find("air_density"), std::string::npos);
  EXPECT_NE(error_of(R"({"scenario": {"start_positions": [[1, 1]]}})").find("start_positions"),
            std::string::npos);
}

TEST(Config, RoundTripIsExact) {
  RunConfig c;
  c.scenario.label = "trip";
  c.scenario.eavesdropper = {{1.25, 2.5}};
  c.scenario.start_positions = std::vector<std::array<double, 2>>(8, {0.1, 0.7});
  c.vlc.noise_db = -97.3;
  c.rotor.induced_power_w = 0.1 + 0.2;
  c.algorithm.names = {Algorithm::MoeadCicm, Algorithm::Uniform};
  c.algorithm.cicm.circle_b = 1.0 / 3.0;
  c.run.seeds = {4, 5, 18446744073709551615ull};
  c.run.jobs = 3;
  EXPECT_EQ(parse_config_text(serialize_config(c)), c);
  const RunConfig d;
  EXPECT_EQ(parse_config_text(serialize_config(d)), d);
}

TEST(Config, CasePresets) {
  RunConfig c;
  apply_case_preset(c, 1);
  Scenario s1 = build_scenario(c);
  EXPECT_EQ(s1.receivers().size(), 6400u);
  EXPECT_EQ(s1.uav_count(), 8u);
  EXPECT_EQ(c.scenario.label, "case1");
  apply_case_preset(c, 2);
  Scenario s2 = build_scenario(c);
  EXPECT_EQ(s2.receivers().size(), 10000u);
  EXPECT_EQ(s2.uav_count(), 12u);
  EXPECT_EQ(s2.region().area(), 100.0);
  EXPECT_THROW(apply_case_preset(c, 3), ConfigError);
}

TEST(Config, ScenarioDefaults) {
  const Scenario s = build_scenario(RunConfig{});
  EXPECT_EQ(s.eavesdropper(), (Position3{6.0, 6.0, 0.0}));
  EXPECT_EQ(s.start_positions().size(), 8u);
  for (const Position3& p : s.start_positions()) {
    EXPECT_EQ(p.z, 8.0);
    EXPECT_TRUE(s.region().contains(p.x, p.y));
  }
  EXPECT_EQ(build_scenario(RunConfig{}).start_positions()[3], s.start_positions()[3]);
}

TEST(Config, ExplicitStarts) {
  RunConfig c;
  c.scenario.uav_count = 2;
  c.scenario.start_positions = std::vector<std::array<double, 2>>{{1, 2}, {3, 4}};
  const Scenario s = build_scenario(c);
  EXPECT_EQ(s.start_positions()[1], (Position3{3, 4, 8}));
}

TEST(Config, MissingFile) {
  EXPECT_THROW(parse_config("/nonexistent/cfg.json"), ConfigError);
}

} // namespace

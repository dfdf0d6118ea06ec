// Copyright (C) 2026 dpslam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dpslam/scenario.hpp"

using namespace dpslam;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("defaults describe the nominal circular-road scenario") {
  const ScenarioConfig cfg;
  cfg.validate();
  CHECK(cfg.k_max == 40);
  CHECK(cfg.dt == 0.5);
  CHECK(cfg.initial_state[kStateSpeed] == doctest::Approx(22.22));
  CHECK(cfg.initial_state[kStateClockBias] == 300.0);
  CHECK(cfg.va_positions.size() == 4);
  CHECK(cfg.sp_positions.size() == 4);
  CHECK(cfg.bs_position == Vec3(0, 0, 40));
  CHECK(cfg.dp.concentration == doctest::Approx(0.9));
  CHECK(cfg.gospa.c == 20.0);
}

TEST_CASE("save and load round-trip the full configuration") {
  TempFile tmp("dpslam_cfg_roundtrip.cfg");
  ScenarioConfig cfg;
  cfg.k_max = 17;
  cfg.p_detect = 0.42;
  cfg.seed = 987654321;
  cfg.dp.declare_sp = 3;
  cfg.va_positions = {Vec3(1, 2, 3), Vec3(-4, 5, -6)};
  cfg.sp_z_uniform = false;
  cfg.los_update = false;
  cfg.save(tmp.path);

  const ScenarioConfig back = ScenarioConfig::load(tmp.path);
  CHECK(back.k_max == 17);
  CHECK(back.p_detect == doctest::Approx(0.42));
  CHECK(back.seed == 987654321);
  CHECK(back.dp.declare_sp == 3);
  REQUIRE(back.va_positions.size() == 2);
  CHECK(back.va_positions[1] == Vec3(-4, 5, -6));
  CHECK_FALSE(back.sp_z_uniform);
  CHECK_FALSE(back.los_update);
  CHECK(back.to_key_values() == cfg.to_key_values());
}

TEST_CASE("comments and blank lines are accepted") {
  TempFile tmp("dpslam_cfg_comments.cfg");
  std::ofstream out(tmp.path);
  out << "# a comment\n\n"
      << "k_max = 12   # trailing comment\n"
      << "dt = 0.25\n";
  out.close();
  const ScenarioConfig cfg = ScenarioConfig::load(tmp.path);
  CHECK(cfg.k_max == 12);
  CHECK(cfg.dt == 0.25);
}

TEST_CASE("unknown keys are rejected") {
  TempFile tmp("dpslam_cfg_unknown.cfg");
  std::ofstream(tmp.path) << "no_such_key = 1\n";
  CHECK_THROWS_AS(ScenarioConfig::load(tmp.path), ConfigError);
}

TEST_CASE("malformed values are rejected") {
  TempFile tmp("dpslam_cfg_bad.cfg");
  std::ofstream(tmp.path) << "dt = banana\n";
  CHECK_THROWS_AS(ScenarioConfig::load(tmp.path), ConfigError);

  std::ofstream(tmp.path) << "initial_state = 1 2 3\n";  // needs 7
  CHECK_THROWS_AS(ScenarioConfig::load(tmp.path), ConfigError);

  std::ofstream(tmp.path) << "k_max = 10\nk_max = 11\n";  // duplicate
  CHECK_THROWS_AS(ScenarioConfig::load(tmp.path), ConfigError);
}

TEST_CASE("validation rejects out-of-range parameters") {
  ScenarioConfig cfg;
  cfg.p_detect = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = ScenarioConfig{};
  cfg.dt = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = ScenarioConfig{};
  cfg.dp.concentration = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = ScenarioConfig{};
  cfg.va_positions.push_back(cfg.bs_position);
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = ScenarioConfig{};
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

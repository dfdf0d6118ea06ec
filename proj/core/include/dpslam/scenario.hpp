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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "dpslam/dp_map.hpp"
#include "dpslam/gospa.hpp"
#include "dpslam/types.hpp"

namespace dpslam {

// Full experiment description: geometry, noise, clustering, metric and run
// parameters. Loads from / saves to a key-value text file (see
// ScenarioConfig::load for the format).
struct ScenarioConfig {
  int k_max = 40;
  double dt = 0.5;  // seconds

  // [x, y, z, heading, speed, turn_rate, clock_bias]
  Vec7 initial_state = (Vec7() << 0.7285, 0.0, 0.0, kPi / 2.0, 22.22,
                        kPi / 10.0, 300.0).finished();
  // Standard deviation of the initial estimate around the true state.
  Vec7 initial_std =
      (Vec7() << 0.3, 0.3, 0.0, 0.3, 0.0, 0.0, 0.3).finished();
  // Diagonal of the process noise covariance (per step).
  Vec7 process_noise_diag =
      (Vec7() << 0.2, 0.2, 0.0, 0.01, 0.0, 0.0, 0.2).finished();
  // Diagonal of the measurement noise covariance.
  Vec5 measurement_noise_diag =
      (Vec5() << 1e-2, 1e-4, 1e-4, 1e-4, 1e-4).finished();

  Vec3 bs_position = Vec3(0.0, 0.0, 40.0);
  std::vector<Vec3> va_positions = {Vec3(200, 0, 40), Vec3(-200, 0, 40),
                                    Vec3(0, 200, 40), Vec3(0, -200, 40)};
  std::vector<Vec3> sp_positions = {Vec3(65, 65, 20), Vec3(-65, 65, 20),
                                    Vec3(-65, -65, 20), Vec3(65, -65, 20)};
  // When set, SP z coordinates are redrawn per trial from U(min, max).
  bool sp_z_uniform = true;
  double sp_z_min = 0.0;
  double sp_z_max = 40.0;

  double p_detect = 0.9;
  double sp_fov = 50.0;       // SP detection range, meters
  double clutter_rate = 1.0;  // mean clutter count per step
  double r_max = 200.0;       // clutter TOA upper bound, meters
  // Scales the noise actually drawn by the simulator; the estimator keeps
  // using measurement_noise_diag. 0 gives noise-free synthetic data.
  double sim_noise_scale = 1.0;

  DpConfig dp;
  GospaConfig gospa;

  int trials = 50;
  std::uint64_t seed = 1;
  int threads = 0;         // 0 = hardware concurrency
  bool los_update = true;  // disable for dead-reckoning baselines

  Mat7 process_noise() const { return process_noise_diag.asDiagonal(); }
  Mat5 measurement_noise() const {
    return measurement_noise_diag.asDiagonal();
  }

  // Throws ConfigError on out-of-range parameters.
  void validate() const;

  // Serialization to the key-value format, one "key = value" per line.
  std::map<std::string, std::string> to_key_values() const;
  static ScenarioConfig from_key_values(
      const std::map<std::string, std::string>& kv);

  static ScenarioConfig load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;
};

}  // namespace dpslam

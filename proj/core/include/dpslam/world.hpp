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

#include "dpslam/rng.hpp"
#include "dpslam/scenario.hpp"
#include "dpslam/types.hpp"

namespace dpslam {

// Ground-truth geometry of one trial. Immutable after construction; SP z
// coordinates are drawn from the trial's RNG when the config asks for it.
class World {
 public:
  World(const ScenarioConfig& cfg, Rng& rng);

  const Vec3& bs() const { return bs_; }
  const std::vector<Landmark>& virtual_anchors() const { return vas_; }
  const std::vector<Landmark>& scatter_points() const { return sps_; }

  std::vector<Vec3> va_positions() const;
  std::vector<Vec3> sp_positions() const;

  // Detections (p_detect each, SPs only within sp_fov of the vehicle) with
  // additive Gaussian noise, plus Poisson(clutter_rate) clutter drawn
  // uniformly over [0, r_max] x azimuth/elevation boxes.
  SimMeasurementSet synthesize(const VehicleState& state, int k,
                               Rng& rng) const;

 private:
  Vec3 bs_;
  std::vector<Landmark> vas_;
  std::vector<Landmark> sps_;
  double p_detect_;
  double sp_fov_;
  double clutter_rate_;
  double r_max_;
  Vec5 noise_std_;
};

}  // namespace dpslam

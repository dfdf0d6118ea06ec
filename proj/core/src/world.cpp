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

#include "dpslam/world.hpp"

#include <algorithm>

#include "dpslam/measurement.hpp"

namespace dpslam {

World::World(const ScenarioConfig& cfg, Rng& rng)
    : bs_(cfg.bs_position),
      p_detect_(cfg.p_detect),
      sp_fov_(cfg.sp_fov),
      clutter_rate_(cfg.clutter_rate),
      r_max_(cfg.r_max),
      noise_std_(cfg.sim_noise_scale *
                 cfg.measurement_noise_diag.cwiseSqrt().array()) {
  for (const Vec3& va : cfg.va_positions)
    vas_.push_back(make_virtual_anchor(bs_, va));

  std::uniform_real_distribution<double> zdist(cfg.sp_z_min, cfg.sp_z_max);
  for (const Vec3& sp : cfg.sp_positions) {
    Vec3 p = sp;
    if (cfg.sp_z_uniform) p.z() = zdist(rng);
    sps_.push_back(Landmark{LandmarkKind::SP, p, std::nullopt});
  }
}

std::vector<Vec3> World::va_positions() const {
  std::vector<Vec3> out;
  for (const Landmark& lm : vas_) out.push_back(lm.position);
  return out;
}

std::vector<Vec3> World::sp_positions() const {
  std::vector<Vec3> out;
  for (const Landmark& lm : sps_) out.push_back(lm.position);
  return out;
}

SimMeasurementSet World::synthesize(const VehicleState& state, int k,
                                    Rng& rng) const {
  SimMeasurementSet set;
  set.k = k;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto emit = [&](const Landmark& lm, const TruthTag& tag) {
    if (unit(rng) >= p_detect_) return;
    Measurement z;
    try {
      z = measure(state, lm, bs_);
    } catch (const DegenerateGeometry&) {
      return;  // singular geometry, path not observable
    }
    z.toa = std::max(0.0, z.toa + noise_std_[kMeasToa] * gauss(rng));
    z.doa_az = wrap_angle(z.doa_az + noise_std_[kMeasDoaAz] * gauss(rng));
    z.doa_el = std::clamp(z.doa_el + noise_std_[kMeasDoaEl] * gauss(rng),
                          -kPi / 2.0, kPi / 2.0);
    z.dod_az = wrap_angle(z.dod_az + noise_std_[kMeasDodAz] * gauss(rng));
    z.dod_el = std::clamp(z.dod_el + noise_std_[kMeasDodEl] * gauss(rng),
                          -kPi / 2.0, kPi / 2.0);
    set.items.push_back(TaggedMeasurement{z, tag});
  };

  emit(Landmark{LandmarkKind::BS, bs_, std::nullopt},
       TruthTag{PathType::LOS, -1});
  for (std::size_t i = 0; i < vas_.size(); ++i)
    emit(vas_[i], TruthTag{PathType::VA, static_cast<int>(i)});
  for (std::size_t i = 0; i < sps_.size(); ++i) {
    if ((sps_[i].position - state.position).norm() > sp_fov_) continue;
    emit(sps_[i], TruthTag{PathType::SP, static_cast<int>(i)});
  }

  std::poisson_distribution<int> clutter_count(clutter_rate_);
  std::uniform_real_distribution<double> toa_dist(0.0, r_max_);
  std::uniform_real_distribution<double> az_dist(-kPi, kPi);
  std::uniform_real_distribution<double> el_dist(-kPi / 2.0, kPi / 2.0);
  const int n_clutter = clutter_rate_ > 0.0 ? clutter_count(rng) : 0;
  for (int i = 0; i < n_clutter; ++i) {
    Measurement z;
    z.toa = toa_dist(rng);
    z.doa_az = wrap_angle(az_dist(rng));
    z.doa_el = el_dist(rng);
    z.dod_az = wrap_angle(az_dist(rng));
    z.dod_el = el_dist(rng);
    set.items.push_back(
        TaggedMeasurement{z, TruthTag{PathType::Clutter, -1}});
  }
  return set;
}

}  // namespace dpslam

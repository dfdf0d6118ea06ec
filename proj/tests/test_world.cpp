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

#include <algorithm>

#include "dpslam/world.hpp"

using namespace dpslam;

namespace {

ScenarioConfig base_config() {
  ScenarioConfig cfg;
  cfg.sp_z_uniform = false;  // keep geometry deterministic
  return cfg;
}

VehicleState initial_state(const ScenarioConfig& cfg) {
  return VehicleState::from_vector(cfg.initial_state);
}

}  // namespace

TEST_CASE("deterministic detection: one LOS plus one path per VA") {
  ScenarioConfig cfg = base_config();
  cfg.p_detect = 1.0;
  cfg.clutter_rate = 0.0;
  cfg.sp_positions.clear();  // none in view
  Rng rng(1);
  const World world(cfg, rng);
  const SimMeasurementSet set = world.synthesize(initial_state(cfg), 1, rng);
  CHECK(set.items.size() == 5);
  CHECK(set.items[0].tag.type == PathType::LOS);
  int va_count = 0;
  for (const auto& m : set.items)
    if (m.tag.type == PathType::VA) ++va_count;
  CHECK(va_count == 4);
}

TEST_CASE("noisy measurements keep their angle and range bounds") {
  ScenarioConfig cfg = base_config();
  cfg.p_detect = 1.0;
  cfg.clutter_rate = 2.0;
  Rng rng(8);
  const World world(cfg, rng);
  VehicleState s = initial_state(cfg);
  for (int k = 1; k <= 50; ++k) {
    for (const auto& m : world.synthesize(s, k, rng).items) {
      CHECK(m.z.toa >= 0.0);
      CHECK(m.z.doa_az > -kPi);
      CHECK(m.z.doa_az <= kPi);
      CHECK(m.z.dod_az > -kPi);
      CHECK(m.z.dod_az <= kPi);
      CHECK(std::abs(m.z.doa_el) <= kPi / 2.0);
      CHECK(std::abs(m.z.dod_el) <= kPi / 2.0);
    }
  }
}

TEST_CASE("SP detection respects the field of view") {
  ScenarioConfig cfg = base_config();
  cfg.p_detect = 1.0;
  cfg.clutter_rate = 0.0;
  const VehicleState s = initial_state(cfg);
  // One SP just inside and one far outside the 50 m range.
  cfg.sp_positions = {Vec3(s.position.x() + 30.0, 20.0, 10.0),
                      Vec3(300.0, 300.0, 10.0)};
  Rng rng(2);
  const World world(cfg, rng);
  const SimMeasurementSet set = world.synthesize(s, 1, rng);
  int sp_count = 0;
  for (const auto& m : set.items)
    if (m.tag.type == PathType::SP) ++sp_count;
  CHECK(sp_count == 1);
}

TEST_CASE("mean measurement count matches the detection model") {
  ScenarioConfig cfg = base_config();
  cfg.p_detect = 0.9;
  cfg.clutter_rate = 1.0;
  const VehicleState s = initial_state(cfg);
  cfg.sp_positions = {Vec3(s.position.x() + 20.0, 15.0, 5.0),
                      Vec3(s.position.x() - 25.0, -10.0, 8.0)};
  Rng rng(3);
  const World world(cfg, rng);

  // 7 detectable paths at 0.9 each plus Poisson(1) clutter: mean 7.3.
  double total = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i)
    total += static_cast<double>(world.synthesize(s, 1, rng).items.size());
  CHECK(total / draws == doctest::Approx(7.3).epsilon(0.1 / 7.3));
}

TEST_CASE("clutter TOA is uniform on [0, r_max]") {
  ScenarioConfig cfg = base_config();
  cfg.p_detect = 0.0;
  cfg.clutter_rate = 5.0;
  Rng rng(4);
  const World world(cfg, rng);
  const VehicleState s = initial_state(cfg);

  std::vector<double> toas;
  while (toas.size() < 10000) {
    for (const auto& m : world.synthesize(s, 1, rng).items) {
      CHECK(m.tag.type == PathType::Clutter);
      toas.push_back(m.z.toa);
    }
  }
  toas.resize(10000);
  std::sort(toas.begin(), toas.end());

  // Kolmogorov-Smirnov against U(0, 200) at the 1% level.
  const double n = static_cast<double>(toas.size());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < toas.size(); ++i) {
    const double f = toas[i] / cfg.r_max;
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d_stat = std::max({d_stat, hi, lo});
  }
  CHECK(d_stat < 1.628 / std::sqrt(n));

  // Angle bounds hold for every clutter draw.
  for (double t : toas) {
    CHECK(t >= 0.0);
    CHECK(t <= cfg.r_max);
  }
}

TEST_CASE("same seed reproduces the measurement stream bit for bit") {
  ScenarioConfig cfg = base_config();
  cfg.sp_z_uniform = true;
  const VehicleState s = initial_state(cfg);

  for (int trial = 0; trial < 3; ++trial) {
    Rng rng_a(77 + trial), rng_b(77 + trial);
    const World wa(cfg, rng_a);
    const World wb(cfg, rng_b);
    REQUIRE(wa.sp_positions().size() == wb.sp_positions().size());
    for (std::size_t i = 0; i < wa.sp_positions().size(); ++i)
      CHECK(wa.sp_positions()[i] == wb.sp_positions()[i]);
    for (int k = 1; k <= 5; ++k) {
      const SimMeasurementSet sa = wa.synthesize(s, k, rng_a);
      const SimMeasurementSet sb = wb.synthesize(s, k, rng_b);
      REQUIRE(sa.items.size() == sb.items.size());
      for (std::size_t i = 0; i < sa.items.size(); ++i) {
        CHECK(sa.items[i].z.to_vector() == sb.items[i].z.to_vector());
        CHECK(sa.items[i].tag.type == sb.items[i].tag.type);
      }
    }
  }
}

TEST_CASE("SP heights are drawn per trial when configured") {
  ScenarioConfig cfg = base_config();
  cfg.sp_z_uniform = true;
  cfg.sp_z_min = 0.0;
  cfg.sp_z_max = 40.0;
  Rng rng1(10), rng2(11);
  const World w1(cfg, rng1);
  const World w2(cfg, rng2);
  bool any_different = false;
  for (std::size_t i = 0; i < w1.sp_positions().size(); ++i) {
    const double z1 = w1.sp_positions()[i].z();
    CHECK(z1 >= 0.0);
    CHECK(z1 <= 40.0);
    CHECK(w1.sp_positions()[i].head<2>() ==
          cfg.sp_positions[i].head<2>());
    if (z1 != w2.sp_positions()[i].z()) any_different = true;
  }
  CHECK(any_different);
}

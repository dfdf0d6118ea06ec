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

#include <benchmark/benchmark.h>

#include <random>

#include "dpslam/dp_map.hpp"
#include "dpslam/ekf.hpp"
#include "dpslam/gospa.hpp"
#include "dpslam/measurement.hpp"
#include "dpslam/trial.hpp"

namespace {

using namespace dpslam;

void BM_FullTrial(benchmark::State& state) {
  const ScenarioConfig cfg;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(cfg, seed++));
  }
}
BENCHMARK(BM_FullTrial)->Unit(benchmark::kMillisecond);

void BM_PredictUpdate(benchmark::State& state) {
  const ScenarioConfig cfg;
  GaussianState g;
  g.mean = cfg.initial_state;
  g.cov = cfg.initial_std.cwiseProduct(cfg.initial_std).asDiagonal();
  const Mat7 q = cfg.process_noise();
  const Mat5 r = cfg.measurement_noise();
  for (auto _ : state) {
    const GaussianState pred = predict(g, q, cfg.dt);
    const Measurement z =
        Measurement::from_vector(los_measurement(pred.mean, cfg.bs_position));
    benchmark::DoNotOptimize(update_los(pred, z, r, cfg.bs_position));
  }
}
BENCHMARK(BM_PredictUpdate);

void BM_AssignFuse(benchmark::State& state) {
  DpConfig cfg;
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss(0.0, 15.0);
  ClusterMap map;
  map.kind = LandmarkKind::SP;
  for (int i = 0; i < state.range(0); ++i) {
    const BirthPoint b{Vec3(gauss(rng), gauss(rng), gauss(rng)),
                       Mat3::Identity(), 0, LandmarkKind::SP};
    apply_assignment(map, b, assign(b, map, cfg));
  }
  const BirthPoint probe{Vec3(1, 2, 3), Mat3::Identity(), 0,
                         LandmarkKind::SP};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assign(probe, map, cfg));
  }
}
BENCHMARK(BM_AssignFuse)->Arg(8)->Arg(32)->Arg(128);

void BM_Gospa(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::vector<Vec3> est, truth;
  for (int i = 0; i < state.range(0); ++i) {
    est.emplace_back(u(rng), u(rng), 0.0);
    truth.emplace_back(u(rng), u(rng), 0.0);
  }
  const GospaConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gospa_distance(est, truth, cfg));
  }
}
BENCHMARK(BM_Gospa)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

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

#include "dpslam/trial.hpp"

#include <chrono>

#include "dpslam/ekf.hpp"
#include "dpslam/motion.hpp"
#include "dpslam/rng.hpp"
#include "dpslam/world.hpp"

namespace dpslam {

namespace {

void snapshot_map(const ClusterMap& map, const DpConfig& dp, int k,
                  std::vector<MapSnapshotRow>& out) {
  const int threshold = dp.declare_threshold(map.kind);
  for (std::size_t j = 0; j < map.clusters.size(); ++j) {
    const Cluster& c = map.clusters[j];
    out.push_back(MapSnapshotRow{k, map.kind, static_cast<int>(j), c.center,
                                 c.count,
                                 !c.anchor && c.count >= threshold});
  }
}

}  // namespace

TrialRecord run_trial(const ScenarioConfig& cfg, std::uint64_t seed,
                      int trial_index, const TrialOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();

  Rng rng(seed);
  const World world(cfg, rng);

  TrialRecord rec;
  rec.trial = trial_index;
  rec.seed = seed;
  rec.true_va = world.va_positions();
  rec.true_sp = world.sp_positions();
  rec.steps.reserve(cfg.k_max);

  VehicleState truth = VehicleState::from_vector(cfg.initial_state);

  // Initial estimate: prior mean drawn around the true state.
  std::normal_distribution<double> gauss(0.0, 1.0);
  GaussianState est;
  est.mean = cfg.initial_state;
  for (int i = 0; i < 7; ++i) est.mean[i] += cfg.initial_std[i] * gauss(rng);
  est.mean[kStateHeading] = wrap_angle(est.mean[kStateHeading]);
  est.cov = cfg.initial_std.cwiseProduct(cfg.initial_std).asDiagonal();

  auto [va_map, sp_map] = init_maps(cfg.bs_position, cfg.dp);

  const Mat7 q = cfg.process_noise();
  const Mat5 r = cfg.measurement_noise();

  for (int k = 1; k <= cfg.k_max; ++k) {
    truth = ground_truth_step(truth, cfg.dt);
    const SimMeasurementSet sim_set = world.synthesize(truth, k, rng);

    const GaussianState pred = predict(est, q, cfg.dt);
    const StepResult step =
        dp_step(sim_set.stripped(), pred, cfg.bs_position, r, va_map, sp_map,
                cfg.dp, opt.record_births);

    bool updated = false;
    if (cfg.los_update && step.los) {
      try {
        est = update_los(pred, *step.los, r, cfg.bs_position);
        updated = true;
      } catch (const SingularInnovation&) {
        est = pred;  // degrade to prediction only
      } catch (const DegenerateGeometry&) {
        est = pred;
      }
    } else {
      est = pred;
    }

    StepRecord sr;
    sr.k = k;
    sr.est_mean = est.mean;
    sr.est_std = est.cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    sr.truth = truth.to_vector();
    sr.updated = updated;
    sr.declared_va = declared_landmarks(va_map, cfg.dp);
    sr.declared_sp = declared_landmarks(sp_map, cfg.dp);
    rec.steps.push_back(std::move(sr));

    if (opt.record_measurements)
      for (const TaggedMeasurement& m : sim_set.items)
        rec.measurements.push_back(LoggedMeasurement{k, m.tag, m.z});
    if (opt.record_births)
      for (const BirthRecord& b : step.births)
        rec.births.push_back(LoggedBirth{
            k, b, sim_set.items[static_cast<std::size_t>(b.source_index)]
                      .tag.name()});
    if (opt.record_maps) {
      snapshot_map(va_map, cfg.dp, k, rec.map_snapshots);
      snapshot_map(sp_map, cfg.dp, k, rec.map_snapshots);
    }
  }

  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rec;
}

}  // namespace dpslam

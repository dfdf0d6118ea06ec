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

#include "dpslam/dp_map.hpp"
#include "dpslam/gospa.hpp"
#include "dpslam/types.hpp"

namespace dpslam {

// Everything recorded about one time step of one trial.
struct StepRecord {
  int k = 0;
  Vec7 est_mean = Vec7::Zero();
  Vec7 est_std = Vec7::Zero();
  Vec7 truth = Vec7::Zero();
  bool updated = false;  // an LOS correction was applied this step
  std::vector<Vec3> declared_va;
  std::vector<Vec3> declared_sp;
};

// Map snapshot row for diagnostics dumps.
struct MapSnapshotRow {
  int k = 0;
  LandmarkKind kind = LandmarkKind::VA;
  int cluster_id = 0;
  Vec3 center = Vec3::Zero();
  long count = 0;
  bool declared = false;
};

struct LoggedBirth {
  int k = 0;
  BirthRecord birth;
  std::string source_tag;
};

struct LoggedMeasurement {
  int k = 0;
  TruthTag tag;
  Measurement z;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  std::vector<Vec3> true_va;
  std::vector<Vec3> true_sp;
  std::vector<StepRecord> steps;  // k = 1 .. k_max
  // Optional logs, filled on request.
  std::vector<LoggedMeasurement> measurements;
  std::vector<LoggedBirth> births;
  std::vector<MapSnapshotRow> map_snapshots;
};

// Per-step aggregates across trials.
struct AggregateRow {
  int k = 0;
  double mae_pos = 0.0;       // mean Euclidean position error
  double rmse_bias = 0.0;     // clock bias RMSE
  double rmse_heading = 0.0;  // heading RMSE, errors wrapped to (-pi, pi]
  double gospa_va = 0.0;      // mean GOSPA, declared VAs vs true VAs
  double gospa_sp = 0.0;      // mean GOSPA, declared SPs vs true SPs
};

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& trials,
                                    const GospaConfig& cfg);

}  // namespace dpslam

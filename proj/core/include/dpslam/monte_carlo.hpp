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

#include <filesystem>

#include "dpslam/metrics.hpp"
#include "dpslam/scenario.hpp"
#include "dpslam/trial.hpp"

namespace dpslam {

struct MonteCarloResult {
  std::vector<TrialRecord> trials;
  std::vector<AggregateRow> aggregates;
  std::vector<std::uint64_t> trial_seeds;
};

// Runs cfg.trials independent trials on a bounded worker pool. Per-trial
// seeds derive from cfg.seed via trial_seed(), so results are identical
// for any thread count. Detailed logs are recorded for trial 0 only.
MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg);

// Writes states.csv, measurements.csv, maps.csv, births.csv, metrics.csv
// and manifest.json into out_dir (created if missing). The manifest holds
// the config snapshot, seeds, per-output checksums and per-trial timings;
// re-running with the same config and seed reproduces the CSVs byte for
// byte.
void write_outputs(const MonteCarloResult& result, const ScenarioConfig& cfg,
                   const std::filesystem::path& out_dir);

}  // namespace dpslam

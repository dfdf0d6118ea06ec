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

#include "dpslam/metrics.hpp"
#include "dpslam/scenario.hpp"

namespace dpslam {

struct TrialOptions {
  bool record_measurements = false;
  bool record_births = false;
  bool record_maps = false;
};

// One seeded trial of the full loop: ground-truth step, measurement
// synthesis, prediction, clustering pass (which classifies the LOS path),
// LOS correction when available. Landmark maps persist across steps. The
// initial estimate is the true initial state perturbed by initial_std.
TrialRecord run_trial(const ScenarioConfig& cfg, std::uint64_t seed,
                      int trial_index = 0, const TrialOptions& opt = {});

}  // namespace dpslam

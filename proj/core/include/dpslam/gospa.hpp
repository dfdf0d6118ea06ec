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

#include <vector>

#include "dpslam/types.hpp"

namespace dpslam {

struct GospaConfig {
  double p = 2.0;      // order, >= 1
  double c = 20.0;     // cutoff distance, meters
  double alpha = 2.0;  // (0, 2]; 2 gives the missed/false decomposition
};

// GOSPA distance between an estimated and a true point set. localization,
// missed and false_alarm are the contributions to total^p; with alpha = 2
// each missed or false object contributes c^p / 2.
struct GospaResult {
  double total = 0.0;
  double localization = 0.0;
  double missed = 0.0;
  double false_alarm = 0.0;
  int n_missed = 0;
  int n_false = 0;
};

GospaResult gospa_distance(const std::vector<Vec3>& estimates,
                           const std::vector<Vec3>& truth,
                           const GospaConfig& cfg);

namespace detail {

// Exact min-cost assignment on a square cost matrix (shortest augmenting
// path with potentials, O(n^3)). Returns the column matched to each row.
std::vector<int> solve_assignment(const Eigen::MatrixXd& cost);

}  // namespace detail

}  // namespace dpslam

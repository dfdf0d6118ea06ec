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

#include "dpslam/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace dpslam {

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& trials,
                                    const GospaConfig& cfg) {
  if (trials.empty()) throw std::invalid_argument("no trials to aggregate");
  const std::size_t k_count = trials[0].steps.size();
  for (const TrialRecord& t : trials)
    if (t.steps.size() != k_count)
      throw std::invalid_argument("trials have mismatched lengths");

  std::vector<AggregateRow> rows(k_count);
  const double n = static_cast<double>(trials.size());

  for (std::size_t s = 0; s < k_count; ++s) {
    AggregateRow& row = rows[s];
    row.k = trials[0].steps[s].k;
    double sum_pos = 0.0, sum_bias2 = 0.0, sum_head2 = 0.0;
    double sum_gospa_va = 0.0, sum_gospa_sp = 0.0;
    for (const TrialRecord& t : trials) {
      const StepRecord& r = t.steps[s];
      sum_pos += (r.est_mean.head<3>() - r.truth.head<3>()).norm();
      const double db =
          r.est_mean[kStateClockBias] - r.truth[kStateClockBias];
      sum_bias2 += db * db;
      const double dh =
          wrap_angle(r.est_mean[kStateHeading] - r.truth[kStateHeading]);
      sum_head2 += dh * dh;
      sum_gospa_va += gospa_distance(r.declared_va, t.true_va, cfg).total;
      sum_gospa_sp += gospa_distance(r.declared_sp, t.true_sp, cfg).total;
    }
    row.mae_pos = sum_pos / n;
    row.rmse_bias = std::sqrt(sum_bias2 / n);
    row.rmse_heading = std::sqrt(sum_head2 / n);
    row.gospa_va = sum_gospa_va / n;
    row.gospa_sp = sum_gospa_sp / n;
  }
  return rows;
}

}  // namespace dpslam

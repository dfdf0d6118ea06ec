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

#include <cstddef>
#include <optional>
#include <utility>

#include "dpslam/types.hpp"

namespace dpslam {

// One Gaussian cluster of birth points.
struct Cluster {
  Vec3 center = Vec3::Zero();
  Mat3 cov = Mat3::Identity();
  long count = 0;
  // The BS-anchored cluster of the VA map. It classifies LOS measurements
  // and acts as a fixed gate: assignments increment its count but do not
  // move or tighten it, and it is never reported as a landmark.
  bool anchor = false;
};

// Per-landmark-type cluster map. total_count is the running number of birth
// points ever assigned to this map (the anchor's seed point included).
struct ClusterMap {
  LandmarkKind kind = LandmarkKind::VA;
  std::vector<Cluster> clusters;
  long total_count = 0;
  long regularized_fusions = 0;
};

struct DpConfig {
  double concentration = 0.9;      // propensity to open new clusters
  Vec3 mu0 = Vec3::Zero();         // base-measure center for new clusters
  Mat3 sigma0 = 100.0 * Mat3::Identity();
  int declare_va = 16;             // count threshold per landmark type
  int declare_sp = 4;
  Mat3 anchor_sigma = 25.0 * Mat3::Identity();

  int declare_threshold(LandmarkKind kind) const {
    return kind == LandmarkKind::SP ? declare_sp : declare_va;
  }
};

// VA map seeded with the BS-anchored cluster (count 1); SP map empty.
std::pair<ClusterMap, ClusterMap> init_maps(const Vec3& bs,
                                            const DpConfig& cfg);

// Result of assigning one birth point. weights holds one unnormalized
// assignment weight per existing cluster plus, as the last entry, the
// new-cluster weight: weight(j) = N(mean; c_j, Sigma_j) * d_j / (D - 1 + w)
// and weight(new) = N(mean; mu0, Sigma0) * w / (D - 1 + w), where D counts
// the point being assigned. Computed in the log domain; the argmax ties
// break toward the lowest existing index, then existing over new.
struct Assignment {
  std::size_t index = 0;  // winning cluster; weights.size()-1 means new
  bool is_new = false;
  std::vector<double> weights;

  double probability(std::size_t j) const;  // normalized weight
  double win_probability() const { return probability(index); }
};

Assignment assign(const BirthPoint& b, const ClusterMap& map,
                  const DpConfig& cfg);

// Information-form fusion of a birth point into a cluster:
// Sigma' = (Sigma^-1 + C^-1)^-1, c' = Sigma'(Sigma^-1 c + C^-1 m), count+1.
// Near-singular covariances (condition number > 1e12) are regularized with
// a 1e-9 jitter; *regularized reports that.
Cluster fuse(const Cluster& cluster, const BirthPoint& b,
             bool* regularized = nullptr);

// Applies one assignment to the map: fuses into the winner or appends a new
// cluster seeded from the birth point, and bumps total_count. Returns the
// index of the updated/created cluster.
std::size_t apply_assignment(ClusterMap& map, const BirthPoint& b,
                             const Assignment& a);

// Centers of clusters with count >= the declaration threshold for the
// map's kind; the BS anchor is never included.
std::vector<Vec3> declared_landmarks(const ClusterMap& map,
                                     const DpConfig& cfg);

enum class StepLabel { LOS, VA, SPCandidate, Skipped };

// Birth point generated during a step, for diagnostics dumps.
struct BirthRecord {
  LandmarkKind kind = LandmarkKind::VA;
  int source_index = -1;
  Vec3 mean = Vec3::Zero();
};

struct StepResult {
  std::optional<Measurement> los;  // classified LOS measurement, if any
  double los_probability = 0.0;
  std::vector<StepLabel> labels;   // one per input measurement
  int skipped = 0;                 // measurements whose birth failed
  std::vector<BirthRecord> births; // filled when record_births is set
};

// One clustering pass over a measurement set. Phase 1 fuses every
// measurement's VA birth into the VA map; a birth captured by the anchor
// labels its measurement LOS, one captured by any other existing cluster
// labels it VA (claimed by the reflector map). Phase 2 converts the
// remaining measurements to SP births and fuses them into the SP map.
// Birth failures skip the measurement. noise is the measurement covariance
// entering the birth information form.
StepResult dp_step(const std::vector<Measurement>& measurements,
                   const GaussianState& pred, const Vec3& bs,
                   const Mat5& noise, ClusterMap& va_map, ClusterMap& sp_map,
                   const DpConfig& cfg, bool record_births = false);

}  // namespace dpslam

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

#include "dpslam/dp_map.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "dpslam/birth.hpp"

namespace dpslam {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;
constexpr double kFuseConditionLimit = 1e12;
constexpr double kFuseJitter = 1e-9;

// Log of the Gaussian density; -inf when the covariance is not PD.
double log_gaussian(const Vec3& x, const Vec3& mu, const Mat3& sigma) {
  const Eigen::LLT<Mat3> llt(sigma);
  if (llt.info() != Eigen::Success)
    return -std::numeric_limits<double>::infinity();
  const Mat3 l = llt.matrixL();
  const Vec3 y = l.triangularView<Eigen::Lower>().solve(x - mu);
  const double logdet =
      2.0 * (std::log(l(0, 0)) + std::log(l(1, 1)) + std::log(l(2, 2)));
  return -1.5 * kLog2Pi - 0.5 * logdet - 0.5 * y.squaredNorm();
}

// Adds jitter until the condition number is acceptable.
bool regularize_if_needed(Mat3& m) {
  const Eigen::SelfAdjointEigenSolver<Mat3> es(m);
  const double emin = es.eigenvalues().minCoeff();
  const double emax = es.eigenvalues().maxCoeff();
  if (emin > 0.0 && emax / emin <= kFuseConditionLimit) return false;
  m += kFuseJitter * Mat3::Identity();
  return true;
}

}  // namespace

std::pair<ClusterMap, ClusterMap> init_maps(const Vec3& bs,
                                            const DpConfig& cfg) {
  ClusterMap va_map;
  va_map.kind = LandmarkKind::VA;
  va_map.clusters.push_back(Cluster{bs, cfg.anchor_sigma, 1, true});
  va_map.total_count = 1;

  ClusterMap sp_map;
  sp_map.kind = LandmarkKind::SP;
  return {va_map, sp_map};
}

double Assignment::probability(std::size_t j) const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (sum > 0.0) return weights[j] / sum;
  return j == index ? 1.0 : 0.0;  // all weights underflowed
}

Assignment assign(const BirthPoint& b, const ClusterMap& map,
                  const DpConfig& cfg) {
  const std::size_t n = map.clusters.size();
  // D counts the point being assigned, so the denominator is total + w.
  const double log_denom =
      std::log(static_cast<double>(map.total_count) + cfg.concentration);

  std::vector<double> logw(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Cluster& c = map.clusters[j];
    logw[j] = log_gaussian(b.mean, c.center, c.cov) +
              std::log(static_cast<double>(c.count)) - log_denom;
  }
  logw[n] = log_gaussian(b.mean, cfg.mu0, cfg.sigma0) +
            std::log(cfg.concentration) - log_denom;

  // Argmax with strict comparison: ties go to the lowest existing index,
  // and to an existing cluster over the new one.
  std::size_t best = n;
  double best_log = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= n; ++j) {
    if (std::isfinite(logw[j]) && logw[j] > best_log) {
      best_log = logw[j];
      best = j;
    }
  }

  Assignment a;
  a.index = best;
  a.is_new = best == n;
  a.weights.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) a.weights[j] = std::exp(logw[j]);
  return a;
}

Cluster fuse(const Cluster& cluster, const BirthPoint& b, bool* regularized) {
  Mat3 sigma = cluster.cov;
  Mat3 c = b.cov;
  bool reg = regularize_if_needed(sigma);
  reg |= regularize_if_needed(c);
  if (regularized) *regularized = reg;

  const Mat3 sigma_inv = sigma.inverse();
  const Mat3 c_inv = c.inverse();
  Cluster out = cluster;
  out.cov = symmetrize((sigma_inv + c_inv).inverse());
  out.center = out.cov * (sigma_inv * cluster.center + c_inv * b.mean);
  out.count = cluster.count + 1;
  return out;
}

std::size_t apply_assignment(ClusterMap& map, const BirthPoint& b,
                             const Assignment& a) {
  std::size_t idx = a.index;
  if (a.is_new) {
    map.clusters.push_back(Cluster{b.mean, symmetrize(b.cov), 1, false});
    idx = map.clusters.size() - 1;
  } else if (map.clusters[idx].anchor) {
    // The anchor is a fixed gate: it counts assignments but never moves.
    map.clusters[idx].count += 1;
  } else {
    bool reg = false;
    map.clusters[idx] = fuse(map.clusters[idx], b, &reg);
    if (reg) map.regularized_fusions += 1;
  }
  map.total_count += 1;
  return idx;
}

std::vector<Vec3> declared_landmarks(const ClusterMap& map,
                                     const DpConfig& cfg) {
  const int threshold = cfg.declare_threshold(map.kind);
  std::vector<Vec3> out;
  for (const Cluster& c : map.clusters)
    if (!c.anchor && c.count >= threshold) out.push_back(c.center);
  return out;
}

StepResult dp_step(const std::vector<Measurement>& measurements,
                   const GaussianState& pred, const Vec3& bs,
                   const Mat5& noise, ClusterMap& va_map, ClusterMap& sp_map,
                   const DpConfig& cfg, bool record_births) {
  StepResult res;
  res.labels.assign(measurements.size(), StepLabel::SPCandidate);

  // Phase 1: every measurement's mirror-source hypothesis goes into the
  // VA map. Capture by the anchor classifies the measurement as LOS;
  // capture by any other existing cluster claims it as a reflector path.
  // Only measurements whose hypothesis opened a new cluster stay scatter
  // candidates.
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    BirthPoint b;
    try {
      b = va_birth(measurements[i], static_cast<int>(i), pred, noise);
    } catch (const NegativeRange&) {
      res.labels[i] = StepLabel::Skipped;
      res.skipped += 1;
      continue;
    } catch (const DegenerateGeometry&) {
      res.labels[i] = StepLabel::Skipped;
      res.skipped += 1;
      continue;
    }
    if (record_births)
      res.births.push_back(
          BirthRecord{LandmarkKind::VA, static_cast<int>(i), b.mean});

    const Assignment a = assign(b, va_map, cfg);
    const std::size_t idx = apply_assignment(va_map, b, a);
    const Cluster& winner = va_map.clusters[idx];
    if (winner.anchor) {
      res.labels[i] = StepLabel::LOS;
      const double p = a.win_probability();
      if (!res.los || p > res.los_probability) {
        res.los = measurements[i];
        res.los_probability = p;
      }
    } else if (!a.is_new) {
      res.labels[i] = StepLabel::VA;
    }
  }

  // Phase 2: remaining measurements become scatter-point hypotheses.
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    if (res.labels[i] != StepLabel::SPCandidate) continue;
    BirthPoint b;
    try {
      b = sp_birth(measurements[i], static_cast<int>(i), pred, bs, noise);
    } catch (const NegativeRange&) {
      res.labels[i] = StepLabel::Skipped;
      res.skipped += 1;
      continue;
    } catch (const DegenerateGeometry&) {
      res.labels[i] = StepLabel::Skipped;
      res.skipped += 1;
      continue;
    }
    if (record_births)
      res.births.push_back(
          BirthRecord{LandmarkKind::SP, static_cast<int>(i), b.mean});

    const Assignment a = assign(b, sp_map, cfg);
    apply_assignment(sp_map, b, a);
  }
  return res;
}

}  // namespace dpslam

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

#include "dpslam/ekf.hpp"

#include <Eigen/SVD>

#include "dpslam/measurement.hpp"
#include "dpslam/motion.hpp"

namespace dpslam {

GaussianState predict(const GaussianState& prior, const Mat7& q, double dt) {
  const Mat7 g = motion_jacobian(prior.mean, dt);
  GaussianState out;
  out.mean = motion_step(prior.mean, dt);
  out.cov = symmetrize(g * prior.cov * g.transpose() + q);
  return out;
}

GaussianState update_los(const GaussianState& pred, const Measurement& z,
                         const Mat5& r, const Vec3& bs) {
  const Mat57 h = los_jacobian(pred.mean, bs);
  const Mat5 s = h * pred.cov * h.transpose() + r;

  const Eigen::JacobiSVD<Mat5> svd(s);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularInnovation("innovation covariance is numerically singular");

  const Eigen::Matrix<double, 7, 5> k =
      s.ldlt().solve(h * pred.cov).transpose();

  Vec5 innovation = z.to_vector() - los_measurement(pred.mean, bs);
  for (int i = kMeasDoaAz; i <= kMeasDodEl; ++i)
    innovation[i] = wrap_angle(innovation[i]);

  GaussianState out;
  out.mean = pred.mean + k * innovation;
  out.mean[kStateHeading] = wrap_angle(out.mean[kStateHeading]);

  // Joseph form keeps the covariance PSD.
  const Mat7 a = Mat7::Identity() - k * h;
  out.cov = symmetrize(a * pred.cov * a.transpose() + k * r * k.transpose());
  return out;
}

}  // namespace dpslam

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

#include "dpslam/birth.hpp"

#include "dpslam/measurement.hpp"

namespace dpslam {

Vec3 va_birth_mean(const Measurement& z, const Vec7& pred_mean) {
  const double range = z.toa - pred_mean[kStateClockBias];
  if (range <= 0.0)
    throw NegativeRange("toa not above the predicted clock bias");
  const double az = z.doa_az + pred_mean[kStateHeading];
  const double horiz = range * std::cos(z.doa_el);
  return pred_mean.head<3>() +
         Vec3(horiz * std::cos(az), horiz * std::sin(az),
              range * std::sin(z.doa_el));
}

namespace {

// First-order covariance of a birth point at `mean`:
// C = (Hx^T S^-1 Hx)^-1 with S = Hs V Hs^T + R. Only the TOA/DOA rows
// enter: they are the three equations the birth point inverts, and the
// departure angles carry no information about the hypothesized source.
Mat3 birth_covariance(const Vec3& mean, const GaussianState& pred,
                      const Mat5& r) {
  const Eigen::Matrix<double, 3, 7> hs =
      landmark_jacobian_state(pred.mean, mean).topRows<3>();
  const Mat3 hx =
      landmark_jacobian_position(pred.mean, mean).topRows<3>();
  const Mat3 s =
      hs * pred.cov * hs.transpose() + r.topLeftCorner<3, 3>();

  const auto ldlt = s.ldlt();
  if (ldlt.info() != Eigen::Success)
    throw DegenerateGeometry("birth innovation covariance not factorizable");
  const Mat3 info = hx.transpose() * ldlt.solve(hx);
  const Mat3 cov = symmetrize(info.inverse());
  if (!cov.allFinite())
    throw DegenerateGeometry("birth covariance not finite");
  return cov;
}

}  // namespace

BirthPoint va_birth(const Measurement& z, int source_index,
                    const GaussianState& pred, const Mat5& r) {
  BirthPoint b;
  b.kind = LandmarkKind::VA;
  b.source_index = source_index;
  b.mean = va_birth_mean(z, pred.mean);
  b.cov = birth_covariance(b.mean, pred, r);
  return b;
}

BirthPoint sp_birth(const Measurement& z, int source_index,
                    const GaussianState& pred, const Vec3& bs,
                    const Mat5& r) {
  const Vec3 m_va = va_birth_mean(z, pred.mean);
  const Vec3 to_bs = bs - m_va;
  const double dist = to_bs.norm();
  if (dist < kHorizontalEps)
    throw DegenerateGeometry("VA hypothesis coincides with the BS");

  // Crossing of the ray (m_va -> vehicle) with the perpendicular bisector
  // plane of [bs, m_va]; the bounce point is equidistant from both.
  const Vec3 u = to_bs / dist;
  const Vec3 ray = pred.mean.head<3>() - m_va;
  const double denom = u.dot(ray);
  if (std::abs(denom) < 1e-9)
    throw DegenerateGeometry("ray parallel to the bisector plane");
  const double t = 0.5 * dist / denom;
  if (t <= 0.0 || t > 1.0)
    throw DegenerateGeometry("bounce point outside the path segment");

  BirthPoint b;
  b.kind = LandmarkKind::SP;
  b.source_index = source_index;
  b.mean = m_va + t * ray;
  b.cov = birth_covariance(b.mean, pred, r);
  return b;
}

}  // namespace dpslam

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

#include "dpslam/measurement.hpp"

namespace dpslam {

std::string path_type_name(PathType t) {
  switch (t) {
    case PathType::LOS:
      return "LOS";
    case PathType::VA:
      return "VA";
    case PathType::SP:
      return "SP";
    case PathType::Clutter:
      return "CLUTTER";
  }
  return "?";
}

std::string TruthTag::name() const {
  if (type == PathType::LOS || type == PathType::Clutter)
    return path_type_name(type);
  return path_type_name(type) + std::to_string(id);
}

Landmark make_virtual_anchor(const Vec3& bs, const Vec3& va_position) {
  const Vec3 d = va_position - bs;
  if (d.norm() < kHorizontalEps)
    throw DegenerateGeometry("virtual anchor coincides with the BS");
  Landmark lm;
  lm.kind = LandmarkKind::VA;
  lm.position = va_position;
  lm.plane = ReflectingPlane{0.5 * (bs + va_position), d.normalized()};
  return lm;
}

AzEl global_angles(const Vec3& v) {
  const double h = std::hypot(v.x(), v.y());
  if (h < kHorizontalEps)
    throw DegenerateGeometry("azimuth undefined: zero horizontal distance");
  return {std::atan2(v.y(), v.x()), std::atan2(v.z(), h)};
}

namespace {

// Wall point where the line va -> vehicle crosses the reflecting plane.
// The line (not the segment) is used so the geometry stays defined when
// the vehicle is on the far side of the wall.
Vec3 wall_crossing(const Vec3& vehicle, const Landmark& va) {
  const ReflectingPlane& pl = *va.plane;
  const Vec3 dir = vehicle - va.position;
  const double denom = pl.normal.dot(dir);
  if (std::abs(denom) < kHorizontalEps)
    throw DegenerateGeometry("path parallel to reflecting plane");
  const double t = pl.normal.dot(pl.point - va.position) / denom;
  return va.position + t * dir;
}

}  // namespace

double reflected_path_length(const Vec3& vehicle, const Landmark& va,
                             const Vec3& bs) {
  const Vec3 q = wall_crossing(vehicle, va);
  return (q - bs).norm() + (vehicle - q).norm();
}

Measurement measure(const VehicleState& state, const Landmark& lm,
                    const Vec3& bs) {
  const Vec3& pos = state.position;
  Measurement z;

  switch (lm.kind) {
    case LandmarkKind::BS: {
      const Vec3 to_bs = bs - pos;
      const AzEl doa = global_angles(to_bs);
      const AzEl dod = global_angles(-to_bs);
      z.toa = to_bs.norm() + state.clock_bias;
      z.doa_az = wrap_angle(doa.az - state.heading);
      z.doa_el = doa.el;
      z.dod_az = dod.az;
      z.dod_el = dod.el;
      return z;
    }
    case LandmarkKind::VA: {
      const Vec3 to_va = lm.position - pos;
      const AzEl doa = global_angles(to_va);
      const AzEl dod = global_angles(wall_crossing(pos, lm) - bs);
      z.toa = to_va.norm() + state.clock_bias;
      z.doa_az = wrap_angle(doa.az - state.heading);
      z.doa_el = doa.el;
      z.dod_az = dod.az;
      z.dod_el = dod.el;
      return z;
    }
    case LandmarkKind::SP: {
      const Vec3 to_sp = lm.position - pos;
      const AzEl doa = global_angles(to_sp);
      const AzEl dod = global_angles(lm.position - bs);
      z.toa = (lm.position - bs).norm() + to_sp.norm() + state.clock_bias;
      z.doa_az = wrap_angle(doa.az - state.heading);
      z.doa_el = doa.el;
      z.dod_az = dod.az;
      z.dod_el = dod.el;
      return z;
    }
  }
  throw std::logic_error("unreachable landmark kind");
}

Vec5 landmark_measurement(const Vec7& state, const Vec3& landmark) {
  const Vec3 pos = state.head<3>();
  const Vec3 v = landmark - pos;
  const AzEl doa = global_angles(v);
  const AzEl dod = global_angles(-v);
  Vec5 z;
  z[kMeasToa] = v.norm() + state[kStateClockBias];
  z[kMeasDoaAz] = wrap_angle(doa.az - state[kStateHeading]);
  z[kMeasDoaEl] = doa.el;
  z[kMeasDodAz] = dod.az;
  z[kMeasDodEl] = dod.el;
  return z;
}

Vec5 los_measurement(const Vec7& state, const Vec3& bs) {
  return landmark_measurement(state, bs);
}

Mat53 landmark_jacobian_position(const Vec7& state, const Vec3& landmark) {
  const Vec3 v = landmark - state.head<3>();
  const double delta2 = v.squaredNorm();
  const double delta = std::sqrt(delta2);
  const double phi = std::hypot(v.x(), v.y());
  if (phi < kHorizontalEps)
    throw DegenerateGeometry("azimuth undefined: zero horizontal distance");
  const double phi2 = phi * phi;

  Mat53 h = Mat53::Zero();
  h.row(kMeasToa) = v.transpose() / delta;
  h(kMeasDoaAz, 0) = -v.y() / phi2;
  h(kMeasDoaAz, 1) = v.x() / phi2;
  h(kMeasDoaEl, 0) = -v.z() * v.x() / (delta2 * phi);
  h(kMeasDoaEl, 1) = -v.z() * v.y() / (delta2 * phi);
  h(kMeasDoaEl, 2) = phi / delta2;
  h.row(kMeasDodAz) = h.row(kMeasDoaAz);
  h.row(kMeasDodEl) = -h.row(kMeasDoaEl);
  return h;
}

Mat57 landmark_jacobian_state(const Vec7& state, const Vec3& landmark) {
  const Mat53 hx = landmark_jacobian_position(state, landmark);
  Mat57 h = Mat57::Zero();
  h.block<5, 3>(0, 0) = -hx;
  h(kMeasToa, kStateClockBias) = 1.0;
  h(kMeasDoaAz, kStateHeading) = -1.0;
  return h;
}

Mat57 los_jacobian(const Vec7& state, const Vec3& bs) {
  return landmark_jacobian_state(state, bs);
}

}  // namespace dpslam

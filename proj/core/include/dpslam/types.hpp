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

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpslam {

using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat57 = Eigen::Matrix<double, 5, 7>;
using Mat53 = Eigen::Matrix<double, 5, 3>;

inline constexpr double kPi = 3.14159265358979323846;

// State vector layout: [x, y, z, heading, speed, turn_rate, clock_bias].
enum StateIndex : int {
  kStateX = 0,
  kStateY = 1,
  kStateZ = 2,
  kStateHeading = 3,
  kStateSpeed = 4,
  kStateTurnRate = 5,
  kStateClockBias = 6,
};

// Measurement vector layout: [toa, doa_az, doa_el, dod_az, dod_el].
enum MeasurementIndex : int {
  kMeasToa = 0,
  kMeasDoaAz = 1,
  kMeasDoaEl = 2,
  kMeasDodAz = 3,
  kMeasDodEl = 4,
};

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

template <typename Derived>
typename Derived::PlainObject symmetrize(const Eigen::MatrixBase<Derived>& m) {
  return 0.5 * (m + m.transpose()).eval();
}

struct DegenerateGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularInnovation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vehicle kinematic + clock state. Heading is kept in (-pi, pi], the
// clock bias is range-equivalent (meters).
struct VehicleState {
  Vec3 position = Vec3::Zero();
  double heading = 0.0;
  double speed = 0.0;
  double turn_rate = 0.0;
  double clock_bias = 0.0;

  Vec7 to_vector() const {
    Vec7 v;
    v << position.x(), position.y(), position.z(), heading, speed, turn_rate,
        clock_bias;
    return v;
  }

  static VehicleState from_vector(const Vec7& v) {
    VehicleState s;
    s.position = v.head<3>();
    s.heading = v[kStateHeading];
    s.speed = v[kStateSpeed];
    s.turn_rate = v[kStateTurnRate];
    s.clock_bias = v[kStateClockBias];
    return s;
  }
};

enum class LandmarkKind { BS, VA, SP };

// Plane of a reflecting surface, stored as a point on the plane and a unit
// normal. For a virtual anchor this is the perpendicular bisector of the
// segment [bs, va], so the anchor is the mirror image of the BS.
struct ReflectingPlane {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitX();
};

struct Landmark {
  LandmarkKind kind = LandmarkKind::BS;
  Vec3 position = Vec3::Zero();
  std::optional<ReflectingPlane> plane;  // present iff kind == VA
};

// Builds a virtual-anchor landmark from the BS and the mirror position;
// the wall plane is derived as the perpendicular bisector of [bs, va].
Landmark make_virtual_anchor(const Vec3& bs, const Vec3& va_position);

// One multipath observation, as seen by the estimator. Angles in radians;
// DOA azimuth is in the vehicle frame (global azimuth minus heading),
// DOD angles are in the global frame at the BS. TOA is range-equivalent
// meters and includes the clock bias.
struct Measurement {
  double toa = 0.0;
  double doa_az = 0.0;
  double doa_el = 0.0;
  double dod_az = 0.0;
  double dod_el = 0.0;

  Vec5 to_vector() const {
    Vec5 v;
    v << toa, doa_az, doa_el, dod_az, dod_el;
    return v;
  }

  static Measurement from_vector(const Vec5& v) {
    return Measurement{v[kMeasToa], v[kMeasDoaAz], v[kMeasDoaEl],
                       v[kMeasDodAz], v[kMeasDodEl]};
  }
};

enum class PathType { LOS, VA, SP, Clutter };

std::string path_type_name(PathType t);

// Simulation-side ground-truth label of a measurement. Estimation code
// never sees this type: the simulator hands estimators plain Measurement
// values with the tag stripped.
struct TruthTag {
  PathType type = PathType::Clutter;
  int id = -1;  // index into the VA or SP list, -1 otherwise

  std::string name() const;
};

struct TaggedMeasurement {
  Measurement z;
  TruthTag tag;
};

// Measurement set of one time step as produced by the simulator.
struct SimMeasurementSet {
  int k = 0;
  std::vector<TaggedMeasurement> items;

  // Estimator-facing view: tags removed.
  std::vector<Measurement> stripped() const {
    std::vector<Measurement> out;
    out.reserve(items.size());
    for (const auto& m : items) out.push_back(m.z);
    return out;
  }
};

// Gaussian density over the 7D vehicle state.
struct GaussianState {
  Vec7 mean = Vec7::Zero();
  Mat7 cov = Mat7::Zero();
};

// Gaussian landmark-position hypothesis derived from one measurement.
struct BirthPoint {
  Vec3 mean = Vec3::Zero();
  Mat3 cov = Mat3::Identity();
  int source_index = -1;
  LandmarkKind kind = LandmarkKind::VA;
};

}  // namespace dpslam

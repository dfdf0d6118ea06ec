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

#include "dpslam/types.hpp"

namespace dpslam {

// Below this horizontal distance the azimuth is treated as undefined.
inline constexpr double kHorizontalEps = 1e-9;

struct AzEl {
  double az = 0.0;
  double el = 0.0;
};

// Global-frame azimuth/elevation of a direction vector. Elevation is
// atan2(dz, horizontal distance). Throws DegenerateGeometry when the
// horizontal distance vanishes.
AzEl global_angles(const Vec3& v);

// Noise-free measurement of a landmark from a vehicle state:
//  - LOS (kind BS):  toa = |bs - pos| + bias, DOA toward the BS in the
//    vehicle frame, DOD toward the vehicle at the BS.
//  - VA: toa = |va - pos| + bias (mirror-path identity), DOA toward the VA,
//    DOD toward the wall point where the line va->pos crosses the
//    reflecting plane.
//  - SP: toa = |bs - sp| + |sp - pos| + bias, DOA/DOD toward the SP.
Measurement measure(const VehicleState& state, const Landmark& lm,
                    const Vec3& bs);

// Physical two-segment path length bs -> reflection point -> vehicle for a
// VA landmark. Used as an independent check of the mirror identity.
double reflected_path_length(const Vec3& vehicle, const Landmark& va,
                             const Vec3& bs);

// Noise-free LOS measurement as a 5-vector of the state vector; the EKF
// correction linearizes this map.
Vec5 los_measurement(const Vec7& state, const Vec3& bs);

// Analytic 5x7 Jacobian of los_measurement with respect to the state.
// Throws DegenerateGeometry when the vehicle sits on the BS vertical axis.
Mat57 los_jacobian(const Vec7& state, const Vec3& bs);

// LOS-form measurement with an arbitrary landmark position substituted for
// the BS: [|x - pos| + bias, angles of (x - pos) at the vehicle, angles of
// (pos - x) at the landmark]. Birth covariances linearize this map in both
// the state and the landmark position.
Vec5 landmark_measurement(const Vec7& state, const Vec3& landmark);

// d landmark_measurement / d state, 5x7.
Mat57 landmark_jacobian_state(const Vec7& state, const Vec3& landmark);

// d landmark_measurement / d landmark position, 5x3.
Mat53 landmark_jacobian_position(const Vec7& state, const Vec3& landmark);

}  // namespace dpslam

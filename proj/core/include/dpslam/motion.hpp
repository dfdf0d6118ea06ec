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

// Turn rates below this magnitude use the straight-line limit of the
// coordinated-turn transition.
inline constexpr double kStraightLineTurnRate = 1e-6;

// Coordinated-turn transition over one step of length dt. Speed, turn rate,
// clock bias and z are constant; heading advances by turn_rate*dt and is
// re-wrapped to (-pi, pi].
Vec7 motion_step(const Vec7& state, double dt);

inline VehicleState ground_truth_step(const VehicleState& s, double dt) {
  return VehicleState::from_vector(motion_step(s.to_vector(), dt));
}

// Analytic 7x7 Jacobian of motion_step at the given state.
Mat7 motion_jacobian(const Vec7& state, double dt);

}  // namespace dpslam

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

// Prediction through the coordinated-turn transition: mean through the
// transition, covariance through its Jacobian plus Q, re-symmetrized.
// Components with zero prior variance and zero process noise stay
// deterministic.
GaussianState predict(const GaussianState& prior, const Mat7& q, double dt);

// EKF correction from a classified LOS measurement. Angular innovation
// components are wrapped to (-pi, pi]; the covariance update uses the
// Joseph form. Throws SingularInnovation when the innovation covariance
// has condition number above 1e12.
GaussianState update_los(const GaussianState& pred, const Measurement& z,
                         const Mat5& r, const Vec3& bs);

}  // namespace dpslam

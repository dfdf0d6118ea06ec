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

// Mirror-source hypothesis of a measurement: the position the path would
// radiate from if it were a single bounce. Range r = (toa - bias) from the
// predicted vehicle position along the measured arrival direction (DOA
// azimuth restored to the global frame with the predicted heading).
// The covariance is the first-order information form
//   C = (Hx^T S^-1 Hx)^-1,  S = Hs V Hs^T + R,
// where Hx, Hs are the landmark/state Jacobians of the TOA/DOA rows of the
// substituted measurement model at (pred.mean, birth mean) - exactly the
// three equations the birth position inverts.
// Throws NegativeRange if toa <= predicted clock bias, DegenerateGeometry
// if the covariance cannot be formed.
BirthPoint va_birth(const Measurement& z, int source_index,
                    const GaussianState& pred, const Mat5& r);

// Scatter-point hypothesis: the single point whose bounce explains both the
// measured total path length and the arrival direction. It is the crossing
// of the ray (va birth mean -> predicted vehicle position) with the
// perpendicular-bisector plane of [bs, va birth mean]; by construction it
// is equidistant from the BS and from the VA hypothesis. Covariance as in
// va_birth, evaluated at the SP mean.
// Throws NegativeRange as above; DegenerateGeometry when the VA hypothesis
// coincides with the BS, the ray is parallel to the bisector plane, or the
// crossing parameter falls outside (0, 1].
BirthPoint sp_birth(const Measurement& z, int source_index,
                    const GaussianState& pred, const Vec3& bs,
                    const Mat5& r);

// Mean of the VA hypothesis alone (no covariance); shared by both births.
Vec3 va_birth_mean(const Measurement& z, const Vec7& pred_mean);

}  // namespace dpslam

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

#include "dpslam/motion.hpp"

namespace dpslam {

Vec7 motion_step(const Vec7& state, double dt) {
  const double alpha = state[kStateHeading];
  const double zeta = state[kStateSpeed];
  const double xi = state[kStateTurnRate];

  Vec7 out = state;
  if (std::abs(xi) < kStraightLineTurnRate) {
    out[kStateX] += zeta * dt * std::cos(alpha);
    out[kStateY] += zeta * dt * std::sin(alpha);
  } else {
    const double beta = alpha + xi * dt;
    out[kStateX] += zeta / xi * (std::sin(beta) - std::sin(alpha));
    out[kStateY] += zeta / xi * (std::cos(alpha) - std::cos(beta));
  }
  out[kStateHeading] = wrap_angle(alpha + xi * dt);
  return out;
}

Mat7 motion_jacobian(const Vec7& state, double dt) {
  const double alpha = state[kStateHeading];
  const double zeta = state[kStateSpeed];
  const double xi = state[kStateTurnRate];

  Mat7 g = Mat7::Identity();
  g(kStateHeading, kStateTurnRate) = dt;

  if (std::abs(xi) < kStraightLineTurnRate) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    g(kStateX, kStateHeading) = -zeta * dt * sa;
    g(kStateX, kStateSpeed) = dt * ca;
    g(kStateX, kStateTurnRate) = -0.5 * zeta * dt * dt * sa;
    g(kStateY, kStateHeading) = zeta * dt * ca;
    g(kStateY, kStateSpeed) = dt * sa;
    g(kStateY, kStateTurnRate) = 0.5 * zeta * dt * dt * ca;
    return g;
  }

  const double beta = alpha + xi * dt;
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);

  g(kStateX, kStateHeading) = zeta / xi * (cb - ca);
  g(kStateX, kStateSpeed) = (sb - sa) / xi;
  g(kStateX, kStateTurnRate) = zeta / xi * (cb * dt + (sa - sb) / xi);
  g(kStateY, kStateHeading) = zeta / xi * (sb - sa);
  g(kStateY, kStateSpeed) = (ca - cb) / xi;
  g(kStateY, kStateTurnRate) = zeta / xi * (sb * dt - (ca - cb) / xi);
  return g;
}

}  // namespace dpslam

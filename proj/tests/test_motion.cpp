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

#include <doctest.h>

#include "dpslam/motion.hpp"
#include "support/oracles.hpp"

using namespace dpslam;

namespace {

// Center of the turning circle implied by a state.
Vec3 turn_center(const VehicleState& s) {
  const double radius = s.speed / s.turn_rate;
  return s.position + radius * Vec3(-std::sin(s.heading),
                                    std::cos(s.heading), 0.0);
}

}  // namespace

TEST_CASE("zero speed leaves the position fixed and advances heading") {
  VehicleState s;
  s.position = Vec3(3.0, -2.0, 1.0);
  s.heading = 0.4;
  s.speed = 0.0;
  s.turn_rate = 0.7;
  const VehicleState out = ground_truth_step(s, 0.5);
  CHECK(out.position.isApprox(s.position, 1e-15));
  CHECK(out.heading == doctest::Approx(0.4 + 0.35).epsilon(1e-12));
  CHECK(out.speed == 0.0);
  CHECK(out.clock_bias == s.clock_bias);
}

TEST_CASE("turning step preserves the distance to the turn center") {
  VehicleState s;
  s.position = Vec3(0.7285, 0.0, 0.0);
  s.heading = kPi / 2.0;
  s.speed = 22.22;
  s.turn_rate = kPi / 10.0;

  const Vec3 center = turn_center(s);
  const double radius = (s.position - center).norm();
  CHECK(radius == doctest::Approx(s.speed / s.turn_rate).epsilon(1e-12));

  // One step against the closed form evaluated directly.
  const VehicleState out = ground_truth_step(s, 0.5);
  const double beta = s.heading + s.turn_rate * 0.5;
  const double ratio = s.speed / s.turn_rate;
  CHECK(out.position.x() ==
        doctest::Approx(0.7285 + ratio * (std::sin(beta) - 1.0))
            .epsilon(1e-12));
  CHECK(out.position.y() ==
        doctest::Approx(ratio * (0.0 - std::cos(beta))).epsilon(1e-12));
  CHECK((out.position - center).norm() == doctest::Approx(radius).epsilon(1e-9));

  // Radius invariance over the whole revolution.
  VehicleState cur = s;
  for (int k = 0; k < 40; ++k) {
    cur = ground_truth_step(cur, 0.5);
    CHECK((cur.position - center).norm() ==
          doctest::Approx(radius).epsilon(1e-9));
  }
  // 40 steps of pi/20 rad close the circle.
  CHECK((cur.position - s.position).norm() < 1e-6);
}

TEST_CASE("heading wraps to (-pi, pi]") {
  VehicleState s;
  s.heading = kPi;
  s.speed = 5.0;
  s.turn_rate = 2.0 * kPi;  // one full revolution per second
  const VehicleState out = ground_truth_step(s, 1.0);
  CHECK(out.heading == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(0.1 - 2.0 * kPi) == doctest::Approx(0.1));
}

TEST_CASE("straight-line limit engages below the turn-rate floor") {
  VehicleState s;
  s.position = Vec3::Zero();
  s.heading = 0.3;
  s.speed = 10.0;
  s.turn_rate = 1e-9;
  const VehicleState out = ground_truth_step(s, 0.5);
  CHECK(out.position.x() == doctest::Approx(5.0 * std::cos(0.3)));
  CHECK(out.position.y() == doctest::Approx(5.0 * std::sin(0.3)));
}

TEST_CASE("transition jacobian has an identity position block") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Vec7 s = test::random_vehicle_state(rng);
    const Mat7 g = motion_jacobian(s, 0.5);
    CHECK(g.block<3, 3>(0, 0).isApprox(Mat3::Identity(), 1e-15));
    CHECK(g(kStateClockBias, kStateClockBias) == 1.0);
  }
}

TEST_CASE("transition jacobian matches central finite differences") {
  std::mt19937_64 rng(17);
  const std::vector<bool> angular = {false, false, false, true,
                                     false, false, false};
  for (int i = 0; i < 100; ++i) {
    const Vec7 s = test::random_vehicle_state(rng);
    const Mat7 analytic = motion_jacobian(s, 0.5);
    const Eigen::MatrixXd numeric = test::finite_difference(
        [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
          return motion_step(Vec7(x), 0.5);
        },
        s, angular);
    CHECK(test::max_relative_error(analytic, numeric) < 1e-4);
  }
}

TEST_CASE("straight-line jacobian is the limit of the turning jacobian") {
  Vec7 s;
  s << 10.0, -5.0, 0.0, 0.7, 18.0, 0.0, 100.0;
  Vec7 s_eps = s;
  s_eps[kStateTurnRate] = 2e-6;  // just above the switch
  const Mat7 at_zero = motion_jacobian(s, 0.5);
  const Mat7 near_zero = motion_jacobian(s_eps, 0.5);
  CHECK((at_zero - near_zero).cwiseAbs().maxCoeff() < 1e-4);
}

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

#include "dpslam/gospa.hpp"
#include "support/oracles.hpp"

using namespace dpslam;

namespace {

std::vector<Vec3> random_set(std::mt19937_64& rng, int max_size) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> n(0, max_size);
  std::vector<Vec3> out;
  const int count = n(rng);
  for (int i = 0; i < count; ++i)
    out.emplace_back(30.0 * u(rng), 30.0 * u(rng), 10.0 * u(rng));
  return out;
}

}  // namespace

TEST_CASE("identical sets have zero distance") {
  const std::vector<Vec3> pts = {Vec3(1, 2, 3), Vec3(-5, 0, 2)};
  const GospaResult r = gospa_distance(pts, pts, GospaConfig{});
  CHECK(r.total == doctest::Approx(0.0));
  CHECK(r.n_missed == 0);
  CHECK(r.n_false == 0);
}

TEST_CASE("a single miss costs the cutoff penalty") {
  const GospaConfig cfg{2.0, 20.0, 2.0};
  const GospaResult r =
      gospa_distance({}, {Vec3(10, 10, 0)}, cfg);
  CHECK(r.total == doctest::Approx(std::sqrt(200.0)).epsilon(1e-12));
  CHECK(r.total == doctest::Approx(14.142).epsilon(1e-4));
  CHECK(r.n_missed == 1);
  CHECK(r.n_false == 0);

  const GospaResult f = gospa_distance({Vec3(10, 10, 0)}, {}, cfg);
  CHECK(f.total == doctest::Approx(std::sqrt(200.0)).epsilon(1e-12));
  CHECK(f.n_false == 1);
}

TEST_CASE("empty versus empty is zero") {
  const GospaResult r = gospa_distance({}, {}, GospaConfig{});
  CHECK(r.total == 0.0);
}

TEST_CASE("matches brute-force enumeration on random small sets") {
  std::mt19937_64 rng(67);
  const GospaConfig cfg{2.0, 20.0, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const auto est = random_set(rng, 5);
    const auto truth = random_set(rng, 5);
    const double expected =
        test::gospa_brute_force(est, truth, cfg.p, cfg.c, cfg.alpha);
    const GospaResult r = gospa_distance(est, truth, cfg);
    CHECK(std::abs(r.total - expected) < 1e-12 * std::max(1.0, expected));
    // Decomposition adds back up to the total.
    CHECK(std::pow(r.total, cfg.p) ==
          doctest::Approx(r.localization + r.missed + r.false_alarm)
              .epsilon(1e-12));
  }
}

TEST_CASE("non-standard order and alpha still match brute force") {
  std::mt19937_64 rng(71);
  const GospaConfig cfg{1.0, 15.0, 1.0};
  for (int i = 0; i < 300; ++i) {
    const auto est = random_set(rng, 4);
    const auto truth = random_set(rng, 4);
    const double expected =
        test::gospa_brute_force(est, truth, cfg.p, cfg.c, cfg.alpha);
    const GospaResult r = gospa_distance(est, truth, cfg);
    CHECK(std::abs(r.total - expected) < 1e-12 * std::max(1.0, expected));
  }
}

TEST_CASE("the metric is symmetric") {
  std::mt19937_64 rng(73);
  const GospaConfig cfg{2.0, 20.0, 2.0};
  for (int i = 0; i < 200; ++i) {
    const auto a = random_set(rng, 5);
    const auto b = random_set(rng, 5);
    CHECK(gospa_distance(a, b, cfg).total ==
          doctest::Approx(gospa_distance(b, a, cfg).total).epsilon(1e-12));
  }
}

TEST_CASE("triangle inequality holds on random triples") {
  std::mt19937_64 rng(79);
  const GospaConfig cfg{2.0, 20.0, 2.0};
  for (int i = 0; i < 300; ++i) {
    const auto a = random_set(rng, 4);
    const auto b = random_set(rng, 4);
    const auto c = random_set(rng, 4);
    const double ab = gospa_distance(a, b, cfg).total;
    const double bc = gospa_distance(b, c, cfg).total;
    const double ac = gospa_distance(a, c, cfg).total;
    CHECK(ac <= ab + bc + 1e-9);
  }
}

TEST_CASE("removing a spurious estimate never increases the distance") {
  std::mt19937_64 rng(83);
  const GospaConfig cfg{2.0, 20.0, 2.0};
  for (int i = 0; i < 200; ++i) {
    auto est = random_set(rng, 4);
    const auto truth = random_set(rng, 4);
    if (est.empty()) est.push_back(Vec3(5, 5, 5));
    // A spurious point far from everything.
    est.push_back(Vec3(500, 500, 100));
    const double with_spurious = gospa_distance(est, truth, cfg).total;
    est.pop_back();
    const double without = gospa_distance(est, truth, cfg).total;
    CHECK(without <= with_spurious + 1e-12);
  }
}

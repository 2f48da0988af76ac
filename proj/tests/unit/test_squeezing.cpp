// Copyright 2026 The spinsqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ssq/channels.hpp"
#include "ssq/squeezing.hpp"
#include "ssq/states.hpp"
#include "test_helpers.hpp"

using ssq::FrameMode;
using ssq::MomentCoefficients;

TEST_CASE("min_variance on a hand-solved coefficient set") {
  MomentCoefficients c;
  c.m_coef = 1.0;
  c.ncross_coef = 0.0;
  c.o_coef = 2.0;
  const ssq::VarianceExtrema ex = ssq::min_variance(c);
  CHECK(ex.var_min == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ex.var_max == doctest::Approx(1.5).epsilon(1e-15));
  // Minimum of (cos 2chi + 2)/2 sits at chi = pi/2.
  CHECK(ex.chi_star == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(ssq::variance_at(c, ex.chi_star) ==
        doctest::Approx(ex.var_min).epsilon(1e-14));
}

TEST_CASE("degenerate coefficients give a flat variance") {
  MomentCoefficients c;
  c.o_coef = 3.0;
  const ssq::VarianceExtrema ex = ssq::min_variance(c);
  CHECK(ex.var_min == doctest::Approx(1.5));
  CHECK(ex.var_max == doctest::Approx(1.5));
  CHECK(ex.chi_star == 0.0);
}

TEST_CASE("analytic minimum beats a dense angle grid") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    MomentCoefficients c;
    c.m_coef = uni(rng);
    c.ncross_coef = uni(rng);
    const double amp = std::hypot(c.m_coef, c.ncross_coef);
    c.o_coef = amp + std::abs(uni(rng));  // keep the variance nonnegative

    const ssq::VarianceExtrema ex = ssq::min_variance(c);
    CHECK(ex.chi_star >= 0.0);
    CHECK(ex.chi_star < std::numbers::pi);

    double grid_min = std::numeric_limits<double>::infinity();
    const int steps = 3600;
    for (int i = 0; i < steps; ++i) {
      const double chi = std::numbers::pi * i / steps;
      grid_min = std::min(grid_min, ssq::variance_at(c, chi));
    }
    // A grid point can never undercut the true minimum, and the quadratic
    // bottom bounds how far above it the best grid point can sit.
    const double h = std::numbers::pi / steps;
    CHECK(grid_min >= ex.var_min - 1e-12);
    CHECK(grid_min - ex.var_min <= amp * h * h + 1e-12);
    // And the reported optimum evaluates to the reported minimum.
    CHECK(ssq::variance_at(c, ex.chi_star) ==
          doctest::Approx(ex.var_min).epsilon(1e-12));
    CHECK(ssq::variance_at(c, ex.chi_star + std::numbers::pi / 2) ==
          doctest::Approx(ex.var_max).epsilon(1e-12));
  }
}

TEST_CASE("coherent states sit exactly at epsilon = 1") {
  const ssq::CollectiveOperators ops = ssq::build_collective_operators(3);
  ssq::FrameSpec aligned;
  aligned.mode = FrameMode::Aligned;
  const std::pair<double, double> angles[] = {{0.0, 0.0}, {1.0, 2.0}, {2.9, 5.5}};
  for (const auto& a : angles) {
    const ssq::DensityMatrix rho =
        ssq::density_from_pure(ssq::css_state(a.first, a.second, 3));
    const ssq::SqueezingResult res =
        ssq::squeezing_parameter(rho, ops, aligned);
    CHECK(res.epsilon == doctest::Approx(1.0).epsilon(1e-12));
    // For a coherent state the transverse variance is isotropic at N/4.
    CHECK(res.var_min == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(res.var_max == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("W state squeezing in hand-computed frames") {
  const ssq::CollectiveOperators ops = ssq::build_collective_operators(3);
  const ssq::DensityMatrix w = ssq::density_from_pure(ssq::w_state(3));

  // Aligned frame (mean spin along z): transverse moments are both 7/4,
  // so epsilon = (2/3) * (7/4 + 7/4) = 7/3.
  ssq::FrameSpec aligned;
  aligned.mode = FrameMode::Aligned;
  const ssq::SqueezingResult res_aligned =
      ssq::squeezing_parameter(w, ops, aligned);
  CHECK(res_aligned.frame.theta == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(res_aligned.epsilon == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(res_aligned.mean.r == doctest::Approx(0.5).epsilon(1e-12));

  // Explicit equatorial frame: transverse pair (Jy, Jz) has moments 7/4 and
  // 1/4 with no cross term, so epsilon = (2/3) * (2 - 3/2) = 1/3.
  ssq::FrameSpec equator;
  equator.mode = FrameMode::Explicit;
  equator.theta = std::numbers::pi / 2;
  equator.phi = 0.0;
  const ssq::SqueezingResult res_eq = ssq::squeezing_parameter(w, ops, equator);
  CHECK(res_eq.epsilon == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(res_eq.coeffs.o_coef == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res_eq.coeffs.m_coef == doctest::Approx(1.5).epsilon(1e-12));
  // epsilon = 4 var_min / N.
  CHECK(res_eq.epsilon ==
        doctest::Approx(4.0 * res_eq.var_min / 3.0).epsilon(1e-14));
}

TEST_CASE("GHZ stays at epsilon = 1 through a flip channel") {
  const ssq::CollectiveOperators ops = ssq::build_collective_operators(3);
  ssq::FrameSpec aligned;
  aligned.mode = FrameMode::Aligned;
  for (double p : {0.0, 0.25, 0.8, 1.0}) {
    const ssq::DensityMatrix rho = ssq::apply_product_channel(
        ssq::density_from_pure(ssq::ghz_state(3)),
        ssq::kraus_set(ssq::ChannelKind::BitFlip, p));
    const ssq::SqueezingResult res = ssq::squeezing_parameter(rho, ops, aligned);
    CHECK(res.epsilon == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("explicit frames pass the caller's angles through") {
  const ssq::CollectiveOperators ops = ssq::build_collective_operators(3);
  const ssq::DensityMatrix w = ssq::density_from_pure(ssq::w_state(3));
  ssq::FrameSpec frame;
  frame.mode = FrameMode::Explicit;
  frame.theta = 0.3;
  frame.phi = 4.0;
  const ssq::SqueezingResult res = ssq::squeezing_parameter(w, ops, frame);
  CHECK(res.frame.theta == 0.3);
  CHECK(res.frame.phi == 4.0);

  frame.theta = std::nan("");
  CHECK_THROWS_AS(ssq::squeezing_parameter(w, ops, frame),
                  std::invalid_argument);
}

TEST_CASE("is_squeezed uses a strict margin") {
  const double delta = 1e-9;
  CHECK(ssq::is_squeezed(0.5, delta));
  CHECK_FALSE(ssq::is_squeezed(1.0, delta));
  CHECK_FALSE(ssq::is_squeezed(1.0 - delta, delta));       // boundary: not <
  CHECK(ssq::is_squeezed(1.0 - 2.0 * delta, delta));
}

TEST_CASE("sssd_scan finds deaths and births in a synthetic series") {
  const std::vector<ssq::ParamEpsilon> series = {
      {0.0, 0.5}, {1.0, 0.9}, {2.0, 1.1}, {3.0, 0.95}, {4.0, 1.2}};
  const std::vector<ssq::SssdEvent> events = ssq::sssd_scan(series, 1e-9);
  REQUIRE(events.size() == 3);
  CHECK(events[0].direction == ssq::SssdEvent::Direction::Death);
  CHECK(events[0].param_before == 1.0);
  CHECK(events[0].param_after == 2.0);
  CHECK(events[0].epsilon_before == 0.9);
  CHECK(events[1].direction == ssq::SssdEvent::Direction::Birth);
  CHECK(events[2].direction == ssq::SssdEvent::Direction::Death);

  // A flat unsqueezed series has no events.
  CHECK(ssq::sssd_scan({{0.0, 1.0}, {1.0, 1.0}}, 1e-9).empty());
}

TEST_CASE("sssd_scan validates its input") {
  CHECK_THROWS_AS(ssq::sssd_scan({}, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(ssq::sssd_scan({{1.0, 0.5}, {1.0, 0.6}}, 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(ssq::sssd_scan({{2.0, 0.5}, {1.0, 0.6}}, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("epsilon is nonnegative for random channeled states") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const ssq::CollectiveOperators ops = ssq::build_collective_operators(3);
  const ssq::ChannelKind kinds[] = {
      ssq::ChannelKind::BitFlip,      ssq::ChannelKind::PhaseFlip,
      ssq::ChannelKind::BitPhaseFlip, ssq::ChannelKind::AmplitudeDamping,
      ssq::ChannelKind::PhaseDamping, ssq::ChannelKind::Depolarizing,
  };
  for (int trial = 0; trial < 60; ++trial) {
    const ssq::PureState psi = ssq_test::random_pure_state(3, rng);
    const ssq::ChannelKind kind = kinds[trial % 6];
    const auto [lo, hi] = ssq::default_param_range(kind);
    const ssq::DensityMatrix rho = ssq::apply_product_channel(
        ssq::density_from_pure(psi),
        ssq::kraus_set(kind, lo + (hi - lo) * uni(rng)));
    ssq::FrameSpec frame;
    if (trial % 2 == 0) {
      frame.mode = FrameMode::Aligned;
    } else {
      frame.mode = FrameMode::Explicit;
      frame.theta = uni(rng) * std::numbers::pi;
      frame.phi = uni(rng) * 2.0 * std::numbers::pi;
    }
    const ssq::SqueezingResult res = ssq::squeezing_parameter(rho, ops, frame);
    CHECK(res.epsilon >= -1e-10);
    CHECK(res.var_min >= -1e-10);
    CHECK(res.var_max >= res.var_min);
  }
}

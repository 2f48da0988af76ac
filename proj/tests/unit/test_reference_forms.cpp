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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ssq/reference_forms.hpp"

using ssq::ChannelKind;
using ssq::ReferenceCase;
using ssq::StateKind;

namespace {

ReferenceCase make_case(StateKind s, ChannelKind c, double theta, double phi,
                        double param) {
  ReferenceCase rc;
  rc.state = s;
  rc.channel = c;
  rc.theta = theta;
  rc.phi = phi;
  rc.param = param;
  return rc;
}

}  // namespace

TEST_CASE("depolarized GHZ form is exactly 1 at zero damping") {
  const double val = ssq::eval_reference(
      make_case(StateKind::Ghz, ChannelKind::Depolarizing, 0.9, 2.2, 0.0));
  CHECK(val == 1.0);  // exact, not approximate
}

TEST_CASE("depolarized GHZ form decreases monotonically to 1/27") {
  double prev = 2.0;
  for (double gt : {0.0, 0.3, 1.0, 2.5, 5.0, 12.0}) {
    const double val = ssq::eval_reference(
        make_case(StateKind::Ghz, ChannelKind::Depolarizing, 0.1, 0.2, gt));
    CHECK(val < prev);
    prev = val;
  }
  const double tail = ssq::eval_reference(
      make_case(StateKind::Ghz, ChannelKind::Depolarizing, 0.0, 0.0, 40.0));
  CHECK(tail == doctest::Approx(1.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("phase-flipped GHZ form is 1 for every angle and parameter") {
  for (double theta : {0.0, 0.4, 1.1, std::numbers::pi / 2}) {
    for (double p : {0.0, 0.3, 1.0}) {
      const double val = ssq::eval_reference(
          make_case(StateKind::Ghz, ChannelKind::PhaseFlip, theta, 0.7, p));
      CHECK(val == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("bit-flipped GHZ form collapses to 1 at the symmetric point") {
  const double val = ssq::eval_reference(make_case(
      StateKind::Ghz, ChannelKind::BitFlip, std::numbers::pi / 2, 0.0, 0.5));
  CHECK(val == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("bit-phase-flipped GHZ form goes negative at small p, as printed") {
  const double val = ssq::eval_reference(make_case(
      StateKind::Ghz, ChannelKind::BitPhaseFlip, std::numbers::pi / 2, 0.0,
      0.0));
  CHECK(val == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("bit-flipped W form equals 1 at p = 0.5 for any angles") {
  for (double theta : {10.0, 60.0, 90.0}) {
    for (double phi : {0.0, 90.0, 180.0}) {
      const double val = ssq::eval_reference(
          make_case(StateKind::W, ChannelKind::BitFlip,
                    theta * std::numbers::pi / 180.0,
                    phi * std::numbers::pi / 180.0, 0.5));
      CHECK(val == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("W forms reduce to 1 along the polar axis where published") {
  // At theta = 0 the printed W expressions for the flip channels evaluate
  // to 1 (their stated on-axis value).
  for (ChannelKind ch : {ChannelKind::BitFlip, ChannelKind::PhaseFlip}) {
    for (double p : {0.0, 0.4, 1.0}) {
      const double val =
          ssq::eval_reference(make_case(StateKind::W, ch, 0.0, 1.3, p));
      CHECK(val == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  const double ad = ssq::eval_reference(
      make_case(StateKind::W, ChannelKind::AmplitudeDamping, 0.0, 0.4, 0.8));
  CHECK(ad == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("phase-damped W radicand can go negative, yielding NaN") {
  // theta = pi/2, phi = 0: the radicand is -(1/2)^2 < 0 as printed.
  const double val = ssq::eval_reference(make_case(
      StateKind::W, ChannelKind::PhaseDamping, std::numbers::pi / 2, 0.0,
      0.5));
  CHECK(std::isnan(val));
}

TEST_CASE("eval_reference rejects invalid cases") {
  CHECK_THROWS_AS(ssq::eval_reference(make_case(
                      StateKind::Css, ChannelKind::BitFlip, 0.0, 0.0, 0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ssq::eval_reference(make_case(
                      StateKind::Ghz, ChannelKind::BitFlip, 0.0, 0.0, 1.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ssq::eval_reference(make_case(StateKind::W,
                                    ChannelKind::AmplitudeDamping, 0.0, 0.0,
                                    -0.1)),
      std::invalid_argument);
  CHECK_THROWS_AS(ssq::eval_reference(make_case(
                      StateKind::Ghz, ChannelKind::BitFlip, std::nan(""), 0.0,
                      0.5)),
                  std::invalid_argument);
}

TEST_CASE("audit matches the oracle where the closed form is consistent") {
  std::vector<ReferenceCase> grid;
  for (double theta : {0.0, 0.5, 1.2}) {
    for (double phi : {0.0, 1.0, 2.8}) {
      for (double p : {0.0, 0.5, 1.0}) {
        grid.push_back(
            make_case(StateKind::Ghz, ChannelKind::PhaseFlip, theta, phi, p));
      }
    }
  }
  const std::vector<ssq::AuditRow> rows = ssq::audit(grid);
  REQUIRE(rows.size() == grid.size());
  for (const ssq::AuditRow& row : rows) {
    CHECK(row.match);
    CHECK(row.abs_diff <= 1e-8);
    CHECK(row.eps_numeric == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("audit reports disagreements and sorts them first") {
  std::vector<ReferenceCase> grid;
  // A matching row.
  grid.push_back(make_case(StateKind::Ghz, ChannelKind::PhaseFlip, 0.3, 0.1,
                           0.2));
  // A known disagreement: the printed form is negative, the oracle is not.
  grid.push_back(make_case(StateKind::Ghz, ChannelKind::BitPhaseFlip,
                           std::numbers::pi / 2, 0.0, 0.0));
  // A NaN reference (negative radicand) must sort to the very top.
  grid.push_back(make_case(StateKind::W, ChannelKind::PhaseDamping,
                           std::numbers::pi / 2, 0.0, 0.5));

  const std::vector<ssq::AuditRow> rows = ssq::audit(grid);
  REQUIRE(rows.size() == 3);
  CHECK(std::isnan(rows[0].eps_reference));
  CHECK_FALSE(rows[0].match);
  CHECK(rows[1].ref_case.channel == ChannelKind::BitPhaseFlip);
  CHECK_FALSE(rows[1].match);
  CHECK(rows[1].abs_diff == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(rows[2].match);

  CHECK_THROWS_AS(ssq::audit({}), std::invalid_argument);
}

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

#include "ssq/reference_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ssq/spin_frame.hpp"
#include "ssq/squeezing.hpp"

namespace ssq {

namespace {

double sq(double x) { return x * x; }
double cube(double x) { return x * x * x; }

void require_case_param(ChannelKind channel, double param) {
  if (is_flip_channel(channel)) {
    if (!std::isfinite(param) || param < 0.0 || param > 1.0) {
      throw std::invalid_argument(
          "eval_reference: flip probability must lie in [0, 1]");
    }
  } else {
    if (!std::isfinite(param) || param < 0.0) {
      throw std::invalid_argument(
          "eval_reference: damping time must be nonnegative");
    }
  }
}

// --- GHZ family -----------------------------------------------------------

double ghz_bit_flip(double theta, double p) {
  return 0.5 * (-2.0 * sq(2.0 * p - 1.0) * sq(std::sin(theta)) -
                sq(1.0 - 2.0 * p) * std::cos(2.0 * theta) +
                4.0 * (p - 1.0) * p + 3.0);
}

double ghz_phase_flip(double theta) {
  return 0.5 * (-2.0 * sq(std::sin(theta)) - std::cos(2.0 * theta) + 3.0);
}

double ghz_bit_phase_flip(double theta, double p) {
  return 0.5 *
         ((2.0 * p - 1.0) *
              (-std::cos(2.0 * theta) + 8.0 * (p - 1.0) * p + 3.0) -
          2.0 * (1.0 - 2.0 * p) * sq(std::sin(theta)));
}

double ghz_amplitude_damping(double theta, double gt) {
  const double eg = std::exp(gt);
  const double e2 = std::exp(-2.0 * gt);
  return 0.5 * (-2.0 * e2 * (eg * (eg - 2.0) + 2.0) * sq(std::sin(theta)) -
                4.0 * e2 * (eg - 1.0) * sq(std::sin(theta)) -
                std::cos(2.0 * theta) + 3.0);
}

double ghz_phase_damping(double theta) {
  return 0.5 * (-2.0 * sq(std::sin(theta)) - std::cos(2.0 * theta) + 3.0);
}

double ghz_depolarizing(double gt) {
  // (1/27) e^{−3γt}(e^{γt}+2)³ evaluated as (1+2e^{−γt})³/27: the two are
  // equal, and this form gives exactly 1 at γt = 0 and never overflows.
  return cube(1.0 + 2.0 * std::exp(-gt)) / 27.0;
}

// --- W family --------------------------------------------------------------

double w_bit_flip(double theta, double phi, double p) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double root =
      std::sqrt(sq(std::sin(phi)) +
                0.25 * sq(2.0 * ct * cp + (2.0 * p - 1.0) * st));
  return (2.0 / 3.0) *
         (-st * ct * cp + 3.0 * sq(ct) / 8.0 +
          (2.0 * (p - 1.0) * p + 7.0 / 8.0) * sq(st) +
          p * std::sin(2.0 * theta) * cp - (2.0 * p - 1.0) * st * root +
          9.0 / 8.0);
}

double w_phase_flip(double theta, double phi, double p) {
  const double s2t = std::sin(2.0 * theta);
  const double c2t = std::cos(2.0 * theta);
  const double st = std::sin(theta);
  const double cp = std::cos(phi);
  const double root = std::sqrt(
      sq(2.0 * p - 1.0) * sq(st) * sq(std::sin(phi)) +
      0.25 * sq((1.0 - 2.0 * p) * s2t * cp - sq(st)));
  return (2.0 / 3.0) *
         (0.25 * (-c2t + 2.0 * (2.0 * p - 1.0) * s2t * cp + 7.0) - root);
}

double w_bit_phase_flip(double theta, double phi, double p) {
  const double s2t = std::sin(2.0 * theta);
  const double c2t = std::cos(2.0 * theta);
  const double st = std::sin(theta);
  const double cp = std::cos(phi);
  const double root = std::sqrt(sq(st) * sq(std::sin(phi)) +
                                0.25 * sq(s2t * cp + sq(st)));
  return (2.0 / 3.0) *
         (0.25 * (2.0 * p - 1.0) *
              (2.0 * s2t * cp - c2t + 24.0 * (p - 1.0) * p + 7.0) -
          (2.0 * p - 1.0) * root);
}

double w_amplitude_damping(double theta, double phi, double gt) {
  const double eg = std::exp(gt);
  const double lam = std::exp(-gt);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double a1 =
      std::exp(-3.0 * gt) * sq(eg - 2.0) * sq(st) * sq(sp) +
      0.25 * std::exp(-3.0 * gt) * sq(st) *
          sq(std::sqrt(lam) * (3.0 * eg * (eg - 2.0) + 4.0) * st -
             2.0 * (eg - 2.0) * ct * cp);
  return (2.0 / 3.0) *
         (0.25 * (8.0 * std::pow(lam, 1.5) * st * ct * cp -
                  2.0 * std::sqrt(lam) * std::sin(2.0 * theta) * cp -
                  4.0 * std::exp(-2.0 * gt) * (3.0 * eg - 2.0) * sq(st) -
                  3.0 * std::cos(2.0 * theta) + 9.0) -
          std::sqrt(a1));
}

double w_phase_damping(double theta, double phi, double gt) {
  const double lam = std::exp(-gt);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double a2 = st * ct * cp * lam + sq(st) / 2.0;
  // The printed radicand is not a perfect square and can go negative, in
  // which case the evaluation yields NaN; the audit reports such rows as
  // mismatches instead of patching the expression.
  const double rad = sq(lam) * sq(st) * sq(std::sin(phi)) - sq(a2);
  return (2.0 / 3.0) * (lam * st * ct * cp - std::sqrt(rad) -
                        0.25 * std::cos(2.0 * theta) + 7.0 / 4.0);
}

double w_depolarizing(double theta, double phi, double gt) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  // pref3 = e^{−3γt}(e^{γt}+2)³ evaluated overflow-free as (1+2e^{−γt})³.
  const double pref3 = cube(1.0 + 2.0 * std::exp(-gt));
  const double pref6 = pref3 * pref3;
  const double a3 = pref6 * sq(st) * sq(2.0 * ct * cp + st);
  const double root =
      std::sqrt(pref6 * sq(st) * sq(std::sin(phi)) / 729.0 + a3 / 2916.0);
  return (2.0 / 3.0) *
         (-root - (pref3 / 108.0) * (-2.0 * std::sin(2.0 * theta) * cp +
                                     std::cos(2.0 * theta) - 7.0));
}

}  // namespace

double eval_reference(const ReferenceCase& c) {
  if (c.state != StateKind::Ghz && c.state != StateKind::W) {
    throw std::invalid_argument(
        "eval_reference: closed forms exist only for the ghz and w states");
  }
  if (!std::isfinite(c.theta) || !std::isfinite(c.phi)) {
    throw std::invalid_argument("eval_reference: angles must be finite");
  }
  require_case_param(c.channel, c.param);

  const bool ghz = (c.state == StateKind::Ghz);
  switch (c.channel) {
    case ChannelKind::BitFlip:
      return ghz ? ghz_bit_flip(c.theta, c.param)
                 : w_bit_flip(c.theta, c.phi, c.param);
    case ChannelKind::PhaseFlip:
      return ghz ? ghz_phase_flip(c.theta)
                 : w_phase_flip(c.theta, c.phi, c.param);
    case ChannelKind::BitPhaseFlip:
      return ghz ? ghz_bit_phase_flip(c.theta, c.param)
                 : w_bit_phase_flip(c.theta, c.phi, c.param);
    case ChannelKind::AmplitudeDamping:
      return ghz ? ghz_amplitude_damping(c.theta, c.param)
                 : w_amplitude_damping(c.theta, c.phi, c.param);
    case ChannelKind::PhaseDamping:
      return ghz ? ghz_phase_damping(c.theta)
                 : w_phase_damping(c.theta, c.phi, c.param);
    case ChannelKind::Depolarizing:
      return ghz ? ghz_depolarizing(c.param)
                 : w_depolarizing(c.theta, c.phi, c.param);
  }
  throw std::invalid_argument("eval_reference: unknown channel kind");
}

std::vector<AuditRow> audit(const std::vector<ReferenceCase>& grid,
                            const Tolerances& tol) {
  if (grid.empty()) {
    throw std::invalid_argument("audit: empty case grid");
  }
  const int n_qubits = 3;  // the closed forms are three-qubit expressions
  const CollectiveOperators ops = build_collective_operators(n_qubits);

  std::vector<AuditRow> rows;
  rows.reserve(grid.size());
  for (const ReferenceCase& c : grid) {
    AuditRow row;
    row.ref_case = c;
    row.eps_reference = eval_reference(c);

    const DensityMatrix rho0 =
        density_from_pure(make_state(c.state, n_qubits), tol);
    const DensityMatrix rho =
        apply_product_channel(rho0, kraus_set(c.channel, c.param), tol);
    FrameSpec frame;
    frame.mode = FrameMode::Explicit;
    frame.theta = c.theta;
    frame.phi = c.phi;
    row.eps_numeric = squeezing_parameter(rho, ops, frame, tol).epsilon;

    row.abs_diff = std::abs(row.eps_reference - row.eps_numeric);
    row.match = (row.abs_diff <= tol.audit_match);  // false for NaN
    rows.push_back(row);
  }

  // Severity order: NaN (unevaluable reference) first, then decreasing
  // disagreement; stable so equal rows keep grid order.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const AuditRow& a, const AuditRow& b) {
                     const double da = std::isnan(a.abs_diff)
                                           ? std::numeric_limits<double>::infinity()
                                           : a.abs_diff;
                     const double db = std::isnan(b.abs_diff)
                                           ? std::numeric_limits<double>::infinity()
                                           : b.abs_diff;
                     return da > db;
                   });
  return rows;
}

}  // namespace ssq

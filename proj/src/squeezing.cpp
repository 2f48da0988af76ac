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

#include "ssq/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssq {

MomentCoefficients moment_coefficients(const DensityMatrix& rho,
                                       const RotatedOperators& rot,
                                       const Tolerances& tol) {
  if (rot.jn1.rows() != rho.dim()) {
    throw std::invalid_argument(
        "moment_coefficients: state/operator dimension mismatch");
  }
  const ComplexMatrix sq1 = rot.jn1 * rot.jn1;
  const ComplexMatrix sq2 = rot.jn2 * rot.jn2;
  const ComplexMatrix cross = rot.jn1 * rot.jn2 + rot.jn2 * rot.jn1;

  MomentCoefficients c;
  const double e1 = expectation(rho, sq1, tol);
  const double e2 = expectation(rho, sq2, tol);
  c.m_coef = e1 - e2;
  c.o_coef = e1 + e2;
  c.ncross_coef = expectation(rho, cross, tol);
  return c;
}

double variance_at(const MomentCoefficients& c, double chi) {
  return 0.5 * (c.m_coef * std::cos(2.0 * chi) +
                c.ncross_coef * std::sin(2.0 * chi) + c.o_coef);
}

VarianceExtrema min_variance(const MomentCoefficients& c) {
  VarianceExtrema ex;
  const double amp = std::hypot(c.m_coef, c.ncross_coef);
  ex.var_min = 0.5 * (c.o_coef - amp);
  ex.var_max = 0.5 * (c.o_coef + amp);
  if (amp == 0.0) {
    ex.chi_star = 0.0;  // flat variance: every angle ties, report zero
    return ex;
  }
  // cos(2χ*) = −m/amp, sin(2χ*) = −ncross/amp minimizes the variance.
  double two_chi = std::atan2(c.ncross_coef, c.m_coef) + std::numbers::pi;
  double chi = 0.5 * two_chi;
  // Reduce modulo π into [0, π); the variance has period π in χ.
  chi = std::fmod(chi, std::numbers::pi);
  if (chi < 0.0) chi += std::numbers::pi;
  if (chi >= std::numbers::pi) chi = 0.0;
  ex.chi_star = chi;
  return ex;
}

SqueezingResult squeezing_parameter(const DensityMatrix& rho,
                                    const CollectiveOperators& ops,
                                    const FrameSpec& frame,
                                    const Tolerances& tol) {
  if (rho.qubit_count() != ops.n_qubits) {
    throw std::invalid_argument(
        "squeezing_parameter: state/operator qubit count mismatch");
  }
  SqueezingResult res;
  res.mean = mean_spin(rho, ops, tol);
  if (frame.mode == FrameMode::Aligned) {
    res.frame = frame_from_mean_spin(res.mean, tol);
  } else {
    validate_frame(frame);
    res.frame = frame;
  }
  const RotatedOperators rot = rotated_components(ops, res.frame);
  res.coeffs = moment_coefficients(rho, rot, tol);
  const VarianceExtrema ex = min_variance(res.coeffs);
  res.var_min = ex.var_min;
  res.var_max = ex.var_max;
  res.chi_star = ex.chi_star;
  res.epsilon = 4.0 * ex.var_min / static_cast<double>(ops.n_qubits);
  return res;
}

bool is_squeezed(double epsilon, double delta) {
  return epsilon < 1.0 - delta;
}

std::vector<SssdEvent> sssd_scan(const std::vector<ParamEpsilon>& series,
                                 double delta) {
  if (series.empty()) {
    throw std::invalid_argument("sssd_scan: empty series");
  }
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!(series[i].param > series[i - 1].param)) {
      throw std::invalid_argument(
          "sssd_scan: parameters must be strictly increasing");
    }
  }
  std::vector<SssdEvent> events;
  bool prev = is_squeezed(series.front().epsilon, delta);
  for (std::size_t i = 1; i < series.size(); ++i) {
    const bool cur = is_squeezed(series[i].epsilon, delta);
    if (cur != prev) {
      SssdEvent ev;
      ev.direction =
          prev ? SssdEvent::Direction::Death : SssdEvent::Direction::Birth;
      ev.param_before = series[i - 1].param;
      ev.param_after = series[i].param;
      ev.epsilon_before = series[i - 1].epsilon;
      ev.epsilon_after = series[i].epsilon;
      events.push_back(ev);
    }
    prev = cur;
  }
  return events;
}

}  // namespace ssq

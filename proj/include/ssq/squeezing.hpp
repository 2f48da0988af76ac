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

#pragma once

#include <vector>

#include "ssq/matrix.hpp"
#include "ssq/numerics.hpp"
#include "ssq/spin_frame.hpp"

namespace ssq {

// Second moments of the transverse spin components:
//   m_coef      = ⟨Jn1² − Jn2²⟩
//   ncross_coef = ⟨Jn1 Jn2 + Jn2 Jn1⟩
//   o_coef      = ⟨Jn1² + Jn2²⟩
// The variance of Jχ = Jn1 cos χ + Jn2 sin χ (for states with zero mean
// transverse spin) is ½ [m cos 2χ + ncross sin 2χ + o].
struct MomentCoefficients {
  double m_coef = 0.0;
  double ncross_coef = 0.0;
  double o_coef = 0.0;
};

MomentCoefficients moment_coefficients(const DensityMatrix& rho,
                                       const RotatedOperators& rot,
                                       const Tolerances& tol = {});

double variance_at(const MomentCoefficients& c, double chi);

// Extremes of the transverse variance over the rotation angle χ:
//   var_min/max = ½ (o ∓ √(m² + ncross²)),
// attained at 2χ* = atan2(ncross, m) + π, reported with χ* in [0, π).
// When m = ncross = 0 the variance is flat and χ* = 0.
struct VarianceExtrema {
  double var_min = 0.0;
  double var_max = 0.0;
  double chi_star = 0.0;
};

VarianceExtrema min_variance(const MomentCoefficients& c);

// Full evaluation of the squeezing figure of merit
//   ε = (2/N) (o − √(m² + ncross²)) = 4·var_min / N
// for an N-qubit state in the given frame. Aligned mode re-derives the
// frame angles from the state's mean spin; explicit mode uses the
// caller's angles as given.
struct SqueezingResult {
  double epsilon = 0.0;
  MomentCoefficients coeffs;
  double var_min = 0.0;
  double var_max = 0.0;
  double chi_star = 0.0;
  FrameSpec frame;  // the frame actually used, after aligned resolution
  MeanSpin mean;
};

SqueezingResult squeezing_parameter(const DensityMatrix& rho,
                                    const CollectiveOperators& ops,
                                    const FrameSpec& frame,
                                    const Tolerances& tol = {});

// A state counts as squeezed when ε < 1 − delta.
bool is_squeezed(double epsilon, double delta);

// Transitions of the squeezed/unsqueezed status along a parameter scan.
struct SssdEvent {
  enum class Direction { Death, Birth };
  Direction direction = Direction::Death;
  double param_before = 0.0;   // last parameter with the old status
  double param_after = 0.0;    // first parameter with the new status
  double epsilon_before = 0.0;
  double epsilon_after = 0.0;
};

struct ParamEpsilon {
  double param = 0.0;
  double epsilon = 0.0;
};

// Scans an (ascending-parameter) ε series for status changes. A death is
// squeezed → unsqueezed as the parameter grows; a birth is the reverse.
// Throws if the series is empty or the parameters are not strictly
// increasing.
std::vector<SssdEvent> sssd_scan(const std::vector<ParamEpsilon>& series,
                                 double delta = 1e-9);

}  // namespace ssq

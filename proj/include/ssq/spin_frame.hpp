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

#include <string>

#include "ssq/matrix.hpp"
#include "ssq/numerics.hpp"

namespace ssq {

// Collective spin components J_a = ½ Σ_k σ_a^(k) on an n-qubit register.
struct CollectiveOperators {
  int n_qubits = 0;
  double j_total = 0.0;  // N/2
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

// Builds Jx, Jy, Jz for 1 ≤ n ≤ 12 qubits (dimension 2^n caps the range).
CollectiveOperators build_collective_operators(int n_qubits);

// Mean spin vector of a state: component expectations, total length r, and
// transverse length big_r = √(⟨Jx⟩² + ⟨Jy⟩²).
struct MeanSpin {
  double jx_mean = 0.0;
  double jy_mean = 0.0;
  double jz_mean = 0.0;
  double r = 0.0;
  double big_r = 0.0;
};

MeanSpin mean_spin(const DensityMatrix& rho, const CollectiveOperators& ops,
                   const Tolerances& tol = {});

// Aligned: orient the frame along the state's mean spin. Explicit: use the
// caller-supplied polar angles directly.
enum class FrameMode { Aligned, Explicit };

std::string to_string(FrameMode mode);
FrameMode parse_frame_mode(const std::string& token);  // "aligned"|"explicit"

struct FrameSpec {
  double theta = 0.0;
  double phi = 0.0;
  FrameMode mode = FrameMode::Explicit;
};

// Polar angles of the mean spin direction: θ = arccos(⟨Jz⟩/r),
// φ = atan2(⟨Jy⟩, ⟨Jx⟩) mapped into [0, 2π). Degenerate cases: r below
// tol.zero_spin yields (0, 0); a vanishing transverse component with
// nonzero r yields φ = 0.
FrameSpec frame_from_mean_spin(const MeanSpin& ms, const Tolerances& tol = {});

// Throws unless both angles are finite.
void validate_frame(const FrameSpec& frame);

// Orthogonal frame attached to the direction (θ, φ):
//   Jn1 = −Jx sinφ + Jy cosφ
//   Jn2 = −Jx cosθ cosφ − Jy cosθ sinφ + Jz sinθ
//   Jn3 =  Jx sinθ cosφ + Jy sinθ sinφ + Jz cosθ
// Jn3 points along (θ, φ); Jn1 and Jn2 span the transverse plane.
struct RotatedOperators {
  ComplexMatrix jn1;
  ComplexMatrix jn2;
  ComplexMatrix jn3;
};

RotatedOperators rotated_components(const CollectiveOperators& ops,
                                    const FrameSpec& frame);

}  // namespace ssq

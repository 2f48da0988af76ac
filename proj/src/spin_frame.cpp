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

#include "ssq/spin_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssq {

CollectiveOperators build_collective_operators(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) {
    throw std::invalid_argument(
        "build_collective_operators: qubit count must be in [1, 12]");
  }
  const ComplexMatrix sx = ComplexMatrix::from_rows(
      {{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}});
  const ComplexMatrix sy = ComplexMatrix::from_rows(
      {{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}});
  const ComplexMatrix sz = ComplexMatrix::from_rows(
      {{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}});

  const std::size_t dim = std::size_t{1} << n_qubits;
  CollectiveOperators ops;
  ops.n_qubits = n_qubits;
  ops.j_total = 0.5 * n_qubits;
  ops.jx = ComplexMatrix(dim, dim);
  ops.jy = ComplexMatrix(dim, dim);
  ops.jz = ComplexMatrix(dim, dim);
  for (int k = 0; k < n_qubits; ++k) {
    ops.jx += embed_single_qubit(sx, k, n_qubits);
    ops.jy += embed_single_qubit(sy, k, n_qubits);
    ops.jz += embed_single_qubit(sz, k, n_qubits);
  }
  ops.jx *= Complex{0.5, 0.0};
  ops.jy *= Complex{0.5, 0.0};
  ops.jz *= Complex{0.5, 0.0};
  return ops;
}

MeanSpin mean_spin(const DensityMatrix& rho, const CollectiveOperators& ops,
                   const Tolerances& tol) {
  if (rho.dim() != ops.jx.rows()) {
    throw std::invalid_argument("mean_spin: state/operator dimension mismatch");
  }
  MeanSpin ms;
  ms.jx_mean = expectation(rho, ops.jx, tol);
  ms.jy_mean = expectation(rho, ops.jy, tol);
  ms.jz_mean = expectation(rho, ops.jz, tol);
  ms.big_r = std::hypot(ms.jx_mean, ms.jy_mean);
  ms.r = std::hypot(ms.big_r, ms.jz_mean);
  return ms;
}

std::string to_string(FrameMode mode) {
  switch (mode) {
    case FrameMode::Aligned:
      return "aligned";
    case FrameMode::Explicit:
      return "explicit";
  }
  throw std::invalid_argument("to_string: unknown frame mode");
}

FrameMode parse_frame_mode(const std::string& token) {
  if (token == "aligned") return FrameMode::Aligned;
  if (token == "explicit") return FrameMode::Explicit;
  throw std::invalid_argument("parse_frame_mode: unknown mode '" + token +
                              "' (expected aligned or explicit)");
}

FrameSpec frame_from_mean_spin(const MeanSpin& ms, const Tolerances& tol) {
  FrameSpec frame;
  frame.mode = FrameMode::Aligned;
  if (ms.r < tol.zero_spin) {
    // Zero mean spin has no preferred direction; fall back to the z axis.
    frame.theta = 0.0;
    frame.phi = 0.0;
    return frame;
  }
  double cos_theta = ms.jz_mean / ms.r;
  cos_theta = std::clamp(cos_theta, -1.0, 1.0);
  frame.theta = std::acos(cos_theta);
  if (ms.big_r < tol.zero_spin) {
    // Mean spin along ±z leaves the azimuth undefined; pick φ = 0.
    frame.phi = 0.0;
    return frame;
  }
  double phi = std::atan2(ms.jy_mean, ms.jx_mean);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  frame.phi = phi;
  return frame;
}

void validate_frame(const FrameSpec& frame) {
  if (!std::isfinite(frame.theta) || !std::isfinite(frame.phi)) {
    throw std::invalid_argument("validate_frame: angles must be finite");
  }
}

RotatedOperators rotated_components(const CollectiveOperators& ops,
                                    const FrameSpec& frame) {
  validate_frame(frame);
  const double st = std::sin(frame.theta);
  const double ct = std::cos(frame.theta);
  const double sp = std::sin(frame.phi);
  const double cp = std::cos(frame.phi);

  auto combine = [&ops](double cx, double cy, double cz) {
    ComplexMatrix out = ops.jx * Complex{cx, 0.0};
    out += ops.jy * Complex{cy, 0.0};
    out += ops.jz * Complex{cz, 0.0};
    return out;
  };

  RotatedOperators rot;
  rot.jn1 = combine(-sp, cp, 0.0);
  rot.jn2 = combine(-ct * cp, -ct * sp, st);
  rot.jn3 = combine(st * cp, st * sp, ct);
  return rot;
}

}  // namespace ssq

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

#include "ssq/states.hpp"

#include <cmath>
#include <stdexcept>

namespace ssq {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

int PureState::qubit_count() const {
  if (!is_power_of_two(amplitudes.size())) {
    throw std::invalid_argument(
        "PureState: amplitude count must be a power of two");
  }
  int k = 0;
  std::size_t v = amplitudes.size();
  while (v > 1) {
    v >>= 1;
    ++k;
  }
  return k;
}

PureState ghz_state(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("ghz_state: need at least two qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  PureState psi;
  psi.amplitudes.assign(dim, Complex{0.0, 0.0});
  const double a = 1.0 / std::sqrt(2.0);
  psi.amplitudes.front() = Complex{a, 0.0};
  psi.amplitudes.back() = Complex{a, 0.0};
  return psi;
}

PureState w_state(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("w_state: need at least two qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  PureState psi;
  psi.amplitudes.assign(dim, Complex{0.0, 0.0});
  const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  // One excitation on qubit k flips the bit at position (n−1−k) of the
  // basis index, since qubit 0 is the most significant bit.
  for (int k = 0; k < n_qubits; ++k) {
    const std::size_t idx = std::size_t{1} << (n_qubits - 1 - k);
    psi.amplitudes[idx] = Complex{a, 0.0};
  }
  return psi;
}

PureState css_state(double theta, double phi, int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("css_state: need at least one qubit");
  }
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("css_state: angles must be finite");
  }
  const Complex up{std::cos(theta / 2.0), 0.0};
  const Complex down = std::polar(std::sin(theta / 2.0), phi);

  PureState psi;
  psi.amplitudes.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
    Complex amp{1.0, 0.0};
    for (int k = 0; k < n_qubits; ++k) {
      const bool excited = (idx >> (n_qubits - 1 - k)) & 1u;
      amp *= excited ? down : up;
    }
    psi.amplitudes[idx] = amp;
  }
  return psi;
}

DensityMatrix density_from_pure(const PureState& psi, const Tolerances& tol) {
  const std::size_t dim = psi.dim();
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument(
        "density_from_pure: amplitude count must be a power of two");
  }
  double norm2 = 0.0;
  for (const Complex& a : psi.amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > tol.trace_unit) {
    throw std::invalid_argument("density_from_pure: state is not normalized");
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
    }
  }
  return DensityMatrix(std::move(m), tol);
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Ghz:
      return "ghz";
    case StateKind::W:
      return "w";
    case StateKind::Css:
      return "css";
  }
  throw std::invalid_argument("to_string: unknown state kind");
}

StateKind parse_state_kind(const std::string& token) {
  if (token == "ghz") return StateKind::Ghz;
  if (token == "w") return StateKind::W;
  if (token == "css") return StateKind::Css;
  throw std::invalid_argument("parse_state_kind: unknown state '" + token +
                              "' (expected ghz, w, or css)");
}

PureState make_state(StateKind kind, int n_qubits, double theta, double phi) {
  switch (kind) {
    case StateKind::Ghz:
      return ghz_state(n_qubits);
    case StateKind::W:
      return w_state(n_qubits);
    case StateKind::Css:
      return css_state(theta, phi, n_qubits);
  }
  throw std::invalid_argument("make_state: unknown state kind");
}

}  // namespace ssq

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

#include <cmath>
#include <random>

#include "ssq/matrix.hpp"
#include "ssq/states.hpp"

namespace ssq_test {

// Normalized pure state with amplitudes drawn from a seeded generator, so
// every run sees the same "random" states.
inline ssq::PureState random_pure_state(int n_qubits, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ssq::PureState psi;
  psi.amplitudes.resize(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto& a : psi.amplitudes) {
    a = ssq::Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : psi.amplitudes) a *= scale;
  return psi;
}

inline ssq::ComplexMatrix pauli(char axis) {
  using ssq::Complex;
  switch (axis) {
    case 'x':
      return ssq::ComplexMatrix::from_rows(
          {{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}});
    case 'y':
      return ssq::ComplexMatrix::from_rows(
          {{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}});
    default:
      return ssq::ComplexMatrix::from_rows(
          {{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}});
  }
}

}  // namespace ssq_test

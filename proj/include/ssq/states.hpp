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
#include <vector>

#include "ssq/matrix.hpp"
#include "ssq/numerics.hpp"

namespace ssq {

// Normalized pure state on n qubits. Basis convention: |0⟩ is the +1
// eigenvector of σ_z ("spin up"); qubit 0 is the most significant bit of
// the basis index (the leftmost tensor factor).
struct PureState {
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  int qubit_count() const;
};

// (|0…0⟩ + |1…1⟩)/√2; requires n ≥ 2.
PureState ghz_state(int n_qubits);

// Equal superposition of the n single-excitation basis states, 1/√n each;
// requires n ≥ 2.
PureState w_state(int n_qubits);

// n-fold tensor power of cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩; every qubit
// points along the Bloch vector (sinθcosφ, sinθsinφ, cosθ). Requires n ≥ 1.
PureState css_state(double theta, double phi, int n_qubits);

// |ψ⟩⟨ψ| as a validated density matrix.
DensityMatrix density_from_pure(const PureState& psi,
                                const Tolerances& tol = {});

enum class StateKind { Ghz, W, Css };

std::string to_string(StateKind kind);
StateKind parse_state_kind(const std::string& token);  // "ghz" | "w" | "css"

// Dispatch helper; theta/phi are only consulted for Css.
PureState make_state(StateKind kind, int n_qubits, double theta = 0.0,
                     double phi = 0.0);

}  // namespace ssq

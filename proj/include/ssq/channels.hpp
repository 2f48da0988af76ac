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
#include <utility>
#include <vector>

#include "ssq/matrix.hpp"
#include "ssq/numerics.hpp"

namespace ssq {

// Single-qubit decoherence channels. The flip channels take a probability
// p ∈ [0, 1]; the damping channels take a dimensionless time γt ≥ 0 and act
// through λ = e^{−γt}.
enum class ChannelKind {
  BitFlip,
  PhaseFlip,
  BitPhaseFlip,
  AmplitudeDamping,
  PhaseDamping,
  Depolarizing,
};

std::string to_string(ChannelKind kind);
// Tokens: bitflip, phaseflip, bitphaseflip, ampdamp, phasedamp, depolarize.
ChannelKind parse_channel_kind(const std::string& token);

bool is_flip_channel(ChannelKind kind);

// Natural parameter interval for scans: [0, 1] for the flip channels,
// [0, 5] in γt for the damping channels.
std::pair<double, double> default_param_range(ChannelKind kind);

struct KrausChannel {
  ChannelKind kind;
  double param = 0.0;
  std::vector<ComplexMatrix> ops;  // 2×2 Kraus operators
};

// Kraus operators for one qubit. Flip channels keep the state with
// amplitude √p on the identity element, so p = 1 is the identity channel
// and p = 0 conjugates by the corresponding Pauli. Throws when the
// parameter falls outside the channel's domain.
KrausChannel kraus_set(ChannelKind kind, double param);

// ‖Σ_i E_i†E_i − I‖_max. Throws if the channel has no operators or the
// operators are not 2×2.
double validate_kraus(const KrausChannel& channel);

// Applies the channel independently to every qubit of ρ:
//   ρ ↦ Σ over index tuples (E_{i1} ⊗ … ⊗ E_{in}) ρ (E_{i1} ⊗ … ⊗ E_{in})†,
// computed one qubit at a time, which reproduces the full tuple sum.
// Completeness is checked before applying; the result is re-validated.
DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& channel,
                                    const Tolerances& tol = {});

}  // namespace ssq

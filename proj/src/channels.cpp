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

#include "ssq/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace ssq {

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip:
      return "bitflip";
    case ChannelKind::PhaseFlip:
      return "phaseflip";
    case ChannelKind::BitPhaseFlip:
      return "bitphaseflip";
    case ChannelKind::AmplitudeDamping:
      return "ampdamp";
    case ChannelKind::PhaseDamping:
      return "phasedamp";
    case ChannelKind::Depolarizing:
      return "depolarize";
  }
  throw std::invalid_argument("to_string: unknown channel kind");
}

ChannelKind parse_channel_kind(const std::string& token) {
  if (token == "bitflip") return ChannelKind::BitFlip;
  if (token == "phaseflip") return ChannelKind::PhaseFlip;
  if (token == "bitphaseflip") return ChannelKind::BitPhaseFlip;
  if (token == "ampdamp") return ChannelKind::AmplitudeDamping;
  if (token == "phasedamp") return ChannelKind::PhaseDamping;
  if (token == "depolarize") return ChannelKind::Depolarizing;
  throw std::invalid_argument(
      "parse_channel_kind: unknown channel '" + token +
      "' (expected bitflip, phaseflip, bitphaseflip, ampdamp, phasedamp, "
      "or depolarize)");
}

bool is_flip_channel(ChannelKind kind) {
  return kind == ChannelKind::BitFlip || kind == ChannelKind::PhaseFlip ||
         kind == ChannelKind::BitPhaseFlip;
}

std::pair<double, double> default_param_range(ChannelKind kind) {
  return is_flip_channel(kind) ? std::pair{0.0, 1.0} : std::pair{0.0, 5.0};
}

namespace {

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows(
      {{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(
      {{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows(
      {{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}});
}

void require_probability(ChannelKind kind, double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("kraus_set(" + to_string(kind) +
                                "): parameter must lie in [0, 1]");
  }
}

void require_damping_time(ChannelKind kind, double gt) {
  if (!std::isfinite(gt) || gt < 0.0) {
    throw std::invalid_argument("kraus_set(" + to_string(kind) +
                                "): parameter must be a nonnegative time");
  }
}

}  // namespace

KrausChannel kraus_set(ChannelKind kind, double param) {
  KrausChannel ch;
  ch.kind = kind;
  ch.param = param;

  switch (kind) {
    case ChannelKind::BitFlip: {
      require_probability(kind, param);
      ch.ops.push_back(ComplexMatrix::identity(2) *
                       Complex{std::sqrt(param), 0.0});
      ch.ops.push_back(pauli_x() * Complex{std::sqrt(1.0 - param), 0.0});
      return ch;
    }
    case ChannelKind::PhaseFlip: {
      require_probability(kind, param);
      ch.ops.push_back(ComplexMatrix::identity(2) *
                       Complex{std::sqrt(param), 0.0});
      ch.ops.push_back(pauli_z() * Complex{std::sqrt(1.0 - param), 0.0});
      return ch;
    }
    case ChannelKind::BitPhaseFlip: {
      require_probability(kind, param);
      ch.ops.push_back(ComplexMatrix::identity(2) *
                       Complex{std::sqrt(param), 0.0});
      ch.ops.push_back(pauli_y() * Complex{std::sqrt(1.0 - param), 0.0});
      return ch;
    }
    case ChannelKind::AmplitudeDamping: {
      require_damping_time(kind, param);
      const double lambda = std::exp(-param);
      ch.ops.push_back(ComplexMatrix::from_rows(
          {{Complex{1, 0}, Complex{0, 0}},
           {Complex{0, 0}, Complex{std::sqrt(lambda), 0}}}));
      ch.ops.push_back(ComplexMatrix::from_rows(
          {{Complex{0, 0}, Complex{std::sqrt(1.0 - lambda), 0}},
           {Complex{0, 0}, Complex{0, 0}}}));
      return ch;
    }
    case ChannelKind::PhaseDamping: {
      require_damping_time(kind, param);
      const double lambda = std::exp(-param);
      const double keep = std::sqrt(lambda);
      const double leak = std::sqrt(1.0 - lambda);
      ch.ops.push_back(ComplexMatrix::identity(2) * Complex{keep, 0.0});
      ch.ops.push_back(ComplexMatrix::from_rows(
          {{Complex{leak, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{0, 0}}}));
      ch.ops.push_back(ComplexMatrix::from_rows(
          {{Complex{0, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{leak, 0}}}));
      return ch;
    }
    case ChannelKind::Depolarizing: {
      require_damping_time(kind, param);
      const double lambda = std::exp(-param);
      const double pauli_w = std::sqrt((1.0 - lambda) / 3.0);
      ch.ops.push_back(ComplexMatrix::identity(2) *
                       Complex{std::sqrt(lambda), 0.0});
      ch.ops.push_back(pauli_x() * Complex{pauli_w, 0.0});
      ch.ops.push_back(pauli_y() * Complex{pauli_w, 0.0});
      ch.ops.push_back(pauli_z() * Complex{pauli_w, 0.0});
      return ch;
    }
  }
  throw std::invalid_argument("kraus_set: unknown channel kind");
}

double validate_kraus(const KrausChannel& channel) {
  if (channel.ops.empty()) {
    throw std::invalid_argument("validate_kraus: channel has no operators");
  }
  ComplexMatrix sum(2, 2);
  for (const ComplexMatrix& e : channel.ops) {
    if (e.rows() != 2 || e.cols() != 2) {
      throw std::invalid_argument("validate_kraus: operators must be 2x2");
    }
    sum += e.adjoint() * e;
  }
  return max_abs_diff(sum, ComplexMatrix::identity(2));
}

DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& channel,
                                    const Tolerances& tol) {
  const double defect = validate_kraus(channel);
  if (defect > tol.kraus_complete) {
    throw std::invalid_argument(
        "apply_product_channel: Kraus completeness defect " +
        std::to_string(defect));
  }
  const int n = rho.qubit_count();
  ComplexMatrix current = rho.matrix();
  for (int qubit = 0; qubit < n; ++qubit) {
    ComplexMatrix next(current.rows(), current.cols());
    for (const ComplexMatrix& e : channel.ops) {
      const ComplexMatrix big = embed_single_qubit(e, qubit, n);
      next += big * current * big.adjoint();
    }
    current = std::move(next);
  }
  return DensityMatrix(std::move(current), tol);
}

}  // namespace ssq

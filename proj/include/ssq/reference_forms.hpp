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

#include "ssq/channels.hpp"
#include "ssq/numerics.hpp"
#include "ssq/states.hpp"

namespace ssq {

// One point of the published three-qubit closed-form ε surfaces. The closed
// forms exist for the GHZ and W families only; the angles are the polar
// coordinates of the measurement frame and param is the channel parameter.
struct ReferenceCase {
  StateKind state = StateKind::Ghz;  // Ghz or W only
  ChannelKind channel = ChannelKind::BitFlip;
  double theta = 0.0;
  double phi = 0.0;
  double param = 0.0;
};

// Literal evaluation of the published closed-form ε for the case. The
// formulas are reproduced as printed — including the ones that disagree
// with the density-matrix computation — so the audit can adjudicate them.
// May return NaN when a printed radicand goes negative. Throws for a CSS
// state (no closed form is published) or a parameter outside the channel
// domain.
double eval_reference(const ReferenceCase& c);

// One audit comparison: closed form vs. the exact density-matrix pipeline
// (three-qubit state → product channel → explicit-frame ε at the case's
// angles). match holds iff |eps_reference − eps_numeric| ≤ tol.audit_match;
// a NaN reference never matches.
struct AuditRow {
  ReferenceCase ref_case;
  double eps_reference = 0.0;
  double eps_numeric = 0.0;
  double abs_diff = 0.0;
  bool match = false;
};

// Evaluates every case of the grid and returns the rows sorted by abs_diff
// descending (NaN rows first, as the most severe disagreement). Sorting is
// stable, so equal differences keep grid order. Throws on an empty grid.
std::vector<AuditRow> audit(const std::vector<ReferenceCase>& grid,
                            const Tolerances& tol = {});

}  // namespace ssq

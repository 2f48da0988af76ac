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

namespace ssq {

// Numerical thresholds used throughout the toolkit. The defaults are the
// reference values; the CLI can override individual fields from a config
// file or command-line flags.
struct Tolerances {
  double hermiticity = 1e-12;     // ‖A − A†‖_max for Hermiticity checks
  double trace_unit = 1e-12;      // |tr ρ − 1| for density matrices
  double psd_floor = -1e-10;      // smallest admissible eigenvalue of ρ
  double imag_residue = 1e-10;    // |Im tr(ρ·obs)| allowed in expectations
  double kraus_complete = 1e-12;  // ‖Σ E†E − I‖_max
  double zero_spin = 1e-12;       // mean-spin length treated as degenerate
  double squeezing_delta = 1e-9;  // squeezed iff epsilon < 1 − delta
  double audit_match = 1e-8;      // |eps_reference − eps_numeric| for "match"
};

}  // namespace ssq

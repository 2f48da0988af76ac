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

#include "ssq/channels.hpp"
#include "ssq/numerics.hpp"
#include "ssq/reference_forms.hpp"
#include "ssq/spin_frame.hpp"
#include "ssq/squeezing.hpp"
#include "ssq/states.hpp"

namespace ssq {

enum class OutputFormat { Csv, Json };

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& token);  // "csv"|"json"

// 17-significant-digit decimal text (printf %.17g), enough to round-trip a
// double; NaN and infinities render as "nan"/"inf"/"-inf". Used for every
// float the tool emits so repeated runs are byte-identical.
std::string format_double(double v);

// start..stop sampled at count evenly spaced points (count == 1 → {start}).
std::vector<double> linspace(double start, double stop, int count);

// One grid evaluation: state → product channel → ε in the requested frame.
struct SweepRow {
  StateKind state = StateKind::Ghz;
  ChannelKind channel = ChannelKind::BitFlip;
  FrameMode frame_mode = FrameMode::Aligned;
  double theta_rad = 0.0;  // frame angles actually used (aligned-resolved)
  double phi_rad = 0.0;
  double param = 0.0;
  double epsilon_numeric = 0.0;
  bool has_reference = false;  // a published closed form exists for the row
  double epsilon_reference = 0.0;
  double r = 0.0;  // mean spin length
  double var_min = 0.0;
  double chi_star_rad = 0.0;
};

SweepRow evaluate_point(StateKind state, ChannelKind channel,
                        FrameMode frame_mode, double theta, double phi,
                        double param, const CollectiveOperators& ops,
                        const Tolerances& tol = {});

struct SweepSpec {
  StateKind state = StateKind::Ghz;
  ChannelKind channel = ChannelKind::BitFlip;
  FrameMode frame_mode = FrameMode::Aligned;
  std::vector<double> theta_list;  // radians; CSS states read their Bloch
  std::vector<double> phi_list;    // angles from the same grid
  double param_start = 0.0;
  double param_stop = 0.0;
  int param_count = 1;
  int n_qubits = 3;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
};

// Evaluates the (θ, φ, param) grid in lexicographic order and writes it to
// spec.output_path. CSV columns (header exactly):
//   state,channel,frame_mode,theta_rad,phi_rad,param,epsilon_numeric,
//   epsilon_reference,r,var_min,chi_star_rad
// The emitted angles are the frame angles actually used; rows without a
// published closed form leave epsilon_reference empty (CSV) or null (JSON).
// JSON output is an array of flat objects with the same keys. Returns the
// number of rows written. Throws on an invalid spec or unwritable path.
int run_sweep(const SweepSpec& spec, const Tolerances& tol = {});

struct AuditSummary {
  int total_rows = 0;
  int match_rows = 0;
  int mismatch_rows = 0;
  std::string report_path;
  std::string notes_path;  // report_path + ".notes.txt"
};

// Audits every published (state, channel) closed form over the cartesian
// grid θ ∈ [0, π/2] × φ ∈ [0, π] × channel domain at the given per-axis
// resolutions (each ≥ 2). Writes the comparison CSV (rows sorted by
// severity; columns state,channel,theta_rad,phi_rad,param,eps_reference,
// eps_numeric,abs_diff,verdict) plus a companion notes file collecting the
// known discrepancies between the published forms and the density-matrix
// computation. Throws on invalid counts or unwritable path.
AuditSummary run_audit(int theta_count, int phi_count, int param_count,
                       const std::string& out_path,
                       const Tolerances& tol = {});

struct SssdSpec {
  StateKind state = StateKind::Ghz;
  ChannelKind channel = ChannelKind::BitFlip;
  int samples = 200;  // ≥ 10
  bool use_default_range = true;  // scan the channel's natural domain
  double param_start = 0.0;
  double param_stop = 0.0;
  FrameMode frame_mode = FrameMode::Aligned;
  // Frame angles in explicit mode; also the Bloch angles of a CSS state.
  double theta = 0.0;
  double phi = 0.0;
  int n_qubits = 3;
};

struct SssdOutcome {
  std::vector<ParamEpsilon> series;
  std::vector<SssdEvent> events;
  bool any_death = false;
};

// ε along an ascending parameter scan plus its squeezed/unsqueezed
// transition events. Throws on samples < 10 or an invalid range.
SssdOutcome run_sssd(const SssdSpec& spec, const Tolerances& tol = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // human-readable measurement or failure reason
};

// Built-in self checks: channel completeness, state constructions,
// collective-operator algebra, channel output validity, frame recovery,
// and the coherent-state ε = 1 baseline.
std::vector<CheckResult> run_validation(const Tolerances& tol = {});

}  // namespace ssq

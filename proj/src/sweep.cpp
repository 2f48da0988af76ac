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

#include "ssq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ssq {

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Json:
      return "json";
  }
  throw std::invalid_argument("to_string: unknown output format");
}

OutputFormat parse_output_format(const std::string& token) {
  if (token == "csv") return OutputFormat::Csv;
  if (token == "json") return OutputFormat::Json;
  throw std::invalid_argument("parse_output_format: unknown format '" + token +
                              "' (expected csv or json)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) {
    throw std::invalid_argument("linspace: count must be at least 1");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    pts.push_back(start);
    return pts;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    pts.push_back(i + 1 == count ? stop : start + step * i);
  }
  return pts;
}

SweepRow evaluate_point(StateKind state, ChannelKind channel,
                        FrameMode frame_mode, double theta, double phi,
                        double param, const CollectiveOperators& ops,
                        const Tolerances& tol) {
  SweepRow row;
  row.state = state;
  row.channel = channel;
  row.frame_mode = frame_mode;
  row.param = param;

  const PureState psi = make_state(state, ops.n_qubits, theta, phi);
  const DensityMatrix rho0 = density_from_pure(psi, tol);
  const DensityMatrix rho =
      apply_product_channel(rho0, kraus_set(channel, param), tol);

  FrameSpec frame;
  frame.mode = frame_mode;
  frame.theta = theta;
  frame.phi = phi;
  const SqueezingResult res = squeezing_parameter(rho, ops, frame, tol);

  row.theta_rad = res.frame.theta;
  row.phi_rad = res.frame.phi;
  row.epsilon_numeric = res.epsilon;
  row.r = res.mean.r;
  row.var_min = res.var_min;
  row.chi_star_rad = res.chi_star;

  // Closed forms are published for the three-qubit GHZ and W states only;
  // they are evaluated at the frame angles the numeric row actually used.
  row.has_reference = (state != StateKind::Css) && ops.n_qubits == 3;
  if (row.has_reference) {
    ReferenceCase c;
    c.state = state;
    c.channel = channel;
    c.theta = row.theta_rad;
    c.phi = row.phi_rad;
    c.param = param;
    row.epsilon_reference = eval_reference(c);
  }
  return row;
}

namespace {

constexpr const char* kSweepHeader =
    "state,channel,frame_mode,theta_rad,phi_rad,param,epsilon_numeric,"
    "epsilon_reference,r,var_min,chi_star_rad";

std::string sweep_row_csv(const SweepRow& row) {
  std::ostringstream os;
  os << to_string(row.state) << ',' << to_string(row.channel) << ','
     << to_string(row.frame_mode) << ',' << format_double(row.theta_rad) << ','
     << format_double(row.phi_rad) << ',' << format_double(row.param) << ','
     << format_double(row.epsilon_numeric) << ','
     << (row.has_reference ? format_double(row.epsilon_reference) : "") << ','
     << format_double(row.r) << ',' << format_double(row.var_min) << ','
     << format_double(row.chi_star_rad);
  return os.str();
}

std::string json_number(double v) {
  // JSON has no NaN/infinity literals; emit null for them.
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

std::string sweep_row_json(const SweepRow& row) {
  std::ostringstream os;
  os << "{\"state\":\"" << to_string(row.state) << "\",\"channel\":\""
     << to_string(row.channel) << "\",\"frame_mode\":\""
     << to_string(row.frame_mode) << "\",\"theta_rad\":"
     << json_number(row.theta_rad) << ",\"phi_rad\":"
     << json_number(row.phi_rad) << ",\"param\":" << json_number(row.param)
     << ",\"epsilon_numeric\":" << json_number(row.epsilon_numeric)
     << ",\"epsilon_reference\":"
     << (row.has_reference ? json_number(row.epsilon_reference) : "null")
     << ",\"r\":" << json_number(row.r) << ",\"var_min\":"
     << json_number(row.var_min) << ",\"chi_star_rad\":"
     << json_number(row.chi_star_rad) << '}';
  return os.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return out;
}

}  // namespace

int run_sweep(const SweepSpec& spec, const Tolerances& tol) {
  if (spec.param_count < 1) {
    throw std::invalid_argument("run_sweep: param count must be at least 1");
  }
  if (!(spec.param_start <= spec.param_stop)) {
    throw std::invalid_argument("run_sweep: param range start must be <= stop");
  }
  if (spec.output_path.empty()) {
    throw std::invalid_argument("run_sweep: output path is empty");
  }
  std::vector<double> thetas = spec.theta_list;
  std::vector<double> phis = spec.phi_list;
  if (spec.frame_mode == FrameMode::Explicit) {
    if (thetas.empty() || phis.empty()) {
      throw std::invalid_argument(
          "run_sweep: explicit frame mode needs theta and phi lists");
    }
  } else {
    // Aligned mode derives its angles from the state; an omitted list just
    // means a single grid point.
    if (thetas.empty()) thetas.push_back(0.0);
    if (phis.empty()) phis.push_back(0.0);
  }

  const CollectiveOperators ops = build_collective_operators(spec.n_qubits);
  const std::vector<double> params =
      linspace(spec.param_start, spec.param_stop, spec.param_count);

  std::vector<SweepRow> rows;
  rows.reserve(thetas.size() * phis.size() * params.size());
  for (double theta : thetas) {
    for (double phi : phis) {
      for (double param : params) {
        rows.push_back(evaluate_point(spec.state, spec.channel,
                                      spec.frame_mode, theta, phi, param, ops,
                                      tol));
      }
    }
  }

  std::ofstream out = open_output(spec.output_path);
  if (spec.format == OutputFormat::Csv) {
    out << kSweepHeader << '\n';
    for (const SweepRow& row : rows) out << sweep_row_csv(row) << '\n';
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << "  " << sweep_row_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing output file: " +
                             spec.output_path);
  }
  return static_cast<int>(rows.size());
}

namespace {

constexpr const char* kAuditHeader =
    "state,channel,theta_rad,phi_rad,param,eps_reference,eps_numeric,"
    "abs_diff,verdict";

void write_audit_notes(const std::string& path,
                       const std::vector<AuditRow>& rows,
                       const Tolerances& tol) {
  const CollectiveOperators ops = build_collective_operators(3);

  // Density-matrix value for the depolarized GHZ state at γt = 5, aligned.
  const SweepRow depol = evaluate_point(StateKind::Ghz,
                                        ChannelKind::Depolarizing,
                                        FrameMode::Aligned, 0.0, 0.0, 5.0, ops,
                                        tol);
  // W-state mean spin length without any channel.
  const MeanSpin w_mean =
      mean_spin(density_from_pure(w_state(3), tol), ops, tol);

  std::ofstream out = open_output(path);
  out << "audit notes\n";
  out << "===========\n\n";

  out << "1. Depolarized GHZ epsilon, three candidate values side by side:\n";
  out << "   closed-form limit (gamma*t -> infinity) = "
      << format_double(1.0 / 27.0)
      << " ; narrative plateau value = " << format_double(0.2)
      << " ; density-matrix epsilon at gamma*t = 5 (aligned frame) = "
      << format_double(depol.epsilon_numeric) << "\n";
  out << "   The published closed form decays from 1 toward 1/27, the\n"
         "   accompanying narrative quotes a plateau of 0.2, and the exact\n"
         "   density-matrix computation keeps epsilon = 1 at every damping\n"
         "   time. All three disagree; the per-row verdicts (tolerance "
      << format_double(tol.audit_match) << ")\n"
         "   are in the companion CSV.\n\n";

  out << "2. W-state mean spin length (no channel applied):\n";
  out << "   density-matrix value r = " << format_double(w_mean.r)
      << " ; published value r = 0.372678\n";
  out << "   Under the conventions used here (|0> is the +1 eigenvector of\n"
         "   sigma_z; collective J_a = (1/2) sum sigma_a), direct computation\n"
         "   gives <J> = (0, 0, 1/2), so r = 1/2. The published figure does\n"
         "   not follow from these conventions; both values are recorded.\n\n";

  out << "3. Transcription notes on the published closed forms:\n";
  out << "   - phase flip: the printed second operator equals sqrt(1-p)*I,\n"
         "     which would make the channel a no-op for every p and would\n"
         "     contradict the p-dependent W expression published beside it.\n"
         "     The channel implemented here uses sqrt(1-p)*diag(1,-1); the\n"
         "     printed operator is treated as an erratum. The closed forms\n"
         "     themselves are evaluated verbatim as printed.\n";
  out << "   - flip-channel parameter: the printed operators put sqrt(p) on\n"
         "     the identity element, so p = 1 is the identity channel and\n"
         "     p = 0 applies the full Pauli conjugation, although the\n"
         "     surrounding narrative calls p = 0 the error-free case. The\n"
         "     operators are taken as the operational definition.\n";
  out << "   - bit-phase flip: the printed GHZ expression is negative for\n"
         "     small p (it evaluates to -3 at p = 0, theta = pi/2); a\n"
         "     variance-ratio epsilon cannot be negative, so those rows can\n"
         "     never match and are reported as mismatches.\n";
  out << "   - phase damping: the printed W radicand\n"
         "     e^(-2*gamma*t)*sin^2(theta)*sin^2(phi) - A2^2 goes negative\n"
         "     over part of the grid; such rows evaluate to NaN and are\n"
         "     counted as mismatches, never patched.\n\n";

  // Per-pair match table for quick scanning.
  out << "4. Match counts by (state, channel):\n";
  const StateKind states[] = {StateKind::Ghz, StateKind::W};
  const ChannelKind channels[] = {
      ChannelKind::BitFlip,          ChannelKind::PhaseFlip,
      ChannelKind::BitPhaseFlip,     ChannelKind::AmplitudeDamping,
      ChannelKind::PhaseDamping,     ChannelKind::Depolarizing,
  };
  for (StateKind s : states) {
    for (ChannelKind c : channels) {
      int total = 0;
      int match = 0;
      for (const AuditRow& row : rows) {
        if (row.ref_case.state == s && row.ref_case.channel == c) {
          ++total;
          if (row.match) ++match;
        }
      }
      out << "   " << to_string(s) << "/" << to_string(c) << ": " << match
          << "/" << total << " match\n";
    }
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing notes file: " + path);
  }
}

}  // namespace

AuditSummary run_audit(int theta_count, int phi_count, int param_count,
                       const std::string& out_path, const Tolerances& tol) {
  if (theta_count < 2 || phi_count < 2 || param_count < 2) {
    throw std::invalid_argument("run_audit: per-axis counts must be >= 2");
  }
  if (out_path.empty()) {
    throw std::invalid_argument("run_audit: output path is empty");
  }

  const std::vector<double> thetas =
      linspace(0.0, std::numbers::pi / 2.0, theta_count);
  const std::vector<double> phis = linspace(0.0, std::numbers::pi, phi_count);

  const StateKind states[] = {StateKind::Ghz, StateKind::W};
  const ChannelKind channels[] = {
      ChannelKind::BitFlip,          ChannelKind::PhaseFlip,
      ChannelKind::BitPhaseFlip,     ChannelKind::AmplitudeDamping,
      ChannelKind::PhaseDamping,     ChannelKind::Depolarizing,
  };

  std::vector<ReferenceCase> grid;
  grid.reserve(static_cast<std::size_t>(2 * 6) * thetas.size() * phis.size() *
               static_cast<std::size_t>(param_count));
  for (StateKind s : states) {
    for (ChannelKind c : channels) {
      const auto [lo, hi] = default_param_range(c);
      const std::vector<double> params = linspace(lo, hi, param_count);
      for (double theta : thetas) {
        for (double phi : phis) {
          for (double param : params) {
            ReferenceCase rc;
            rc.state = s;
            rc.channel = c;
            rc.theta = theta;
            rc.phi = phi;
            rc.param = param;
            grid.push_back(rc);
          }
        }
      }
    }
  }

  const std::vector<AuditRow> rows = audit(grid, tol);

  std::ofstream out = open_output(out_path);
  out << kAuditHeader << '\n';
  AuditSummary summary;
  for (const AuditRow& row : rows) {
    out << to_string(row.ref_case.state) << ','
        << to_string(row.ref_case.channel) << ','
        << format_double(row.ref_case.theta) << ','
        << format_double(row.ref_case.phi) << ','
        << format_double(row.ref_case.param) << ','
        << format_double(row.eps_reference) << ','
        << format_double(row.eps_numeric) << ','
        << format_double(row.abs_diff) << ','
        << (row.match ? "match" : "mismatch") << '\n';
    ++summary.total_rows;
    if (row.match) {
      ++summary.match_rows;
    } else {
      ++summary.mismatch_rows;
    }
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing output file: " + out_path);
  }

  summary.report_path = out_path;
  summary.notes_path = out_path + ".notes.txt";
  write_audit_notes(summary.notes_path, rows, tol);
  return summary;
}

SssdOutcome run_sssd(const SssdSpec& spec, const Tolerances& tol) {
  if (spec.samples < 10) {
    throw std::invalid_argument("run_sssd: need at least 10 samples");
  }
  double lo = spec.param_start;
  double hi = spec.param_stop;
  if (spec.use_default_range) {
    std::tie(lo, hi) = default_param_range(spec.channel);
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("run_sssd: param range start must be < stop");
  }

  const CollectiveOperators ops = build_collective_operators(spec.n_qubits);
  const std::vector<double> params = linspace(lo, hi, spec.samples);

  SssdOutcome outcome;
  outcome.series.reserve(params.size());
  for (double param : params) {
    const SweepRow row =
        evaluate_point(spec.state, spec.channel, spec.frame_mode, spec.theta,
                       spec.phi, param, ops, tol);
    outcome.series.push_back({param, row.epsilon_numeric});
  }
  outcome.events = sssd_scan(outcome.series, tol.squeezing_delta);
  for (const SssdEvent& ev : outcome.events) {
    if (ev.direction == SssdEvent::Direction::Death) {
      outcome.any_death = true;
    }
  }
  return outcome;
}

namespace {

void add_check(std::vector<CheckResult>& out, const std::string& name,
               bool passed, const std::string& detail) {
  out.push_back({name, passed, detail});
}

const ChannelKind kAllChannels[] = {
    ChannelKind::BitFlip,          ChannelKind::PhaseFlip,
    ChannelKind::BitPhaseFlip,     ChannelKind::AmplitudeDamping,
    ChannelKind::PhaseDamping,     ChannelKind::Depolarizing,
};

}  // namespace

std::vector<CheckResult> run_validation(const Tolerances& tol) {
  std::vector<CheckResult> results;

  // 1. Kraus completeness across each channel's parameter domain.
  {
    double worst = 0.0;
    for (ChannelKind kind : kAllChannels) {
      const auto [lo, hi] = default_param_range(kind);
      for (double param : linspace(lo, hi, 20)) {
        worst = std::max(worst, validate_kraus(kraus_set(kind, param)));
      }
    }
    add_check(results, "kraus_completeness", worst <= tol.kraus_complete,
              "max |sum E^dag E - I| = " + format_double(worst));
  }

  // 2. State constructors put amplitude where the basis convention says.
  {
    bool ok = true;
    const PureState g = ghz_state(3);
    ok = ok && std::abs(g.amplitudes[0] - Complex{1 / std::sqrt(2.0), 0}) <
                   1e-15;
    ok = ok && std::abs(g.amplitudes[7] - Complex{1 / std::sqrt(2.0), 0}) <
                   1e-15;
    for (int i = 1; i < 7; ++i) ok = ok && std::abs(g.amplitudes[i]) == 0.0;

    const PureState w = w_state(3);
    for (std::size_t i = 0; i < 8; ++i) {
      const bool excited = (i == 4 || i == 2 || i == 1);
      const double want = excited ? 1.0 / std::sqrt(3.0) : 0.0;
      ok = ok && std::abs(w.amplitudes[i] - Complex{want, 0}) < 1e-15;
    }
    add_check(results, "state_amplitudes", ok,
              ok ? "ghz on {0,7}, w on {4,2,1}" : "unexpected amplitude");
  }

  // 3. Collective operator algebra: [Jx,Jy] = i Jz and the symmetric-state
  //    total-spin expectation ⟨J²⟩ = j(j+1) with j = n/2.
  {
    double worst_comm = 0.0;
    double worst_casimir = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const CollectiveOperators ops = build_collective_operators(n);
      ComplexMatrix comm = ops.jx * ops.jy - ops.jy * ops.jx;
      comm -= ops.jz * Complex{0.0, 1.0};
      worst_comm = std::max(worst_comm, comm.max_abs());

      const ComplexMatrix j2 =
          ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
      const double want = ops.j_total * (ops.j_total + 1.0);
      if (n >= 2) {
        const DensityMatrix rho = density_from_pure(ghz_state(n), tol);
        worst_casimir = std::max(
            worst_casimir, std::abs(expectation(rho, j2, tol) - want));
        const DensityMatrix rho_w = density_from_pure(w_state(n), tol);
        worst_casimir = std::max(
            worst_casimir, std::abs(expectation(rho_w, j2, tol) - want));
      }
    }
    const bool ok = worst_comm <= 1e-10 && worst_casimir <= 1e-10;
    add_check(results, "collective_algebra", ok,
              "max |[Jx,Jy]-iJz| = " + format_double(worst_comm) +
                  ", max |<J^2>-j(j+1)| = " + format_double(worst_casimir));
  }

  // 4. Every channel output stays a valid state (trace, Hermiticity, PSD
  //    are enforced by the DensityMatrix constructor).
  {
    bool ok = true;
    std::string detail = "ghz and w through all channels";
    try {
      for (ChannelKind kind : kAllChannels) {
        const auto [lo, hi] = default_param_range(kind);
        for (double param : linspace(lo, hi, 5)) {
          const KrausChannel ch = kraus_set(kind, param);
          apply_product_channel(density_from_pure(ghz_state(3), tol), ch, tol);
          apply_product_channel(density_from_pure(w_state(3), tol), ch, tol);
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    add_check(results, "channel_preserves_state", ok, detail);
  }

  // 5. The aligned frame recovers a coherent state's Bloch angles.
  {
    const CollectiveOperators ops = build_collective_operators(3);
    double worst = 0.0;
    const double test_angles[][2] = {
        {0.3, 0.7}, {1.2, 2.9}, {2.6, 5.1}, {1.5707963, 0.0}};
    for (const auto& a : test_angles) {
      const DensityMatrix rho =
          density_from_pure(css_state(a[0], a[1], 3), tol);
      const FrameSpec frame = frame_from_mean_spin(mean_spin(rho, ops, tol),
                                                   tol);
      worst = std::max(worst, std::abs(frame.theta - a[0]));
      worst = std::max(worst, std::abs(frame.phi - a[1]));
    }
    add_check(results, "aligned_frame_recovery", worst <= 1e-10,
              "max angle error = " + format_double(worst));
  }

  // 6. In the aligned frame the transverse mean components vanish.
  {
    const CollectiveOperators ops = build_collective_operators(3);
    double worst = 0.0;
    const DensityMatrix test_states[] = {
        density_from_pure(w_state(3), tol),
        density_from_pure(css_state(0.9, 1.3, 3), tol),
        apply_product_channel(density_from_pure(w_state(3), tol),
                              kraus_set(ChannelKind::AmplitudeDamping, 0.4),
                              tol),
    };
    for (const DensityMatrix& rho : test_states) {
      const FrameSpec frame = frame_from_mean_spin(mean_spin(rho, ops, tol),
                                                   tol);
      const RotatedOperators rot = rotated_components(ops, frame);
      worst = std::max(worst, std::abs(expectation(rho, rot.jn1, tol)));
      worst = std::max(worst, std::abs(expectation(rho, rot.jn2, tol)));
    }
    add_check(results, "aligned_frame_centering", worst <= 1e-10,
              "max |<Jn1or2>| = " + format_double(worst));
  }

  // 7. Coherent spin states sit exactly at the squeezing boundary.
  {
    const CollectiveOperators ops = build_collective_operators(3);
    double worst = 0.0;
    const double test_angles[][2] = {{0.0, 0.0}, {0.8, 0.4}, {2.1, 3.9}};
    FrameSpec frame;
    frame.mode = FrameMode::Aligned;
    for (const auto& a : test_angles) {
      const DensityMatrix rho =
          density_from_pure(css_state(a[0], a[1], 3), tol);
      const SqueezingResult res = squeezing_parameter(rho, ops, frame, tol);
      worst = std::max(worst, std::abs(res.epsilon - 1.0));
    }
    add_check(results, "coherent_state_baseline", worst <= tol.squeezing_delta,
              "max |epsilon - 1| = " + format_double(worst));
  }

  return results;
}

}  // namespace ssq

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
//
// Command-line driver. Subcommands:
//   sweep     evaluate epsilon over a (theta, phi, param) grid -> CSV/JSON
//   audit     compare the published closed forms against the density-matrix
//             pipeline over a full grid -> CSV + notes
//   sssd      scan a channel parameter for squeezing death/birth events
//   validate  run the built-in physics self-checks
//
// Exit codes: 0 success; 1 usage or I/O error; 2 squeezing death found
// (sssd); 3 self-check failure (validate).

#include <cctype>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ssq/sweep.hpp"

namespace {

std::vector<double> degrees_to_radians(const std::vector<double>& degs) {
  std::vector<double> rads;
  rads.reserve(degs.size());
  for (double d : degs) rads.push_back(d * std::numbers::pi / 180.0);
  return rads;
}

struct ParamRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
};

ParamRange parse_param_range(const std::string& text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw std::invalid_argument("--param-range expects START:STOP:COUNT, got '" +
                                text + "'");
  }
  ParamRange r;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, c1);
    const std::string b = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string c = text.substr(c2 + 1);
    r.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    r.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    r.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::exception&) {
    throw std::invalid_argument("--param-range expects START:STOP:COUNT, got '" +
                                text + "'");
  }
  if (r.count < 1) {
    throw std::invalid_argument("--param-range COUNT must be at least 1");
  }
  return r;
}

void add_tolerance_flags(CLI::App* cmd, ssq::Tolerances& tol) {
  cmd->add_option("--tol-hermiticity", tol.hermiticity,
                  "Hermiticity check tolerance");
  cmd->add_option("--tol-trace", tol.trace_unit, "Unit-trace tolerance");
  cmd->add_option("--tol-psd-floor", tol.psd_floor,
                  "Smallest admissible density-matrix eigenvalue");
  cmd->add_option("--tol-imag", tol.imag_residue,
                  "Allowed imaginary residue in expectation values");
  cmd->add_option("--tol-kraus", tol.kraus_complete,
                  "Kraus completeness tolerance");
  cmd->add_option("--tol-zero-spin", tol.zero_spin,
                  "Mean-spin length treated as zero");
  cmd->add_option("--tol-delta", tol.squeezing_delta,
                  "Squeezing margin (squeezed iff epsilon < 1 - delta)");
  cmd->add_option("--tol-audit", tol.audit_match, "Audit match tolerance");
}

std::string trimmed(std::string text) {
  const auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!text.empty() && is_space(text.front())) text.erase(text.begin());
  while (!text.empty() && is_space(text.back())) text.pop_back();
  return text;
}

// Applies key=value pairs from a plain-text config file to a subcommand.
// Keys are long option names without the leading dashes; blank lines and
// '#' comments are ignored; later duplicates win. Options already given on
// the command line keep their values, so flags override the file.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    throw std::runtime_error("cannot read config file '" + path + "'");
  }
  std::map<std::string, std::string> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(std::move(line));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected key=value, got '" + line + "'");
    }
    pairs[trimmed(line.substr(0, eq))] = trimmed(line.substr(eq + 1));
  }
  for (const auto& [key, value] : pairs) {
    CLI::Option* opt =
        key == "config" ? nullptr : cmd->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw std::runtime_error(path + ": unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;  // command-line flags win
    opt->add_result(value);
    opt->run_callback();  // converts, validates, and stores the value
  }
}

void print_sssd_events(const ssq::SssdOutcome& outcome) {
  for (const ssq::SssdEvent& ev : outcome.events) {
    const char* what =
        ev.direction == ssq::SssdEvent::Direction::Death ? "death" : "birth";
    std::cout << what << " between param=" << ssq::format_double(ev.param_before)
              << " (epsilon=" << ssq::format_double(ev.epsilon_before)
              << ") and param=" << ssq::format_double(ev.param_after)
              << " (epsilon=" << ssq::format_double(ev.epsilon_after) << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinsqueeze: spin-squeezing parameter of few-qubit states under "
      "single-qubit Kraus decoherence channels"};
  app.require_subcommand(1);

  // --- sweep ---------------------------------------------------------------
  std::string sw_state = "ghz";
  std::string sw_channel = "bitflip";
  std::string sw_frame = "aligned";
  std::vector<double> sw_theta_deg;
  std::vector<double> sw_phi_deg;
  std::string sw_param_range;
  int sw_qubits = 3;
  std::string sw_out = "sweep_output.csv";
  std::string sw_format = "csv";
  std::string sw_config;
  ssq::Tolerances sw_tol;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate epsilon over a (theta, phi, param) grid");
  sweep->add_option("--state", sw_state, "State family: ghz|w|css")
      ->check(CLI::IsMember({"ghz", "w", "css"}));
  sweep
      ->add_option("--channel", sw_channel,
                   "Decoherence channel: bitflip|phaseflip|bitphaseflip|"
                   "ampdamp|phasedamp|depolarize")
      ->check(CLI::IsMember({"bitflip", "phaseflip", "bitphaseflip", "ampdamp",
                             "phasedamp", "depolarize"}));
  sweep->add_option("--frame", sw_frame, "Frame mode: aligned|explicit")
      ->check(CLI::IsMember({"aligned", "explicit"}));
  sweep
      ->add_option("--theta-deg", sw_theta_deg,
                   "Comma-separated polar angles in degrees")
      ->delimiter(',');
  sweep
      ->add_option("--phi-deg", sw_phi_deg,
                   "Comma-separated azimuthal angles in degrees")
      ->delimiter(',');
  sweep->add_option("--param-range", sw_param_range,
                    "Channel parameter grid as START:STOP:COUNT "
                    "(default: channel domain, 50 points)");
  sweep->add_option("--qubits", sw_qubits, "Number of qubits")->capture_default_str()
      ->check(CLI::Range(1, 12));
  sweep->add_option("--out", sw_out, "Output file path")->capture_default_str();
  sweep->add_option("--format", sw_format, "Output format: csv|json")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  add_tolerance_flags(sweep, sw_tol);
  sweep->add_option("--config", sw_config,
                    "Read options from a key=value file (# comments; "
                    "command-line flags win)");

  // --- audit ---------------------------------------------------------------
  int au_theta_count = 5;
  int au_phi_count = 5;
  int au_param_count = 11;
  std::string au_out = "audit_report.csv";
  std::string au_config;
  ssq::Tolerances au_tol;

  CLI::App* audit_cmd = app.add_subcommand(
      "audit",
      "Compare the published closed-form epsilon expressions against the "
      "density-matrix pipeline");
  audit_cmd->add_option("--theta-count", au_theta_count,
                        "Grid points over theta in [0, 90 deg]")->capture_default_str()
      ->check(CLI::Range(2, 1000));
  audit_cmd->add_option("--phi-count", au_phi_count,
                        "Grid points over phi in [0, 180 deg]")->capture_default_str()
      ->check(CLI::Range(2, 1000));
  audit_cmd->add_option("--param-count", au_param_count,
                        "Grid points over each channel domain")->capture_default_str()
      ->check(CLI::Range(2, 10000));
  audit_cmd->add_option("--out", au_out, "Report CSV path")->capture_default_str();
  add_tolerance_flags(audit_cmd, au_tol);
  audit_cmd->add_option("--config", au_config,
                        "Read options from a key=value file (# comments; "
                        "command-line flags win)");

  // --- sssd ----------------------------------------------------------------
  std::string sd_state = "ghz";
  std::string sd_channel = "bitflip";
  std::string sd_frame = "aligned";
  int sd_samples = 200;
  std::string sd_param_range;
  double sd_theta_deg = 0.0;
  double sd_phi_deg = 0.0;
  int sd_qubits = 3;
  std::string sd_config;
  ssq::Tolerances sd_tol;

  CLI::App* sssd = app.add_subcommand(
      "sssd", "Scan a channel parameter for squeezing death/birth events");
  sssd->add_option("--state", sd_state, "State family: ghz|w|css")
      ->check(CLI::IsMember({"ghz", "w", "css"}));
  sssd->add_option("--channel", sd_channel,
                   "Decoherence channel: bitflip|phaseflip|bitphaseflip|"
                   "ampdamp|phasedamp|depolarize")
      ->check(CLI::IsMember({"bitflip", "phaseflip", "bitphaseflip", "ampdamp",
                             "phasedamp", "depolarize"}));
  sssd->add_option("--frame", sd_frame, "Frame mode: aligned|explicit")
      ->check(CLI::IsMember({"aligned", "explicit"}));
  sssd->add_option("--samples", sd_samples, "Scan points (>= 10)")->capture_default_str();
  sssd->add_option("--param-range", sd_param_range,
                   "Scan range as START:STOP:COUNT; COUNT overrides "
                   "--samples (default: channel domain)");
  sssd->add_option("--theta-deg", sd_theta_deg,
                   "Frame / CSS Bloch polar angle in degrees")->capture_default_str();
  sssd->add_option("--phi-deg", sd_phi_deg,
                   "Frame / CSS Bloch azimuthal angle in degrees")->capture_default_str();
  sssd->add_option("--qubits", sd_qubits, "Number of qubits")->capture_default_str()
      ->check(CLI::Range(1, 12));
  add_tolerance_flags(sssd, sd_tol);
  sssd->add_option("--config", sd_config,
                   "Read options from a key=value file (# comments; "
                   "command-line flags win)");

  // --- validate ------------------------------------------------------------
  std::string va_config;
  ssq::Tolerances va_tol;
  CLI::App* validate =
      app.add_subcommand("validate", "Run the built-in physics self-checks");
  add_tolerance_flags(validate, va_tol);
  validate->add_option("--config", va_config,
                       "Read options from a key=value file (# comments; "
                       "command-line flags win)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
  }

  try {
    if (sweep->parsed()) {
      if (!sw_config.empty()) apply_config_file(sweep, sw_config);
      ssq::SweepSpec spec;
      spec.state = ssq::parse_state_kind(sw_state);
      spec.channel = ssq::parse_channel_kind(sw_channel);
      spec.frame_mode = ssq::parse_frame_mode(sw_frame);
      spec.theta_list = degrees_to_radians(sw_theta_deg);
      spec.phi_list = degrees_to_radians(sw_phi_deg);
      if (sw_param_range.empty()) {
        const auto [lo, hi] = ssq::default_param_range(spec.channel);
        spec.param_start = lo;
        spec.param_stop = hi;
        spec.param_count = 50;
      } else {
        const ParamRange pr = parse_param_range(sw_param_range);
        spec.param_start = pr.start;
        spec.param_stop = pr.stop;
        spec.param_count = pr.count;
      }
      spec.n_qubits = sw_qubits;
      spec.output_path = sw_out;
      spec.format = ssq::parse_output_format(sw_format);
      const int rows = ssq::run_sweep(spec, sw_tol);
      std::cout << "wrote " << rows << " rows to " << spec.output_path << "\n";
      return 0;
    }

    if (audit_cmd->parsed()) {
      if (!au_config.empty()) apply_config_file(audit_cmd, au_config);
      const ssq::AuditSummary summary = ssq::run_audit(
          au_theta_count, au_phi_count, au_param_count, au_out, au_tol);
      std::cout << "audit: " << summary.total_rows << " rows, "
                << summary.match_rows << " match, " << summary.mismatch_rows
                << " mismatch\n";
      std::cout << "report: " << summary.report_path << "\n";
      std::cout << "notes:  " << summary.notes_path << "\n";
      return 0;
    }

    if (sssd->parsed()) {
      if (!sd_config.empty()) apply_config_file(sssd, sd_config);
      ssq::SssdSpec spec;
      spec.state = ssq::parse_state_kind(sd_state);
      spec.channel = ssq::parse_channel_kind(sd_channel);
      spec.frame_mode = ssq::parse_frame_mode(sd_frame);
      spec.samples = sd_samples;
      if (!sd_param_range.empty()) {
        const ParamRange pr = parse_param_range(sd_param_range);
        spec.use_default_range = false;
        spec.param_start = pr.start;
        spec.param_stop = pr.stop;
        spec.samples = pr.count;
      }
      spec.theta = sd_theta_deg * std::numbers::pi / 180.0;
      spec.phi = sd_phi_deg * std::numbers::pi / 180.0;
      spec.n_qubits = sd_qubits;
      const ssq::SssdOutcome outcome = ssq::run_sssd(spec, sd_tol);
      print_sssd_events(outcome);
      int deaths = 0;
      int births = 0;
      for (const ssq::SssdEvent& ev : outcome.events) {
        (ev.direction == ssq::SssdEvent::Direction::Death ? deaths : births)++;
      }
      std::cout << "scan: " << outcome.series.size() << " samples, " << deaths
                << " deaths, " << births << " births\n";
      return outcome.any_death ? 2 : 0;
    }

    if (validate->parsed()) {
      if (!va_config.empty()) apply_config_file(validate, va_config);
      const std::vector<ssq::CheckResult> results = ssq::run_validation(va_tol);
      bool all_ok = true;
      for (const ssq::CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.detail << "\n";
        all_ok = all_ok && r.passed;
      }
      std::cout << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
      return all_ok ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no subcommand given\n";
  return 1;
}

// Copyright 2026 The qtrio developers
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

// qtrio command-line tool.
//
// Subcommands:
//   measure  -- print every resource measure of one state as JSON
//   sample   -- stream measures of Haar-random states to CSV
//   verify   -- check all trade-off relations over a random ensemble
//   figure   -- reproduce one of the five scatter figures (CSV + SVG)
//
// Exit codes: 0 success (and all relations pass), 1 verification failure,
// 2 usage or parse error, 3 I/O error.

#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtrio/io.hpp"
#include "qtrio/measures.hpp"
#include "qtrio/numfmt.hpp"
#include "qtrio/relations.hpp"
#include "qtrio/states.hpp"
#include "qtrio/version.hpp"

namespace {

using namespace qtrio;

std::string now_timestamp() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::array<Complex, PureState3::kDim> parse_inline_amplitudes(
    const std::string& text) {
  std::vector<double> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      values.push_back(parse_double(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  if (values.size() != 2 * PureState3::kDim) {
    throw ParseError("--amps needs 16 numbers (re,im for each of 8 amplitudes), got " +
                     std::to_string(values.size()));
  }
  std::array<Complex, PureState3::kDim> raw;
  for (std::size_t i = 0; i < PureState3::kDim; ++i) {
    raw[i] = Complex(values[2 * i], values[2 * i + 1]);
  }
  return raw;
}

RunMetadata make_metadata(std::uint64_t seed, std::uint64_t count,
                          const Tolerances& tols) {
  RunMetadata meta;
  meta.seed = seed;
  meta.count = count;
  meta.tols = tols;
  meta.tool_version = kVersion;
  meta.timestamp = now_timestamp();
  return meta;
}

int run_measure(const std::string& file, const std::string& amps) {
  if (file.empty() == amps.empty()) {
    std::cerr << "error: measure needs exactly one of a state file or --amps\n";
    return 2;
  }
  const PureState3 state =
      amps.empty() ? load_state_file(file) : make_state(parse_inline_amplitudes(amps));
  // Compute everything before printing anything, so a failure never leaves
  // partial output behind.
  const std::string json = profile_to_json(compute_profile(state));
  std::cout << json << '\n';
  return 0;
}

int run_sample(std::uint64_t n, std::uint64_t seed, const std::string& out_path) {
  const SamplerConfig config{seed, n};
  validate(config);
  const Tolerances tols;
  const RunMetadata meta = make_metadata(seed, n, tols);
  if (out_path == "-") {
    write_sample_csv(std::cout, config, tols, meta);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + out_path);
  write_sample_csv(out, config, tols, meta);
  out.close();
  if (!out) throw IoError("failed writing: " + out_path);
  return 0;
}

int run_verify(std::uint64_t n, std::uint64_t seed, double tol, bool tol_set,
               const std::string& out_path) {
  Tolerances tols;
  if (tol_set) {
    tols.derived = tol;
    tols.theorem = tol;
  }
  const TheoremReport report = verify_ensemble({seed, n}, tols);
  const std::string json = report_to_json(report, now_timestamp());
  if (out_path == "-") {
    std::cout << json << '\n';
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + out_path);
    out << json << '\n';
    out.close();
    if (!out) throw IoError("failed writing: " + out_path);
  }
  return report.all_pass ? 0 : 1;
}

int run_figure(const std::string& which, std::uint64_t n, std::uint64_t seed,
               std::string csv_path, std::string svg_path) {
  const FigureId id = parse_figure_id(which);
  if (csv_path.empty()) {
    csv_path = std::string("figure_") + figure_short_name(id) + ".csv";
  }
  if (svg_path.empty()) {
    svg_path = std::string("figure_") + figure_short_name(id) + ".svg";
  }
  const Tolerances tols;
  const FigureData figure = compute_figure(id, n, seed, tols);
  const RunMetadata meta = make_metadata(seed, n, tols);

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw IoError("cannot open for writing: " + csv_path);
  write_figure_csv(csv, figure, meta);
  csv.close();
  if (!csv) throw IoError("failed writing: " + csv_path);

  std::ofstream svg(svg_path, std::ios::binary);
  if (!svg) throw IoError("cannot open for writing: " + svg_path);
  svg << render_figure_svg(figure, meta);
  svg.close();
  if (!svg) throw IoError("failed writing: " + svg_path);

  std::cout << "csv: " << csv_path << "\nsvg: " << svg_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource measures of three-qubit pure states: compute, "
               "sample, verify trade-off relations, and plot"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* measure =
      app.add_subcommand("measure", "Print all measures of one state as JSON");
  std::string measure_file;
  std::string measure_amps;
  measure->add_option("file", measure_file,
                      "State file: JSON or plain text (8 lines of 're im')");
  measure->add_option("--amps", measure_amps,
                      "Inline amplitudes: 16 comma-separated reals "
                      "(re,im per amplitude, basis order |000>..|111>)");

  auto* sample = app.add_subcommand(
      "sample", "Write a CSV of measures over Haar-random states");
  std::uint64_t sample_n = 100000;
  std::uint64_t sample_seed = 42;
  std::string sample_out = "-";
  sample->add_option("--n", sample_n, "Number of states (default 100000)");
  sample->add_option("--seed", sample_seed, "RNG seed (default 42)");
  sample->add_option("--out", sample_out, "Output path, '-' for stdout");

  auto* verify = app.add_subcommand(
      "verify", "Check every trade-off relation over a random ensemble");
  std::uint64_t verify_n = 100000;
  std::uint64_t verify_seed = 42;
  double verify_tol = 0.0;
  std::string verify_out = "-";
  verify->add_option("--n", verify_n, "Ensemble size (default 100000)");
  verify->add_option("--seed", verify_seed, "RNG seed (default 42)");
  auto* tol_opt =
      verify
          ->add_option("--tol", verify_tol,
                       "Pass tolerance for every relation (default: 1e-10 for "
                       "equalities, 1e-9 for inequalities)")
          ->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out, "Report path, '-' for stdout");

  auto* figure = app.add_subcommand(
      "figure", "Emit one scatter figure as CSV data plus an SVG plot");
  std::string figure_which;
  std::uint64_t figure_n = 100000;
  std::uint64_t figure_seed = 42;
  std::string figure_csv;
  std::string figure_svg;
  figure->add_option("--which", figure_which, "Figure id: F1..F5")->required();
  figure->add_option("--n", figure_n,
                     "Number of scatter states; 0 draws boundary curves only "
                     "(default 100000)");
  figure->add_option("--seed", figure_seed, "RNG seed (default 42)");
  figure->add_option("--csv", figure_csv,
                     "Scatter CSV path (default figure_<id>.csv)");
  figure->add_option("--out", figure_svg,
                     "SVG path (default figure_<id>.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, bad usage is 2
  }

  try {
    if (*measure) return run_measure(measure_file, measure_amps);
    if (*sample) return run_sample(sample_n, sample_seed, sample_out);
    if (*verify) {
      return run_verify(verify_n, verify_seed, verify_tol, tol_opt->count() > 0,
                        verify_out);
    }
    if (*figure) {
      return run_figure(figure_which, figure_n, figure_seed, figure_csv,
                        figure_svg);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtrio/closed_forms.hpp"
#include "qtrio/measures.hpp"
#include "qtrio/states.hpp"
#include "qtrio/tolerances.hpp"

namespace qtrio {

/// Provenance block written into output artifacts as "#"-prefixed comment
/// lines (CSV) or an XML comment (SVG).  The timestamp is deliberately left
/// out of deterministic artifacts: files produced from the same seed must be
/// byte-identical across runs.  Report JSON carries it instead.
struct RunMetadata {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  Tolerances tols;
  std::string rng_algorithm = kRngAlgorithm;
  std::string tool_version;
  std::string timestamp;
};

/// "key: value" metadata lines, without the comment prefix.
/// The timestamp is included only when include_timestamp is set.
std::vector<std::string> metadata_lines(const RunMetadata& meta,
                                        bool include_timestamp = false);

/// ResourceProfile as a JSON object; doubles carry enough digits to
/// round-trip exactly.
std::string profile_to_json(const ResourceProfile& profile);

/// Streams config.count Haar samples as CSV: metadata comments, then the
/// header "index,ggm,gmc,fill,coherence,s_ab,s_ac,s_bc,s_max,a,b,c,q", then
/// one row per state.  LF line endings; shortest round-trip decimals.
void write_sample_csv(std::ostream& out, const SamplerConfig& config,
                      const Tolerances& tols, const RunMetadata& meta);

/// Parses a CSV produced by this library: "#" comments skipped, first
/// remaining line taken as the header, every cell parsed as a double.
/// If header is non-null the column names are stored there.
std::vector<std::vector<double>> read_csv(std::istream& in,
                                          std::vector<std::string>* header = nullptr);

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

/// The five scatter figures.  The suffix names the (y, x) quantities.
enum class FigureId { F1_ggm_gmc, F2_d_gmc, F3_d_fill, F4_s_fill, F5_s_d };

inline constexpr std::array<FigureId, 5> kAllFigures = {
    FigureId::F1_ggm_gmc, FigureId::F2_d_gmc, FigureId::F3_d_fill,
    FigureId::F4_s_fill, FigureId::F5_s_d};

const char* figure_name(FigureId id);        // "F1_ggm_gmc", ...
const char* figure_short_name(FigureId id);  // "F1", ...

/// Accepts the short ("F1") or full ("F1_ggm_gmc") name, case-insensitive.
/// Throws ParseError for anything else.
FigureId parse_figure_id(const std::string& token);

struct FigureAxes {
  Quantity x = Quantity::Gmc;
  Quantity y = Quantity::Ggm;
};

FigureAxes figure_axes(FigureId id);

struct FigureCurve {
  std::string label;  // role of the curve in the figure
  std::string color;  // SVG color keyword
  std::vector<CurvePoint> points;
};

struct FigureData {
  FigureId id = FigureId::F1_ggm_gmc;
  FigureAxes axes;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<CurvePoint> scatter;
  std::vector<FigureCurve> curves;
};

/// Scatter of (x, y) measure values over n_samples Haar states (n_samples
/// may be 0 for a curves-only figure) plus the analytic boundary curves
/// belonging to the figure.
FigureData compute_figure(FigureId id, std::uint64_t n_samples,
                          std::uint64_t seed, const Tolerances& tols = {});

/// Scatter CSV: metadata comments, a "<x>,<y>" header of quantity names,
/// then every scatter point (never decimated).
void write_figure_csv(std::ostream& out, const FigureData& figure,
                      const RunMetadata& meta);

/// Self-contained 800x600 SVG: labeled axes, 2-px scatter dots, boundary
/// curves.  Scatters above 20000 points are thinned to that size by a
/// seed-derived uniform subsample; the CSV keeps every point.
std::string render_figure_svg(const FigureData& figure, const RunMetadata& meta);

/// Number of scatter points above which the SVG decimates.
inline constexpr std::size_t kSvgScatterLimit = 20000;

}  // namespace qtrio

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

#include "qtrio/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qtrio/numfmt.hpp"
#include "qtrio/version.hpp"

namespace qtrio {

namespace {

constexpr std::size_t kCurvePoints = 257;

double quantity_value(const ResourceProfile& p, Quantity q) {
  switch (q) {
    case Quantity::Ggm: return p.ggm;
    case Quantity::Gmc: return p.gmc;
    case Quantity::Fill: return p.fill;
    case Quantity::Coherence: return p.coherence;
    case Quantity::Steering: return p.steering_max;
  }
  throw ParameterRangeError("unknown quantity");
}

/// Display range of each quantity; also the plot range of its axis.
std::array<double, 2> quantity_range(Quantity q) {
  switch (q) {
    case Quantity::Ggm: return {0.0, 0.5};
    case Quantity::Steering: return {1.0, 3.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

std::vector<std::string> metadata_lines(const RunMetadata& meta,
                                        bool include_timestamp) {
  std::vector<std::string> lines;
  lines.push_back("tool_version: " +
                  (meta.tool_version.empty() ? std::string(kVersion)
                                             : meta.tool_version));
  if (include_timestamp && !meta.timestamp.empty()) {
    lines.push_back("timestamp: " + meta.timestamp);
  }
  lines.push_back("seed: " + std::to_string(meta.seed));
  lines.push_back("n_samples: " + std::to_string(meta.count));
  lines.push_back("rng_algorithm: " + meta.rng_algorithm);
  lines.push_back("tol: structural=" + format_double(meta.tols.structural) +
                  " derived=" + format_double(meta.tols.derived) +
                  " theorem=" + format_double(meta.tols.theorem));
  return lines;
}

std::string profile_to_json(const ResourceProfile& profile) {
  nlohmann::ordered_json doc;
  doc["ggm"] = profile.ggm;
  doc["gmc"] = profile.gmc;
  doc["fill"] = profile.fill;
  doc["coherence"] = profile.coherence;
  doc["steering_max"] = profile.steering_max;
  doc["sides"] = {{"a", profile.sides.a},
                  {"b", profile.sides.b},
                  {"c", profile.sides.c},
                  {"half_perimeter", profile.sides.half_perimeter}};
  doc["steering"] = {{"ab", profile.steering.ab},
                     {"ac", profile.steering.ac},
                     {"bc", profile.steering.bc},
                     {"max", profile.steering.max}};
  return doc.dump(2);
}

void write_sample_csv(std::ostream& out, const SamplerConfig& config,
                      const Tolerances& tols, const RunMetadata& meta) {
  validate(config);
  for (const std::string& line : metadata_lines(meta)) {
    out << "# " << line << '\n';
  }
  out << "index,ggm,gmc,fill,coherence,s_ab,s_ac,s_bc,s_max,a,b,c,q\n";
  HaarSampler sampler(config.seed);
  for (std::uint64_t i = 0; i < config.count; ++i) {
    const ResourceProfile p = analyze(sampler.next(), tols).profile;
    out << i << ',' << format_double(p.ggm) << ',' << format_double(p.gmc)
        << ',' << format_double(p.fill) << ',' << format_double(p.coherence)
        << ',' << format_double(p.steering.ab) << ','
        << format_double(p.steering.ac) << ',' << format_double(p.steering.bc)
        << ',' << format_double(p.steering.max) << ','
        << format_double(p.sides.a) << ',' << format_double(p.sides.b) << ','
        << format_double(p.sides.c) << ','
        << format_double(p.sides.half_perimeter) << '\n';
  }
  if (!out) throw IoError("failed writing sample CSV");
}

std::vector<std::vector<double>> read_csv(std::istream& in,
                                          std::vector<std::string>* header) {
  std::vector<std::vector<double>> rows;
  bool header_seen = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      header_seen = true;
      if (header) *header = cells;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& cell : cells) row.push_back(parse_double(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

const char* figure_name(FigureId id) {
  switch (id) {
    case FigureId::F1_ggm_gmc: return "F1_ggm_gmc";
    case FigureId::F2_d_gmc: return "F2_d_gmc";
    case FigureId::F3_d_fill: return "F3_d_fill";
    case FigureId::F4_s_fill: return "F4_s_fill";
    case FigureId::F5_s_d: return "F5_s_d";
  }
  return "?";
}

const char* figure_short_name(FigureId id) {
  switch (id) {
    case FigureId::F1_ggm_gmc: return "F1";
    case FigureId::F2_d_gmc: return "F2";
    case FigureId::F3_d_fill: return "F3";
    case FigureId::F4_s_fill: return "F4";
    case FigureId::F5_s_d: return "F5";
  }
  return "?";
}

FigureId parse_figure_id(const std::string& token) {
  std::string lower;
  lower.reserve(token.size());
  for (char ch : token) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (FigureId id : kAllFigures) {
    std::string full = figure_name(id);
    std::string brief = figure_short_name(id);
    for (char& ch : full) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (char& ch : brief) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == full || lower == brief) return id;
  }
  throw ParseError("unknown figure id '" + token + "' (expected F1..F5)");
}

FigureAxes figure_axes(FigureId id) {
  switch (id) {
    case FigureId::F1_ggm_gmc: return {Quantity::Gmc, Quantity::Ggm};
    case FigureId::F2_d_gmc: return {Quantity::Gmc, Quantity::Coherence};
    case FigureId::F3_d_fill: return {Quantity::Fill, Quantity::Coherence};
    case FigureId::F4_s_fill: return {Quantity::Fill, Quantity::Steering};
    case FigureId::F5_s_d: return {Quantity::Coherence, Quantity::Steering};
  }
  throw ParameterRangeError("unknown figure id");
}

namespace {

FigureCurve family_curve(Family family, FigureAxes axes, const char* label,
                         const char* color) {
  return {label, color, boundary_curve(family, axes.x, axes.y, kCurvePoints)};
}

/// Quarter of the ellipse (2y - 1)^2 + x^2 = 1 from (0, 0) to (1, 1/2).
FigureCurve relation_ellipse() {
  FigureCurve curve{"exact relation", "orangered", {}};
  curve.points.reserve(kCurvePoints);
  for (std::size_t i = 0; i < kCurvePoints; ++i) {
    const double t = (std::numbers::pi / 2.0) * static_cast<double>(i) /
                     static_cast<double>(kCurvePoints - 1);
    curve.points.push_back({std::sin(t), 0.5 * (1.0 - std::cos(t))});
  }
  return curve;
}

std::vector<FigureCurve> figure_curves(FigureId id, FigureAxes axes) {
  std::vector<FigureCurve> curves;
  switch (id) {
    case FigureId::F1_ggm_gmc:
      curves.push_back(relation_ellipse());
      break;
    case FigureId::F2_d_gmc:
      curves.push_back(family_curve(Family::Alpha, axes,
                                    "upper boundary (alpha family)", "orangered"));
      curves.push_back(family_curve(Family::M, axes,
                                    "lower boundary (m family)", "dodgerblue"));
      curves.push_back(family_curve(Family::Theta, axes,
                                    "axis family (theta)", "forestgreen"));
      break;
    case FigureId::F3_d_fill:
      curves.push_back(family_curve(Family::Alpha, axes,
                                    "upper boundary (alpha family)", "orangered"));
      curves.push_back(family_curve(Family::M, axes,
                                    "lower boundary (m family)", "dodgerblue"));
      break;
    case FigureId::F4_s_fill:
      curves.push_back(family_curve(Family::M, axes,
                                    "upper boundary (m family)", "dodgerblue"));
      break;
    case FigureId::F5_s_d:
      curves.push_back(family_curve(Family::M, axes,
                                    "left boundary (m family)", "dodgerblue"));
      curves.push_back(family_curve(Family::Theta, axes,
                                    "right boundary (theta family)", "forestgreen"));
      break;
  }
  return curves;
}

/// Uniform subsample of `target` points, deterministic in the seed.
std::vector<CurvePoint> decimate_scatter(const std::vector<CurvePoint>& points,
                                         std::size_t target,
                                         std::uint64_t seed) {
  if (points.size() <= target) return points;
  Xoshiro256pp rng(seed ^ 0xDEC13A7E5CA77E2ULL);
  std::vector<CurvePoint> kept;
  kept.reserve(target);
  std::size_t needed = target;
  for (std::size_t i = 0; i < points.size() && needed > 0; ++i) {
    const double remaining = static_cast<double>(points.size() - i);
    if (uniform_unit(rng) * remaining <= static_cast<double>(needed)) {
      kept.push_back(points[i]);
      --needed;
    }
  }
  return kept;
}

}  // namespace

FigureData compute_figure(FigureId id, std::uint64_t n_samples,
                          std::uint64_t seed, const Tolerances& tols) {
  FigureData figure;
  figure.id = id;
  figure.axes = figure_axes(id);
  figure.n_samples = n_samples;
  figure.seed = seed;
  if (n_samples > 0) {
    figure.scatter.reserve(n_samples);
    HaarSampler sampler(seed);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
      const ResourceProfile p = analyze(sampler.next(), tols).profile;
      figure.scatter.push_back({quantity_value(p, figure.axes.x),
                                quantity_value(p, figure.axes.y)});
    }
  }
  figure.curves = figure_curves(id, figure.axes);
  return figure;
}

void write_figure_csv(std::ostream& out, const FigureData& figure,
                      const RunMetadata& meta) {
  for (const std::string& line : metadata_lines(meta)) {
    out << "# " << line << '\n';
  }
  out << "# figure: " << figure_name(figure.id) << '\n';
  out << quantity_name(figure.axes.x) << ',' << quantity_name(figure.axes.y)
      << '\n';
  for (const CurvePoint& p : figure.scatter) {
    out << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
  if (!out) throw IoError("failed writing figure CSV");
}

namespace {

// Plot geometry shared by all figures.
constexpr double kWidth = 800.0, kHeight = 600.0;
constexpr double kLeft = 70.0, kRight = 780.0;
constexpr double kTop = 20.0, kBottom = 545.0;
constexpr int kTicks = 6;

struct AxisMap {
  double lo, hi, px_lo, px_hi;
  double operator()(double v) const {
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

}  // namespace

std::string render_figure_svg(const FigureData& figure,
                              const RunMetadata& meta) {
  const auto [xlo, xhi] = quantity_range(figure.axes.x);
  const auto [ylo, yhi] = quantity_range(figure.axes.y);
  const AxisMap to_px{xlo, xhi, kLeft, kRight};
  const AxisMap to_py{ylo, yhi, kBottom, kTop};  // SVG y grows downward

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";
  svg << "<!--\n";
  for (const std::string& line : metadata_lines(meta)) {
    svg << "  " << line << '\n';
  }
  svg << "  figure: " << figure_name(figure.id) << "\n-->\n";
  svg << "<title>" << figure_name(figure.id) << "</title>\n";
  svg << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

  // Axes and ticks.
  svg << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg << "  <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
      << kRight << "\" y2=\"" << kBottom << "\"/>\n";
  svg << "  <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
      << kLeft << "\" y2=\"" << kTop << "\"/>\n";
  for (int k = 0; k < kTicks; ++k) {
    const double fx = xlo + (xhi - xlo) * k / (kTicks - 1);
    const double fy = ylo + (yhi - ylo) * k / (kTicks - 1);
    svg << "  <line x1=\"" << format_fixed(to_px(fx), 2) << "\" y1=\""
        << kBottom << "\" x2=\"" << format_fixed(to_px(fx), 2) << "\" y2=\""
        << kBottom + 6 << "\"/>\n";
    svg << "  <line x1=\"" << kLeft - 6 << "\" y1=\""
        << format_fixed(to_py(fy), 2) << "\" x2=\"" << kLeft << "\" y2=\""
        << format_fixed(to_py(fy), 2) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g id=\"tick-labels\" font-family=\"sans-serif\" font-size=\"14\" "
         "fill=\"black\">\n";
  for (int k = 0; k < kTicks; ++k) {
    const double fx = xlo + (xhi - xlo) * k / (kTicks - 1);
    const double fy = ylo + (yhi - ylo) * k / (kTicks - 1);
    svg << "  <text x=\"" << format_fixed(to_px(fx), 2) << "\" y=\""
        << kBottom + 24 << "\" text-anchor=\"middle\">" << format_fixed(fx, 1)
        << "</text>\n";
    svg << "  <text x=\"" << kLeft - 10 << "\" y=\""
        << format_fixed(to_py(fy) + 5, 2) << "\" text-anchor=\"end\">"
        << format_fixed(fy, 1) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"590\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
      << quantity_name(figure.axes.x) << "</text>\n";
  svg << "<text x=\"20\" y=\"" << (kTop + kBottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"18\" transform=\"rotate(-90 20 "
      << (kTop + kBottom) / 2 << ")\">" << quantity_name(figure.axes.y)
      << "</text>\n";

  // Scatter (thinned for rendering only; the CSV keeps all points).
  const std::vector<CurvePoint> shown =
      decimate_scatter(figure.scatter, kSvgScatterLimit, figure.seed);
  svg << "<g id=\"scatter\" fill=\"purple\" fill-opacity=\"0.35\" "
         "stroke=\"none\">\n";
  for (const CurvePoint& p : shown) {
    svg << "  <circle cx=\"" << format_fixed(to_px(p.x), 2) << "\" cy=\""
        << format_fixed(to_py(p.y), 2) << "\" r=\"2\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g id=\"boundaries\" fill=\"none\" stroke-width=\"2\">\n";
  int curve_index = 0;
  for (const FigureCurve& curve : figure.curves) {
    svg << "  <path id=\"boundary-" << curve_index++ << "\" stroke=\""
        << curve.color << "\" d=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      svg << (i == 0 ? "M " : " L ") << format_fixed(to_px(curve.points[i].x), 2)
          << ' ' << format_fixed(to_py(curve.points[i].y), 2);
    }
    svg << "\"><title>" << curve.label << "</title></path>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace qtrio

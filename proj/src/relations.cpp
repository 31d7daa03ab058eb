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

#include "qtrio/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "qtrio/version.hpp"

namespace qtrio {

const char* relation_name(RelationId id) {
  switch (id) {
    case RelationId::T1_ellipse: return "T1_ellipse";
    case RelationId::T2_upper: return "T2_upper";
    case RelationId::T2_lower: return "T2_lower";
    case RelationId::T3_upper: return "T3_upper";
    case RelationId::T3_lower: return "T3_lower";
    case RelationId::T4: return "T4";
    case RelationId::T5_low_D: return "T5_low_D";
    case RelationId::T5_high_D: return "T5_high_D";
    case RelationId::ID_side_duality: return "ID_side_duality";
    case RelationId::ID_purity_duality: return "ID_purity_duality";
    case RelationId::ID_sum_rule: return "ID_sum_rule";
    case RelationId::ID_schmidt_purity: return "ID_schmidt_purity";
    case RelationId::ID_gmc_shortest_side: return "ID_gmc_shortest_side";
    case RelationId::ID_D_vs_Q: return "ID_D_vs_Q";
  }
  return "?";
}

RelationKind relation_kind(RelationId id) {
  switch (id) {
    case RelationId::T2_upper:
    case RelationId::T2_lower:
    case RelationId::T3_upper:
    case RelationId::T3_lower:
    case RelationId::T4:
    case RelationId::T5_low_D:
    case RelationId::T5_high_D:
      return RelationKind::Inequality;
    default:
      return RelationKind::Equality;
  }
}

std::array<RelationCheck, kRelationCount> relation_checks(
    const StateAnalysis& analysis, const Tolerances& tols) {
  const ResourceProfile& p = analysis.profile;
  const double g2 = 2.0 * p.ggm - 1.0;
  const double c2 = p.gmc * p.gmc;
  const double d2 = p.coherence * p.coherence;
  const double f = p.fill;
  const double f4 = (f * f) * (f * f);
  const double s = p.steering_max;

  std::array<RelationCheck, kRelationCount> out{};
  auto set = [&out](RelationId id, bool applicable, double value) {
    out[static_cast<std::size_t>(id)] = {id, applicable, value};
  };

  set(RelationId::T1_ellipse, true, std::abs(g2 * g2 + c2 - 1.0));
  set(RelationId::T2_upper, true, 1.0 - c2 - d2);
  set(RelationId::T2_lower, true, c2 + 3.0 * d2 - 1.0);
  set(RelationId::T3_upper, true, 1.0 - f - d2);

  const double gap = 3.0 * d2 - 1.0;
  set(RelationId::T3_lower, p.coherence <= kCoherenceBranchPoint + tols.theorem,
      f4 + gap * gap * (3.0 * d2 * d2 - 2.0 * d2 - 1.0));

  const double s3 = s - 3.0;
  set(RelationId::T4, true, -(48.0 * f4 + s3 * s3 * (s + 1.0) * (s - 7.0)));

  const double low_slack = 1.0 + 6.0 * d2 - s;
  const double high_slack = 4.0 - 3.0 * d2 - s;
  const bool high_side = p.coherence >= kCoherenceBranchPoint;
  if (p.coherence < kCoherenceBranchPoint - tols.theorem) {
    set(RelationId::T5_low_D, true, low_slack);
    set(RelationId::T5_high_D, false, high_slack);
  } else if (p.coherence > kCoherenceBranchPoint + tols.theorem) {
    set(RelationId::T5_low_D, false, low_slack);
    set(RelationId::T5_high_D, true, high_slack);
  } else {
    // Within the branch-point collar either bound is legitimate; score the
    // selected branch with the more permissive of the two.
    const double permissive = std::max(low_slack, high_slack);
    set(RelationId::T5_low_D, !high_side, permissive);
    set(RelationId::T5_high_D, high_side, permissive);
  }

  // Structural identities.
  const std::array<double, 3> side = {p.sides.a, p.sides.b, p.sides.c};
  const std::array<double, 3> steer = {p.steering.ab, p.steering.ac,
                                       p.steering.bc};
  const auto& pu = analysis.single_purity;
  // For each pair (x, y) the left-out qubit is z.
  static constexpr int kX[3] = {0, 0, 1};
  static constexpr int kY[3] = {1, 2, 2};
  static constexpr int kZ[3] = {2, 1, 0};
  double side_duality = 0.0;
  double purity_duality = 0.0;
  for (int k = 0; k < 3; ++k) {
    side_duality = std::max(
        side_duality,
        std::abs(steer[k] -
                 (side[kX[k]] + side[kY[k]] - 2.0 * side[kZ[k]] + 1.0)));
    purity_duality = std::max(
        purity_duality,
        std::abs(steer[k] -
                 (4.0 * pu[kZ[k]] - 2.0 * pu[kX[k]] - 2.0 * pu[kY[k]] + 1.0)));
  }
  set(RelationId::ID_side_duality, true, side_duality);
  set(RelationId::ID_purity_duality, true, purity_duality);
  set(RelationId::ID_sum_rule, true,
      std::abs(steer[0] + steer[1] + steer[2] - 3.0));

  // Complementary bipartitions share a purity: qubit q against pair 2 - q.
  double schmidt = 0.0;
  for (int q = 0; q < 3; ++q) {
    schmidt = std::max(
        schmidt, std::abs(analysis.single_purity[q] - analysis.pair_purity[2 - q]));
  }
  set(RelationId::ID_schmidt_purity, true, schmidt);

  set(RelationId::ID_gmc_shortest_side, true,
      std::abs(c2 - std::min({side[0], side[1], side[2]})));
  set(RelationId::ID_D_vs_Q, true,
      std::abs(d2 - (1.0 - (2.0 / 3.0) * p.sides.half_perimeter)));

  return out;
}

TheoremReport verify_ensemble(const SamplerConfig& config,
                              const Tolerances& tols) {
  validate(config);

  TheoremReport report;
  report.config = config;
  report.tols = tols;

  for (std::size_t i = 0; i < kRelationCount; ++i) {
    RelationStats& stats = report.relations[i];
    stats.id = kAllRelations[i];
    stats.kind = relation_kind(stats.id);
    stats.extreme = std::numeric_limits<double>::quiet_NaN();
    stats.threshold =
        stats.kind == RelationKind::Equality ? tols.derived : tols.theorem;
  }

  HaarSampler sampler(config.seed);
  for (std::uint64_t n = 0; n < config.count; ++n) {
    const PureState3 state = sampler.next();
    const StateAnalysis analysis = analyze(state, tols);
    const auto checks = relation_checks(analysis, tols);
    for (std::size_t i = 0; i < kRelationCount; ++i) {
      if (!checks[i].applicable) continue;
      RelationStats& stats = report.relations[i];
      ++stats.n_applicable;
      const bool worse =
          !stats.has_worst ||
          (stats.kind == RelationKind::Equality ? checks[i].value > stats.extreme
                                                : checks[i].value < stats.extreme);
      if (worse) {
        stats.extreme = checks[i].value;
        stats.worst_state = state;
        stats.has_worst = true;
      }
    }
  }

  for (RelationStats& stats : report.relations) {
    if (!stats.has_worst) {
      stats.pass = true;  // vacuous: nothing in the relation's domain
    } else if (stats.kind == RelationKind::Equality) {
      stats.pass = stats.extreme <= stats.threshold;
    } else {
      stats.pass = stats.extreme >= -stats.threshold;
    }
    report.all_pass = report.all_pass && stats.pass;
  }
  return report;
}

std::string report_to_json(const TheoremReport& report,
                           const std::string& timestamp) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = kVersion;
  if (!timestamp.empty()) doc["timestamp"] = timestamp;
  doc["n_samples"] = report.config.count;
  doc["seed"] = report.config.seed;
  doc["rng_algorithm"] = report.rng_algorithm;
  doc["tol"] = {{"structural", report.tols.structural},
                {"derived", report.tols.derived},
                {"theorem", report.tols.theorem}};
  doc["all_pass"] = report.all_pass;

  auto& relations = doc["relations"] = nlohmann::ordered_json::array();
  for (const RelationStats& stats : report.relations) {
    nlohmann::ordered_json entry;
    entry["id"] = relation_name(stats.id);
    const bool equality = stats.kind == RelationKind::Equality;
    entry["kind"] = equality ? "equality" : "inequality";
    const char* extreme_key = equality ? "max_residual" : "min_slack";
    if (stats.has_worst) {
      entry[extreme_key] = stats.extreme;
    } else {
      entry[extreme_key] = nullptr;
    }
    entry["pass"] = stats.pass;
    entry["tol"] = stats.threshold;
    entry["n_samples"] = report.config.count;
    entry["n_applicable"] = stats.n_applicable;
    entry["seed"] = report.config.seed;
    entry["rng_algorithm"] = report.rng_algorithm;
    if (stats.has_worst) {
      auto amps = nlohmann::ordered_json::array();
      for (const Complex& c : stats.worst_state.amplitudes) {
        amps.push_back({c.real(), c.imag()});
      }
      entry["worst_state"] = std::move(amps);
    } else {
      entry["worst_state"] = nullptr;
    }
    relations.push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace qtrio

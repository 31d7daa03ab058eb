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

#include <array>
#include <cstdint>
#include <string>

#include "qtrio/measures.hpp"
#include "qtrio/states.hpp"
#include "qtrio/tolerances.hpp"

namespace qtrio {

/// Writing G = ggm, C = gmc, F = fill, D = coherence, S = steering_max,
/// the relations certified over random ensembles are:
///
///   T1_ellipse           (2G - 1)^2 + C^2 = 1
///   T2_upper             C^2 + D^2 <= 1
///   T2_lower             C^2 + 3 D^2 >= 1
///   T3_upper             F + D^2 <= 1
///   T3_lower             F^4 + (3D^2 - 1)^2 (3D^4 - 2D^2 - 1) >= 0,
///                        applicable for D <= 1/sqrt(3)
///   T4                   48 F^4 + (S - 3)^2 (S + 1) (S - 7) <= 0
///   T5_low_D             S <= 1 + 6 D^2,  applicable for D <  1/sqrt(3)
///   T5_high_D            S <= 4 - 3 D^2,  applicable for D >= 1/sqrt(3)
///
/// plus structural identities that tie the measures together (sides
/// a, b, c and half-perimeter q as in TriangleSides, purities p_i, p_xy):
///
///   ID_side_duality      S_xy = side_x + side_y - 2 side_z + 1
///   ID_purity_duality    S_xy = 4 p_z - 2 p_x - 2 p_y + 1
///   ID_sum_rule          S_AB + S_AC + S_BC = 3
///   ID_schmidt_purity    p_i = p_yz for complementary splits
///   ID_gmc_shortest_side C^2 = min(a, b, c)
///   ID_D_vs_Q            D^2 = 1 - (2/3) q
enum class RelationId {
  T1_ellipse,
  T2_upper,
  T2_lower,
  T3_upper,
  T3_lower,
  T4,
  T5_low_D,
  T5_high_D,
  ID_side_duality,
  ID_purity_duality,
  ID_sum_rule,
  ID_schmidt_purity,
  ID_gmc_shortest_side,
  ID_D_vs_Q,
};

inline constexpr std::size_t kRelationCount = 14;

inline constexpr std::array<RelationId, kRelationCount> kAllRelations = {
    RelationId::T1_ellipse,       RelationId::T2_upper,
    RelationId::T2_lower,         RelationId::T3_upper,
    RelationId::T3_lower,         RelationId::T4,
    RelationId::T5_low_D,         RelationId::T5_high_D,
    RelationId::ID_side_duality,  RelationId::ID_purity_duality,
    RelationId::ID_sum_rule,      RelationId::ID_schmidt_purity,
    RelationId::ID_gmc_shortest_side, RelationId::ID_D_vs_Q,
};

enum class RelationKind { Equality, Inequality };

const char* relation_name(RelationId id);
RelationKind relation_kind(RelationId id);

/// D = 1/sqrt(3) separates the two branches of the steering-coherence bound
/// and bounds the applicability of the fill-coherence lower bound.
inline constexpr double kCoherenceBranchPoint =
    0.577350269189625764509148780501957456;

/// Outcome of one relation on one state.
///
/// For inequalities `value` is the slack: bound minus attained value, so
/// nonnegative means satisfied.  For equalities it is the absolute residual.
/// `applicable` is false when the state sits outside the relation's domain
/// (the wrong side of the branch point).
struct RelationCheck {
  RelationId id = RelationId::T1_ellipse;
  bool applicable = true;
  double value = 0.0;
};

/// Evaluates all relations on one analyzed state.  Results are indexed by
/// the RelationId enum order.
///
/// Near the branch point (within tols.theorem of D = 1/sqrt(3)) the
/// steering-coherence bound is ambiguous about its branch, so both are
/// evaluated and the more permissive slack is attributed to the branch the
/// sign of D - 1/sqrt(3) selects.
std::array<RelationCheck, kRelationCount> relation_checks(
    const StateAnalysis& analysis, const Tolerances& tols = {});

/// Per-relation statistics over an ensemble.
struct RelationStats {
  RelationId id = RelationId::T1_ellipse;
  RelationKind kind = RelationKind::Equality;
  std::uint64_t n_applicable = 0;
  /// Minimum slack (inequalities) or maximum residual (equalities) over the
  /// applicable states; NaN when no state was applicable.
  double extreme = 0.0;
  PureState3 worst_state;
  bool has_worst = false;
  /// Tolerance the verdict used: tols.derived for equalities,
  /// tols.theorem for inequalities.
  double threshold = 0.0;
  bool pass = true;
};

struct TheoremReport {
  SamplerConfig config;
  Tolerances tols;
  std::string rng_algorithm = kRngAlgorithm;
  std::array<RelationStats, kRelationCount> relations{};
  bool all_pass = true;
};

/// Draws config.count Haar-random states from seed config.seed and folds
/// every relation over them.  An equality passes when its largest residual
/// stays within tols.derived, an inequality when its smallest slack stays
/// above -tols.theorem.  Deterministic for fixed config.
TheoremReport verify_ensemble(const SamplerConfig& config,
                              const Tolerances& tols = {});

/// Serializes a report as pretty-printed JSON.  A nonempty timestamp is
/// recorded at the top level; it is the only field that varies between
/// reruns of the same configuration.
std::string report_to_json(const TheoremReport& report,
                           const std::string& timestamp = "");

}  // namespace qtrio

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

#include "qtrio/linalg.hpp"
#include "qtrio/states.hpp"
#include "qtrio/tolerances.hpp"

namespace qtrio {

/// Squared one-vs-rest concurrences, viewed as the sides of the
/// concurrence triangle:
///   a = 4 det(rho_A),  b = 4 det(rho_B),  c = 4 det(rho_C),
/// each in [0, 1], with half-perimeter q = (a + b + c) / 2.
/// Every side is at most the sum of the other two.
struct TriangleSides {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double half_perimeter = 0.0;
};

/// Three-setting linear steering values S_xy = Tr(T^t T) for each qubit
/// pair, where T is the pair's Pauli correlation matrix.  Each value lies
/// in [0, 3]; their sum is always 3, and the maximum lies in [1, 3].
struct SteeringValues {
  double ab = 0.0;
  double ac = 0.0;
  double bc = 0.0;
  double max = 0.0;
};

/// All five resource measures of one state.
struct ResourceProfile {
  /// Genuine-multipartite-entanglement geometric measure: the smallest
  /// eigenvalue over all one-qubit marginals.  In [0, 1/2].
  double ggm = 0.0;
  /// Global multipartite concurrence: min over qubits of
  /// sqrt(2 (1 - Tr rho_i^2)).  In [0, 1].
  double gmc = 0.0;
  /// Concurrence fill: the normalized Heron area
  ///   [ (16/3) q (q-a) (q-b) (q-c) ]^(1/4)
  /// of the concurrence triangle.  In [0, 1].
  double fill = 0.0;
  /// First-order coherence: root-mean-square over qubits of
  /// sqrt(2 Tr rho_i^2 - 1), the Bloch-vector length.  In [0, 1].
  double coherence = 0.0;
  /// Largest pairwise steering value.  In [1, 3].
  double steering_max = 0.0;

  TriangleSides sides;
  SteeringValues steering;
};

/// Profile plus the marginal purities the measures are built from, for
/// callers that need both (the identity checks, for instance).
struct StateAnalysis {
  ResourceProfile profile;
  /// Tr(rho_i^2) for qubits A, B, C.
  std::array<double, 3> single_purity{};
  /// Tr(rho_xy^2) for pairs AB, AC, BC.
  std::array<double, 3> pair_purity{};
};

/// Computes every measure of a normalized state in one pass.
///
/// Quantities that are non-negative by theory but may dip below zero by
/// floating-point noise (squared radicands, triangle factors, sides) are
/// clamped to their bound when within tols.structural of it; a larger
/// excursion raises PositivityError, TriangleInequalityError, or Error,
/// since it signals an invalid input rather than roundoff.
StateAnalysis analyze(const PureState3& state, const Tolerances& tols = {});

ResourceProfile compute_profile(const PureState3& state,
                                const Tolerances& tols = {});

// Single-measure conveniences; each is analyze() under the hood.
double ggm(const PureState3& state, const Tolerances& tols = {});
double gmc(const PureState3& state, const Tolerances& tols = {});
double concurrence_fill(const PureState3& state, const Tolerances& tols = {});
double first_order_coherence(const PureState3& state,
                             const Tolerances& tols = {});
SteeringValues steering(const PureState3& state, const Tolerances& tols = {});

}  // namespace qtrio

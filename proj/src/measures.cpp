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

#include "qtrio/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtrio/numfmt.hpp"

namespace qtrio {

namespace {

/// Clamps a theoretically non-negative value to 0 when it is within tol
/// below; larger deficits are real violations, not roundoff.
double clamp_nonnegative(double value, double tol, const char* what) {
  if (value < -tol) {
    throw Error(std::string(what) + " is negative beyond tolerance: " +
                format_double(value));
  }
  return std::max(value, 0.0);
}

/// Clamps a value into [0, 1] within tol on either side.
double clamp_unit(double value, double tol, const char* what) {
  value = clamp_nonnegative(value, tol, what);
  if (value > 1.0 + tol) {
    throw Error(std::string(what) + " exceeds 1 beyond tolerance: " +
                format_double(value));
  }
  return std::min(value, 1.0);
}

}  // namespace

StateAnalysis analyze(const PureState3& state, const Tolerances& tols) {
  StateAnalysis out;

  // One-qubit marginals drive ggm, gmc, coherence, and the triangle sides.
  std::array<double, 3> det{};
  std::array<double, 3> minor{};
  for (int q = 0; q < 3; ++q) {
    const DensityMatrix2 rho =
        partial_trace_single(state, static_cast<Qubit>(q), tols);
    out.single_purity[q] = purity(rho, tols);
    det[q] = determinant(rho);
    minor[q] = spectrum2(rho, tols).minor;
  }

  out.profile.ggm = std::min({minor[0], minor[1], minor[2]});

  double min_gmc_radicand = 2.0;
  for (int q = 0; q < 3; ++q) {
    const double radicand = clamp_nonnegative(
        2.0 * (1.0 - out.single_purity[q]), tols.structural,
        "concurrence radicand 2(1 - purity)");
    min_gmc_radicand = std::min(min_gmc_radicand, radicand);
  }
  out.profile.gmc = std::sqrt(min_gmc_radicand);

  TriangleSides& sides = out.profile.sides;
  // Sides could come out as 4 * det with det validated in spectrum2, but a
  // direct clamp keeps the error message specific.
  sides.a = clamp_unit(4.0 * det[0], tols.structural, "triangle side a");
  sides.b = clamp_unit(4.0 * det[1], tols.structural, "triangle side b");
  sides.c = clamp_unit(4.0 * det[2], tols.structural, "triangle side c");
  sides.half_perimeter = 0.5 * (sides.a + sides.b + sides.c);

  const double q = sides.half_perimeter;
  const std::array<double, 3> excess = {q - sides.a, q - sides.b, q - sides.c};
  double heron = (16.0 / 3.0) * q;
  for (double e : excess) {
    if (e < -tols.structural) {
      throw TriangleInequalityError(
          "concurrence triangle inequality violated by " + format_double(-e));
    }
    heron *= std::max(e, 0.0);
  }
  // The factor clamps already force heron >= 0; keep the net anyway.
  if (heron < 0.0) heron = 0.0;
  out.profile.fill =
      clamp_unit(std::pow(heron, 0.25), tols.structural, "concurrence fill");

  double coherence_sq_sum = 0.0;
  for (int qubit = 0; qubit < 3; ++qubit) {
    coherence_sq_sum += clamp_nonnegative(
        2.0 * out.single_purity[qubit] - 1.0, tols.structural,
        "coherence radicand 2 purity - 1");
  }
  out.profile.coherence = clamp_unit(std::sqrt(coherence_sq_sum / 3.0),
                                     tols.structural, "first-order coherence");

  // Pairwise steering from the Pauli correlation matrices.
  std::array<double, 3> s{};
  for (int p = 0; p < 3; ++p) {
    const DensityMatrix4 rho =
        partial_trace_pair(state, static_cast<QubitPair>(p), tols);
    out.pair_purity[p] = purity(rho, tols);
    s[p] = frobenius_squared(correlation_matrix(rho, tols));
  }
  out.profile.steering.ab = s[0];
  out.profile.steering.ac = s[1];
  out.profile.steering.bc = s[2];
  out.profile.steering.max = std::max({s[0], s[1], s[2]});
  out.profile.steering_max = out.profile.steering.max;

  return out;
}

ResourceProfile compute_profile(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile;
}

double ggm(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile.ggm;
}

double gmc(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile.gmc;
}

double concurrence_fill(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile.fill;
}

double first_order_coherence(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile.coherence;
}

SteeringValues steering(const PureState3& state, const Tolerances& tols) {
  return analyze(state, tols).profile.steering;
}

}  // namespace qtrio

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

#include "qtrio/states.hpp"
#include "qtrio/tolerances.hpp"

namespace qtrio {

enum class Qubit { A = 0, B = 1, C = 2 };
enum class QubitPair { AB = 0, AC = 1, BC = 2 };

const char* qubit_name(Qubit q);
const char* pair_name(QubitPair p);

/// The qubit a pair leaves out (AB -> C and so on).
Qubit complement(QubitPair p);

/// One-qubit reduced density matrix.  Hermitian with unit trace by
/// construction when produced by partial_trace_single.
struct DensityMatrix2 {
  std::array<std::array<Complex, 2>, 2> m{};
};

/// Two-qubit reduced density matrix.  Row index is 2*x + y where x is the
/// first qubit of the pair label and y the second.
struct DensityMatrix4 {
  std::array<std::array<Complex, 4>, 4> m{};
};

/// Real 3x3 matrix of two-point Pauli correlations,
/// t[i][j] = Tr(rho (sigma_i (x) sigma_j)) with i, j running over x, y, z.
struct CorrelationMatrix {
  std::array<std::array<double, 3>, 3> t{};
};

/// Eigenvalues of a one-qubit density matrix; major + minor == 1 exactly.
struct MarginalSpectrum {
  double major = 1.0;
  double minor = 0.0;
};

/// Checks Hermiticity and unit trace within tols.structural.
/// Throws HermiticityError or NormalizationError.
void validate_density(const DensityMatrix2& rho, const Tolerances& tols = {});
void validate_density(const DensityMatrix4& rho, const Tolerances& tols = {});

/// Reduced density matrix of one qubit, tracing out the other two.
/// The input state must be normalized within tols.structural.
DensityMatrix2 partial_trace_single(const PureState3& state, Qubit keep,
                                    const Tolerances& tols = {});

/// Reduced density matrix of a qubit pair, tracing out the third qubit.
DensityMatrix4 partial_trace_pair(const PureState3& state, QubitPair keep,
                                  const Tolerances& tols = {});

/// Tr(rho^2).  Real by Hermiticity; computed as the squared Frobenius norm.
double purity(const DensityMatrix2& rho, const Tolerances& tols = {});
double purity(const DensityMatrix4& rho, const Tolerances& tols = {});

/// det(rho) of a one-qubit density matrix; real for Hermitian input.
double determinant(const DensityMatrix2& rho);

/// Eigenvalues of a one-qubit density matrix in closed form:
///   lambda = (1 +- sqrt(1 - 4 det)) / 2.
/// The determinant is clamped into [0, 1/4] when it strays outside by at
/// most tols.structural; a larger violation raises PositivityError (below)
/// or Error (above).
MarginalSpectrum spectrum2(const DensityMatrix2& rho, const Tolerances& tols = {});

/// Each Pauli trace is real up to floating-point noise; an imaginary
/// residue above this fixed limit raises HermiticityError, below it the
/// residue is discarded.  The limit does not move with caller-supplied
/// tolerances: a stricter verification tolerance must tighten verdicts, not
/// reject well-formed input.
inline constexpr double kPauliTraceResidueLimit = 1e-10;

/// Pauli correlation matrix of a two-qubit density matrix.  Entries are
/// clamped into [-1, 1] within tols.structural.
CorrelationMatrix correlation_matrix(const DensityMatrix4& rho,
                                     const Tolerances& tols = {});

/// Frobenius inner product Tr(T^t T) = sum of squared entries.
double frobenius_squared(const CorrelationMatrix& t);

/// Local Bloch vector (<sigma_x>, <sigma_y>, <sigma_z>) of a one-qubit
/// density matrix.  Its squared length equals 2 Tr(rho^2) - 1.
std::array<double, 3> bloch_vector(const DensityMatrix2& rho);

}  // namespace qtrio

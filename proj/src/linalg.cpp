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

#include "qtrio/linalg.hpp"

#include <cmath>
#include <string>

#include "qtrio/numfmt.hpp"

namespace qtrio {

namespace {

/// Weight of a qubit's bit in the amplitude index (A is most significant).
constexpr int kBitWeight[3] = {4, 2, 1};

int weight(Qubit q) { return kBitWeight[static_cast<int>(q)]; }

void require_normalized(const PureState3& state, const Tolerances& tols) {
  const double deviation = std::abs(norm_squared(state) - 1.0);
  if (deviation > tols.structural) {
    throw NormalizationError(
        "state norm deviates from 1 by " + format_double(deviation), deviation);
  }
}

}  // namespace

const char* qubit_name(Qubit q) {
  switch (q) {
    case Qubit::A: return "A";
    case Qubit::B: return "B";
    case Qubit::C: return "C";
  }
  return "?";
}

const char* pair_name(QubitPair p) {
  switch (p) {
    case QubitPair::AB: return "AB";
    case QubitPair::AC: return "AC";
    case QubitPair::BC: return "BC";
  }
  return "?";
}

Qubit complement(QubitPair p) {
  switch (p) {
    case QubitPair::AB: return Qubit::C;
    case QubitPair::AC: return Qubit::B;
    case QubitPair::BC: return Qubit::A;
  }
  throw ParameterRangeError("unknown qubit pair");
}

void validate_density(const DensityMatrix2& rho, const Tolerances& tols) {
  if (std::abs(rho.m[0][0].imag()) > tols.structural ||
      std::abs(rho.m[1][1].imag()) > tols.structural ||
      std::abs(rho.m[0][1] - std::conj(rho.m[1][0])) > tols.structural) {
    throw HermiticityError("2x2 density matrix is not Hermitian");
  }
  const double trace = rho.m[0][0].real() + rho.m[1][1].real();
  if (std::abs(trace - 1.0) > tols.structural) {
    throw NormalizationError(
        "2x2 density matrix trace deviates from 1 by " +
            format_double(std::abs(trace - 1.0)),
        std::abs(trace - 1.0));
  }
}

void validate_density(const DensityMatrix4& rho, const Tolerances& tols) {
  double trace = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(rho.m[i][i].imag()) > tols.structural) {
      throw HermiticityError("4x4 density matrix has a complex diagonal");
    }
    trace += rho.m[i][i].real();
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(rho.m[i][j] - std::conj(rho.m[j][i])) > tols.structural) {
        throw HermiticityError("4x4 density matrix is not Hermitian");
      }
    }
  }
  if (std::abs(trace - 1.0) > tols.structural) {
    throw NormalizationError(
        "4x4 density matrix trace deviates from 1 by " +
            format_double(std::abs(trace - 1.0)),
        std::abs(trace - 1.0));
  }
}

DensityMatrix2 partial_trace_single(const PureState3& state, Qubit keep,
                                    const Tolerances& tols) {
  require_normalized(state, tols);
  const int w = weight(keep);
  // Bit weights of the two traced-out qubits.
  int w1 = 0, w2 = 0;
  switch (keep) {
    case Qubit::A: w1 = 2; w2 = 1; break;
    case Qubit::B: w1 = 4; w2 = 1; break;
    case Qubit::C: w1 = 4; w2 = 2; break;
  }
  const auto& psi = state.amplitudes;
  DensityMatrix2 rho;
  double d0 = 0.0, d1 = 0.0;
  Complex off = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int rest = x * w1 + y * w2;
      d0 += std::norm(psi[rest]);
      d1 += std::norm(psi[w + rest]);
      off += psi[rest] * std::conj(psi[w + rest]);
    }
  }
  rho.m[0][0] = d0;
  rho.m[1][1] = d1;
  rho.m[0][1] = off;
  rho.m[1][0] = std::conj(off);
  return rho;
}

DensityMatrix4 partial_trace_pair(const PureState3& state, QubitPair keep,
                                  const Tolerances& tols) {
  require_normalized(state, tols);
  // Bit weights of the two kept qubits (in pair-label order) and of the
  // traced-out qubit.
  int w1 = 0, w2 = 0, wt = 0;
  switch (keep) {
    case QubitPair::AB: w1 = 4; w2 = 2; wt = 1; break;
    case QubitPair::AC: w1 = 4; w2 = 1; wt = 2; break;
    case QubitPair::BC: w1 = 2; w2 = 1; wt = 4; break;
  }
  const auto& psi = state.amplitudes;
  DensityMatrix4 rho;
  for (int r = 0; r < 4; ++r) {
    const int row_base = (r >> 1) * w1 + (r & 1) * w2;
    double diag = 0.0;
    for (int t = 0; t < 2; ++t) diag += std::norm(psi[row_base + t * wt]);
    rho.m[r][r] = diag;
    for (int s = r + 1; s < 4; ++s) {
      const int col_base = (s >> 1) * w1 + (s & 1) * w2;
      Complex acc = 0.0;
      for (int t = 0; t < 2; ++t) {
        acc += psi[row_base + t * wt] * std::conj(psi[col_base + t * wt]);
      }
      rho.m[r][s] = acc;
      rho.m[s][r] = std::conj(acc);
    }
  }
  return rho;
}

double purity(const DensityMatrix2& rho, const Tolerances& tols) {
  validate_density(rho, tols);
  // For Hermitian rho, Tr(rho^2) is the squared Frobenius norm.
  double p = 0.0;
  for (const auto& row : rho.m) {
    for (const Complex& entry : row) p += std::norm(entry);
  }
  return p;
}

double purity(const DensityMatrix4& rho, const Tolerances& tols) {
  validate_density(rho, tols);
  double p = 0.0;
  for (const auto& row : rho.m) {
    for (const Complex& entry : row) p += std::norm(entry);
  }
  return p;
}

double determinant(const DensityMatrix2& rho) {
  return rho.m[0][0].real() * rho.m[1][1].real() - std::norm(rho.m[0][1]);
}

MarginalSpectrum spectrum2(const DensityMatrix2& rho, const Tolerances& tols) {
  validate_density(rho, tols);
  double det = determinant(rho);
  if (det < -tols.structural) {
    throw PositivityError("2x2 density matrix has negative determinant " +
                          format_double(det));
  }
  if (det > 0.25 + tols.structural) {
    throw Error("2x2 density matrix determinant " + format_double(det) +
                " exceeds the 1/4 bound for unit trace");
  }
  det = std::min(std::max(det, 0.0), 0.25);
  const double spread = std::sqrt(1.0 - 4.0 * det);
  MarginalSpectrum spectrum;
  spectrum.minor = 0.5 * (1.0 - spread);
  spectrum.major = 1.0 - spectrum.minor;  // makes the pair sum to 1 exactly
  return spectrum;
}

CorrelationMatrix correlation_matrix(const DensityMatrix4& rho,
                                     const Tolerances& tols) {
  validate_density(rho, tols);
  static const Complex kI(0.0, 1.0);
  // sigma[p][row][col] for p in {x, y, z}.
  static const Complex kSigma[3][2][2] = {
      {{0.0, 1.0}, {1.0, 0.0}},
      {{0.0, -kI}, {kI, 0.0}},
      {{1.0, 0.0}, {0.0, -1.0}},
  };
  CorrelationMatrix t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Tr(rho (sigma_i (x) sigma_j)) = sum_{k,l} rho[k][l] sigma_i[l1][k1] sigma_j[l0][k0].
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          acc += rho.m[k][l] * kSigma[i][l >> 1][k >> 1] * kSigma[j][l & 1][k & 1];
        }
      }
      if (std::abs(acc.imag()) > kPauliTraceResidueLimit) {
        throw HermiticityError("Pauli correlation trace has imaginary residue " +
                               format_double(acc.imag()));
      }
      double value = acc.real();
      if (std::abs(value) > 1.0 + tols.structural) {
        throw Error("Pauli correlation entry out of range: " +
                    format_double(value));
      }
      t.t[i][j] = std::min(std::max(value, -1.0), 1.0);
    }
  }
  return t;
}

double frobenius_squared(const CorrelationMatrix& t) {
  double total = 0.0;
  for (const auto& row : t.t) {
    for (double entry : row) total += entry * entry;
  }
  return total;
}

std::array<double, 3> bloch_vector(const DensityMatrix2& rho) {
  return {2.0 * rho.m[0][1].real(), -2.0 * rho.m[0][1].imag(),
          rho.m[0][0].real() - rho.m[1][1].real()};
}

}  // namespace qtrio

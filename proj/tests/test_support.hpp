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

// Brute-force reference implementations the production code is tested
// against.  Everything here goes through the full 8x8 density matrix and
// generic bit bookkeeping -- slower and more general than the library's
// fixed-dimension paths, which is the point: the two sides share no code.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qtrio/states.hpp"

namespace qtrio::testing {

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat8 = std::array<std::array<Complex, 8>, 8>;
using MatN = std::vector<std::vector<Complex>>;

// Pauli matrices, indexed I = 0, X = 1, Y = 2, Z = 3.
inline const std::array<Mat2, 4> kPauli = {{
    {{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}},
    {{{Complex(0), Complex(1)}, {Complex(1), Complex(0)}}},
    {{{Complex(0), Complex(0, -1)}, {Complex(0, 1), Complex(0)}}},
    {{{Complex(1), Complex(0)}, {Complex(0), Complex(-1)}}},
}};

/// |psi><psi| as a dense 8x8 matrix.
inline Mat8 outer_product(const PureState3& state) {
  Mat8 rho{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      rho[i][j] = state.amplitudes[i] * std::conj(state.amplitudes[j]);
    }
  }
  return rho;
}

/// Basis index from per-qubit bits; qubit 0 (A) is the most significant.
inline int embed_bits(const std::vector<int>& qubits, int packed) {
  int index = 0;
  const int n = static_cast<int>(qubits.size());
  for (int j = 0; j < n; ++j) {
    const int bit = (packed >> (n - 1 - j)) & 1;
    index |= bit << (2 - qubits[j]);
  }
  return index;
}

/// Reduced density matrix over `keep` (ascending qubit positions, 0 = A),
/// computed from the full 8x8 matrix by summing over every traced-out basis
/// assignment.  The row index packs kept-qubit bits in listed order.
inline MatN reduce_density(const Mat8& rho, const std::vector<int>& keep) {
  std::vector<int> rest;
  for (int q = 0; q < 3; ++q) {
    bool kept = false;
    for (int k : keep) kept = kept || (k == q);
    if (!kept) rest.push_back(q);
  }
  const int dim = 1 << keep.size();
  const int rest_dim = 1 << rest.size();
  MatN out(dim, std::vector<Complex>(dim, Complex(0)));
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      for (int r = 0; r < rest_dim; ++r) {
        out[x][y] += rho[embed_bits(keep, x) + embed_bits(rest, r)]
                        [embed_bits(keep, y) + embed_bits(rest, r)];
      }
    }
  }
  return out;
}

/// Kronecker product of one single-qubit operator per qubit, A (x) B (x) C.
inline Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
  Mat8 out{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      out[i][j] = a[(i >> 2) & 1][(j >> 2) & 1] * b[(i >> 1) & 1][(j >> 1) & 1] *
                  c[i & 1][j & 1];
    }
  }
  return out;
}

/// Tr(rho op) for dense 8x8 matrices.
inline Complex trace_product(const Mat8& rho, const Mat8& op) {
  Complex acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) acc += rho[i][j] * op[j][i];
  }
  return acc;
}

/// Tr(rho^2) by explicit matrix multiplication.
inline double purity_by_multiplication(const MatN& rho) {
  const int dim = static_cast<int>(rho.size());
  Complex acc = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) acc += rho[i][j] * rho[j][i];
  }
  return acc.real();
}

/// Eigenvalues of a general Hermitian 2x2 matrix, largest first; does not
/// assume unit trace.
inline std::array<double, 2> hermitian_eigenvalues(const MatN& rho) {
  const double tr = rho[0][0].real() + rho[1][1].real();
  const double diff = rho[0][0].real() - rho[1][1].real();
  const double disc = std::sqrt(diff * diff + 4.0 * std::norm(rho[0][1]));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

/// Full-matrix Pauli correlation oracle for a qubit pair: places sigma_i on
/// the pair's first qubit, sigma_j on its second, identity on the third.
/// pair: 0 = AB, 1 = AC, 2 = BC; i, j in {1, 2, 3} = {X, Y, Z}.
inline double pauli_correlation(const PureState3& state, int pair, int i, int j) {
  const Mat8 rho = outer_product(state);
  Mat8 op{};
  switch (pair) {
    case 0: op = kron3(kPauli[i], kPauli[j], kPauli[0]); break;
    case 1: op = kron3(kPauli[i], kPauli[0], kPauli[j]); break;
    default: op = kron3(kPauli[0], kPauli[i], kPauli[j]); break;
  }
  return trace_product(rho, op).real();
}

/// A spread of hand-picked states that exercise edges: basis states, maximal
/// and zero entanglement, biseparable placements, complex phases.
inline std::vector<PureState3> edge_states() {
  std::vector<PureState3> states;
  for (int b = 0; b < 8; ++b) {
    std::array<Complex, 8> raw{};
    raw[b] = 1.0;
    states.push_back(make_state(raw));
  }
  states.push_back(psi_alpha(std::numbers::pi / 4.0));  // GHZ
  states.push_back(psi_m(0.0));
  states.push_back(psi_m(0.5));
  states.push_back(psi_m(1.0));
  states.push_back(psi_theta(std::numbers::pi / 4.0));
  {
    // W state.
    std::array<Complex, 8> raw{};
    raw[1] = raw[2] = raw[4] = 1.0;
    states.push_back(make_state(raw));
  }
  {
    // |+++>.
    std::array<Complex, 8> raw;
    raw.fill(1.0);
    states.push_back(make_state(raw));
  }
  {
    // Bell pair on AB, C in |1>.
    std::array<Complex, 8> raw{};
    raw[1] = raw[7] = 1.0;
    states.push_back(make_state(raw));
  }
  {
    // Complex phases on a GHZ-like state.
    std::array<Complex, 8> raw{};
    raw[0] = Complex(0.6, 0.3);
    raw[7] = Complex(-0.2, 0.7);
    states.push_back(make_state(raw));
  }
  {
    // Nearly a product state.
    std::array<Complex, 8> raw{};
    raw[0] = 1.0;
    raw[7] = 1e-8;
    states.push_back(make_state(raw));
  }
  return states;
}

}  // namespace qtrio::testing

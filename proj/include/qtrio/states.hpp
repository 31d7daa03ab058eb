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
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "qtrio/errors.hpp"

namespace qtrio {

using Complex = std::complex<double>;

/// A normalized pure state of three qubits A, B, C.
///
/// Amplitudes are stored in computational-basis order with qubit A as the
/// most significant bit: amplitudes[4a + 2b + c] multiplies |abc>.  This
/// convention is fixed across the whole library, including file formats.
struct PureState3 {
  static constexpr std::size_t kDim = 8;

  std::array<Complex, kDim> amplitudes{};

  /// Factor the raw input vector was multiplied by to normalize it.
  /// Exactly 1.0 for the analytic state families.
  double normalization_factor = 1.0;
};

/// Squared two-norm of the amplitude vector.
double norm_squared(const PureState3& state);

/// Normalizes a raw amplitude vector into a state.
///
/// Throws DegenerateStateError if the vector is zero or contains a
/// non-finite entry; there is no state to normalize to in either case.
PureState3 make_state(const std::array<Complex, PureState3::kDim>& raw);

/// cos(alpha)|000> + sin(alpha)|111>.
PureState3 psi_alpha(double alpha);

/// (|000> + m|010> + m|101> + |111>) / sqrt(2 + 2 m^2), with m in [0, 1].
///
/// Throws ParameterRangeError when m lies outside [0, 1]; the values this
/// family is used to certify are only attained on that interval.
PureState3 psi_m(double m);

/// cos(theta)|001> + sin(theta)|100>.  Qubit B stays in |0>.
PureState3 psi_theta(double theta);

/// The three one-parameter state families above.
enum class Family { Alpha, M, Theta };

/// A point on one of the state families.
struct BoundaryParam {
  Family family = Family::Alpha;
  double value = 0.0;
};

/// The state a boundary parameter designates.  Validates the M domain.
PureState3 boundary_state(const BoundaryParam& param);

/// Natural parameter interval of a family: [0, pi/2] for Alpha and Theta,
/// [0, 1] for M.
std::array<double, 2> family_domain(Family family);

const char* family_name(Family family);

// ---------------------------------------------------------------------------
// Random states
// ---------------------------------------------------------------------------

/// xoshiro256++ generator, seeded through splitmix64 so that any 64-bit seed
/// (including 0) yields a well-mixed initial state.
///
/// jump() advances the sequence by 2^128 steps, giving a disjoint substream.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed);

  result_type operator()();
  void jump();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Generator identity recorded alongside every seed in output metadata.
inline constexpr const char* kRngAlgorithm =
    "xoshiro256++ (splitmix64-seeded) with Box-Muller normals";

/// Uniform draw on (0, 1]; never 0, so it is safe inside a logarithm.
double uniform_unit(Xoshiro256pp& rng);

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
};

/// Throws ParameterRangeError unless config.count >= 1.
void validate(const SamplerConfig& config);

/// Stream of Haar-distributed three-qubit pure states.
///
/// Each state normalizes a vector of eight i.i.d. standard complex
/// Gaussians.  The sixteen underlying normals are drawn in amplitude order,
/// real part before imaginary part, so the stream is a pure function of the
/// seed.  The astronomically unlikely zero vector is redrawn.
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed);

  PureState3 next();

  /// Jumps the underlying generator to a disjoint substream.
  void jump();

 private:
  Xoshiro256pp rng_;
};

// ---------------------------------------------------------------------------
// State files
// ---------------------------------------------------------------------------

/// JSON state format:
///   {"convention": "A-msb", "amplitudes": [[re, im], ... 8 entries]}
/// Values use shortest round-trip decimals, so write/read is bit-exact.
void write_state_json(std::ostream& out, const PureState3& state);
PureState3 read_state_json(std::istream& in);

/// Plain-text state format: eight lines of "re im", basis order |000>..|111>.
void write_state_text(std::ostream& out, const PureState3& state);
PureState3 read_state_text(std::istream& in);

/// Loads either format, sniffing JSON by a leading '{'.
/// Throws IoError if the file cannot be opened, ParseError on bad content.
PureState3 load_state_file(const std::string& path);

}  // namespace qtrio

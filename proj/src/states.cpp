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

#include "qtrio/states.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "qtrio/numfmt.hpp"

namespace qtrio {

namespace {

bool all_finite(const std::array<Complex, PureState3::kDim>& v) {
  for (const Complex& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

double norm_squared(const PureState3& state) {
  double n2 = 0.0;
  for (const Complex& c : state.amplitudes) n2 += std::norm(c);
  return n2;
}

PureState3 make_state(const std::array<Complex, PureState3::kDim>& raw) {
  if (!all_finite(raw)) {
    throw DegenerateStateError("amplitude vector contains a non-finite entry");
  }
  double n2 = 0.0;
  for (const Complex& c : raw) n2 += std::norm(c);
  if (n2 == 0.0) {
    throw DegenerateStateError("amplitude vector is zero; no state to normalize");
  }
  PureState3 state;
  state.normalization_factor = 1.0 / std::sqrt(n2);
  for (std::size_t i = 0; i < PureState3::kDim; ++i) {
    state.amplitudes[i] = raw[i] * state.normalization_factor;
  }
  return state;
}

PureState3 psi_alpha(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ParameterRangeError("alpha must be finite");
  }
  PureState3 state;
  state.amplitudes[0] = std::cos(alpha);
  state.amplitudes[7] = std::sin(alpha);
  return state;
}

PureState3 psi_m(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw ParameterRangeError("m must lie in [0, 1], got " + format_double(m));
  }
  const double inv_n = 1.0 / std::sqrt(2.0 + 2.0 * m * m);
  PureState3 state;
  state.amplitudes[0] = inv_n;      // |000>
  state.amplitudes[2] = m * inv_n;  // |010>
  state.amplitudes[5] = m * inv_n;  // |101>
  state.amplitudes[7] = inv_n;      // |111>
  return state;
}

PureState3 psi_theta(double theta) {
  if (!std::isfinite(theta)) {
    throw ParameterRangeError("theta must be finite");
  }
  PureState3 state;
  state.amplitudes[1] = std::cos(theta);  // |001>
  state.amplitudes[4] = std::sin(theta);  // |100>
  return state;
}

PureState3 boundary_state(const BoundaryParam& param) {
  switch (param.family) {
    case Family::Alpha:
      return psi_alpha(param.value);
    case Family::M:
      return psi_m(param.value);
    case Family::Theta:
      return psi_theta(param.value);
  }
  throw ParameterRangeError("unknown state family");
}

std::array<double, 2> family_domain(Family family) {
  const double half_pi = std::numbers::pi / 2.0;
  switch (family) {
    case Family::Alpha:
    case Family::Theta:
      return {0.0, half_pi};
    case Family::M:
      return {0.0, 1.0};
  }
  throw ParameterRangeError("unknown state family");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Alpha:
      return "alpha";
    case Family::M:
      return "m";
    case Family::Theta:
      return "theta";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Random states
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (std::uint64_t& word : s_) word = splitmix64_next(sm);
}

Xoshiro256pp::result_type Xoshiro256pp::operator()() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

void Xoshiro256pp::jump() {
  static constexpr std::uint64_t kJump[] = {
      0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
      0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
  std::array<std::uint64_t, 4> acc{};
  for (std::uint64_t word : kJump) {
    for (int bit = 0; bit < 64; ++bit) {
      if (word & (std::uint64_t{1} << bit)) {
        for (std::size_t i = 0; i < 4; ++i) acc[i] ^= s_[i];
      }
      (*this)();
    }
  }
  s_ = acc;
}

void validate(const SamplerConfig& config) {
  if (config.count < 1) {
    throw ParameterRangeError("sample count must be at least 1");
  }
}

double uniform_unit(Xoshiro256pp& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

namespace {

/// One Box-Muller transform: two independent standard normals.
std::array<double, 2> normal_pair(Xoshiro256pp& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace

HaarSampler::HaarSampler(std::uint64_t seed) : rng_(seed) {}

PureState3 HaarSampler::next() {
  for (;;) {
    std::array<Complex, PureState3::kDim> raw;
    for (Complex& c : raw) {
      const auto [re, im] = normal_pair(rng_);
      c = Complex(re, im);
    }
    double n2 = 0.0;
    for (const Complex& c : raw) n2 += std::norm(c);
    if (n2 > 0.0) {
      PureState3 state;
      const double inv = 1.0 / std::sqrt(n2);
      for (std::size_t i = 0; i < PureState3::kDim; ++i) {
        state.amplitudes[i] = raw[i] * inv;
      }
      state.normalization_factor = inv;
      return state;
    }
  }
}

void HaarSampler::jump() { rng_.jump(); }

// ---------------------------------------------------------------------------
// State files
// ---------------------------------------------------------------------------

namespace {

/// Turns a parsed raw vector into a state.  Vectors already normalized
/// within 1e-12 are taken verbatim, which keeps write/read round-trips
/// bit-exact; anything else goes through make_state.
PureState3 state_from_raw(const std::array<Complex, PureState3::kDim>& raw) {
  if (!all_finite(raw)) {
    throw DegenerateStateError("amplitude vector contains a non-finite entry");
  }
  double n2 = 0.0;
  for (const Complex& c : raw) n2 += std::norm(c);
  if (std::abs(n2 - 1.0) <= 1e-12) {
    PureState3 state;
    state.amplitudes = raw;
    return state;
  }
  return make_state(raw);
}

}  // namespace

void write_state_json(std::ostream& out, const PureState3& state) {
  nlohmann::ordered_json doc;
  doc["convention"] = "A-msb";
  auto& amps = doc["amplitudes"] = nlohmann::ordered_json::array();
  for (const Complex& c : state.amplitudes) {
    amps.push_back({c.real(), c.imag()});
  }
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing state JSON");
}

PureState3 read_state_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid state JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("amplitudes")) {
    throw ParseError("state JSON must be an object with an 'amplitudes' array");
  }
  if (doc.contains("convention") && doc["convention"] != "A-msb") {
    throw ParseError("unsupported amplitude convention: expected \"A-msb\"");
  }
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array() || amps.size() != PureState3::kDim) {
    throw ParseError("'amplitudes' must be an array of 8 [re, im] pairs");
  }
  std::array<Complex, PureState3::kDim> raw;
  for (std::size_t i = 0; i < PureState3::kDim; ++i) {
    const auto& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("amplitude " + std::to_string(i) +
                       " is not an [re, im] pair of numbers");
    }
    raw[i] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return state_from_raw(raw);
}

void write_state_text(std::ostream& out, const PureState3& state) {
  for (const Complex& c : state.amplitudes) {
    out << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
  }
  if (!out) throw IoError("failed writing state text");
}

PureState3 read_state_text(std::istream& in) {
  std::array<Complex, PureState3::kDim> raw;
  std::size_t parsed = 0;
  std::string line;
  while (parsed < PureState3::kDim && std::getline(in, line)) {
    std::istringstream fields(line);
    std::string re_text, im_text, extra;
    if (!(fields >> re_text)) continue;  // skip blank lines
    if (!(fields >> im_text) || (fields >> extra)) {
      throw ParseError("state text line " + std::to_string(parsed + 1) +
                       " must hold exactly two numbers: '" + line + "'");
    }
    raw[parsed] = Complex(parse_double(re_text), parse_double(im_text));
    ++parsed;
  }
  if (parsed != PureState3::kDim) {
    throw ParseError("state text must hold 8 amplitude lines, found " +
                     std::to_string(parsed));
  }
  return state_from_raw(raw);
}

PureState3 load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open state file: " + path);
  // Sniff the format: JSON files start with '{'.
  int first = in.peek();
  while (first == ' ' || first == '\t' || first == '\n' || first == '\r') {
    in.get();
    first = in.peek();
  }
  if (first == '{') return read_state_json(in);
  return read_state_text(in);
}

}  // namespace qtrio

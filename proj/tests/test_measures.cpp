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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"

using namespace qtrio;
using namespace qtrio::testing;

namespace {

// gmc_tol widens the concurrence check alone: gmc is the square root of a
// purity deficit, so on a biseparable state whose purity misses 1 by ~1e-16
// it vanishes only to ~1e-8.  Negative means "same as tol".
void check_profile(const ResourceProfile& p, double ggm, double gmc,
                   double fill, double coherence, double s_ab, double s_ac,
                   double s_bc, double tol, double gmc_tol = -1.0) {
  CHECK_LE(std::abs(p.ggm - ggm), tol);
  CHECK_LE(std::abs(p.gmc - gmc), gmc_tol < 0.0 ? tol : gmc_tol);
  CHECK_LE(std::abs(p.fill - fill), tol);
  CHECK_LE(std::abs(p.coherence - coherence), tol);
  CHECK_LE(std::abs(p.steering.ab - s_ab), tol);
  CHECK_LE(std::abs(p.steering.ac - s_ac), tol);
  CHECK_LE(std::abs(p.steering.bc - s_bc), tol);
  CHECK_LE(std::abs(p.steering_max - std::max({s_ab, s_ac, s_bc})), tol);
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("GHZ state: every measure at its extreme") {
  const ResourceProfile p = compute_profile(psi_alpha(std::numbers::pi / 4.0));
  check_profile(p, 0.5, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1e-14);
  CHECK_LE(std::abs(p.sides.a - 1.0), 1e-14);
  CHECK_LE(std::abs(p.sides.b - 1.0), 1e-14);
  CHECK_LE(std::abs(p.sides.c - 1.0), 1e-14);
  CHECK_LE(std::abs(p.sides.half_perimeter - 1.5), 1e-14);
}

TEST_CASE("product state |000>: no entanglement, full coherence") {
  std::array<Complex, 8> raw{};
  raw[0] = 1.0;
  const ResourceProfile p = compute_profile(make_state(raw));
  check_profile(p, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1e-15);
  CHECK_EQ(p.sides.a, 0.0);
  CHECK_EQ(p.sides.b, 0.0);
  CHECK_EQ(p.sides.c, 0.0);
}

TEST_CASE("product state |+++>") {
  std::array<Complex, 8> raw;
  raw.fill(1.0);
  const ResourceProfile p = compute_profile(make_state(raw));
  check_profile(p, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1e-14, 5e-8);
}

TEST_CASE("alpha family at pi/6") {
  const ResourceProfile p = compute_profile(psi_alpha(std::numbers::pi / 6.0));
  const double root3_half = std::sqrt(3.0) / 2.0;
  check_profile(p, 0.25, root3_half, 0.75, 0.5, 1.0, 1.0, 1.0, 1e-14);
  CHECK_LE(std::abs(p.sides.a - 0.75), 1e-14);
  CHECK_LE(std::abs(p.sides.b - 0.75), 1e-14);
  CHECK_LE(std::abs(p.sides.c - 0.75), 1e-14);
}

TEST_CASE("m family endpoint m = 1: steering peaks at 3") {
  const ResourceProfile p = compute_profile(psi_m(1.0));
  const double inv_root3 = 1.0 / std::sqrt(3.0);
  check_profile(p, 0.0, 0.0, 0.0, inv_root3, 0.0, 3.0, 0.0, 1e-14);
  CHECK_LE(std::abs(p.sides.a - 1.0), 1e-14);
  CHECK_EQ(p.sides.b, 0.0);
  CHECK_LE(std::abs(p.sides.c - 1.0), 1e-14);
}

TEST_CASE("theta family at pi/4: Bell pair on AC") {
  const ResourceProfile p = compute_profile(psi_theta(std::numbers::pi / 4.0));
  const double inv_root3 = 1.0 / std::sqrt(3.0);
  check_profile(p, 0.0, 0.0, 0.0, inv_root3, 0.0, 3.0, 0.0, 1e-14);
  // A and C are maximally entangled with the rest; B is pure.
  CHECK_LE(std::abs(p.sides.a - 1.0), 1e-14);
  CHECK_EQ(p.sides.b, 0.0);
  CHECK_LE(std::abs(p.sides.c - 1.0), 1e-14);
}

TEST_CASE("Bell pair on AB with spectator C") {
  std::array<Complex, 8> raw{};
  raw[1] = raw[7] = 1.0;  // (|00> + |11>)_AB (x) |1>_C
  const ResourceProfile p = compute_profile(make_state(raw));
  const double inv_root3 = 1.0 / std::sqrt(3.0);
  check_profile(p, 0.0, 0.0, 0.0, inv_root3, 3.0, 0.0, 0.0, 1e-14, 5e-8);
}

TEST_CASE("W state: the classic three-way-balanced example") {
  std::array<Complex, 8> raw{};
  raw[1] = raw[2] = raw[4] = 1.0;
  const ResourceProfile p = compute_profile(make_state(raw));
  const double side = 8.0 / 9.0;
  check_profile(p, 1.0 / 3.0, std::sqrt(side), side, 1.0 / 3.0, 1.0, 1.0, 1.0,
                1e-14);
  CHECK_LE(std::abs(p.sides.half_perimeter - 4.0 / 3.0), 1e-14);
}

TEST_CASE("analysis exposes consistent internals") {
  HaarSampler sampler(555);
  for (int i = 0; i < 50; ++i) {
    const StateAnalysis a = analyze(sampler.next());
    const ResourceProfile& p = a.profile;
    CHECK_EQ(p.steering_max,
             std::max({p.steering.ab, p.steering.ac, p.steering.bc}));
    CHECK_EQ(p.sides.half_perimeter,
             0.5 * (p.sides.a + p.sides.b + p.sides.c));
    for (double purity : a.single_purity) {
      CHECK_GE(purity, 0.5 - 1e-12);
      CHECK_LE(purity, 1.0 + 1e-12);
    }
  }
}

TEST_CASE("single-measure helpers agree with the combined profile") {
  const PureState3 state = HaarSampler(77).next();
  const ResourceProfile p = compute_profile(state);
  CHECK_EQ(ggm(state), p.ggm);
  CHECK_EQ(gmc(state), p.gmc);
  CHECK_EQ(concurrence_fill(state), p.fill);
  CHECK_EQ(first_order_coherence(state), p.coherence);
  CHECK_EQ(steering(state).max, p.steering_max);
}

TEST_CASE("measure ranges hold over a random ensemble") {
  HaarSampler sampler(404);
  for (int i = 0; i < 10000; ++i) {
    const ResourceProfile p = compute_profile(sampler.next());
    CHECK_GE(p.ggm, 0.0);
    CHECK_LE(p.ggm, 0.5);
    CHECK_GE(p.gmc, 0.0);
    CHECK_LE(p.gmc, 1.0);
    CHECK_GE(p.fill, 0.0);
    CHECK_LE(p.fill, 1.0);
    CHECK_GE(p.coherence, 0.0);
    CHECK_LE(p.coherence, 1.0);
    CHECK_GE(p.steering_max, 1.0 - 1e-12);
    CHECK_LE(p.steering_max, 3.0 + 1e-12);
    for (double s : {p.steering.ab, p.steering.ac, p.steering.bc}) {
      CHECK_GE(s, -1e-12);
      CHECK_LE(s, 3.0 + 1e-12);
    }
  }
}

TEST_CASE("triangle inequality holds for the concurrence sides") {
  HaarSampler sampler(606);
  for (int i = 0; i < 10000; ++i) {
    const TriangleSides s = compute_profile(sampler.next()).sides;
    CHECK_LE(s.a, s.b + s.c + 1e-12);
    CHECK_LE(s.b, s.a + s.c + 1e-12);
    CHECK_LE(s.c, s.a + s.b + 1e-12);
    for (double side : {s.a, s.b, s.c}) {
      CHECK_GE(side, 0.0);
      CHECK_LE(side, 1.0);
    }
  }
}

TEST_CASE("squared gmc equals the shortest triangle side") {
  HaarSampler sampler(707);
  for (int i = 0; i < 10000; ++i) {
    const ResourceProfile p = compute_profile(sampler.next());
    const double shortest = std::min({p.sides.a, p.sides.b, p.sides.c});
    CHECK_LE(std::abs(p.gmc * p.gmc - shortest), 1e-12);
  }
}

TEST_CASE("squared coherence is dual to the half-perimeter") {
  HaarSampler sampler(808);
  for (int i = 0; i < 10000; ++i) {
    const ResourceProfile p = compute_profile(sampler.next());
    CHECK_LE(std::abs(p.coherence * p.coherence -
                      (1.0 - (2.0 / 3.0) * p.sides.half_perimeter)),
             1e-12);
  }
}

TEST_CASE("steering from correlations matches the purity route") {
  // S_xy = 4 Tr rho_z^2 - 2 Tr rho_x^2 - 2 Tr rho_y^2 + 1: an independent
  // arithmetic path through the marginal purities.
  HaarSampler sampler(909);
  for (int i = 0; i < 2000; ++i) {
    const StateAnalysis a = analyze(sampler.next());
    const auto& pu = a.single_purity;
    const double want_ab = 4.0 * pu[2] - 2.0 * pu[0] - 2.0 * pu[1] + 1.0;
    const double want_ac = 4.0 * pu[1] - 2.0 * pu[0] - 2.0 * pu[2] + 1.0;
    const double want_bc = 4.0 * pu[0] - 2.0 * pu[1] - 2.0 * pu[2] + 1.0;
    CHECK_LE(std::abs(a.profile.steering.ab - want_ab), 1e-12);
    CHECK_LE(std::abs(a.profile.steering.ac - want_ac), 1e-12);
    CHECK_LE(std::abs(a.profile.steering.bc - want_bc), 1e-12);
  }
}

TEST_CASE("analyze rejects unnormalized input") {
  PureState3 bad;
  bad.amplitudes[0] = 0.5;
  CHECK_THROWS_AS(analyze(bad), NormalizationError);
}

}  // TEST_SUITE("measures")

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

namespace qtrio {

/// Single knob for all numerical thresholds used across the library.
///
/// `structural` guards exact constraints of well-formed inputs (norms,
/// Hermiticity, trace, clamping of bounded quantities). `derived` bounds the
/// residual of quantities reached through a chain of floating-point
/// operations (equality identities, oracle agreement). `theorem` is the slack
/// allowed when testing the trade-off inequalities on sampled ensembles.
struct Tolerances {
  double structural = 1e-12;
  double derived = 1e-10;
  double theorem = 1e-9;
};

}  // namespace qtrio

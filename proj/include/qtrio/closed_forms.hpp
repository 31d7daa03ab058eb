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

#include <cstddef>
#include <vector>

#include "qtrio/states.hpp"

namespace qtrio {

/// Closed-form measure values along the alpha family
/// cos(alpha)|000> + sin(alpha)|111>.
struct AlphaValues {
  double gmc = 0.0;        // |sin 2a|
  double coherence = 0.0;  // |cos 2a|
  double fill = 0.0;       // sin^2 2a
};
AlphaValues alpha_values(double alpha);

/// Closed-form measure values along the m family
/// (|000> + m|010> + m|101> + |111>) / sqrt(2 + 2 m^2).
struct MValues {
  double gmc = 0.0;        // (1 - m^2) / (1 + m^2)
  double coherence = 0.0;  // 2m / (sqrt(3) (1 + m^2))
  double fill = 0.0;
  double steering = 0.0;   // (1 + 10 m^2 + m^4) / (1 + m^2)^2
};
MValues m_values(double m);

/// Closed-form measure values along the theta family
/// cos(theta)|001> + sin(theta)|100>.  Qubit B stays in a product with AC,
/// so every genuine-tripartite measure vanishes identically.
struct ThetaValues {
  double gmc = 0.0;        // identically 0: the family is biseparable
  double fill = 0.0;       // identically 0: one triangle side vanishes
  double coherence = 0.0;  // sqrt((2 + cos 4t) / 3)
  double steering = 0.0;   // 2 - cos 4t
};
ThetaValues theta_values(double theta);

enum class Quantity { Ggm, Gmc, Fill, Coherence, Steering };

const char* quantity_name(Quantity q);

/// Closed-form value of one quantity on one family.
///
/// Supported combinations: Alpha with {Gmc, Coherence, Fill}, M with
/// {Gmc, Coherence, Fill, Steering}, Theta with {Gmc, Fill, Coherence,
/// Steering}.  Anything else raises ParameterRangeError.
double closed_form(Family family, Quantity quantity, double param);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Samples (x, y) = (closed_form(family, x_quantity, t), closed_form(family,
/// y_quantity, t)) at n_points uniform t over the family's natural domain,
/// endpoints included.  Requires n_points >= 2.
std::vector<CurvePoint> boundary_curve(Family family, Quantity x_quantity,
                                       Quantity y_quantity,
                                       std::size_t n_points);

}  // namespace qtrio

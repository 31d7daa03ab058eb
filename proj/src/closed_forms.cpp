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

#include "qtrio/closed_forms.hpp"

#include <cmath>
#include <string>

#include "qtrio/errors.hpp"

namespace qtrio {

AlphaValues alpha_values(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ParameterRangeError("alpha must be finite");
  }
  AlphaValues v;
  const double s = std::sin(2.0 * alpha);
  v.gmc = std::abs(s);
  v.coherence = std::abs(std::cos(2.0 * alpha));
  v.fill = s * s;
  return v;
}

MValues m_values(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw ParameterRangeError("m must lie in [0, 1]");
  }
  const double m2 = m * m;
  const double den = 1.0 + m2;
  MValues v;
  v.gmc = (1.0 - m2) / den;
  v.coherence = 2.0 * m / (std::sqrt(3.0) * den);
  // Quartic radicand of the fill along this family:
  //   (1 + 6 m^2 + m^4) (3 + 2 m^2 + 3 m^4).
  const double radicand = (1.0 + 6.0 * m2 + m2 * m2) * (3.0 + 2.0 * m2 + 3.0 * m2 * m2);
  v.fill = (1.0 - m2) * std::pow(radicand, 0.25) /
           (std::pow(3.0, 0.25) * den * den);
  v.steering = (1.0 + 10.0 * m2 + m2 * m2) / (den * den);
  return v;
}

ThetaValues theta_values(double theta) {
  if (!std::isfinite(theta)) {
    throw ParameterRangeError("theta must be finite");
  }
  ThetaValues v;
  const double c = std::cos(4.0 * theta);
  v.coherence = std::sqrt((2.0 + c) / 3.0);
  v.steering = 2.0 - c;
  return v;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Ggm: return "ggm";
    case Quantity::Gmc: return "gmc";
    case Quantity::Fill: return "fill";
    case Quantity::Coherence: return "coherence";
    case Quantity::Steering: return "steering";
  }
  return "?";
}

double closed_form(Family family, Quantity quantity, double param) {
  switch (family) {
    case Family::Alpha: {
      const AlphaValues v = alpha_values(param);
      switch (quantity) {
        case Quantity::Gmc: return v.gmc;
        case Quantity::Coherence: return v.coherence;
        case Quantity::Fill: return v.fill;
        default: break;
      }
      break;
    }
    case Family::M: {
      const MValues v = m_values(param);
      switch (quantity) {
        case Quantity::Gmc: return v.gmc;
        case Quantity::Coherence: return v.coherence;
        case Quantity::Fill: return v.fill;
        case Quantity::Steering: return v.steering;
        default: break;
      }
      break;
    }
    case Family::Theta: {
      const ThetaValues v = theta_values(param);
      switch (quantity) {
        case Quantity::Gmc: return v.gmc;
        case Quantity::Fill: return v.fill;
        case Quantity::Coherence: return v.coherence;
        case Quantity::Steering: return v.steering;
        default: break;
      }
      break;
    }
  }
  throw ParameterRangeError(std::string("no closed form for quantity '") +
                            quantity_name(quantity) + "' on the " +
                            family_name(family) + " family");
}

std::vector<CurvePoint> boundary_curve(Family family, Quantity x_quantity,
                                       Quantity y_quantity,
                                       std::size_t n_points) {
  if (n_points < 2) {
    throw ParameterRangeError("a boundary curve needs at least 2 points");
  }
  const auto [lo, hi] = family_domain(family);
  std::vector<CurvePoint> points;
  points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double t =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
    points.push_back({closed_form(family, x_quantity, t),
                      closed_form(family, y_quantity, t)});
  }
  return points;
}

}  // namespace qtrio

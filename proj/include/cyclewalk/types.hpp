// Copyright 2026 The cyclewalk authors
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

#ifndef CYCLEWALK_TYPES_HPP_
#define CYCLEWALK_TYPES_HPP_

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace cyclewalk {

using Scalar = double;
using Complex = std::complex<Scalar>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr Scalar kPi = 3.14159265358979323846;
inline constexpr Scalar kTwoPi = 2.0 * kPi;

/// Wraps an angle onto the principal interval [-pi, pi).
inline Scalar wrap_pi(Scalar angle) {
  Scalar w = std::remainder(angle, kTwoPi);
  if (w >= kPi) w -= kTwoPi;  // std::remainder may land on +pi exactly
  return w;
}

/// Wraps an angle onto [0, 2*pi).
inline Scalar wrap_two_pi(Scalar angle) {
  Scalar w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // guard against fmod(-eps) + 2*pi rounding up
  return w;
}

/// Shortest angular distance between two phases on the unit circle, in [0, pi].
inline Scalar circle_distance(Scalar a, Scalar b) {
  return std::abs(wrap_pi(a - b));
}

}  // namespace cyclewalk

#endif  // CYCLEWALK_TYPES_HPP_

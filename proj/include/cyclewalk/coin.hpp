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

#ifndef CYCLEWALK_COIN_HPP_
#define CYCLEWALK_COIN_HPP_

#include <optional>

#include "cyclewalk/types.hpp"

namespace cyclewalk {

using CoinMatrix = Mat2;

/// Tolerance for classifying alpha as a lattice angle n*pi/sites.
inline constexpr Scalar kAlphaLatticeTolerance = 1e-9;

/// Parameters of the three-angle coin family on an N-site cycle.
///
/// The bias r is the probability weight of the diagonal coin entries,
/// alpha and beta are the internal and global coin phases.  Angles are
/// normalized into [0, 2*pi) on construction and r is validated to [0, 1].
struct CoinParams {
  CoinParams(Scalar r, Scalar alpha, Scalar beta, int sites);

  /// Builds parameters with alpha pinned exactly to alpha_index * pi / sites.
  /// Runs where alpha sits on this lattice have degenerate walk spectra, so
  /// keeping the integer around lets downstream code classify them exactly.
  static CoinParams from_lattice(Scalar r, int alpha_index, Scalar beta,
                                 int sites);

  Scalar r;
  Scalar alpha;
  Scalar beta;
  int sites;
  /// Present when alpha is known to be exactly alpha_index * pi / sites.
  std::optional<int> alpha_index;
};

/// Hadamard coin as a member of the family: r = 1/2, alpha = 3*pi/2,
/// beta = pi/2.
CoinParams hadamard_params(int sites);

/// Builds the 2x2 unitary coin for the given parameters.
CoinMatrix build_coin(const CoinParams& params);

}  // namespace cyclewalk

#endif  // CYCLEWALK_COIN_HPP_

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

#ifndef CYCLEWALK_SPECTRUM_HPP_
#define CYCLEWALK_SPECTRUM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "cyclewalk/coin.hpp"
#include "cyclewalk/types.hpp"

namespace cyclewalk {

/// One eigenphase of the walk, labelled by wavenumber k and band z.
/// z = 1 is the lower band (eigenvalue in the lower half plane relative to
/// the global coin phase), z = 2 the upper band.  `partner_k` is set when
/// the eigenvalue is shared with a conjugate wavenumber.
struct SpectralPoint {
  int k = 0;
  int z = 1;
  Scalar lambda = 0.0;
  std::optional<int> partner_k;
};

/// Degeneracy structure of the spectrum for a given coin.
///
/// The spectrum degenerates exactly when alpha = n * pi / sites for an
/// integer n; then eigenphases at wavenumbers k and (n - k) mod sites
/// coincide band-by-band.  Wavenumbers solving 2k = n (mod sites) are their
/// own conjugate and keep non-degenerate eigenvalues.
struct DegeneracyReport {
  bool is_degenerate = false;
  std::optional<int> n;
  std::vector<std::pair<int, int>> pairs;  // (k, k'), k < k', ascending
  std::vector<int> unique_ks;              // ascending

  std::optional<int> partner_of(int k) const;
};

/// Closed-form eigenphase lambda(k, z) in [-pi, pi).
Scalar eigenphase(const CoinParams& params, int k, int z);

/// All 2N eigenphases, ordered k-major with z = 1 before z = 2.
std::vector<SpectralPoint> full_spectrum(const CoinParams& params);

DegeneracyReport degeneracy_report(const CoinParams& params);

/// Eigenphases from the closed limiting expressions at r = 0 (all phases
/// collapse onto beta +/- pi/2) and r = 1 (linear dispersion).  Ordered like
/// `full_spectrum`.  Throws std::domain_error for interior r; throws
/// std::logic_error if a limit disagrees with the general formula.
std::vector<Scalar> limiting_phases(const CoinParams& params);

}  // namespace cyclewalk

#endif  // CYCLEWALK_SPECTRUM_HPP_

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

#ifndef CYCLEWALK_EIGENSYSTEM_HPP_
#define CYCLEWALK_EIGENSYSTEM_HPP_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cyclewalk/spectrum.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

/// Entries of G(lambda, k) = U_k - exp(i lambda) I, the 2x2 Fourier block of
/// the walk minus a candidate eigenvalue.  det G = 0 exactly at eigenphases.
struct GElements {
  Complex g00, g01, g10, g11;

  Complex det() const { return g00 * g11 - g10 * g01; }
};

GElements g_elements(const CoinParams& params, Scalar lambda, int k);

/// Free gauge of a degenerate eigenvector pair: the first member carries
/// amplitude s1 in (0, s_max) on the lead wavenumber and relative phase
/// omega1 on the partner.
struct GaugeChoice {
  Scalar s1 = 0.0;
  Scalar omega1 = 0.0;
};

/// How to pick gauges when assembling a full eigenbasis or a Bloch
/// trajectory.  Default: the equal-weight gauge (both wavenumbers carry the
/// same amplitude), omega1 = 0.  A fixed s1 applies to every pair; the
/// per-pair hook, when set and returning a value, overrides both.
struct GaugePolicy {
  std::optional<Scalar> s1;
  Scalar omega1 = 0.0;
  std::function<std::optional<GaugeChoice>(int k, int k_prime, int z)>
      per_pair;
};

/// Gauge a policy assigns to the pair (k, k') in band z: per-pair hook
/// first, then the fixed s1, then the equal-weight default.
GaugeChoice resolve_gauge(const GaugePolicy& policy, const CoinParams& params,
                          int k, int k_prime, int z);

/// Largest admissible s1 for the pair (k, k'), band z (exclusive bound).
Scalar pair_s_max(const CoinParams& params, int k, int k_prime, int z);

/// The s1 for which the partner amplitude comes out equal, s' = s1.  (The
/// per-wavenumber probabilities still differ by the two spinor norms.)
Scalar equal_weight_s(const CoinParams& params, int k, int k_prime, int z);

/// Eigenvector at a non-degenerate point (or a unique wavenumber of a
/// degenerate coin): a single-wavenumber product state, returned in the
/// Fourier basis with the coin-0 amplitude real positive.  Requires r < 1;
/// at r = 1 eigenvectors are coin basis states, built by `full_eigenbasis`.
StateVector eigenvector_nondegenerate(const CoinParams& params, int k, int z);

/// Orthonormal pair spanning the two-dimensional eigenspace shared by the
/// conjugate wavenumbers (k, k') in band z, in the chosen gauge.  The first
/// member carries (s1, omega1); the second is the orthogonal complement
/// within the eigenspace (omega2 = omega1 + pi).  Fourier basis.
std::pair<StateVector, StateVector> eigenvector_pair_degenerate(
    const CoinParams& params, int k, int k_prime, int z,
    const GaugeChoice& gauge);

/// One eigenvector with its labels.  member = 0 for single-wavenumber
/// states, 1 / 2 for the two members of a degenerate pair (member 1 is
/// tagged at the lead wavenumber, member 2 at the partner).
struct EigenvectorRecord {
  int k = 0;
  int z = 1;
  Scalar lambda = 0.0;
  int member = 0;
  std::optional<int> partner_k;
  std::optional<GaugeChoice> gauge;
  StateVector vec;
};

/// Indices into EigenBasis::vectors of the two members of one degenerate
/// pair.
struct PairLink {
  int first = 0;
  int second = 0;
};

struct EigenBasis {
  CoinParams params;
  std::vector<EigenvectorRecord> vectors;  // ordered k-major, z = 1 then 2
  std::vector<PairLink> pair_links;
};

/// Complete orthonormal eigenbasis of the walk (2N vectors), handling the
/// non-degenerate, degenerate and r = 1 cases.
EigenBasis full_eigenbasis(const CoinParams& params,
                           const GaugePolicy& policy = {});

/// The involutory symmetry S = sum over unique eigenvectors of |v><v| plus,
/// for each degenerate pair, |v2><v1| + |v1><v2|.  Swapping pair members is
/// a symmetry of the walk: S U S^dagger = U, S^2 = I.  Dense, position
/// basis.
Matrix symmetry_operator(const EigenBasis& basis);

/// Coin-component ratio -psi(k,1)/psi(k,0) = -g00/g01 at a unique
/// wavenumber of a degenerate coin.  Unimodular and independent of r, which
/// is what protects these eigenvectors under bias noise.
Complex protected_coin_ratio(const CoinParams& params, int k, int z);

}  // namespace cyclewalk

#endif  // CYCLEWALK_EIGENSYSTEM_HPP_

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

#ifndef CYCLEWALK_BLOCH_HPP_
#define CYCLEWALK_BLOCH_HPP_

#include <vector>

#include "cyclewalk/eigensystem.hpp"

namespace cyclewalk {

/// Bloch vector of a coin (qubit) density matrix.  Conventions: standard
/// Pauli matrices with sigma_z = diag(1, -1), so the coin state |0> sits at
/// the north pole; theta in [0, pi] is the polar angle from +z; phi in
/// [0, 2*pi) is the azimuth, atan2(ry, rx).  On-axis states (rx = ry = 0)
/// report phi = 0 by convention and set `on_axis`; the fully mixed state
/// also reports theta = 0.
struct BlochVector {
  Scalar rx = 0.0, ry = 0.0, rz = 0.0;
  Scalar r = 0.0, theta = 0.0, phi = 0.0;
  bool on_axis = false;

  static BlochVector from_cartesian(Scalar rx, Scalar ry, Scalar rz);
};

/// Reduced coin state: partial trace of |psi><psi| over the walker register.
/// Works in either basis (the Fourier transform acts only on the walker).
Mat2 reduced_coin_state(const StateVector& psi);

/// Bloch vector of a 2x2 density matrix.
BlochVector bloch_vector(const Mat2& rho);

/// Bloch vector of the eigenstate at (k, z), from the closed form.  For a
/// paired wavenumber, the state is the pair member leading on k under the
/// given gauge policy; agrees with bloch_vector(reduced_coin_state(...)) of
/// the corresponding eigenvector.
BlochVector eigenstate_bloch(const CoinParams& params, int k, int z,
                             const GaugePolicy& policy = {});

struct TrajectoryPoint {
  CoinParams params;
  int k = 0;
  int z = 1;
  BlochVector bloch;
};

/// Eigenstate Bloch vectors across a parameter sweep: one point per
/// (sweep entry, k, z), ordered sweep-major.  Empty `ks` means all
/// wavenumbers; `zs` defaults to {1, 2} when empty.
std::vector<TrajectoryPoint> trajectory(const std::vector<CoinParams>& sweep,
                                        const std::vector<int>& ks,
                                        const std::vector<int>& zs,
                                        const GaugePolicy& policy = {});

}  // namespace cyclewalk

#endif  // CYCLEWALK_BLOCH_HPP_

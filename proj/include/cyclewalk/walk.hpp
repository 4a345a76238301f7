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

#ifndef CYCLEWALK_WALK_HPP_
#define CYCLEWALK_WALK_HPP_

#include <random>
#include <span>

#include "cyclewalk/coin.hpp"
#include "cyclewalk/types.hpp"

namespace cyclewalk {

/// Largest cycle size for which dense 2N x 2N matrices are materialized.
inline constexpr int kDefaultDenseSiteLimit = 512;

enum class Basis { kPosition, kFourier };

/// State of the walker+coin register.  Amplitudes are stored interleaved,
/// component (x, c) at index 2*x + c, where x is the site (or wavenumber in
/// the Fourier basis) and c the coin component.
struct StateVector {
  Vector amplitudes;
  Basis basis = Basis::kPosition;

  int sites() const { return static_cast<int>(amplitudes.size()) / 2; }
};

/// |x>|c> basis state in the position basis.
StateVector basis_state(int sites, int x, int c);

/// Haar-ish random normalized state (i.i.d. complex Gaussian amplitudes).
StateVector random_state(int sites, std::mt19937_64& gen);

/// <a|b> for two states expressed in the same basis.
Complex inner(const StateVector& a, const StateVector& b);

/// One step of the walk: coin toss followed by the conditional shift.
/// Coin component 0 moves the walker one site down (left), component 1 one
/// site up (right), with periodic wrap-around.
struct StepOperator {
  CoinMatrix coin;
  int sites;
};

StepOperator make_step_operator(const CoinParams& params);

/// Applies one walk step to a position-basis state.  O(N), never builds a
/// matrix.
StateVector apply_step(const StepOperator& op, const StateVector& psi);

/// Applies one step per entry of `steps` (time-dependent coin), reusing two
/// buffers.  All entries must share the state's cycle size.
StateVector evolve(std::span<const CoinParams> steps, const StateVector& psi);

/// Dense 2N x 2N matrix of the step operator, for small-N verification.
/// Throws std::length_error above `dense_site_limit`.
Matrix build_dense(const StepOperator& op,
                   int dense_site_limit = kDefaultDenseSiteLimit);

/// Discrete Fourier transform over the site index, acting per coin
/// component: out(k, c) = (1/sqrt(N)) * sum_x exp(+i 2 pi k x / N) in(x, c).
StateVector fourier(const StateVector& psi);

/// Inverse of `fourier` (conjugate kernel).
StateVector inverse_fourier(const StateVector& psi);

/// Converts to the position basis (no-op if already there).
StateVector to_position(const StateVector& psi);

}  // namespace cyclewalk

#endif  // CYCLEWALK_WALK_HPP_

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

#include "cyclewalk/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclewalk {

CoinParams::CoinParams(Scalar r_in, Scalar alpha_in, Scalar beta_in,
                       int sites_in)
    : r(r_in),
      alpha(wrap_two_pi(alpha_in)),
      beta(wrap_two_pi(beta_in)),
      sites(sites_in) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::domain_error("coin bias r must lie in [0, 1]");
  }
  if (sites < 2) {
    throw std::invalid_argument("cycle needs at least 2 sites");
  }
}

CoinParams CoinParams::from_lattice(Scalar r, int alpha_index, Scalar beta,
                                    int sites) {
  if (sites < 2) {
    throw std::invalid_argument("cycle needs at least 2 sites");
  }
  const int period = 2 * sites;  // alpha lives on a 2*pi circle
  int n = alpha_index % period;
  if (n < 0) n += period;
  CoinParams params(r, static_cast<Scalar>(n) * kPi / sites, beta, sites);
  params.alpha_index = n;
  return params;
}

CoinParams hadamard_params(int sites) {
  // alpha = 3*pi/2 sits on the lattice n*pi/N exactly when 3N/2 is integral.
  if (sites % 2 == 0) {
    return CoinParams::from_lattice(0.5, 3 * sites / 2, kPi / 2, sites);
  }
  CoinParams params(0.5, 3.0 * kPi / 2.0, kPi / 2.0, sites);
  return params;
}

CoinMatrix build_coin(const CoinParams& params) {
  const Scalar root_r = std::sqrt(params.r);
  const Scalar root_t = std::sqrt(1.0 - params.r);
  CoinMatrix coin;
  coin(0, 0) = root_r * std::polar(1.0, params.alpha + params.beta);
  coin(0, 1) = Complex(root_t, 0.0);
  coin(1, 0) = -root_t * std::polar(1.0, 2.0 * params.beta);
  coin(1, 1) = root_r * std::polar(1.0, params.beta - params.alpha);
  return coin;
}

}  // namespace cyclewalk

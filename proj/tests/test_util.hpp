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

#ifndef CYCLEWALK_TESTS_TEST_UTIL_HPP_
#define CYCLEWALK_TESTS_TEST_UTIL_HPP_

#include <random>

#include "cyclewalk/coin.hpp"
#include "cyclewalk/types.hpp"

namespace cyclewalk::testutil {

inline Scalar uniform(std::mt19937_64& gen, Scalar lo, Scalar hi) {
  return std::uniform_real_distribution<Scalar>(lo, hi)(gen);
}

inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

/// Generic (almost surely non-degenerate) random coin.
inline CoinParams random_params(std::mt19937_64& gen, int min_sites = 2,
                                int max_sites = 32) {
  const int sites = uniform_int(gen, min_sites, max_sites);
  return CoinParams(uniform(gen, 0.0, 1.0), uniform(gen, 0.0, kTwoPi),
                    uniform(gen, 0.0, kTwoPi), sites);
}

/// Random coin pinned to the degenerate lattice alpha = n * pi / sites.
inline CoinParams random_lattice_params(std::mt19937_64& gen,
                                        int min_sites = 2,
                                        int max_sites = 32) {
  const int sites = uniform_int(gen, min_sites, max_sites);
  const int n = uniform_int(gen, 0, 2 * sites - 1);
  return CoinParams::from_lattice(uniform(gen, 0.0, 1.0), n,
                                  uniform(gen, 0.0, kTwoPi), sites);
}

inline Scalar max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace cyclewalk::testutil

#endif  // CYCLEWALK_TESTS_TEST_UTIL_HPP_

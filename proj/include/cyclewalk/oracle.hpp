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

#ifndef CYCLEWALK_ORACLE_HPP_
#define CYCLEWALK_ORACLE_HPP_

#include <vector>

#include "cyclewalk/spectrum.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

/// Phase radius used both to cluster oracle eigenvalues and to accept a
/// closed-form/oracle match.
inline constexpr Scalar kOracleClusterRadius = 1e-8;

/// Brute-force eigendecomposition of the dense step operator, used as an
/// independent check of the closed forms.  Eigenvalues are sorted by
/// principal phase; eigenvectors are re-orthonormalized within each
/// degenerate cluster so the columns form an orthonormal basis.
struct OracleResult {
  Vector eigenvalues;   // 2N unit-modulus values, sorted by phase
  Matrix eigenvectors;  // orthonormal columns, position basis
  Scalar residual = 0.0;  // max over columns of ||U v - lambda v||
  std::vector<std::vector<int>> clusters;  // column indices per phase cluster
};

OracleResult dense_eigendecompose(const CoinParams& params,
                                  int dense_site_limit = kDefaultDenseSiteLimit);

struct SpectrumMismatch {
  int k = 0;
  int z = 1;
  Scalar distance = 0.0;  // circle distance to the nearest unused oracle phase
};

struct SpectrumComparison {
  Scalar max_mismatch = 0.0;  // largest matched distance (or worst miss)
  std::vector<SpectrumMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Greedy matching of closed-form eigenphases onto oracle eigenvalues on the
/// unit circle; a point farther than kOracleClusterRadius from every unused
/// oracle phase is reported as a mismatch.
SpectrumComparison compare_spectra(const std::vector<SpectralPoint>& points,
                                   const OracleResult& oracle);

}  // namespace cyclewalk

#endif  // CYCLEWALK_ORACLE_HPP_

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

#include "cyclewalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace cyclewalk {

OracleResult dense_eigendecompose(const CoinParams& params,
                                  int dense_site_limit) {
  const Matrix u = build_dense(make_step_operator(params), dense_site_limit);
  Eigen::ComplexEigenSolver<Matrix> solver(u, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigendecomposition did not converge");
  }

  const int dim = static_cast<int>(u.rows());
  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  const Vector& raw_values = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::arg(raw_values[a]) < std::arg(raw_values[b]);
  });

  OracleResult result;
  result.eigenvalues = Vector(dim);
  result.eigenvectors = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    result.eigenvalues[i] = raw_values[order[i]];
    result.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
  }

  // Group phase-adjacent eigenvalues; the first and last group may wrap
  // around the -pi cut.
  std::vector<std::vector<int>>& clusters = result.clusters;
  for (int i = 0; i < dim; ++i) {
    const bool adjacent =
        !clusters.empty() &&
        circle_distance(std::arg(result.eigenvalues[i]),
                        std::arg(result.eigenvalues[clusters.back().back()])) <
            kOracleClusterRadius;
    if (adjacent) {
      clusters.back().push_back(i);
    } else {
      clusters.push_back({i});
    }
  }
  if (clusters.size() > 1) {
    const Scalar gap = circle_distance(
        std::arg(result.eigenvalues[clusters.front().front()]),
        std::arg(result.eigenvalues[clusters.back().back()]));
    if (gap < kOracleClusterRadius) {
      for (int idx : clusters.front()) clusters.back().push_back(idx);
      clusters.erase(clusters.begin());
    }
  }

  // A generic eigensolver does not promise orthogonal vectors inside a
  // degenerate eigenspace; re-orthonormalize each cluster.
  for (const std::vector<int>& cluster : clusters) {
    if (cluster.size() < 2) continue;
    Matrix block(dim, cluster.size());
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      block.col(j) = result.eigenvectors.col(cluster[j]);
    }
    Eigen::HouseholderQR<Matrix> qr(block);
    const Matrix q = qr.householderQ() *
                     Matrix::Identity(dim, static_cast<int>(cluster.size()));
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      result.eigenvectors.col(cluster[j]) = q.col(j);
    }
  }

  result.residual = 0.0;
  for (int i = 0; i < dim; ++i) {
    const Scalar res = (u * result.eigenvectors.col(i) -
                        result.eigenvalues[i] * result.eigenvectors.col(i))
                           .norm();
    result.residual = std::max(result.residual, res);
  }
  return result;
}

SpectrumComparison compare_spectra(const std::vector<SpectralPoint>& points,
                                   const OracleResult& oracle) {
  SpectrumComparison cmp;
  std::vector<bool> used(oracle.eigenvalues.size(), false);
  for (const SpectralPoint& point : points) {
    int best = -1;
    Scalar best_distance = 0.0;
    for (int i = 0; i < oracle.eigenvalues.size(); ++i) {
      if (used[i]) continue;
      const Scalar d =
          circle_distance(point.lambda, std::arg(oracle.eigenvalues[i]));
      if (best < 0 || d < best_distance) {
        best = i;
        best_distance = d;
      }
    }
    if (best < 0 || best_distance > kOracleClusterRadius) {
      cmp.mismatches.push_back(
          SpectrumMismatch{point.k, point.z, best < 0 ? kPi : best_distance});
      cmp.max_mismatch = std::max(cmp.max_mismatch,
                                  best < 0 ? kPi : best_distance);
      continue;
    }
    used[best] = true;
    cmp.max_mismatch = std::max(cmp.max_mismatch, best_distance);
  }
  return cmp;
}

}  // namespace cyclewalk

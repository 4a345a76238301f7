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

#include "cyclewalk/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclewalk {
namespace {

constexpr Scalar kAxisTolerance = 1e-14;

struct ThetaParts {
  Complex theta;  // s^2 gamma_k + s'^2 gamma_k'
  Scalar rz;
};

Complex gamma_at(const CoinParams& params, Scalar lambda, int k) {
  const GElements g = g_elements(params, lambda, k);
  return g.g00 / g.g01;
}

}  // namespace

BlochVector BlochVector::from_cartesian(Scalar rx, Scalar ry, Scalar rz) {
  BlochVector b;
  b.rx = rx;
  b.ry = ry;
  b.rz = rz;
  b.r = std::sqrt(rx * rx + ry * ry + rz * rz);
  const Scalar rxy = std::hypot(rx, ry);
  b.on_axis = rxy < kAxisTolerance;
  b.phi = b.on_axis ? 0.0 : wrap_two_pi(std::atan2(ry, rx));
  b.theta = (b.r < kAxisTolerance)
                ? 0.0
                : std::acos(std::clamp(rz / b.r, -1.0, 1.0));
  return b;
}

Mat2 reduced_coin_state(const StateVector& psi) {
  const int n = psi.sites();
  Mat2 rho = Mat2::Zero();
  for (int x = 0; x < n; ++x) {
    const Complex a = psi.amplitudes[2 * x];
    const Complex b = psi.amplitudes[2 * x + 1];
    rho(0, 0) += a * std::conj(a);
    rho(0, 1) += a * std::conj(b);
    rho(1, 0) += b * std::conj(a);
    rho(1, 1) += b * std::conj(b);
  }
  return rho;
}

BlochVector bloch_vector(const Mat2& rho) {
  const Scalar rx = (rho(0, 1) + rho(1, 0)).real();
  const Scalar ry = (Complex(0.0, 1.0) * (rho(0, 1) - rho(1, 0))).real();
  const Scalar rz = (rho(0, 0) - rho(1, 1)).real();
  return BlochVector::from_cartesian(rx, ry, rz);
}

BlochVector eigenstate_bloch(const CoinParams& params, int k, int z,
                             const GaugePolicy& policy) {
  const Scalar lambda = eigenphase(params, k, z);  // validates (k, z)

  if (params.r == 1.0) {
    // Coin basis states: the reduced state is a pole.
    const Scalar q = params.alpha - kTwoPi * k / params.sites;
    int coin;
    if (std::sin(q) >= 0.0) {
      coin = (z == 2) ? 0 : 1;
    } else {
      coin = (z == 1) ? 0 : 1;
    }
    return BlochVector::from_cartesian(0.0, 0.0, coin == 0 ? 1.0 : -1.0);
  }

  const DegeneracyReport report = degeneracy_report(params);
  const std::optional<int> partner = report.partner_of(k);

  ThetaParts parts;
  if (!partner) {
    const Complex gamma = gamma_at(params, lambda, k);
    const Scalar s_sq = 1.0 / (1.0 + std::norm(gamma));
    parts.theta = s_sq * gamma;
    parts.rz = s_sq * (1.0 - std::norm(gamma));
  } else {
    // Pair member leading on k: resolve the gauge exactly as the basis
    // builder does so the closed form matches the constructed vector.
    const GaugeChoice gauge = resolve_gauge(policy, params, k, *partner, z);
    const Scalar s_max = pair_s_max(params, k, *partner, z);
    if (!(gauge.s1 > 0.0 && gauge.s1 < s_max)) {
      throw std::out_of_range("gauge amplitude s1 outside (0, s_max)");
    }
    const Complex gk = gamma_at(params, lambda, k);
    const Complex gp = gamma_at(params, lambda, *partner);
    const Scalar s_sq = gauge.s1 * gauge.s1;
    const Scalar sp_sq =
        (1.0 - s_sq * (1.0 + std::norm(gk))) / (1.0 + std::norm(gp));
    parts.theta = s_sq * gk + sp_sq * gp;
    parts.rz = s_sq * (1.0 - std::norm(gk)) + sp_sq * (1.0 - std::norm(gp));
  }

  // Partial trace of the explicit eigenvector fixes the sign convention:
  // rho_01 = -conj(theta), so rx = -2 Re(theta) and ry = -2 Im(theta).
  return BlochVector::from_cartesian(-2.0 * parts.theta.real(),
                                     -2.0 * parts.theta.imag(), parts.rz);
}

std::vector<TrajectoryPoint> trajectory(const std::vector<CoinParams>& sweep,
                                        const std::vector<int>& ks,
                                        const std::vector<int>& zs,
                                        const GaugePolicy& policy) {
  std::vector<TrajectoryPoint> points;
  const std::vector<int> bands = zs.empty() ? std::vector<int>{1, 2} : zs;
  for (const CoinParams& params : sweep) {
    std::vector<int> wavenumbers = ks;
    if (wavenumbers.empty()) {
      wavenumbers.resize(params.sites);
      for (int k = 0; k < params.sites; ++k) wavenumbers[k] = k;
    }
    for (int k : wavenumbers) {
      for (int z : bands) {
        points.push_back(
            TrajectoryPoint{params, k, z, eigenstate_bloch(params, k, z,
                                                           policy)});
      }
    }
  }
  return points;
}

}  // namespace cyclewalk

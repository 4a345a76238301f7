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

#include "cyclewalk/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclewalk {
namespace {

void check_labels(const CoinParams& params, int k, int z) {
  if (k < 0 || k >= params.sites) {
    throw std::out_of_range("wavenumber k out of range");
  }
  if (z != 1 && z != 2) {
    throw std::invalid_argument("band index z must be 1 or 2");
  }
}

}  // namespace

std::optional<int> DegeneracyReport::partner_of(int k) const {
  for (const auto& [a, b] : pairs) {
    if (a == k) return b;
    if (b == k) return a;
  }
  return std::nullopt;
}

Scalar eigenphase(const CoinParams& params, int k, int z) {
  check_labels(params, k, z);
  const Scalar q = params.alpha - kTwoPi * k / params.sites;
  const Scalar c = std::cos(q);
  // Clamp guards against 1 - r*c^2 dipping below zero by rounding at r = 1.
  const Scalar s = std::sqrt(std::max(0.0, 1.0 - params.r * c * c));
  const Scalar sign = (z == 1) ? -1.0 : 1.0;
  return wrap_pi(params.beta + std::atan2(sign * s, std::sqrt(params.r) * c));
}

DegeneracyReport degeneracy_report(const CoinParams& params) {
  DegeneracyReport report;
  const int sites = params.sites;
  const int period = 2 * sites;
  long long n = -1;
  if (params.alpha_index) {
    n = *params.alpha_index;
  } else {
    const Scalar scaled = params.alpha * sites / kPi;
    const long long rounded = std::llround(scaled);
    if (std::abs(scaled - static_cast<Scalar>(rounded)) <
        kAlphaLatticeTolerance) {
      n = rounded;
    }
  }
  if (n < 0) return report;

  n = ((n % period) + period) % period;
  report.is_degenerate = true;
  report.n = static_cast<int>(n);
  for (int k = 0; k < sites; ++k) {
    const int partner = static_cast<int>(((n - k) % sites + sites) % sites);
    if (partner == k) {
      report.unique_ks.push_back(k);  // 2k = n (mod sites): self-conjugate
    } else if (k < partner) {
      report.pairs.emplace_back(k, partner);
    }
  }
  return report;
}

std::vector<SpectralPoint> full_spectrum(const CoinParams& params) {
  const DegeneracyReport report = degeneracy_report(params);
  std::vector<SpectralPoint> points;
  points.reserve(2 * params.sites);
  for (int k = 0; k < params.sites; ++k) {
    const std::optional<int> partner = report.partner_of(k);
    for (int z = 1; z <= 2; ++z) {
      points.push_back(SpectralPoint{k, z, eigenphase(params, k, z), partner});
    }
  }
  return points;
}

std::vector<Scalar> limiting_phases(const CoinParams& params) {
  if (params.r != 0.0 && params.r != 1.0) {
    throw std::domain_error("limiting_phases requires r = 0 or r = 1");
  }
  std::vector<Scalar> phases;
  phases.reserve(2 * params.sites);
  for (int k = 0; k < params.sites; ++k) {
    for (int z = 1; z <= 2; ++z) {
      const Scalar sign = (z == 1) ? -1.0 : 1.0;
      Scalar lambda;
      if (params.r == 0.0) {
        lambda = wrap_pi(params.beta + sign * kPi / 2.0);
      } else {
        // Flat coin: the walk is a pure conditional shift and the two bands
        // disperse linearly in q, split by the sign of sin q.
        const Scalar q = params.alpha - kTwoPi * k / params.sites;
        lambda = std::sin(q) >= 0.0 ? wrap_pi(params.beta + sign * q)
                                    : wrap_pi(params.beta - sign * q);
      }
      if (circle_distance(lambda, eigenphase(params, k, z)) > 1e-12) {
        throw std::logic_error(
            "limiting phase disagrees with the general eigenphase formula");
      }
      phases.push_back(lambda);
    }
  }
  return phases;
}

}  // namespace cyclewalk

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

#include "cyclewalk/eigensystem.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclewalk {
namespace {

// Margin keeping gauge amplitudes strictly inside (0, s_max).
constexpr Scalar kGaugeMargin = 1e-12;

struct KData {
  Complex gamma;   // g00 / g01 at the shared eigenphase
  Scalar weight;   // 1 + |gamma|^2, squared norm of (1, -gamma)
};

KData k_data(const CoinParams& params, Scalar lambda, int k) {
  const GElements g = g_elements(params, lambda, k);
  const Complex gamma = g.g00 / g.g01;
  return KData{gamma, 1.0 + std::norm(gamma)};
}

// Single-wavenumber eigenvector (coin-0 amplitude real positive).
StateVector single_k_vector(const CoinParams& params, int k, int z) {
  const Scalar lambda = eigenphase(params, k, z);
  const KData d = k_data(params, lambda, k);
  const Scalar a0 = 1.0 / std::sqrt(d.weight);
  StateVector psi{Vector::Zero(2 * params.sites), Basis::kFourier};
  psi.amplitudes[2 * k] = Complex(a0, 0.0);
  psi.amplitudes[2 * k + 1] = -d.gamma * a0;
  return psi;
}

// Two-wavenumber superposition with amplitude s on k and s_partner
// (rotated by omega) on k_prime.
StateVector pair_vector(const CoinParams& params, int k, int k_prime,
                        const KData& dk, const KData& dp, Scalar s,
                        Scalar s_partner, Scalar omega) {
  StateVector psi{Vector::Zero(2 * params.sites), Basis::kFourier};
  psi.amplitudes[2 * k] = Complex(s, 0.0);
  psi.amplitudes[2 * k + 1] = -dk.gamma * s;
  const Complex phase = std::polar(s_partner, omega);
  psi.amplitudes[2 * k_prime] = phase;
  psi.amplitudes[2 * k_prime + 1] = -dp.gamma * phase;
  return psi;
}

void require_conjugate_pair(const DegeneracyReport& report, int k,
                            int k_prime) {
  const std::optional<int> partner = report.partner_of(k);
  if (!report.is_degenerate || !partner || *partner != k_prime) {
    throw std::invalid_argument(
        "(k, k') is not a conjugate pair of this coin");
  }
}

void require_interior_bias(const CoinParams& params) {
  if (params.r >= 1.0) {
    throw std::domain_error(
        "r = 1 eigenvectors are coin basis states; use full_eigenbasis");
  }
}

}  // namespace

GaugeChoice resolve_gauge(const GaugePolicy& policy, const CoinParams& params,
                          int k, int k_prime, int z) {
  if (policy.per_pair) {
    if (const auto choice = policy.per_pair(k, k_prime, z)) return *choice;
  }
  if (policy.s1) return GaugeChoice{*policy.s1, policy.omega1};
  return GaugeChoice{equal_weight_s(params, k, k_prime, z), policy.omega1};
}

GElements g_elements(const CoinParams& params, Scalar lambda, int k) {
  if (k < 0 || k >= params.sites) {
    throw std::out_of_range("wavenumber k out of range");
  }
  const Scalar theta = kTwoPi * k / params.sites;
  const Scalar root_r = std::sqrt(params.r);
  const Scalar root_t = std::sqrt(1.0 - params.r);
  const Complex ev = std::polar(1.0, lambda);
  GElements g;
  g.g00 = root_r * std::polar(1.0, params.alpha + params.beta - theta) - ev;
  g.g01 = root_t * std::polar(1.0, -theta);
  g.g10 = -root_t * std::polar(1.0, 2.0 * params.beta + theta);
  g.g11 = root_r * std::polar(1.0, params.beta - params.alpha + theta) - ev;
  return g;
}

Scalar pair_s_max(const CoinParams& params, int k, int k_prime, int z) {
  require_interior_bias(params);
  require_conjugate_pair(degeneracy_report(params), k, k_prime);
  const Scalar lambda = eigenphase(params, k, z);
  const GElements gk = g_elements(params, lambda, k);
  const GElements gp = g_elements(params, lambda, k_prime);
  return std::sqrt(std::norm(gp.g01) /
                   (std::norm(gk.g00) + std::norm(gk.g01)));
}

Scalar equal_weight_s(const CoinParams& params, int k, int k_prime, int z) {
  require_interior_bias(params);
  require_conjugate_pair(degeneracy_report(params), k, k_prime);
  const Scalar lambda = eigenphase(params, k, z);
  const KData dk = k_data(params, lambda, k);
  const KData dp = k_data(params, lambda, k_prime);
  return 1.0 / std::sqrt(dk.weight + dp.weight);
}

StateVector eigenvector_nondegenerate(const CoinParams& params, int k,
                                      int z) {
  eigenphase(params, k, z);  // validates (k, z)
  require_interior_bias(params);
  const DegeneracyReport report = degeneracy_report(params);
  if (report.is_degenerate && report.partner_of(k)) {
    throw std::invalid_argument(
        "wavenumber belongs to a degenerate pair; use "
        "eigenvector_pair_degenerate");
  }
  return single_k_vector(params, k, z);
}

std::pair<StateVector, StateVector> eigenvector_pair_degenerate(
    const CoinParams& params, int k, int k_prime, int z,
    const GaugeChoice& gauge) {
  require_interior_bias(params);
  require_conjugate_pair(degeneracy_report(params), k, k_prime);
  eigenphase(params, k, z);  // validates z

  const Scalar lambda = eigenphase(params, k, z);
  const KData dk = k_data(params, lambda, k);
  const KData dp = k_data(params, lambda, k_prime);
  const GElements gk = g_elements(params, lambda, k);
  const GElements gp = g_elements(params, lambda, k_prime);

  const Scalar lead_norm = std::norm(gk.g00) + std::norm(gk.g01);
  const Scalar s_max = std::sqrt(std::norm(gp.g01) / lead_norm);
  const Scalar s1 = gauge.s1;
  if (!(s1 > kGaugeMargin && s1 < s_max - kGaugeMargin)) {
    throw std::out_of_range("gauge amplitude s1 outside (0, s_max)");
  }

  const auto partner_amp = [&](Scalar s) {
    return std::sqrt((std::norm(gp.g01) - lead_norm * s * s) /
                     (std::norm(gp.g00) + std::norm(gp.g01)));
  };
  // The orthogonal companion lives at the complementary amplitude with the
  // partner phase advanced by pi.
  const Scalar s2 =
      std::sqrt(std::norm(gk.g01) / lead_norm - s1 * s1);
  const Scalar omega1 = gauge.omega1;
  const Scalar omega2 = omega1 + kPi;

  return {pair_vector(params, k, k_prime, dk, dp, s1, partner_amp(s1),
                      omega1),
          pair_vector(params, k, k_prime, dk, dp, s2, partner_amp(s2),
                      omega2)};
}

EigenBasis full_eigenbasis(const CoinParams& params,
                           const GaugePolicy& policy) {
  EigenBasis basis{params, {}, {}};
  const int sites = params.sites;
  basis.vectors.resize(2 * sites);
  const auto slot = [](int k, int z) { return 2 * k + (z - 1); };

  if (params.r == 1.0) {
    // The coin is diagonal, so every eigenvector is a coin basis state; the
    // band label follows the sign of sin q.  Conjugate pairs may still share
    // eigenvalues, but the natural basis is already of product form, so no
    // pair bookkeeping is needed.
    for (int k = 0; k < sites; ++k) {
      const Scalar q = params.alpha - kTwoPi * k / sites;
      for (int z = 1; z <= 2; ++z) {
        int coin;
        if (std::sin(q) >= 0.0) {
          coin = (z == 2) ? 0 : 1;
        } else {
          coin = (z == 1) ? 0 : 1;
        }
        StateVector psi{Vector::Zero(2 * sites), Basis::kFourier};
        psi.amplitudes[2 * k + coin] = Complex(1.0, 0.0);
        EigenvectorRecord rec;
        rec.k = k;
        rec.z = z;
        rec.lambda = eigenphase(params, k, z);
        rec.vec = std::move(psi);
        basis.vectors[slot(k, z)] = std::move(rec);
      }
    }
    return basis;
  }

  const DegeneracyReport report = degeneracy_report(params);
  for (int k = 0; k < sites; ++k) {
    if (report.is_degenerate && report.partner_of(k)) continue;
    for (int z = 1; z <= 2; ++z) {
      EigenvectorRecord rec;
      rec.k = k;
      rec.z = z;
      rec.lambda = eigenphase(params, k, z);
      rec.vec = single_k_vector(params, k, z);
      basis.vectors[slot(k, z)] = std::move(rec);
    }
  }
  for (const auto& [k, k_prime] : report.pairs) {
    for (int z = 1; z <= 2; ++z) {
      const GaugeChoice gauge = resolve_gauge(policy, params, k, k_prime, z);
      auto [first, second] =
          eigenvector_pair_degenerate(params, k, k_prime, z, gauge);
      const Scalar lambda = eigenphase(params, k, z);
      const Scalar s_max = pair_s_max(params, k, k_prime, z);
      const Scalar s2 = std::sqrt(s_max * s_max - gauge.s1 * gauge.s1);

      EigenvectorRecord lead;
      lead.k = k;
      lead.z = z;
      lead.lambda = lambda;
      lead.member = 1;
      lead.partner_k = k_prime;
      lead.gauge = gauge;
      lead.vec = std::move(first);

      EigenvectorRecord partner;
      partner.k = k_prime;
      partner.z = z;
      partner.lambda = lambda;
      partner.member = 2;
      partner.partner_k = k;
      partner.gauge = GaugeChoice{s2, gauge.omega1 + kPi};
      partner.vec = std::move(second);

      basis.vectors[slot(k, z)] = std::move(lead);
      basis.vectors[slot(k_prime, z)] = std::move(partner);
      basis.pair_links.push_back(PairLink{slot(k, z), slot(k_prime, z)});
    }
  }
  return basis;
}

Matrix symmetry_operator(const EigenBasis& basis) {
  const int dim = 2 * basis.params.sites;
  Matrix s = Matrix::Zero(dim, dim);
  std::vector<bool> paired(basis.vectors.size(), false);
  for (const PairLink& link : basis.pair_links) {
    const Vector v1 = to_position(basis.vectors[link.first].vec).amplitudes;
    const Vector v2 = to_position(basis.vectors[link.second].vec).amplitudes;
    s += v2 * v1.adjoint() + v1 * v2.adjoint();
    paired[link.first] = paired[link.second] = true;
  }
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    if (paired[i]) continue;
    const Vector v = to_position(basis.vectors[i].vec).amplitudes;
    s += v * v.adjoint();
  }
  return s;
}

Complex protected_coin_ratio(const CoinParams& params, int k, int z) {
  eigenphase(params, k, z);  // validates (k, z)
  require_interior_bias(params);
  const DegeneracyReport report = degeneracy_report(params);
  bool unique = false;
  for (int u : report.unique_ks) unique = unique || (u == k);
  if (!report.is_degenerate || !unique) {
    throw std::invalid_argument(
        "protected ratio is defined only at a unique wavenumber of a "
        "degenerate coin");
  }
  const GElements g = g_elements(params, eigenphase(params, k, z), k);
  return -g.g00 / g.g01;
}

}  // namespace cyclewalk

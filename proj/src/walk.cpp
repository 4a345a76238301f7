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

#include "cyclewalk/walk.hpp"

#include <stdexcept>
#include <string>

namespace cyclewalk {
namespace {

void check_position(const StateVector& psi, const char* what) {
  if (psi.basis != Basis::kPosition) {
    throw std::invalid_argument(std::string(what) +
                                " expects a position-basis state");
  }
}

// One walk step, raw buffers: coin toss then conditional shift.  Every
// output slot is written exactly once, so no zero-fill is needed.
void step_into(const CoinMatrix& coin, int n, const Complex* in,
               Complex* out) {
  const Complex f00 = coin(0, 0), f01 = coin(0, 1);
  const Complex f10 = coin(1, 0), f11 = coin(1, 1);
  for (int x = 0; x < n; ++x) {
    const Complex a = in[2 * x];
    const Complex b = in[2 * x + 1];
    const int left = (x == 0) ? n - 1 : x - 1;
    const int right = (x == n - 1) ? 0 : x + 1;
    out[2 * left] = f00 * a + f01 * b;
    out[2 * right + 1] = f10 * a + f11 * b;
  }
}

// DFT over the site index for both coin components; `sign` +1 forward, -1
// inverse.  Kernel values come from a single table of N roots of unity so
// equal exponents (mod N) give bit-identical factors.
StateVector dft(const StateVector& psi, int sign) {
  const int n = psi.sites();
  std::vector<Complex> root(n);
  for (int j = 0; j < n; ++j) {
    root[j] = std::polar(1.0, sign * kTwoPi * j / n);
  }
  const Scalar scale = 1.0 / std::sqrt(static_cast<Scalar>(n));
  StateVector out{Vector(2 * n),
                  sign > 0 ? Basis::kFourier : Basis::kPosition};
  for (int k = 0; k < n; ++k) {
    Complex acc0(0.0, 0.0), acc1(0.0, 0.0);
    for (int x = 0; x < n; ++x) {
      const Complex w = root[static_cast<int>(
          (static_cast<long long>(k) * x) % n)];
      acc0 += w * psi.amplitudes[2 * x];
      acc1 += w * psi.amplitudes[2 * x + 1];
    }
    out.amplitudes[2 * k] = scale * acc0;
    out.amplitudes[2 * k + 1] = scale * acc1;
  }
  return out;
}

}  // namespace

StateVector basis_state(int sites, int x, int c) {
  if (sites < 2) throw std::invalid_argument("cycle needs at least 2 sites");
  if (x < 0 || x >= sites) throw std::out_of_range("site index out of range");
  if (c != 0 && c != 1) throw std::out_of_range("coin index must be 0 or 1");
  StateVector psi{Vector::Zero(2 * sites), Basis::kPosition};
  psi.amplitudes[2 * x + c] = Complex(1.0, 0.0);
  return psi;
}

StateVector random_state(int sites, std::mt19937_64& gen) {
  std::normal_distribution<Scalar> gauss(0.0, 1.0);
  StateVector psi{Vector(2 * sites), Basis::kPosition};
  for (int i = 0; i < 2 * sites; ++i) {
    psi.amplitudes[i] = Complex(gauss(gen), gauss(gen));
  }
  psi.amplitudes.normalize();
  return psi;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.basis != b.basis) {
    throw std::invalid_argument("inner product requires a common basis");
  }
  if (a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("inner product requires equal sizes");
  }
  return a.amplitudes.dot(b.amplitudes);  // Eigen conjugates the left side
}

StepOperator make_step_operator(const CoinParams& params) {
  return StepOperator{build_coin(params), params.sites};
}

StateVector apply_step(const StepOperator& op, const StateVector& psi) {
  check_position(psi, "apply_step");
  if (psi.sites() != op.sites) {
    throw std::invalid_argument("state size does not match the operator");
  }
  StateVector out{Vector(psi.amplitudes.size()), Basis::kPosition};
  step_into(op.coin, op.sites, psi.amplitudes.data(), out.amplitudes.data());
  return out;
}

StateVector evolve(std::span<const CoinParams> steps,
                   const StateVector& psi) {
  check_position(psi, "evolve");
  const int n = psi.sites();
  StateVector cur = psi;
  StateVector buf{Vector(2 * n), Basis::kPosition};
  for (const CoinParams& params : steps) {
    if (params.sites != n) {
      throw std::invalid_argument("evolve: step size does not match state");
    }
    step_into(build_coin(params), n, cur.amplitudes.data(),
              buf.amplitudes.data());
    std::swap(cur.amplitudes, buf.amplitudes);
  }
  return cur;
}

Matrix build_dense(const StepOperator& op, int dense_site_limit) {
  if (op.sites > dense_site_limit) {
    throw std::length_error("cycle too large for a dense step matrix");
  }
  const int n = op.sites;
  Matrix u = Matrix::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    const int left = (x == 0) ? n - 1 : x - 1;
    const int right = (x == n - 1) ? 0 : x + 1;
    for (int c = 0; c < 2; ++c) {
      const int col = 2 * x + c;
      u(2 * left, col) = op.coin(0, c);
      u(2 * right + 1, col) = op.coin(1, c);
    }
  }
  return u;
}

StateVector fourier(const StateVector& psi) {
  check_position(psi, "fourier");
  return dft(psi, +1);
}

StateVector inverse_fourier(const StateVector& psi) {
  if (psi.basis != Basis::kFourier) {
    throw std::invalid_argument(
        "inverse_fourier expects a Fourier-basis state");
  }
  return dft(psi, -1);
}

StateVector to_position(const StateVector& psi) {
  return psi.basis == Basis::kPosition ? psi : inverse_fourier(psi);
}

}  // namespace cyclewalk

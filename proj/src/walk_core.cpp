// Copyright 2026 The uniwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uniwalk/walk_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uniwalk {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

QubitState::QubitState(Complex a, Complex b) : a_(a), b_(b) {
  if (!finite(a) || !finite(b)) {
    throw std::invalid_argument("QubitState: amplitudes must be finite");
  }
  const double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("QubitState: |a|^2 + |b|^2 = " + std::to_string(norm) +
                                ", expected 1");
  }
}

QubitState QubitState::normalized(Complex a_raw, Complex b_raw) {
  if (!finite(a_raw) || !finite(b_raw)) {
    throw std::invalid_argument("QubitState: amplitudes must be finite");
  }
  const double scale = std::sqrt(std::norm(a_raw) + std::norm(b_raw));
  if (scale == 0.0) {
    throw std::invalid_argument("QubitState: cannot normalize the zero vector");
  }
  return QubitState(a_raw / scale, b_raw / scale, Unchecked{});
}

QubitState QubitState::symmetric() {
  const double s = 1.0 / std::sqrt(2.0);
  return QubitState(Complex(s, 0.0), Complex(0.0, s), Unchecked{});
}

CoinMatrix coin_matrix(const CoinSpec& coin) {
  if (!std::isfinite(coin.alpha) || !std::isfinite(coin.beta) || !std::isfinite(coin.phi)) {
    throw std::invalid_argument("CoinSpec: angles must be finite");
  }
  const double c = std::cos(coin.phi);
  const double s = std::sin(coin.phi);
  const Complex ea = std::polar(1.0, coin.alpha);
  const Complex eb = std::polar(1.0, coin.beta);
  return {{{ea * c, eb * s}, {std::conj(eb) * s, -std::conj(ea) * c}}};
}

CoinSpec hadamard() { return CoinSpec{0.0, 0.0, std::numbers::pi / 4.0}; }

bool is_hadamard(const CoinSpec& coin) {
  const CoinSpec h = hadamard();
  return std::abs(coin.alpha - h.alpha) < 1e-15 && std::abs(coin.beta - h.beta) < 1e-15 &&
         std::abs(coin.phi - h.phi) < 1e-15;
}

WaveField::WaveField(int t) : t_(t) {
  if (t < 0) throw std::invalid_argument("WaveField: negative time step");
  psi0_.assign(static_cast<std::size_t>(t) + 1, Complex{});
  psi1_.assign(static_cast<std::size_t>(t) + 1, Complex{});
}

WaveField::WaveField(int t, std::vector<Complex> psi0, std::vector<Complex> psi1)
    : t_(t), psi0_(std::move(psi0)), psi1_(std::move(psi1)) {
  if (t < 0) throw std::invalid_argument("WaveField: negative time step");
  const auto expected = static_cast<std::size_t>(t) + 1;
  if (psi0_.size() != expected || psi1_.size() != expected) {
    throw std::invalid_argument("WaveField: component length must be t + 1");
  }
  if (!std::all_of(psi0_.begin(), psi0_.end(), finite) ||
      !std::all_of(psi1_.begin(), psi1_.end(), finite)) {
    throw std::invalid_argument("WaveField: non-finite amplitude");
  }
}

double WaveField::norm() const {
  double total = 0.0;
  for (std::size_t n = 0; n < psi0_.size(); ++n) total += std::norm(psi0_[n]) + std::norm(psi1_[n]);
  return total;
}

double max_abs_difference(const WaveField& lhs, const WaveField& rhs) {
  if (lhs.t() != rhs.t()) throw std::invalid_argument("max_abs_difference: time steps differ");
  double worst = 0.0;
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    worst = std::max({worst, std::abs(lhs.psi0()[n] - rhs.psi0()[n]),
                      std::abs(lhs.psi1()[n] - rhs.psi1()[n])});
  }
  return worst;
}

}  // namespace uniwalk

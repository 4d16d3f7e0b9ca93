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

#include "uniwalk/evolution.hpp"

#include <stdexcept>

namespace uniwalk {
namespace {

// Advances amplitudes occupying sites 0..t into slots 0..t+1 of the outputs.
void step_into(const CoinMatrix& u, std::span<const Complex> in0, std::span<const Complex> in1,
               std::span<Complex> out0, std::span<Complex> out1) {
  const std::size_t sites = in0.size();
  out1[0] = Complex{};
  for (std::size_t n = 0; n < sites; ++n) {
    out0[n] = u[0][0] * in0[n] + u[0][1] * in1[n];
    out1[n + 1] = u[1][0] * in0[n] + u[1][1] * in1[n];
  }
  out0[sites] = Complex{};
}

}  // namespace

BidirectionalField::BidirectionalField(int t) : t_(t) {
  if (t < 0) throw std::invalid_argument("BidirectionalField: negative time step");
  psi0_.assign(2 * static_cast<std::size_t>(t) + 1, Complex{});
  psi1_.assign(2 * static_cast<std::size_t>(t) + 1, Complex{});
}

Complex BidirectionalField::psi0(int m) const { return in_range(m) ? psi0_[index(m)] : Complex{}; }

Complex BidirectionalField::psi1(int m) const { return in_range(m) ? psi1_[index(m)] : Complex{}; }

void BidirectionalField::set(int m, Complex psi0, Complex psi1) {
  if (!in_range(m)) throw std::out_of_range("BidirectionalField: position outside [-t, t]");
  psi0_[index(m)] = psi0;
  psi1_[index(m)] = psi1;
}

double BidirectionalField::probability(int m) const {
  return std::norm(psi0(m)) + std::norm(psi1(m));
}

double BidirectionalField::total() const {
  double sum = 0.0;
  for (int m = -t_; m <= t_; ++m) sum += probability(m);
  return sum;
}

WaveField initial_field(const QubitState& q) {
  return WaveField(0, {q.a()}, {q.b()});
}

WaveField step(const WaveField& w, const CoinSpec& coin) {
  WaveField next(w.t() + 1);
  step_into(coin_matrix(coin), w.psi0(), w.psi1(), next.psi0(), next.psi1());
  return next;
}

WaveField evolve(const QubitState& q, const CoinSpec& coin, int t) {
  if (t < 0) throw std::invalid_argument("evolve: negative time step");
  const CoinMatrix u = coin_matrix(coin);

  // Two buffers sized for the final time; the occupied prefix grows by one per step.
  const auto capacity = static_cast<std::size_t>(t) + 1;
  std::vector<Complex> cur0(capacity), cur1(capacity), nxt0(capacity), nxt1(capacity);
  cur0[0] = q.a();
  cur1[0] = q.b();
  for (int s = 0; s < t; ++s) {
    const auto sites = static_cast<std::size_t>(s) + 1;
    step_into(u, std::span<const Complex>(cur0).first(sites),
              std::span<const Complex>(cur1).first(sites), std::span<Complex>(nxt0).first(sites + 1),
              std::span<Complex>(nxt1).first(sites + 1));
    cur0.swap(nxt0);
    cur1.swap(nxt1);
  }
  return WaveField(t, std::move(cur0), std::move(cur1));
}

Pmf pmf(const WaveField& w) {
  Pmf out;
  out.t = w.t();
  out.rho.resize(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    out.rho[n] = std::norm(w.psi0()[n]) + std::norm(w.psi1()[n]);
    out.total += out.rho[n];
  }
  return out;
}

BidirectionalField to_bidirectional(const WaveField& w) {
  BidirectionalField out(w.t());
  for (int n = 0; n <= w.t(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.set(2 * n - w.t(), w.psi0()[i], w.psi1()[i]);
  }
  return out;
}

}  // namespace uniwalk

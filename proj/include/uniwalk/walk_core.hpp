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

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace uniwalk {

using Complex = std::complex<double>;

/// 2x2 coin operator. Row index is the output qubit, column index the input.
using CoinMatrix = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kNormTolerance = 1e-12;

/// Coin amplitudes (a, b) of the initial superposition a|0> + b|1>.
///
/// The plain constructor rejects inputs whose squared norm differs from one
/// by more than kNormTolerance; use normalized() to rescale raw amplitudes.
class QubitState {
 public:
  QubitState(Complex a, Complex b);

  static QubitState normalized(Complex a_raw, Complex b_raw);

  /// (|0> + i|1>)/sqrt(2), the state whose position PMF is left-right symmetric.
  static QubitState symmetric();

  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  struct Unchecked {};
  QubitState(Complex a, Complex b, Unchecked) : a_(a), b_(b) {}

  Complex a_;
  Complex b_;
};

/// Angles (alpha, beta, phi) of the general unitary coin, in radians.
struct CoinSpec {
  double alpha = 0.0;
  double beta = 0.0;
  double phi = 0.0;
};

CoinMatrix coin_matrix(const CoinSpec& coin);

/// The fair coin with entries [[1, 1], [1, -1]] / sqrt(2); phi = pi/4.
CoinSpec hadamard();

/// True when coin describes exactly the Hadamard coin (up to 1e-15 in each angle).
bool is_hadamard(const CoinSpec& coin);

/// Two-component wave function psi0(n, t), psi1(n, t) on sites n = 0..t.
class WaveField {
 public:
  /// All-zero field at time t (t + 1 sites).
  explicit WaveField(int t);
  WaveField(int t, std::vector<Complex> psi0, std::vector<Complex> psi1);

  int t() const { return t_; }
  std::size_t size() const { return psi0_.size(); }

  std::span<const Complex> psi0() const { return psi0_; }
  std::span<const Complex> psi1() const { return psi1_; }
  std::span<Complex> psi0() { return psi0_; }
  std::span<Complex> psi1() { return psi1_; }

  /// Sum over sites of |psi0|^2 + |psi1|^2.
  double norm() const;

 private:
  int t_;
  std::vector<Complex> psi0_;
  std::vector<Complex> psi1_;
};

/// Largest entry-wise modulus of the difference between two fields at the same t.
double max_abs_difference(const WaveField& lhs, const WaveField& rhs);

}  // namespace uniwalk

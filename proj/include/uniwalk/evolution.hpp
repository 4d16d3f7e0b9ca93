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

#include <vector>

#include "uniwalk/walk_core.hpp"

namespace uniwalk {

/// Position probabilities rho(n, t) = |psi0|^2 + |psi1|^2 for n = 0..t.
struct Pmf {
  int t = 0;
  std::vector<double> rho;
  double total = 0.0;
};

/// Field of the conventional left/right walk at time t, obtained by moving
/// unidirectional site n to position m = 2n - t. Stored densely over
/// m = -t..t; positions whose parity differs from t hold zeros.
class BidirectionalField {
 public:
  explicit BidirectionalField(int t);

  int t() const { return t_; }
  Complex psi0(int m) const;
  Complex psi1(int m) const;
  void set(int m, Complex psi0, Complex psi1);

  /// Probability at position m; zero outside [-t, t].
  double probability(int m) const;
  double total() const;

 private:
  std::size_t index(int m) const { return static_cast<std::size_t>(m + t_); }
  bool in_range(int m) const { return m >= -t_ && m <= t_; }

  int t_;
  std::vector<Complex> psi0_;
  std::vector<Complex> psi1_;
};

WaveField initial_field(const QubitState& q);

/// One application of the shift-after-coin operator:
///   psi0(n, t+1) = U00 psi0(n, t)   + U01 psi1(n, t)
///   psi1(n, t+1) = U10 psi0(n-1, t) + U11 psi1(n-1, t)
WaveField step(const WaveField& w, const CoinSpec& coin);

/// t-fold composition of step() on initial_field(q). O(t^2).
WaveField evolve(const QubitState& q, const CoinSpec& coin, int t);

Pmf pmf(const WaveField& w);

BidirectionalField to_bidirectional(const WaveField& w);

}  // namespace uniwalk

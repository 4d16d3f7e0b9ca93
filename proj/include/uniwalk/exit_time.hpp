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

/// Exit-time law from [0, n0): p_exit[t - n0] = Pr{first detection at n0 at time t}
/// for t = n0..tmax. Probabilities for t < n0 are zero and not stored.
struct ExitDistribution {
  int n0 = 1;
  int tmax = 1;
  std::vector<double> p_exit;
  double survival = 1.0;  ///< mass not yet exited by tmax

  double at(int t) const;
  double total() const;
};

/// Evaluation route for the closed-form exit law.
enum class ExitRoute {
  automatic,  ///< currently direct: O(n0 tmax) against O(tmax^2) for spectral
  direct,     ///< unfiltered time-domain recurrence on sites 0..n0
  spectral,   ///< single-site inverse transform of the Fourier-domain solution
};

/// p_exit(t) = |psi1(n0, t)|^2 of the unfiltered Hadamard walk.
ExitDistribution exit_pmf_closed(const QubitState& q, int n0, int tmax,
                                 ExitRoute route = ExitRoute::automatic);

/// Measure-and-project protocol: after every step from t = n0 on, the
/// probability at site n0 is recorded and that site is projected out. The
/// field is never renormalised, so recorded values are unconditional.
ExitDistribution exit_pmf_filtered(const QubitState& q, const CoinSpec& coin, int n0, int tmax);

/// Negative-binomial law C(t-1, t-n0) p^n0 (1-p)^(t-n0) of the classical walk
/// that moves with probability p, evaluated in log space.
ExitDistribution classical_exit_pmf(int n0, double p, int tmax);

/// Points used by tail_exponent_fit.
enum class Envelope {
  upper,  ///< local maxima
  lower,  ///< local minima
  raw,    ///< every positive point
};

struct TailFit {
  double exponent = 0.0;      ///< slope of log p versus log t
  double intercept = 0.0;
  double residual_rms = 0.0;  ///< RMS of log-space residuals
  int points = 0;
};

inline constexpr int kMinFitPoints = 10;

/// Times in [t_lo, t_hi] selected by the envelope rule. Neighbours used to
/// classify extrema may lie outside the range but must exist in d.
std::vector<int> envelope_times(const ExitDistribution& d, int t_lo, int t_hi, Envelope envelope);

/// Least-squares power-law fit over envelope_times. Throws std::invalid_argument
/// when fewer than kMinFitPoints points are available.
TailFit tail_exponent_fit(const ExitDistribution& d, int t_lo, int t_hi,
                          Envelope envelope = Envelope::upper);

}  // namespace uniwalk

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

#include <optional>

#include "uniwalk/walk_core.hpp"

// Stationary-phase approximations of the Hadamard walk in the continuum limit
// t >> 1 with nu = n / t held fixed. All functions take nu directly.
namespace uniwalk::asymptotics {

struct Interval {
  double lo;
  double hi;
};

/// ((1 - 1/sqrt2)/2, (1 + 1/sqrt2)/2). Open interval.
Interval validity_interval();

bool in_validity_interval(double nu);

/// Quantities at the maximiser u0 of phi(nu, u) = pi (2 nu - 1) u + omega_u.
struct StationaryPoint {
  double nu;
  double cos_pi_u0;
  double sin_pi_u0;
  double sin_omega0;
  double cos_omega0;
  double phi0;         ///< phi(nu, u0)
  double phi0_second;  ///< d^2 phi / du^2 at u0, negative

  /// pi * u0 in (0, pi).
  double pi_u0() const;
};

/// Throws std::domain_error unless nu lies strictly inside validity_interval().
StationaryPoint stationary_point(double nu);

/// Approximate amplitudes at (n, t) = (nu t, t).
struct ApproxAmplitudes {
  Complex psi0;
  Complex psi1;
};

ApproxAmplitudes approx_wavefield(const QubitState& q, double nu, int t);

/// g(u0) weights of the three smooth factors appearing in the exact sums.
struct StationaryWeights {
  double diagonal;  ///< 1 / (2 - sqrt2 cos(omega - pi u)):  2 (1 - nu)
  double cross;     ///< times (sqrt2 cos omega - cos pi u): 2 sqrt(nu (1 - nu))
  double squared;   ///< times (sqrt2 cos omega - cos pi u)^2: 2 nu
};

StationaryWeights stationary_weights(double nu);

/// PMF approximation for the symmetric initial state (|0> + i|1>)/sqrt2.
double rho_bar(double nu, int t);

struct Envelopes {
  double rho_min;
  double rho_max;
};

/// Lower and upper envelopes of rho_bar over the oscillating factor.
Envelopes rho_envelopes(double nu, int t);

/// Approximate lower bound on the exit probability at time t for threshold n0.
/// Empty when t < 2 n0 or 8 n0 (t - n0) - t^2 < 0.
std::optional<double> exit_lower_bound(int n0, int t);

/// (1 / (2 pi n0)) (2 n0 / t)^(11/4). Meaningful for t >= 2 n0.
double exit_heuristic(int n0, int t);

inline constexpr double kHeuristicExponent = -11.0 / 4.0;

}  // namespace uniwalk::asymptotics

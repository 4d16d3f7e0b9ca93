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

#include "uniwalk/asymptotics.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uniwalk::asymptotics {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// 1 - 2 (1 - 2 nu)^2; positive exactly on the validity interval.
double radicand(double nu) {
  const double d = 1.0 - 2.0 * nu;
  return 1.0 - 2.0 * d * d;
}

void require_valid(double nu, const char* who) {
  if (!in_validity_interval(nu)) {
    throw std::domain_error(std::string(who) + ": nu = " + std::to_string(nu) +
                            " outside the stationary-phase validity interval");
  }
}

void require_positive_time(int t, const char* who) {
  if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be at least 1");
}

}  // namespace

Interval validity_interval() {
  return {0.5 * (1.0 - 1.0 / kSqrt2), 0.5 * (1.0 + 1.0 / kSqrt2)};
}

bool in_validity_interval(double nu) {
  const Interval iv = validity_interval();
  return nu > iv.lo && nu < iv.hi && radicand(nu) > 0.0;
}

double StationaryPoint::pi_u0() const { return std::atan2(sin_pi_u0, cos_pi_u0); }

StationaryPoint stationary_point(double nu) {
  require_valid(nu, "stationary_point");
  const double e = radicand(nu);
  const double nn = nu * (1.0 - nu);

  StationaryPoint sp{};
  sp.nu = nu;
  sp.cos_pi_u0 = (1.0 - 2.0 * nu) / (2.0 * std::sqrt(nn));
  sp.sin_pi_u0 = 0.5 * std::sqrt(e / nn);
  sp.sin_omega0 = 0.5 * std::sqrt(e / (2.0 * nn));
  sp.cos_omega0 = 1.0 / (2.0 * std::sqrt(2.0 * nn));
  // pi u0 is taken from atan2 so that it lands in (0, pi) for nu on either
  // side of 1/2; arcsin(sin pi u0) would fold it back into (0, pi/2] for nu > 1/2.
  sp.phi0 = (2.0 * nu - 1.0) * sp.pi_u0() + std::asin(sp.sin_omega0);
  sp.phi0_second = -4.0 * kPi * kPi * nn * std::sqrt(e);
  return sp;
}

StationaryWeights stationary_weights(double nu) {
  require_valid(nu, "stationary_weights");
  return {2.0 * (1.0 - nu), 2.0 * std::sqrt(nu * (1.0 - nu)), 2.0 * nu};
}

ApproxAmplitudes approx_wavefield(const QubitState& q, double nu, int t) {
  require_positive_time(t, "approx_wavefield");
  const StationaryPoint sp = stationary_point(nu);
  const StationaryWeights g = stationary_weights(nu);

  // sqrt(2 pi / (t |phi''|)) g(u0) cos(phi0 t + eps pi u0 - pi/4), one term per weight.
  const double scale = std::sqrt(2.0 * kPi / (t * std::abs(sp.phi0_second)));
  const double big_a = sp.phi0 * t - kPi / 4.0;
  const double pu = sp.pi_u0();

  const double a_psi0 = scale * g.diagonal * std::cos(big_a);
  const double b_psi0 = scale * g.cross * std::cos(big_a + pu);
  const double a_psi1 = scale * g.cross * std::cos(big_a - pu);
  const double b_psi1 = scale * g.squared * std::cos(big_a);
  return {q.a() * a_psi0 + q.b() * b_psi0, q.a() * a_psi1 + q.b() * b_psi1};
}

double rho_bar(double nu, int t) {
  require_positive_time(t, "rho_bar");
  const StationaryPoint sp = stationary_point(nu);
  const double d2 = (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu);
  const double denom = 2.0 * kPi * nu * (1.0 - nu) * std::sqrt(radicand(nu));
  return (1.0 + 2.0 * d2 * std::sin(2.0 * sp.phi0 * t)) / (denom * t);
}

Envelopes rho_envelopes(double nu, int t) {
  require_positive_time(t, "rho_envelopes");
  require_valid(nu, "rho_envelopes");
  const double e = radicand(nu);
  const double d2 = (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu);
  const double nn = nu * (1.0 - nu);
  const Envelopes env{std::sqrt(e) / (2.0 * kPi * nn * t),
                      (1.0 + 2.0 * d2) / (2.0 * kPi * nn * std::sqrt(e) * t)};
#ifndef NDEBUG
  const StationaryPoint sp = stationary_point(nu);
  const double via_omega = 2.0 / (kPi * t) * 2.0 * sp.sin_omega0 * sp.cos_omega0;
  assert(std::abs(env.rho_min - via_omega) <= 1e-12 * std::abs(via_omega));
#endif
  return env;
}

std::optional<double> exit_lower_bound(int n0, int t) {
  if (n0 < 1 || t < 2 * n0) return std::nullopt;
  const double dn = n0;
  const double dt = t;
  const double r = 8.0 * dn * (dt - dn) - dt * dt;
  if (r < 0.0) return std::nullopt;
  return std::sqrt(r) / (4.0 * kPi * (dt - dn) * (dt - dn));
}

double exit_heuristic(int n0, int t) {
  if (n0 < 1 || t < 1) throw std::invalid_argument("exit_heuristic: n0 and t must be positive");
  return 1.0 / (2.0 * kPi * n0) * std::pow(2.0 * n0 / t, 11.0 / 4.0);
}

}  // namespace uniwalk::asymptotics

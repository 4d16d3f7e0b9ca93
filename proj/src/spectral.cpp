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

#include "uniwalk/spectral.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "uniwalk/fft.hpp"

namespace uniwalk::spectral {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void check_index(int r, int N) {
  if (N < 1) throw std::invalid_argument("spectral: transform length must be positive");
  if (r < 0 || r >= N) {
    throw std::invalid_argument("spectral: frequency index " + std::to_string(r) +
                                " outside [0, " + std::to_string(N) + ")");
  }
}

void check_horizon(int t, int N) {
  if (t < 0) throw std::invalid_argument("spectral: negative time step");
  if (N <= t) {
    throw std::invalid_argument("spectral: transform length N = " + std::to_string(N) +
                                " must exceed t = " + std::to_string(t));
  }
}

// cos(pi * k * r / N + phase) with k * r reduced modulo 2N first.
double cos_shifted(long long k, long long r, long long N, double phase) {
  long long m = (k * r) % (2 * N);
  if (m < 0) m += 2 * N;
  return std::cos(kPi * static_cast<double>(m) / static_cast<double>(N) + phase);
}

// Per-frequency weights shared by the four cosine sums.
struct FrequencyWeights {
  double phase;  // omega_r * t, reduced modulo 2 pi
  double w;      // 1 / (2 - sqrt2 cos(omega - pi r/N))
  double g;      // sqrt2 cos(omega) - cos(pi r/N)
};

std::vector<FrequencyWeights> frequency_weights(int t, int N) {
  std::vector<FrequencyWeights> out(static_cast<std::size_t>(N));
  for (int r = 1; r < N; ++r) {
    const double om = omega(r, N);
    const double pr = kPi * r / N;
    out[static_cast<std::size_t>(r)] = {std::fmod(om * t, 2.0 * kPi),
                                        1.0 / (2.0 - kSqrt2 * std::cos(om - pr)),
                                        kSqrt2 * std::cos(om) - std::cos(pr)};
  }
  return out;
}

// Per-frequency data for evaluating fourier_solution at many t.
struct ModeCoefficients {
  Lambdas lambda;
  Complex c_plus;   // weight of lambda_plus^t in psi0~
  Complex c_minus;  // weight of lambda_minus^t in psi0~
  Complex k_plus;   // sqrt2 lambda_plus - 1
  Complex k_minus;  // sqrt2 lambda_minus - 1
};

ModeCoefficients mode_coefficients(const QubitState& q, int r, int N) {
  ModeCoefficients m;
  m.lambda = lambdas(r, N);
  auto weight = [&](Complex lam) {
    return (q.a() + (kSqrt2 / lam - 1.0) * q.b()) / (1.0 + std::norm(1.0 - kSqrt2 * lam));
  };
  m.c_plus = weight(m.lambda.plus);
  m.c_minus = weight(m.lambda.minus);
  m.k_plus = kSqrt2 * m.lambda.plus - 1.0;
  m.k_minus = kSqrt2 * m.lambda.minus - 1.0;
  return m;
}

Complex unit_power(Complex lambda, int t) { return std::polar(1.0, std::arg(lambda) * t); }

}  // namespace

double omega(int r, int N) {
  check_index(r, N);
  const double value = std::asin(std::sin(kPi * r / N) / kSqrt2);
  assert(value >= 0.0 && value <= kPi / 4.0 + 1e-15);
  return value;
}

Lambdas lambdas(int r, int N) {
  const double om = omega(r, N);
  const double pr = kPi * r / N;
  return {std::polar(1.0, -(om - pr)), -std::polar(1.0, om + pr)};
}

FourierPair fourier_solution(const QubitState& q, int r, int N, int t) {
  check_index(r, N);
  check_horizon(t, N);
  const ModeCoefficients m = mode_coefficients(q, r, N);
  const Complex p_plus = unit_power(m.lambda.plus, t);
  const Complex p_minus = unit_power(m.lambda.minus, t);
  return {p_plus * m.c_plus + p_minus * m.c_minus,
          p_plus * m.k_plus * m.c_plus + p_minus * m.k_minus * m.c_minus};
}

ParityConstants parity_constants(BasisState basis, int t, int N) {
  check_horizon(t, N);
  const double even = (t % 2 == 0) ? 1.0 : 0.0;  // (1 + (-1)^t) / 2
  const double odd = 1.0 - even;                  // (1 - (-1)^t) / 2
  const double inv_n = 1.0 / N;
  if (basis == BasisState::zero) {
    return {(even + odd / kSqrt2) * inv_n, odd / kSqrt2 * inv_n};
  }
  return {odd / kSqrt2 * inv_n, (even - odd / kSqrt2) * inv_n};
}

RealField basis_field(BasisState basis, int t, int N) {
  const ParityConstants constant = parity_constants(basis, t, N);
  const auto weights = frequency_weights(t, N);
  const auto sites = static_cast<std::size_t>(t) + 1;
  RealField out{std::vector<double>(sites), std::vector<double>(sites)};

  for (int n = 0; n <= t; ++n) {
    const long long k = 2LL * n - t;
    double sum0 = 0.0;
    double sum1 = 0.0;
    for (int r = 1; r < N; ++r) {
      const auto& fw = weights[static_cast<std::size_t>(r)];
      if (basis == BasisState::zero) {
        sum0 += fw.w * cos_shifted(k, r, N, fw.phase);
        sum1 += fw.w * fw.g * cos_shifted(k - 1, r, N, fw.phase);
      } else {
        sum0 += fw.w * fw.g * cos_shifted(k + 1, r, N, fw.phase);
        sum1 += fw.w * fw.g * fw.g * cos_shifted(k, r, N, fw.phase);
      }
    }
    const auto i = static_cast<std::size_t>(n);
    out.psi0[i] = constant.psi0 + sum0 / N;
    out.psi1[i] = constant.psi1 + sum1 / N;
  }
  return out;
}

WaveField closed_form_field(const QubitState& q, int t, int N) {
  check_horizon(t, N);
  const RealField from_zero = basis_field(BasisState::zero, t, N);
  const RealField from_one = basis_field(BasisState::one, t, N);
  const auto sites = static_cast<std::size_t>(t) + 1;
  std::vector<Complex> psi0(sites), psi1(sites);
  for (std::size_t n = 0; n < sites; ++n) {
    psi0[n] = q.a() * from_zero.psi0[n] + q.b() * from_one.psi0[n];
    psi1[n] = q.a() * from_zero.psi1[n] + q.b() * from_one.psi1[n];
  }
  return WaveField(t, std::move(psi0), std::move(psi1));
}

WaveField closed_form_field(const QubitState& q, int t) { return closed_form_field(q, t, t + 1); }

WaveField inverse_dft_field(const QubitState& q, int t, int N) {
  check_horizon(t, N);
  std::vector<Complex> spec0(static_cast<std::size_t>(N)), spec1(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) {
    const FourierPair fp = fourier_solution(q, r, N, t);
    spec0[static_cast<std::size_t>(r)] = fp.psi0_tilde;
    spec1[static_cast<std::size_t>(r)] = fp.psi1_tilde;
  }
  auto psi0 = fft::idft(spec0);
  auto psi1 = fft::idft(spec1);
  psi0.resize(static_cast<std::size_t>(t) + 1);
  psi1.resize(static_cast<std::size_t>(t) + 1);
  return WaveField(t, std::move(psi0), std::move(psi1));
}

FullField fft_full(const QubitState& q, int t) {
  const auto length = fft::transform_length_for(t);
  const int N = static_cast<int>(length);
  FullField out{t, std::vector<Complex>(length), std::vector<Complex>(length)};
  for (int r = 0; r < N; ++r) {
    const FourierPair fp = fourier_solution(q, r, N, t);
    out.psi0[static_cast<std::size_t>(r)] = fp.psi0_tilde;
    out.psi1[static_cast<std::size_t>(r)] = fp.psi1_tilde;
  }
  fft::inverse(out.psi0);
  fft::inverse(out.psi1);
  return out;
}

WaveField fft_field(const QubitState& q, int t) {
  FullField full = fft_full(q, t);
  double tail = 0.0;
  for (std::size_t n = static_cast<std::size_t>(t) + 1; n < full.psi0.size(); ++n) {
    tail = std::max({tail, std::abs(full.psi0[n]), std::abs(full.psi1[n])});
  }
  if (tail > kTailTolerance) {
    throw std::runtime_error("fft_field: tail beyond t is " + std::to_string(tail) +
                             ", expected zero");
  }
  full.psi0.resize(static_cast<std::size_t>(t) + 1);
  full.psi1.resize(static_cast<std::size_t>(t) + 1);
  return WaveField(t, std::move(full.psi0), std::move(full.psi1));
}

SiteHistory site_history(const QubitState& q, int site, int tmax, int N) {
  check_horizon(tmax, N);
  if (site < 0 || site >= N) throw std::invalid_argument("site_history: site outside [0, N)");

  const auto steps = static_cast<std::size_t>(tmax) + 1;
  SiteHistory out{site, std::vector<Complex>(steps), std::vector<Complex>(steps)};

  // Powers advance by repeated multiplication and are resynchronised from the
  // exact phase at this interval to bound drift.
  constexpr int kResync = 256;
  for (int r = 0; r < N; ++r) {
    const ModeCoefficients m = mode_coefficients(q, r, N);
    const long long phase_index = (static_cast<long long>(r) * site) % N;
    const Complex back = std::polar(1.0, -2.0 * kPi * static_cast<double>(phase_index) / N) / static_cast<double>(N);
    const Complex a_plus = back * m.c_plus;
    const Complex a_minus = back * m.c_minus;
    const Complex b_plus = a_plus * m.k_plus;
    const Complex b_minus = a_minus * m.k_minus;

    Complex p_plus{1.0, 0.0};
    Complex p_minus{1.0, 0.0};
    for (int t = 0; t <= tmax; ++t) {
      if (t % kResync == 0) {
        p_plus = unit_power(m.lambda.plus, t);
        p_minus = unit_power(m.lambda.minus, t);
      }
      const auto i = static_cast<std::size_t>(t);
      out.psi0[i] += p_plus * a_plus + p_minus * a_minus;
      out.psi1[i] += p_plus * b_plus + p_minus * b_minus;
      p_plus *= m.lambda.plus;
      p_minus *= m.lambda.minus;
    }
  }
  return out;
}

}  // namespace uniwalk::spectral

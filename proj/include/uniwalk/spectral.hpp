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

// Exact Hadamard-walk fields through the discrete Fourier transform.
//
// N is the transform length and must exceed the time step t; results are
// independent of the particular N chosen. Everything in this namespace
// assumes the Hadamard coin.
namespace uniwalk::spectral {

/// Transformed components at one frequency index r and time t.
struct FourierPair {
  Complex psi0_tilde;
  Complex psi1_tilde;
};

/// Eigenvalues of the one-step Fourier-domain propagator at frequency r.
struct Lambdas {
  Complex plus;   ///< exp(-i(omega - pi r/N))
  Complex minus;  ///< -exp(i(omega + pi r/N))
};

/// Which unit initial coin state a basis solution starts from.
enum class BasisState {
  zero,  ///< a = 1, b = 0
  one,   ///< a = 0, b = 1
};

/// Real-valued basis solution on sites 0..t.
struct RealField {
  std::vector<double> psi0;
  std::vector<double> psi1;
};

/// The n-independent additive terms of a basis solution (already divided by N).
struct ParityConstants {
  double psi0 = 0.0;
  double psi1 = 0.0;
};

/// Complete inverse transform of length N; entries past t are ideally zero.
struct FullField {
  int t = 0;
  std::vector<Complex> psi0;
  std::vector<Complex> psi1;
};

/// Amplitudes at one fixed site for every t = 0..tmax.
struct SiteHistory {
  int site = 0;
  std::vector<Complex> psi0;
  std::vector<Complex> psi1;
};

/// arcsin(sin(pi r / N) / sqrt(2)) in [0, pi/4].
double omega(int r, int N);

Lambdas lambdas(int r, int N);

/// Closed-form transformed components for initial coin state q, valid for t < N.
FourierPair fourier_solution(const QubitState& q, int r, int N, int t);

ParityConstants parity_constants(BasisState basis, int t, int N);

/// Explicit real-cosine sums for one basis state. O(t * N).
RealField basis_field(BasisState basis, int t, int N);

/// a * basis_field(zero) + b * basis_field(one).
WaveField closed_form_field(const QubitState& q, int t, int N);

/// Same with N = t + 1.
WaveField closed_form_field(const QubitState& q, int t);

/// Direct (non-fast) inverse transform of fourier_solution over all r. O(t * N).
WaveField inverse_dft_field(const QubitState& q, int t, int N);

/// Fast inverse transform at N = transform_length_for(t), untruncated.
FullField fft_full(const QubitState& q, int t);

/// fft_full truncated to n = 0..t. Throws std::runtime_error if the discarded
/// tail exceeds kTailTolerance.
WaveField fft_field(const QubitState& q, int t);

inline constexpr double kTailTolerance = 1e-9;

/// psi0(site, t), psi1(site, t) for t = 0..tmax via a single-site inverse
/// transform of length N > tmax. O(N * tmax).
SiteHistory site_history(const QubitState& q, int site, int tmax, int N);

}  // namespace uniwalk::spectral

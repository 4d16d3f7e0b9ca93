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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

namespace uniwalk {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

TEST(InitialField, PlacesAmplitudesAtOrigin) {
  const WaveField w = initial_field(QubitState::symmetric());
  ASSERT_EQ(w.t(), 0);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.psi0()[0], Complex(kInvSqrt2, 0.0));
  EXPECT_EQ(w.psi1()[0], Complex(0.0, kInvSqrt2));
  EXPECT_NEAR(w.norm(), 1.0, 1e-15);

  const WaveField up = initial_field(QubitState(Complex(1.0), Complex{}));
  EXPECT_EQ(up.psi0()[0], Complex(1.0));
  EXPECT_EQ(up.psi1()[0], Complex{});
}

TEST(Step, SingleHadamardStep) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QubitState q = oracle::random_qubit(rng);
    const WaveField w = step(initial_field(q), hadamard());
    ASSERT_EQ(w.t(), 1);
    EXPECT_NEAR(std::abs(w.psi0()[0] - (q.a() + q.b()) * kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(w.psi1()[1] - (q.a() - q.b()) * kInvSqrt2), 0.0, 1e-15);
    EXPECT_EQ(w.psi1()[0], Complex{});
    EXPECT_EQ(w.psi0()[1], Complex{});
  }
}

TEST(Step, TwoStepsSymmetricState) {
  const WaveField w = evolve(QubitState::symmetric(), hadamard(), 2);
  const Pmf p = pmf(w);
  EXPECT_NEAR(p.rho[0], 0.25, 1e-15);
  EXPECT_NEAR(p.rho[1], 0.5, 1e-15);
  EXPECT_NEAR(p.rho[2], 0.25, 1e-15);
}

TEST(Step, PreservesNormForRandomCoinsAndStates) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 30; ++trial) {
    const CoinSpec coin{angle(rng), angle(rng), angle(rng)};
    WaveField w = initial_field(oracle::random_qubit(rng));
    for (int t = 0; t < 1000; ++t) {
      const double before = w.norm();
      w = step(w, coin);
      ASSERT_NEAR(w.norm(), before, 1e-12) << "trial " << trial << " t " << t;
    }
    EXPECT_NEAR(w.norm(), 1.0, 1e-10);
  }
}

TEST(Evolve, ZeroStepsIsInitialField) {
  const QubitState q = QubitState::normalized(Complex(0.3, 0.1), Complex(-0.2, 0.9));
  const WaveField w = evolve(q, hadamard(), 0);
  EXPECT_EQ(w.psi0()[0], q.a());
  EXPECT_EQ(w.psi1()[0], q.b());
  EXPECT_THROW(evolve(q, hadamard(), -1), std::invalid_argument);
}

TEST(Evolve, MatchesRepeatedStep) {
  const QubitState q = QubitState::symmetric();
  const CoinSpec coin{0.4, -1.1, 0.7};
  WaveField w = initial_field(q);
  for (int t = 0; t < 40; ++t) w = step(w, coin);
  EXPECT_EQ(max_abs_difference(w, evolve(q, coin, 40)), 0.0);
}

TEST(Evolve, SupportEdges) {
  std::mt19937_64 rng(3);
  const QubitState q = oracle::random_qubit(rng);
  for (int t = 1; t <= 60; ++t) {
    const WaveField w = evolve(q, CoinSpec{0.2, 0.5, 0.9}, t);
    EXPECT_EQ(w.psi1()[0], Complex{}) << t;
    EXPECT_EQ(w.psi0()[static_cast<std::size_t>(t)], Complex{}) << t;
  }
}

TEST(Evolve, MatchesBruteForceOperatorPower) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 6; ++trial) {
    const CoinSpec coin = trial == 0 ? hadamard() : CoinSpec{angle(rng), angle(rng), angle(rng)};
    const CoinMatrix u = coin_matrix(coin);
    const Complex entries[2][2] = {{u[0][0], u[0][1]}, {u[1][0], u[1][1]}};
    const QubitState q = oracle::random_qubit(rng);
    for (int t = 0; t <= 12; ++t) {
      const auto state = oracle::brute_force_state(q.a(), q.b(), entries, t);
      const WaveField w = evolve(q, coin, t);
      const int sites = t + 2;
      for (int n = 0; n < sites; ++n) {
        const Complex e0 = n <= t ? w.psi0()[static_cast<std::size_t>(n)] : Complex{};
        const Complex e1 = n <= t ? w.psi1()[static_cast<std::size_t>(n)] : Complex{};
        EXPECT_NEAR(std::abs(state[oracle::basis_index(0, n, sites)] - e0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(state[oracle::basis_index(1, n, sites)] - e1), 0.0, 1e-12);
      }
    }
  }
}

TEST(Evolve, PlateauNearHalfway) {
  const Pmf p = pmf(evolve(QubitState::symmetric(), hadamard(), 100));
  const double plateau = 2.0 / (std::numbers::pi * 100);
  EXPECT_NEAR(p.rho[50] / plateau, 1.0, 0.05);
}

TEST(Pmf, Basics) {
  const Pmf p0 = pmf(evolve(QubitState(Complex(1.0), Complex{}), hadamard(), 0));
  ASSERT_EQ(p0.rho.size(), 1u);
  EXPECT_EQ(p0.rho[0], 1.0);

  const Pmf p1 = pmf(evolve(QubitState::symmetric(), hadamard(), 1));
  EXPECT_NEAR(p1.rho[0], 0.5, 1e-15);
  EXPECT_NEAR(p1.rho[1], 0.5, 1e-15);

  const Pmf p = pmf(evolve(QubitState::symmetric(), CoinSpec{1.0, 2.0, 0.3}, 500));
  EXPECT_NEAR(p.total, 1.0, 1e-10);
  for (double r : p.rho) EXPECT_GE(r, 0.0);
}

TEST(ToBidirectional, SmallCases) {
  const BidirectionalField b0 = to_bidirectional(initial_field(QubitState::symmetric()));
  EXPECT_EQ(b0.psi0(0), Complex(kInvSqrt2, 0.0));
  EXPECT_EQ(b0.psi1(0), Complex(0.0, kInvSqrt2));

  const WaveField w2 = evolve(QubitState::symmetric(), hadamard(), 2);
  const BidirectionalField b2 = to_bidirectional(w2);
  EXPECT_EQ(b2.psi0(0), w2.psi0()[1]);
  EXPECT_EQ(b2.psi1(0), w2.psi1()[1]);
  EXPECT_EQ(b2.psi0(-2), w2.psi0()[0]);
  EXPECT_EQ(b2.psi1(2), w2.psi1()[2]);
}

TEST(ToBidirectional, ReindexedPmfAndParity) {
  const WaveField w = evolve(QubitState::symmetric(), hadamard(), 100);
  const Pmf p = pmf(w);
  const BidirectionalField b = to_bidirectional(w);
  for (int n = 0; n <= 100; ++n) EXPECT_EQ(b.probability(2 * n - 100), p.rho[static_cast<std::size_t>(n)]);
  EXPECT_NEAR(b.total(), p.total, 1e-12);

  const BidirectionalField odd = to_bidirectional(evolve(QubitState::symmetric(), hadamard(), 37));
  for (int m = -37; m <= 37; ++m) {
    if ((m + 37) % 2 != 0) EXPECT_EQ(odd.probability(m), 0.0) << m;
  }
}

TEST(ToBidirectional, SymmetricStateGivesSymmetricPmf) {
  const BidirectionalField b = to_bidirectional(evolve(QubitState::symmetric(), hadamard(), 64));
  for (int m = 0; m <= 64; m += 2) EXPECT_NEAR(b.probability(m), b.probability(-m), 1e-14);
}

}  // namespace
}  // namespace uniwalk

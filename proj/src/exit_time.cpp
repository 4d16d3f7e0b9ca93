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

#include "uniwalk/exit_time.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "uniwalk/fft.hpp"
#include "uniwalk/spectral.hpp"

namespace uniwalk {
namespace {

void check_horizon(int n0, int tmax) {
  if (n0 < 1) throw std::invalid_argument("exit time: n0 must be at least 1");
  if (tmax < n0) throw std::invalid_argument("exit time: tmax must be at least n0");
}

ExitDistribution make_distribution(int n0, int tmax) {
  ExitDistribution d;
  d.n0 = n0;
  d.tmax = tmax;
  d.p_exit.assign(static_cast<std::size_t>(tmax - n0) + 1, 0.0);
  return d;
}

void set_survival_from_total(ExitDistribution& d) {
  d.survival = std::max(0.0, 1.0 - d.total());
}

// Sites 0..n0 only: psi1(n0, .) never depends on anything to the right of n0.
// When filter is set, site n0 is recorded and cleared from t = n0 on.
ExitDistribution windowed_walk(const QubitState& q, const CoinMatrix& u, int n0, int tmax,
                               bool filter) {
  ExitDistribution d = make_distribution(n0, tmax);
  const auto width = static_cast<std::size_t>(n0) + 1;
  std::vector<Complex> psi0(width), psi1(width);
  psi0[0] = q.a();
  psi1[0] = q.b();

  for (int t = 1; t <= tmax; ++t) {
    // In place, right to left, so psi(n - 1) is still at time t - 1 when read.
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(t), width - 1);
    for (std::size_t n = top + 1; n-- > 0;) {
      const Complex stay = (n < static_cast<std::size_t>(t))
                               ? u[0][0] * psi0[n] + u[0][1] * psi1[n]
                               : Complex{};
      const Complex move = (n > 0) ? u[1][0] * psi0[n - 1] + u[1][1] * psi1[n - 1] : Complex{};
      psi0[n] = stay;
      psi1[n] = move;
    }
    if (t >= n0) {
      d.p_exit[static_cast<std::size_t>(t - n0)] = std::norm(psi1[width - 1]);
      if (filter) {
        psi0[width - 1] = Complex{};
        psi1[width - 1] = Complex{};
      }
    }
  }

  if (filter) {
    double remaining = 0.0;
    for (std::size_t n = 0; n < width; ++n) remaining += std::norm(psi0[n]) + std::norm(psi1[n]);
    d.survival = remaining;
  } else {
    set_survival_from_total(d);
  }
  return d;
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double ExitDistribution::at(int t) const {
  if (t < n0 || t > tmax) return 0.0;
  return p_exit[static_cast<std::size_t>(t - n0)];
}

double ExitDistribution::total() const {
  return std::accumulate(p_exit.begin(), p_exit.end(), 0.0);
}

ExitDistribution exit_pmf_closed(const QubitState& q, int n0, int tmax, ExitRoute route) {
  check_horizon(n0, tmax);
  if (route == ExitRoute::automatic || route == ExitRoute::direct) {
    return windowed_walk(q, coin_matrix(hadamard()), n0, tmax, /*filter=*/false);
  }

  const int N = static_cast<int>(fft::transform_length_for(tmax));
  const spectral::SiteHistory history = spectral::site_history(q, n0, tmax, N);
  ExitDistribution d = make_distribution(n0, tmax);
  for (int t = n0; t <= tmax; ++t) {
    d.p_exit[static_cast<std::size_t>(t - n0)] = std::norm(history.psi1[static_cast<std::size_t>(t)]);
  }
  set_survival_from_total(d);
  return d;
}

ExitDistribution exit_pmf_filtered(const QubitState& q, const CoinSpec& coin, int n0, int tmax) {
  check_horizon(n0, tmax);
  return windowed_walk(q, coin_matrix(coin), n0, tmax, /*filter=*/true);
}

ExitDistribution classical_exit_pmf(int n0, double p, int tmax) {
  check_horizon(n0, tmax);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("classical_exit_pmf: p must lie in (0, 1)");
  }
  ExitDistribution d = make_distribution(n0, tmax);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  for (int t = n0; t <= tmax; ++t) {
    const double log_mass = log_choose(t - 1, t - n0) + n0 * log_p + (t - n0) * log_q;
    d.p_exit[static_cast<std::size_t>(t - n0)] = std::exp(log_mass);
  }
  set_survival_from_total(d);
  return d;
}

std::vector<int> envelope_times(const ExitDistribution& d, int t_lo, int t_hi, Envelope envelope) {
  if (t_lo < d.n0 || t_hi > d.tmax || t_lo >= t_hi) {
    throw std::invalid_argument("envelope_times: need n0 <= t_lo < t_hi <= tmax");
  }
  std::vector<int> times;
  for (int t = t_lo; t <= t_hi; ++t) {
    const double p = d.at(t);
    if (!(p > 0.0)) continue;
    if (envelope == Envelope::raw) {
      times.push_back(t);
      continue;
    }
    if (t - 1 < d.n0 || t + 1 > d.tmax) continue;
    const double before = d.at(t - 1);
    const double after = d.at(t + 1);
    // Strict on the left so a flat pair counts once.
    const bool keep = envelope == Envelope::upper ? (p > before && p >= after)
                                                  : (p < before && p <= after);
    if (keep) times.push_back(t);
  }
  return times;
}

TailFit tail_exponent_fit(const ExitDistribution& d, int t_lo, int t_hi, Envelope envelope) {
  const std::vector<int> times = envelope_times(d, t_lo, t_hi, envelope);
  if (static_cast<int>(times.size()) < kMinFitPoints) {
    throw std::invalid_argument("tail_exponent_fit: only " + std::to_string(times.size()) +
                                " points in [" + std::to_string(t_lo) + ", " +
                                std::to_string(t_hi) + "], need " + std::to_string(kMinFitPoints));
  }
  const double count = static_cast<double>(times.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (int t : times) {
    mean_x += std::log(static_cast<double>(t));
    mean_y += std::log(d.at(t));
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (int t : times) {
    const double dx = std::log(static_cast<double>(t)) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(d.at(t)) - mean_y);
  }

  TailFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = mean_y - fit.exponent * mean_x;
  fit.points = static_cast<int>(times.size());
  double sse = 0.0;
  for (int t : times) {
    const double r = std::log(d.at(t)) - (fit.intercept + fit.exponent * std::log(static_cast<double>(t)));
    sse += r * r;
  }
  fit.residual_rms = std::sqrt(sse / count);
  return fit;
}

}  // namespace uniwalk

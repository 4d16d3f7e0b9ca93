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

#include "uniwalk/fft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uniwalk::fft {
namespace {

// exp(sign * 2 pi i k / n) with the argument reduced exactly before the
// trigonometric call.
Complex unit_root(long long k, long long n, int sign) {
  k %= n;
  if (k < 0) k += n;
  return std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n));
}

std::vector<Complex> naive(std::span<const Complex> in, int sign) {
  const auto n = static_cast<long long>(in.size());
  std::vector<Complex> out(in.size());
  for (long long r = 0; r < n; ++r) {
    Complex acc{};
    for (long long k = 0; k < n; ++k) acc += in[static_cast<std::size_t>(k)] * unit_root(r * k, n, sign);
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

void radix2(std::span<Complex> a, int sign) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: length must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<Complex> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = unit_root(static_cast<long long>(k), static_cast<long long>(n), sign);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * twiddle[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> f) { return naive(f, +1); }

std::vector<Complex> idft(std::span<const Complex> spectrum) {
  auto out = naive(spectrum, -1);
  const double scale = 1.0 / static_cast<double>(spectrum.size());
  for (auto& z : out) z *= scale;
  return out;
}

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

std::size_t transform_length_for(int t) {
  if (t < 0) throw std::invalid_argument("transform_length_for: negative time step");
  return std::max<std::size_t>(2, std::bit_ceil(static_cast<std::size_t>(t) + 1));
}

void forward(std::span<Complex> data) { radix2(data, +1); }

void inverse(std::span<Complex> data) {
  radix2(data, -1);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
}

}  // namespace uniwalk::fft

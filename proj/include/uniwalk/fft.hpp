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

#include <span>
#include <vector>

#include "uniwalk/walk_core.hpp"

namespace uniwalk::fft {

// Sign convention used throughout the library:
//   forward  F(r) = sum_n f(n) exp(+2 pi i r n / N)
//   inverse  f(n) = (1/N) sum_r F(r) exp(-2 pi i r n / N)

/// Direct O(N^2) transforms, any length N >= 1.
std::vector<Complex> dft(std::span<const Complex> f);
std::vector<Complex> idft(std::span<const Complex> spectrum);

bool is_power_of_two(std::size_t n);

/// Smallest power of two strictly greater than t (at least 2).
std::size_t transform_length_for(int t);

/// In-place radix-2 decimation-in-time transforms. Length must be a power of two.
void forward(std::span<Complex> data);
void inverse(std::span<Complex> data);

}  // namespace uniwalk::fft

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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uniwalk/exit_time.hpp"
#include "uniwalk/walk_core.hpp"

namespace uniwalk::cli {

enum class Command { pmf, exit, bounds, compare, fitexit };
enum class Method { direct, dft, fft, approx };
enum class CoinKind { hadamard, general };
enum class QuantumExitRoute { automatic, direct, spectral, filtered };

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kIncompatibleOptions = 3,
  kToleranceBreach = 4,
};

struct RunConfig {
  Command command = Command::pmf;
  int t = 30;
  int n0 = 100;
  int tmax = 1000;
  double a_re = 0.70710678118654752;
  double a_im = 0.0;
  double b_re = 0.0;
  double b_im = 0.70710678118654752;
  bool normalize = false;
  std::optional<unsigned long long> seed;  ///< draws a random qubit state when set
  CoinKind coin = CoinKind::hadamard;
  double alpha = 0.0;
  double beta = 0.0;
  double phi = 0.0;
  Method method = Method::direct;
  std::optional<int> transform_length;  ///< N for method dft; default t + 1
  QuantumExitRoute exit_route = QuantumExitRoute::automatic;
  double p = 0.5;                        ///< classical move probability
  std::optional<int> t_lo;
  std::optional<int> t_hi;
  int points = 201;                      ///< nu samples for bounds
  std::string output_path;               ///< empty: standard output
};

inline constexpr double kCompareTolerance = 1e-9;
inline constexpr double kQubitTolerance = 1e-9;

/// Parses argv-style arguments (without the program name) and runs the
/// selected command. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Individual commands on an already-parsed configuration.
int cmd_pmf(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_exit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fitexit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Shortest decimal that reads back to the same double.
std::string format_real(double x);

}  // namespace uniwalk::cli

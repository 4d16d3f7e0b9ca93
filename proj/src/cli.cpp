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

#include "uniwalk/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "uniwalk/asymptotics.hpp"
#include "uniwalk/evolution.hpp"
#include "uniwalk/fft.hpp"
#include "uniwalk/spectral.hpp"

namespace uniwalk::cli {
namespace {

// Thrown for invalid option values; maps to kConfigError.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for option combinations that are individually valid; maps to kIncompatibleOptions.
struct IncompatibleOptions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QubitState qubit_from(const RunConfig& cfg) {
  if (cfg.seed) {
    std::mt19937_64 rng(*cfg.seed);
    std::normal_distribution<double> gauss;
    const Complex a(gauss(rng), gauss(rng));
    const Complex b(gauss(rng), gauss(rng));
    return QubitState::normalized(a, b);
  }
  const Complex a(cfg.a_re, cfg.a_im);
  const Complex b(cfg.b_re, cfg.b_im);
  if (!cfg.normalize) {
    const double norm = std::norm(a) + std::norm(b);
    if (!(std::abs(norm - 1.0) <= kQubitTolerance)) {
      throw ConfigError("|a|^2 + |b|^2 = " + format_real(norm) +
                        " is not 1 (pass --normalize to rescale)");
    }
  }
  try {
    return QubitState::normalized(a, b);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

CoinSpec coin_from(const RunConfig& cfg) {
  if (cfg.coin == CoinKind::hadamard) return hadamard();
  return CoinSpec{cfg.alpha, cfg.beta, cfg.phi};
}

void require_hadamard(const RunConfig& cfg, const std::string& what) {
  if (cfg.coin != CoinKind::hadamard) {
    throw IncompatibleOptions(what + " requires the hadamard coin");
  }
}

void require_time(const RunConfig& cfg) {
  if (cfg.t < 0) throw ConfigError("--t must be nonnegative");
}

void require_exit_horizon(const RunConfig& cfg) {
  if (cfg.n0 < 1) throw ConfigError("--n0 must be at least 1");
  if (cfg.tmax < cfg.n0) throw ConfigError("--tmax must be at least --n0");
}

std::string optional_real(const std::optional<double>& x) { return x ? format_real(*x) : ""; }

template <typename F>
double elapsed_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Opens --output if given; otherwise forwards to the caller's stream.
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IncompatibleOptions& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatibleOptions;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int cmd_pmf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_time(cfg);
    if (cfg.method != Method::direct) require_hadamard(cfg, "method dft/fft/approx");
    const QubitState q = qubit_from(cfg);

    WaveField field(0);
    switch (cfg.method) {
      case Method::direct:
      case Method::approx:
        field = evolve(q, coin_from(cfg), cfg.t);
        break;
      case Method::dft: {
        const int N = cfg.transform_length.value_or(cfg.t + 1);
        if (N <= cfg.t) throw ConfigError("--transform-length must exceed --t");
        field = spectral::closed_form_field(q, cfg.t, N);
        break;
      }
      case Method::fft:
        field = spectral::fft_field(q, cfg.t);
        break;
    }

    OutputSink sink(cfg.output_path, out);
    std::ostream& os = sink.get();
    const bool approx = cfg.method == Method::approx;
    os << "n,rho,psi0_re,psi0_im,psi1_re,psi1_im";
    if (approx) os << ",rho_bar,rho_min,rho_max";
    os << '\n';
    const Pmf density = pmf(field);
    for (int n = 0; n <= cfg.t; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const Complex p0 = field.psi0()[i];
      const Complex p1 = field.psi1()[i];
      os << n << ',' << format_real(density.rho[i]) << ',' << format_real(p0.real()) << ','
         << format_real(p0.imag()) << ',' << format_real(p1.real()) << ',' << format_real(p1.imag());
      if (approx) {
        const double nu = cfg.t > 0 ? static_cast<double>(n) / cfg.t : 0.0;
        if (cfg.t > 0 && asymptotics::in_validity_interval(nu)) {
          const auto env = asymptotics::rho_envelopes(nu, cfg.t);
          os << ',' << format_real(asymptotics::rho_bar(nu, cfg.t)) << ','
             << format_real(env.rho_min) << ',' << format_real(env.rho_max);
        } else {
          os << ",,,";
        }
      }
      os << '\n';
    }
    return static_cast<int>(kSuccess);
  });
}

int cmd_exit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_exit_horizon(cfg);
    if (cfg.exit_route != QuantumExitRoute::filtered) {
      require_hadamard(cfg, "closed-form exit route (use --exit-route filtered)");
    }
    if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw ConfigError("--p must lie in (0, 1)");
    const QubitState q = qubit_from(cfg);

    ExitDistribution quantum;
    switch (cfg.exit_route) {
      case QuantumExitRoute::automatic:
        quantum = exit_pmf_closed(q, cfg.n0, cfg.tmax, ExitRoute::automatic);
        break;
      case QuantumExitRoute::direct:
        quantum = exit_pmf_closed(q, cfg.n0, cfg.tmax, ExitRoute::direct);
        break;
      case QuantumExitRoute::spectral:
        quantum = exit_pmf_closed(q, cfg.n0, cfg.tmax, ExitRoute::spectral);
        break;
      case QuantumExitRoute::filtered:
        quantum = exit_pmf_filtered(q, coin_from(cfg), cfg.n0, cfg.tmax);
        break;
    }
    const ExitDistribution classical = classical_exit_pmf(cfg.n0, cfg.p, cfg.tmax);

    OutputSink sink(cfg.output_path, out);
    std::ostream& os = sink.get();
    os << "t,p_quantum,p_classical,lower_bound,heuristic\n";
    for (int t = cfg.n0; t <= cfg.tmax; ++t) {
      const std::string heuristic = t >= 2 * cfg.n0 ? format_real(asymptotics::exit_heuristic(cfg.n0, t)) : "";
      os << t << ',' << format_real(quantum.at(t)) << ',' << format_real(classical.at(t)) << ','
         << optional_real(asymptotics::exit_lower_bound(cfg.n0, t)) << ','
         << heuristic << '\n';
    }
    err << "# survival_quantum=" << format_real(quantum.survival)
        << " survival_classical=" << format_real(classical.survival) << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.t < 1) throw ConfigError("--t must be at least 1 for bounds");
    if (cfg.points < 2) throw ConfigError("--points must be at least 2");
    const auto iv = asymptotics::validity_interval();

    OutputSink sink(cfg.output_path, out);
    std::ostream& os = sink.get();
    os << "nu,n,rho_bar,rho_min,rho_max\n";
    // Interior grid: both endpoints excluded.
    for (int k = 1; k <= cfg.points; ++k) {
      const double nu = iv.lo + (iv.hi - iv.lo) * k / (cfg.points + 1);
      const auto env = asymptotics::rho_envelopes(nu, cfg.t);
      os << format_real(nu) << ',' << format_real(nu * cfg.t) << ','
         << format_real(asymptotics::rho_bar(nu, cfg.t)) << ',' << format_real(env.rho_min) << ','
         << format_real(env.rho_max) << '\n';
    }
    return static_cast<int>(kSuccess);
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_time(cfg);
    require_hadamard(cfg, "compare");
    const QubitState q = qubit_from(cfg);

    WaveField direct(0), dft(0), fast(0);
    const double t_direct = elapsed_ms([&] { direct = evolve(q, hadamard(), cfg.t); });
    const double t_dft = elapsed_ms([&] { dft = spectral::closed_form_field(q, cfg.t); });
    const double t_fft = elapsed_ms([&] { fast = spectral::fft_field(q, cfg.t); });

    const double d_dft = max_abs_difference(direct, dft);
    const double d_fft = max_abs_difference(direct, fast);
    const double d_pair = max_abs_difference(dft, fast);
    const double worst = std::max({d_dft, d_fft, d_pair});

    out << "t=" << cfg.t << " a=" << format_real(q.a().real()) << (q.a().imag() < 0 ? "" : "+")
        << format_real(q.a().imag()) << "i b=" << format_real(q.b().real())
        << (q.b().imag() < 0 ? "" : "+") << format_real(q.b().imag()) << "i\n";
    out << "direct vs dft (N=" << cfg.t + 1 << "): " << format_real(d_dft) << '\n';
    out << "direct vs fft (N=" << fft::transform_length_for(cfg.t) << "): " << format_real(d_fft)
        << '\n';
    out << "dft vs fft: " << format_real(d_pair) << '\n';
    out << "time_ms direct=" << t_direct << " dft=" << t_dft << " fft=" << t_fft << '\n';
    const bool pass = worst < kCompareTolerance;
    out << (pass ? "PASS" : "FAIL") << " (tolerance " << format_real(kCompareTolerance) << ")\n";
    return static_cast<int>(pass ? kSuccess : kToleranceBreach);
  });
}

int cmd_fitexit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_exit_horizon(cfg);
    require_hadamard(cfg, "fitexit");
    const QubitState q = qubit_from(cfg);
    const int t_lo = cfg.t_lo.value_or(std::max(cfg.n0, static_cast<int>(2.2 * cfg.n0)));
    const int t_hi = cfg.t_hi.value_or(std::min(cfg.tmax, static_cast<int>(6.5 * cfg.n0)));
    if (!(cfg.n0 <= t_lo && t_lo < t_hi && t_hi <= cfg.tmax)) {
      throw ConfigError("need n0 <= t-lo < t-hi <= tmax");
    }
    const ExitDistribution d = exit_pmf_closed(q, cfg.n0, cfg.tmax);

    OutputSink sink(cfg.output_path, out);
    std::ostream& os = sink.get();
    os << "envelope,exponent,intercept,residual_rms,points\n";
    const std::pair<const char*, Envelope> kinds[] = {
        {"upper", Envelope::upper}, {"lower", Envelope::lower}, {"raw", Envelope::raw}};
    for (const auto& [name, kind] : kinds) {
      os << name << ',';
      try {
        const TailFit fit = tail_exponent_fit(d, t_lo, t_hi, kind);
        os << format_real(fit.exponent) << ',' << format_real(fit.intercept) << ','
           << format_real(fit.residual_rms) << ',' << fit.points << '\n';
      } catch (const std::invalid_argument&) {
        os << ",,,0\n";
      }
    }
    return static_cast<int>(kSuccess);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unidirectional Hadamard quantum walk: PMFs, exit times and cross-checks", "uniwalk"};
  RunConfig cfg;

  const std::map<std::string, Command> commands{{"pmf", Command::pmf},
                                                {"exit", Command::exit},
                                                {"bounds", Command::bounds},
                                                {"compare", Command::compare},
                                                {"fitexit", Command::fitexit}};
  const std::map<std::string, Method> methods{
      {"direct", Method::direct}, {"dft", Method::dft}, {"fft", Method::fft}, {"approx", Method::approx}};
  const std::map<std::string, CoinKind> coins{{"hadamard", CoinKind::hadamard},
                                              {"general", CoinKind::general}};
  const std::map<std::string, QuantumExitRoute> routes{{"auto", QuantumExitRoute::automatic},
                                                       {"direct", QuantumExitRoute::direct},
                                                       {"spectral", QuantumExitRoute::spectral},
                                                       {"filtered", QuantumExitRoute::filtered}};

  app.add_option("command", cfg.command, "pmf | exit | bounds | compare | fitexit")
      ->required()
      ->transform(CLI::CheckedTransformer(commands));
  app.add_option("--t,--steps", cfg.t, "Time step");
  app.add_option("--n0", cfg.n0, "Exit threshold site");
  app.add_option("--tmax", cfg.tmax, "Last exit time reported");
  app.add_option("--a-re", cfg.a_re);
  app.add_option("--a-im", cfg.a_im);
  app.add_option("--b-re", cfg.b_re);
  app.add_option("--b-im", cfg.b_im);
  app.add_flag("--normalize", cfg.normalize, "Rescale (a, b) to unit norm");
  app.add_option("--seed", cfg.seed, "Use a random initial coin state from this seed");
  app.add_option("--coin", cfg.coin, "hadamard | general")->transform(CLI::CheckedTransformer(coins));
  app.add_option("--alpha", cfg.alpha);
  app.add_option("--beta", cfg.beta);
  app.add_option("--phi", cfg.phi);
  app.add_option("--method", cfg.method, "direct | dft | fft | approx")
      ->transform(CLI::CheckedTransformer(methods));
  app.add_option("--transform-length", cfg.transform_length, "N for --method dft (default t+1)");
  app.add_option("--exit-route", cfg.exit_route, "auto | direct | spectral | filtered")
      ->transform(CLI::CheckedTransformer(routes));
  app.add_option("--p", cfg.p, "Classical move probability");
  app.add_option("--t-lo", cfg.t_lo);
  app.add_option("--t-hi", cfg.t_hi);
  app.add_option("--points", cfg.points, "Samples for bounds");
  app.add_option("-o,--output", cfg.output_path, "Write CSV here instead of stdout");
  app.set_config("--config", "", "Flat key=value file with option defaults");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kSuccess) : static_cast<int>(kConfigError);
  }

  switch (cfg.command) {
    case Command::pmf:
      return cmd_pmf(cfg, out, err);
    case Command::exit:
      return cmd_exit(cfg, out, err);
    case Command::bounds:
      return cmd_bounds(cfg, out, err);
    case Command::compare:
      return cmd_compare(cfg, out, err);
    case Command::fitexit:
      return cmd_fitexit(cfg, out, err);
  }
  return kConfigError;
}

}  // namespace uniwalk::cli

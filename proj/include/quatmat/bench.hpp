#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/inversion.hpp"
#include "quatmat/metrics.hpp"
#include "quatmat/random.hpp"

namespace quatmat {

/// Sweep configuration. The library default follows the full protocol
/// (50 trials); the command-line front end substitutes its own desk-scale
/// defaults (sizes 100..1000, 10 trials).
struct BenchConfig {
  std::vector<std::size_t> sizes;
  int trials = 50;
  std::vector<int> algorithms = {1, 2, 3, 4, 5, 6};
  std::uint64_t seed = 0;
  bool count_flops = false;
  bool warmup = true;
};

inline void validate(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw UsageError("bench: no sizes given");
  for (std::size_t n : cfg.sizes) {
    if (n < 1) throw UsageError("bench: sizes must be >= 1");
  }
  if (cfg.trials < 1) throw UsageError("bench: trials must be >= 1");
  if (cfg.algorithms.empty()) throw UsageError("bench: no algorithms selected");
  for (int a : cfg.algorithms) algorithm_from_code(a);  // throws on bad ids
}

inline constexpr const char* kCsvHeader =
    "alg,n,trial,seed,wall_time_s,residual,real_mults,real_adds,real_divs";

inline std::string csv_row(const BenchmarkRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%d,%zu,%d,%llu,%.9e,%.17g,%llu,%llu,%llu", r.alg, r.n, r.trial,
                static_cast<unsigned long long>(r.seed), r.wall_time_s, r.residual,
                static_cast<unsigned long long>(r.flops.real_mults),
                static_cast<unsigned long long>(r.flops.real_adds),
                static_cast<unsigned long long>(r.flops.real_divs));
  return buf;
}

/// Runs the sweep serially: for each (n, trial) a fresh seeded matrix, each
/// selected algorithm timed around the inversion call only, then residual-
/// checked outside the timer. With counting enabled every timed run is
/// followed by a separate instrumented run so the tally never distorts the
/// clock. Non-generic draws never abort the sweep; they produce rows with a
/// NaN residual and zero flop columns.
inline std::vector<BenchmarkRecord> run_bench(const BenchConfig& cfg,
                                              std::ostream* csv_sink = nullptr,
                                              std::ostream* log = nullptr) {
  validate(cfg);
  using clock = std::chrono::steady_clock;
  std::vector<BenchmarkRecord> records;
  records.reserve(cfg.sizes.size() * static_cast<std::size_t>(cfg.trials) *
                  cfg.algorithms.size());
  if (csv_sink != nullptr) *csv_sink << kCsvHeader << '\n';

  if (cfg.warmup) {
    const QuatMatrix w = random_quat_matrix(32, splitmix64_at(cfg.seed, 0xbeef));
    for (int a : cfg.algorithms) {
      try {
        (void)invert_with(algorithm_from_code(a), w);
      } catch (const Error&) {
      }
    }
  }

  for (std::size_t n : cfg.sizes) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const std::uint64_t seed = trial_seed(cfg.seed, n, trial);
      const QuatMatrix z = random_quat_matrix(n, seed);
      for (int a : cfg.algorithms) {
        const Algorithm alg = algorithm_from_code(a);
        BenchmarkRecord rec;
        rec.alg = a;
        rec.n = n;
        rec.trial = trial;
        rec.seed = seed;
        const auto t0 = clock::now();
        try {
          const InversionReport rep = invert_with(alg, z);
          rec.wall_time_s = std::chrono::duration<double>(clock::now() - t0).count();
          rec.residual = right_residual(z, rep.inverse);
          if (cfg.count_flops) {
            FlopCounter fc;
            (void)invert_with(alg, z, &fc);
            rec.flops = std::move(fc);
          }
        } catch (const Error& e) {
          rec.wall_time_s = std::chrono::duration<double>(clock::now() - t0).count();
          rec.failed = true;
          rec.failure_reason = e.what();
          rec.residual = std::numeric_limits<double>::quiet_NaN();
          if (log != nullptr) {
            *log << "# trial failed: alg=" << a << " n=" << n << " trial=" << trial
                 << ": " << e.what() << '\n';
          }
        }
        if (csv_sink != nullptr) *csv_sink << csv_row(rec) << '\n';
        records.push_back(std::move(rec));
      }
      if (log != nullptr) {
        *log << "n=" << n << " trial=" << trial + 1 << "/" << cfg.trials << " done\n";
      }
    }
  }
  return records;
}

inline void write_csv(const std::string& path,
                      const std::vector<BenchmarkRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("write_csv: cannot open '" + path + "'");
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
  if (!out) throw IoError("write_csv: short write to '" + path + "'");
}

inline std::vector<BenchmarkRecord> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("read_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw IoError("read_csv: '" + path + "' does not carry the expected header");
  }
  std::vector<BenchmarkRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    BenchmarkRecord r;
    unsigned long long seed = 0, mults = 0, adds = 0, divs = 0;
    std::size_t n = 0;
    if (std::sscanf(line.c_str(), "%d,%zu,%d,%llu,%lf,%lf,%llu,%llu,%llu", &r.alg, &n,
                    &r.trial, &seed, &r.wall_time_s, &r.residual, &mults, &adds,
                    &divs) != 9) {
      throw IoError("read_csv: malformed row at line " + std::to_string(lineno) +
                    " of '" + path + "'");
    }
    r.n = n;
    r.seed = seed;
    r.flops.real_mults = mults;
    r.flops.real_adds = adds;
    r.flops.real_divs = divs;
    r.failed = std::isnan(r.residual);
    records.push_back(std::move(r));
  }
  return records;
}

inline void print_summary(std::ostream& out,
                          const std::vector<BenchmarkRecord>& records) {
  const BenchSummary s = summarize(records);
  out << "mean wall time (s) by n, algorithm:\n";
  for (const auto& [n, by_alg] : s.mean_time) {
    out << "  n=" << n << ":";
    for (const auto& [alg, t] : by_alg) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "  alg%d=%.4e", alg, t);
      out << buf;
    }
    out << '\n';
  }
  bool have_baseline = true;
  try {
    const auto ratios = timing_ratio(records);
    out << "timing ratios r_{n,s} (skew-real baseline over algorithm s):\n";
    for (const auto& [n, by_alg] : ratios) {
      out << "  n=" << n << ":";
      for (const auto& [alg, r] : by_alg) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  r%d=%.3f", alg, r);
        out << buf;
      }
      out << '\n';
    }
  } catch (const UsageError&) {
    have_baseline = false;
  }
  if (!have_baseline) {
    out << "timing ratios skipped: no skew-real baseline in the sweep\n";
  }
  out << "mean right residual by n, algorithm:\n";
  for (const auto& [n, by_alg] : s.mean_residual) {
    out << "  n=" << n << ":";
    for (const auto& [alg, r] : by_alg) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "  alg%d=%.3e", alg, r);
      out << buf;
    }
    out << '\n';
  }
  for (const auto& [n, by_alg] : s.failure_count) {
    for (const auto& [alg, count] : by_alg) {
      out << "  failures: n=" << n << " alg=" << alg << " count=" << count << '\n';
    }
  }
}

}  // namespace quatmat

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/flops.hpp"
#include "quatmat/inversion.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

/// Leading n^3 coefficients of total real flops per algorithm, lower-order
/// terms dropped. One flop is one real multiplication, addition or division;
/// a full LU inverse or fused solve is modelled at (4/3)n^3 mults plus as
/// many adds, a real n x n product at n^3 of each.
///
/// The schur_recursive coefficient is the method's nominal figure, which
/// treats each level's six half-size products as three full-size ones. Its
/// instrumented arithmetic actually telescopes to about 32 n^3 (one
/// full-size quaternion product's worth); verify_counts reports that gap
/// rather than hiding it.
struct ComplexityModel {
  // indexed by algorithm code - 1
  std::array<double, 6> coefficients = {
      136.0 / 3.0,  // complex_frobenius: 2*(32/3) + 3*8
      110.0 / 3.0,  // real_frobenius:    4*(8/3) + 13*2
      256.0 / 3.0,  // complex_adjoint:   (4/3)*(2n)^3*8 / n^3
      512.0 / 3.0,  // real_adjoint:      (4/3)*(4n)^3*2 / n^3
      128.0 / 3.0,  // skew_real:         4*(8/3) + 16*2
      128.0,        // schur_recursive:   nominal (see above)
  };

  double coefficient(Algorithm alg) const {
    return coefficients[static_cast<std::size_t>(algorithm_code(alg)) - 1];
  }

  double predict(Algorithm alg, std::size_t n) const {
    if (n < 1) throw UsageError("predict_flops: n must be >= 1");
    const double dn = static_cast<double>(n);
    return coefficient(alg) * dn * dn * dn;
  }
};

inline double predict_flops(Algorithm alg, std::size_t n,
                            const ComplexityModel& model = ComplexityModel{}) {
  return model.predict(alg, n);
}

/// Mean right residual ||Z * Zhat - I||_F / n^2. Never counted as flops.
inline double right_residual(const QuatMatrix& z, const QuatMatrix& zhat) {
  detail::require_square(z.rows(), z.cols(), "right_residual");
  detail::require_same_shape(z.rows(), z.cols(), zhat.rows(), zhat.cols(),
                             "right_residual");
  QuatMatrix prod = mat_mul(z, zhat);
  const std::size_t n = z.rows();
  for (std::size_t i = 0; i < n; ++i) prod.a(i, i) -= 1.0;
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return frobenius_norm(prod) / nn;
}

/// One benchmark row: a single (algorithm, size, trial) inversion.
struct BenchmarkRecord {
  int alg = 0;  // 1..6
  std::size_t n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  double residual = 0.0;  // NaN flags a failed (non-generic) inversion
  FlopCounter flops;
  bool failed = false;
  std::string failure_reason;
};

struct BenchSummary {
  // keyed by n, then algorithm code
  std::map<std::size_t, std::map<int, double>> mean_time;
  std::map<std::size_t, std::map<int, double>> mean_residual;
  std::map<std::size_t, std::map<int, std::size_t>> failure_count;
};

inline BenchSummary summarize(const std::vector<BenchmarkRecord>& records) {
  BenchSummary s;
  std::map<std::size_t, std::map<int, std::size_t>> ok_count;
  for (const auto& r : records) {
    if (r.failed) {
      s.failure_count[r.n][r.alg] += 1;
      continue;
    }
    s.mean_time[r.n][r.alg] += r.wall_time_s;
    s.mean_residual[r.n][r.alg] += r.residual;
    ok_count[r.n][r.alg] += 1;
  }
  for (auto& [n, by_alg] : s.mean_time) {
    for (auto& [alg, total] : by_alg) total /= static_cast<double>(ok_count[n][alg]);
  }
  for (auto& [n, by_alg] : s.mean_residual) {
    for (auto& [alg, total] : by_alg) total /= static_cast<double>(ok_count[n][alg]);
  }
  return s;
}

/// Timing ratios r_{n,s} = t_{n,5} / t_{n,s} for s in {1,2,3,4,6}: the mean
/// wall time of the skew-real baseline over that of algorithm s. Larger
/// means s is faster. Every size present must carry baseline timings.
inline std::map<std::size_t, std::map<int, double>> timing_ratio(
    const std::vector<BenchmarkRecord>& records) {
  const BenchSummary s = summarize(records);
  std::map<std::size_t, std::map<int, double>> out;
  for (const auto& [n, by_alg] : s.mean_time) {
    const auto base = by_alg.find(5);
    if (base == by_alg.end()) {
      throw UsageError("timing_ratio: no skew-real (algorithm 5) baseline timings "
                       "for n = " +
                       std::to_string(n));
    }
    for (const auto& [alg, t] : by_alg) {
      if (alg == 5) continue;
      out[n][alg] = base->second / t;
    }
  }
  return out;
}

/// Relative deviation of an instrumented run's total real flops from the
/// model's prediction: |measured - predicted| / predicted.
inline double verify_counts(const BenchmarkRecord& record,
                            const ComplexityModel& model = ComplexityModel{}) {
  const double predicted = model.predict(algorithm_from_code(record.alg), record.n);
  const double measured = static_cast<double>(record.flops.total_real_flops());
  return std::abs(measured - predicted) / predicted;
}

}  // namespace quatmat

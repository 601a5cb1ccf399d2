#pragma once

#include <cfloat>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/flops.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

// A pivot is declared singular when |pivot| < 1e2 * eps * (max |entry| of the
// active part of its row). The scaled threshold separates structural
// singularity from mere underflow of well-scaled data.
inline constexpr double kPivotRelTol = 100.0 * std::numeric_limits<double>::epsilon();

/// Partial-pivoting LU factors of a real square matrix.
/// Row i of P*A is row perm[i] of A; the unit-lower and upper triangles
/// share one combined storage matrix.
struct RealLU {
  RealMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;                 // parity of the permutation
  double min_pivot = 0.0;       // smallest |pivot| accepted
  std::size_t min_pivot_index = 0;

  std::size_t order() const { return lu.rows(); }

  RealMatrix unpack_lower() const {
    const std::size_t n = order();
    RealMatrix l = RealMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
    }
    return l;
  }

  RealMatrix unpack_upper() const {
    const std::size_t n = order();
    RealMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) u(i, j) = lu(i, j);
    }
    return u;
  }

  /// Returns P*X, i.e. X with its rows permuted like the factored input.
  RealMatrix apply_perm_rows(const RealMatrix& x) const {
    RealMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(perm[i], j);
    }
    return out;
  }
};

/// Partial-pivoting LU factors of a complex square matrix.
struct ComplexLU {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  double min_pivot = 0.0;  // smallest pivot modulus accepted
  std::size_t min_pivot_index = 0;

  std::size_t order() const { return lu.rows(); }
};

// ---------------------------------------------------------------------------
// Real LU
// ---------------------------------------------------------------------------

inline RealLU lu_factor(const RealMatrix& x, FlopCounter* fc = nullptr) {
  detail::require_square(x.rows(), x.cols(), "lu_factor");
  const std::size_t n = x.rows();
  RealLU f;
  f.lu = x;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  f.min_pivot = std::numeric_limits<double>::infinity();

  std::uint64_t mults = 0, adds = 0, divs = 0;
  RealMatrix& w = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(w(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const double pivot = w(k, k);
    double row_max = 0.0;
    for (std::size_t j = k; j < n; ++j) row_max = std::max(row_max, std::abs(w(k, j)));
    if (!(std::abs(pivot) >= kPivotRelTol * row_max) || row_max == 0.0) {
      throw SingularMatrixError("singular matrix: pivot " + std::to_string(k) +
                                    " has magnitude " + std::to_string(std::abs(pivot)),
                                k, std::abs(pivot));
    }
    if (std::abs(pivot) < f.min_pivot) {
      f.min_pivot = std::abs(pivot);
      f.min_pivot_index = k;
    }
    const std::size_t r = n - k - 1;
    if (r == 0) continue;
    const double inv_pivot = 1.0 / pivot;
    ++divs;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = w(i, k) * inv_pivot;
      w(i, k) = m;
      double* wi = w.row(i);
      const double* wk = w.row(k);
      for (std::size_t j = k + 1; j < n; ++j) wi[j] -= m * wk[j];
    }
    mults += r + r * r;
    adds += r * r;
  }
  if (fc != nullptr) fc->add(mults, adds, divs);
  return f;
}

/// Triangular solves of (LU) X = P * rhs for a full right-hand-side matrix.
/// The right-hand side is treated as dense; no zero structure is exploited.
inline RealMatrix lu_apply(const RealLU& f, const RealMatrix& rhs,
                           FlopCounter* fc = nullptr) {
  const std::size_t n = f.order();
  detail::require_inner(n, rhs.rows(), "lu_apply");
  const std::size_t m = rhs.cols();
  RealMatrix x = f.apply_perm_rows(rhs);
  const RealMatrix& w = f.lu;

  // forward: L y = P rhs, unit lower triangle
  for (std::size_t k = 0; k < n; ++k) {
    const double* xk = x.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = w(i, k);
      double* xi = x.row(i);
      for (std::size_t j = 0; j < m; ++j) xi[j] -= l * xk[j];
    }
  }
  // backward: U x = y
  std::uint64_t divs = 0;
  for (std::size_t ii = n; ii-- > 0;) {
    double* xi = x.row(ii);
    for (std::size_t k = ii + 1; k < n; ++k) {
      const double u = w(ii, k);
      const double* xk = x.row(k);
      for (std::size_t j = 0; j < m; ++j) xi[j] -= u * xk[j];
    }
    const double inv_d = 1.0 / w(ii, ii);
    ++divs;
    for (std::size_t j = 0; j < m; ++j) xi[j] *= inv_d;
  }
  if (fc != nullptr) {
    const std::uint64_t tri = static_cast<std::uint64_t>(n) * (n - 1) / 2 * m;
    fc->add(2 * tri + static_cast<std::uint64_t>(n) * m, 2 * tri, divs);
  }
  return x;
}

/// Full inverse via LU with partial pivoting; counts as one inversion of
/// order n over R. Costs (4/3)n^3 multiplications and additions each to
/// leading order.
inline RealMatrix lu_invert(const RealMatrix& x, FlopCounter* fc = nullptr,
                            double* min_pivot_acc = nullptr) {
  if (fc != nullptr) fc->log_inversion(Field::real, x.rows());
  RealLU f = lu_factor(x, fc);
  if (min_pivot_acc != nullptr) *min_pivot_acc = std::min(*min_pivot_acc, f.min_pivot);
  return lu_apply(f, RealMatrix::identity(x.rows()), fc);
}

/// x^{-1} * rhs as one factorization plus triangular solves, without forming
/// the inverse. Identical leading cost to lu_invert for a square rhs, and
/// counted as one inversion of order n over R.
inline RealMatrix lu_solve(const RealMatrix& x, const RealMatrix& rhs,
                           FlopCounter* fc = nullptr, double* min_pivot_acc = nullptr) {
  if (fc != nullptr) fc->log_inversion(Field::real, x.rows());
  RealLU f = lu_factor(x, fc);
  if (min_pivot_acc != nullptr) *min_pivot_acc = std::min(*min_pivot_acc, f.min_pivot);
  return lu_apply(f, rhs, fc);
}

// ---------------------------------------------------------------------------
// Complex LU (runs on the two real planes; pivoting by modulus)
// ---------------------------------------------------------------------------

inline ComplexLU lu_factor(const ComplexMatrix& x, FlopCounter* fc = nullptr) {
  detail::require_square(x.rows(), x.cols(), "lu_factor");
  const std::size_t n = x.rows();
  ComplexLU f;
  f.lu = x;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  f.min_pivot = std::numeric_limits<double>::infinity();

  std::uint64_t mults = 0, adds = 0, divs = 0;
  RealMatrix& wr = f.lu.re;
  RealMatrix& wi = f.lu.im;
  // pivot selection and the singularity test use the overflow-safe
  // |re| + |im| magnitude; the reported min_pivot is the true modulus
  auto mag1 = [&](std::size_t i, std::size_t j) {
    return std::abs(wr(i, j)) + std::abs(wi(i, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = mag1(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = mag1(i, k);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(wr(k, j), wr(p, j));
        std::swap(wi(k, j), wi(p, j));
      }
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const double pr = wr(k, k), pi = wi(k, k);
    const double pivot_mag = std::abs(pr) + std::abs(pi);
    double row_max = 0.0;
    for (std::size_t j = k; j < n; ++j) row_max = std::max(row_max, mag1(k, j));
    if (!(pivot_mag >= kPivotRelTol * row_max) || row_max == 0.0) {
      throw SingularMatrixError("singular matrix: pivot " + std::to_string(k) +
                                    " has magnitude " + std::to_string(pivot_mag),
                                k, pivot_mag);
    }
    const double pivot_abs = std::hypot(pr, pi);
    if (pivot_abs < f.min_pivot) {
      f.min_pivot = pivot_abs;
      f.min_pivot_index = k;
    }
    const double pivot_sq = pr * pr + pi * pi;
    const std::size_t r = n - k - 1;
    if (r == 0) continue;
    // reciprocal of the pivot: conj(p) / |p|^2
    const double inv_sq = 1.0 / pivot_sq;
    const double rr = pr * inv_sq, ri = -pi * inv_sq;
    mults += 4;  // |p|^2 and the two scalings
    adds += 1;
    divs += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mr = wr(i, k) * rr - wi(i, k) * ri;
      const double mi = wr(i, k) * ri + wi(i, k) * rr;
      wr(i, k) = mr;
      wi(i, k) = mi;
      double* wri = wr.row(i);
      double* wii = wi.row(i);
      const double* wrk = wr.row(k);
      const double* wik = wi.row(k);
      for (std::size_t j = k + 1; j < n; ++j) {
        const double ur = wrk[j], ui = wik[j];
        wri[j] -= mr * ur - mi * ui;
        wii[j] -= mr * ui + mi * ur;
      }
    }
    mults += 4 * (r + r * r);
    adds += 2 * r + 4 * r * r;
  }
  if (fc != nullptr) fc->add(mults, adds, divs);
  return f;
}

inline ComplexMatrix lu_apply(const ComplexLU& f, const ComplexMatrix& rhs,
                              FlopCounter* fc = nullptr) {
  const std::size_t n = f.order();
  detail::require_inner(n, rhs.rows(), "lu_apply");
  const std::size_t m = rhs.cols();
  ComplexMatrix x(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      x.re(i, j) = rhs.re(f.perm[i], j);
      x.im(i, j) = rhs.im(f.perm[i], j);
    }
  }
  const RealMatrix& wr = f.lu.re;
  const RealMatrix& wi = f.lu.im;

  for (std::size_t k = 0; k < n; ++k) {
    const double* xrk = x.re.row(k);
    const double* xik = x.im.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double lr = wr(i, k), li = wi(i, k);
      double* xri = x.re.row(i);
      double* xii = x.im.row(i);
      for (std::size_t j = 0; j < m; ++j) {
        const double br = xrk[j], bi = xik[j];
        xri[j] -= lr * br - li * bi;
        xii[j] -= lr * bi + li * br;
      }
    }
  }
  std::uint64_t mults = 0, adds = 0, divs = 0;
  for (std::size_t ii = n; ii-- > 0;) {
    double* xri = x.re.row(ii);
    double* xii = x.im.row(ii);
    for (std::size_t k = ii + 1; k < n; ++k) {
      const double ur = wr(ii, k), ui = wi(ii, k);
      const double* xrk = x.re.row(k);
      const double* xik = x.im.row(k);
      for (std::size_t j = 0; j < m; ++j) {
        const double br = xrk[j], bi = xik[j];
        xri[j] -= ur * br - ui * bi;
        xii[j] -= ur * bi + ui * br;
      }
    }
    const double dr = wr(ii, ii), di = wi(ii, ii);
    const double inv_sq = 1.0 / (dr * dr + di * di);
    const double rr = dr * inv_sq, ri = -di * inv_sq;
    mults += 4;
    adds += 1;
    divs += 1;
    for (std::size_t j = 0; j < m; ++j) {
      const double br = xri[j], bi = xii[j];
      xri[j] = br * rr - bi * ri;
      xii[j] = br * ri + bi * rr;
    }
  }
  if (fc != nullptr) {
    const std::uint64_t tri = static_cast<std::uint64_t>(n) * (n - 1) / 2 * m;
    mults += 8 * tri + 4 * static_cast<std::uint64_t>(n) * m;
    adds += 8 * tri + 2 * static_cast<std::uint64_t>(n) * m;
    fc->add(mults, adds, divs);
  }
  return x;
}

inline ComplexMatrix lu_invert(const ComplexMatrix& x, FlopCounter* fc = nullptr,
                               double* min_pivot_acc = nullptr) {
  if (fc != nullptr) fc->log_inversion(Field::cplx, x.rows());
  ComplexLU f = lu_factor(x, fc);
  if (min_pivot_acc != nullptr) *min_pivot_acc = std::min(*min_pivot_acc, f.min_pivot);
  return lu_apply(f, ComplexMatrix::identity(x.rows()), fc);
}

inline ComplexMatrix lu_solve(const ComplexMatrix& x, const ComplexMatrix& rhs,
                              FlopCounter* fc = nullptr,
                              double* min_pivot_acc = nullptr) {
  if (fc != nullptr) fc->log_inversion(Field::cplx, x.rows());
  ComplexLU f = lu_factor(x, fc);
  if (min_pivot_acc != nullptr) *min_pivot_acc = std::min(*min_pivot_acc, f.min_pivot);
  return lu_apply(f, rhs, fc);
}

}  // namespace quatmat

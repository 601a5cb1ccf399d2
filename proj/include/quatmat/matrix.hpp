#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/flops.hpp"
#include "quatmat/quaternion.hpp"

namespace quatmat {

/// Dense row-major matrix over R.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense complex matrix stored as two real planes (re + i*im).
struct ComplexMatrix {
  RealMatrix re;
  RealMatrix im;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : re(rows, cols), im(rows, cols) {}
  ComplexMatrix(RealMatrix re_, RealMatrix im_) : re(std::move(re_)), im(std::move(im_)) {}

  static ComplexMatrix identity(std::size_t n) {
    return {RealMatrix::identity(n), RealMatrix(n, n)};
  }

  std::size_t rows() const { return re.rows(); }
  std::size_t cols() const { return re.cols(); }

  ComplexScalar at(std::size_t i, std::size_t j) const { return {re(i, j), im(i, j)}; }
  void set(std::size_t i, std::size_t j, ComplexScalar v) {
    re(i, j) = v.re;
    im(i, j) = v.im;
  }
};

/// Dense quaternion matrix Z = a + i*b + j*c + k*d stored as four real planes.
struct QuatMatrix {
  RealMatrix a;
  RealMatrix b;
  RealMatrix c;
  RealMatrix d;

  QuatMatrix() = default;
  QuatMatrix(std::size_t rows, std::size_t cols)
      : a(rows, cols), b(rows, cols), c(rows, cols), d(rows, cols) {}
  QuatMatrix(RealMatrix a_, RealMatrix b_, RealMatrix c_, RealMatrix d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static QuatMatrix identity(std::size_t n) {
    return {RealMatrix::identity(n), RealMatrix(n, n), RealMatrix(n, n),
            RealMatrix(n, n)};
  }

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  Quaternion at(std::size_t i, std::size_t j) const {
    return {a(i, j), b(i, j), c(i, j), d(i, j)};
  }
  void set(std::size_t i, std::size_t j, const Quaternion& q) {
    a(i, j) = q.w;
    b(i, j) = q.x;
    c(i, j) = q.y;
    d(i, j) = q.z;
  }
};

namespace detail {

inline void require_same_shape(std::size_t r1, std::size_t c1, std::size_t r2,
                               std::size_t c2, const char* op) {
  if (r1 != r2 || c1 != c2) {
    throw DimensionError(std::string(op) + ": shape mismatch (" + std::to_string(r1) +
                         "x" + std::to_string(c1) + " vs " + std::to_string(r2) + "x" +
                         std::to_string(c2) + ")");
  }
}

inline void require_inner(std::size_t c1, std::size_t r2, const char* op) {
  if (c1 != r2) {
    throw DimensionError(std::string(op) + ": inner dimensions disagree (" +
                         std::to_string(c1) + " vs " + std::to_string(r2) + ")");
  }
}

inline void require_square(std::size_t r, std::size_t c, const char* op) {
  if (r != c) {
    throw DimensionError(std::string(op) + ": matrix is not square (" +
                         std::to_string(r) + "x" + std::to_string(c) + ")");
  }
}

/// Classical triple-loop product. Tallies r*m*c multiplications and
/// r*c*(m-1) accumulation additions; logs no matrix-op event (callers do).
inline RealMatrix matmul_kernel(const RealMatrix& x, const RealMatrix& y,
                                FlopCounter* fc) {
  require_inner(x.cols(), y.rows(), "mat_mul");
  const std::size_t r = x.rows(), m = x.cols(), c = y.cols();
  RealMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    double* oi = out.row(i);
    const double* xi = x.row(i);
    for (std::size_t k = 0; k < m; ++k) {
      const double xik = xi[k];
      const double* yk = y.row(k);
      for (std::size_t j = 0; j < c; ++j) oi[j] += xik * yk[j];
    }
  }
  if (fc != nullptr) {
    fc->add(static_cast<std::uint64_t>(r) * m * c,
            m == 0 ? 0 : static_cast<std::uint64_t>(r) * c * (m - 1));
  }
  return out;
}

inline RealMatrix add_kernel(const RealMatrix& x, const RealMatrix& y, FlopCounter* fc) {
  require_same_shape(x.rows(), x.cols(), y.rows(), y.cols(), "mat_add");
  RealMatrix out(x.rows(), x.cols());
  const std::size_t n = x.data().size();
  for (std::size_t i = 0; i < n; ++i) out.data()[i] = x.data()[i] + y.data()[i];
  if (fc != nullptr) fc->add(0, n);
  return out;
}

inline RealMatrix sub_kernel(const RealMatrix& x, const RealMatrix& y, FlopCounter* fc) {
  require_same_shape(x.rows(), x.cols(), y.rows(), y.cols(), "mat_sub");
  RealMatrix out(x.rows(), x.cols());
  const std::size_t n = x.data().size();
  for (std::size_t i = 0; i < n; ++i) out.data()[i] = x.data()[i] - y.data()[i];
  if (fc != nullptr) fc->add(0, n);
  return out;
}

inline RealMatrix neg_kernel(const RealMatrix& x) {
  RealMatrix out(x.rows(), x.cols());
  const std::size_t n = x.data().size();
  for (std::size_t i = 0; i < n; ++i) out.data()[i] = -x.data()[i];
  return out;  // sign flips are not flops
}

inline double sum_squares(const RealMatrix& x) {
  double s = 0.0;
  for (double v : x.data()) s += v * v;
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real operations
// ---------------------------------------------------------------------------

inline RealMatrix mat_mul(const RealMatrix& x, const RealMatrix& y,
                          FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->log_multiplication(Field::real, x.rows());
  return detail::matmul_kernel(x, y, fc);
}

inline RealMatrix mat_add(const RealMatrix& x, const RealMatrix& y,
                          FlopCounter* fc = nullptr) {
  return detail::add_kernel(x, y, fc);
}

inline RealMatrix mat_sub(const RealMatrix& x, const RealMatrix& y,
                          FlopCounter* fc = nullptr) {
  return detail::sub_kernel(x, y, fc);
}

inline RealMatrix mat_neg(const RealMatrix& x) { return detail::neg_kernel(x); }

inline RealMatrix mat_scale(const RealMatrix& x, double s, FlopCounter* fc = nullptr) {
  RealMatrix out(x.rows(), x.cols());
  const std::size_t n = x.data().size();
  for (std::size_t i = 0; i < n; ++i) out.data()[i] = s * x.data()[i];
  if (fc != nullptr) fc->add(n, 0);
  return out;
}

inline double frobenius_norm(const RealMatrix& x) {
  return std::sqrt(detail::sum_squares(x));
}

inline double max_abs(const RealMatrix& x) {
  double m = 0.0;
  for (double v : x.data()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const RealMatrix& x, const RealMatrix& y) {
  detail::require_same_shape(x.rows(), x.cols(), y.rows(), y.cols(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i) {
    m = std::max(m, std::abs(x.data()[i] - y.data()[i]));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Complex operations (two-plane expansion; the "usual" complex product)
// ---------------------------------------------------------------------------

/// (re1 + i*im1)(re2 + i*im2) computed literally as four real products:
/// re = re1*re2 - im1*im2, im = re1*im2 + im1*re2. The floating-point
/// operation order therefore coincides with the real-plane expansion.
inline ComplexMatrix mat_mul(const ComplexMatrix& x, const ComplexMatrix& y,
                             FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->log_multiplication(Field::cplx, x.rows());
  RealMatrix p1 = detail::matmul_kernel(x.re, y.re, fc);
  RealMatrix p2 = detail::matmul_kernel(x.im, y.im, fc);
  RealMatrix p3 = detail::matmul_kernel(x.re, y.im, fc);
  RealMatrix p4 = detail::matmul_kernel(x.im, y.re, fc);
  return {detail::sub_kernel(p1, p2, fc), detail::add_kernel(p3, p4, fc)};
}

inline ComplexMatrix mat_add(const ComplexMatrix& x, const ComplexMatrix& y,
                             FlopCounter* fc = nullptr) {
  return {detail::add_kernel(x.re, y.re, fc), detail::add_kernel(x.im, y.im, fc)};
}

inline ComplexMatrix mat_sub(const ComplexMatrix& x, const ComplexMatrix& y,
                             FlopCounter* fc = nullptr) {
  return {detail::sub_kernel(x.re, y.re, fc), detail::sub_kernel(x.im, y.im, fc)};
}

inline ComplexMatrix mat_neg(const ComplexMatrix& x) {
  return {detail::neg_kernel(x.re), detail::neg_kernel(x.im)};
}

inline ComplexMatrix mat_scale(const ComplexMatrix& x, double s,
                               FlopCounter* fc = nullptr) {
  return {mat_scale(x.re, s, fc), mat_scale(x.im, s, fc)};
}

inline ComplexMatrix conj(const ComplexMatrix& x) {
  return {x.re, detail::neg_kernel(x.im)};
}

inline double frobenius_norm(const ComplexMatrix& x) {
  return std::sqrt(detail::sum_squares(x.re) + detail::sum_squares(x.im));
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  return std::max(max_abs_diff(x.re, y.re), max_abs_diff(x.im, y.im));
}

// ---------------------------------------------------------------------------
// Quaternion operations (sixteen-real-product expansion)
// ---------------------------------------------------------------------------

/// Hamilton product lifted to matrices. With Z = a1+i*b1+j*c1+k*d1 and
/// W = a2+i*b2+j*c2+k*d2 the four result planes are the usual sixteen real
/// products combined by twelve plane additions; left factors stay on the
/// left throughout (the planes do not commute).
inline QuatMatrix mat_mul(const QuatMatrix& x, const QuatMatrix& y,
                          FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->log_multiplication(Field::quat, x.rows());
  using detail::add_kernel;
  using detail::matmul_kernel;
  using detail::sub_kernel;
  // w plane: a1*a2 - b1*b2 - c1*c2 - d1*d2
  RealMatrix w = sub_kernel(
      sub_kernel(sub_kernel(matmul_kernel(x.a, y.a, fc), matmul_kernel(x.b, y.b, fc), fc),
                 matmul_kernel(x.c, y.c, fc), fc),
      matmul_kernel(x.d, y.d, fc), fc);
  // i plane: a1*b2 + b1*a2 + c1*d2 - d1*c2
  RealMatrix xi = sub_kernel(
      add_kernel(add_kernel(matmul_kernel(x.a, y.b, fc), matmul_kernel(x.b, y.a, fc), fc),
                 matmul_kernel(x.c, y.d, fc), fc),
      matmul_kernel(x.d, y.c, fc), fc);
  // j plane: a1*c2 - b1*d2 + c1*a2 + d1*b2
  RealMatrix yj = add_kernel(
      add_kernel(sub_kernel(matmul_kernel(x.a, y.c, fc), matmul_kernel(x.b, y.d, fc), fc),
                 matmul_kernel(x.c, y.a, fc), fc),
      matmul_kernel(x.d, y.b, fc), fc);
  // k plane: a1*d2 + b1*c2 - c1*b2 + d1*a2
  RealMatrix zk = add_kernel(
      sub_kernel(add_kernel(matmul_kernel(x.a, y.d, fc), matmul_kernel(x.b, y.c, fc), fc),
                 matmul_kernel(x.c, y.b, fc), fc),
      matmul_kernel(x.d, y.a, fc), fc);
  return {std::move(w), std::move(xi), std::move(yj), std::move(zk)};
}

inline QuatMatrix mat_add(const QuatMatrix& x, const QuatMatrix& y,
                          FlopCounter* fc = nullptr) {
  return {detail::add_kernel(x.a, y.a, fc), detail::add_kernel(x.b, y.b, fc),
          detail::add_kernel(x.c, y.c, fc), detail::add_kernel(x.d, y.d, fc)};
}

inline QuatMatrix mat_sub(const QuatMatrix& x, const QuatMatrix& y,
                          FlopCounter* fc = nullptr) {
  return {detail::sub_kernel(x.a, y.a, fc), detail::sub_kernel(x.b, y.b, fc),
          detail::sub_kernel(x.c, y.c, fc), detail::sub_kernel(x.d, y.d, fc)};
}

inline QuatMatrix mat_neg(const QuatMatrix& x) {
  return {detail::neg_kernel(x.a), detail::neg_kernel(x.b), detail::neg_kernel(x.c),
          detail::neg_kernel(x.d)};
}

inline QuatMatrix mat_scale(const QuatMatrix& x, double s, FlopCounter* fc = nullptr) {
  return {mat_scale(x.a, s, fc), mat_scale(x.b, s, fc), mat_scale(x.c, s, fc),
          mat_scale(x.d, s, fc)};
}

/// sqrt(|a|^2 + |b|^2 + |c|^2 + |d|^2) with |.| the real Frobenius norm;
/// equals the square root of the summed squared moduli of the entries.
inline double frobenius_norm(const QuatMatrix& x) {
  return std::sqrt(detail::sum_squares(x.a) + detail::sum_squares(x.b) +
                   detail::sum_squares(x.c) + detail::sum_squares(x.d));
}

inline double max_abs_diff(const QuatMatrix& x, const QuatMatrix& y) {
  return std::max(std::max(max_abs_diff(x.a, y.a), max_abs_diff(x.b, y.b)),
                  std::max(max_abs_diff(x.c, y.c), max_abs_diff(x.d, y.d)));
}

// ---------------------------------------------------------------------------
// Block extraction / insertion (copies; no flops)
// ---------------------------------------------------------------------------

inline RealMatrix block(const RealMatrix& x, std::size_t r0, std::size_t c0,
                        std::size_t rows, std::size_t cols) {
  RealMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = x(r0 + i, c0 + j);
  }
  return out;
}

inline void set_block(RealMatrix& x, std::size_t r0, std::size_t c0,
                      const RealMatrix& src) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) x(r0 + i, c0 + j) = src(i, j);
  }
}

inline QuatMatrix block(const QuatMatrix& x, std::size_t r0, std::size_t c0,
                        std::size_t rows, std::size_t cols) {
  return {block(x.a, r0, c0, rows, cols), block(x.b, r0, c0, rows, cols),
          block(x.c, r0, c0, rows, cols), block(x.d, r0, c0, rows, cols)};
}

inline void set_block(QuatMatrix& x, std::size_t r0, std::size_t c0,
                      const QuatMatrix& src) {
  set_block(x.a, r0, c0, src.a);
  set_block(x.b, r0, c0, src.b);
  set_block(x.c, r0, c0, src.c);
  set_block(x.d, r0, c0, src.d);
}

}  // namespace quatmat

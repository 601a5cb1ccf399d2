#pragma once

#include <array>
#include <cfloat>
#include <cmath>

#include "quatmat/errors.hpp"
#include "quatmat/flops.hpp"

namespace quatmat {

/// Scalar quaternion w + ix + jy + kz over 64-bit floats.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;
};

/// Hamilton product. In counting mode registers exactly 16 real
/// multiplications and 12 real additions (the usual algorithm).
inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q,
                           FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(16, 12);
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

inline Quaternion quat_add(const Quaternion& p, const Quaternion& q,
                           FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(0, 4);
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

inline Quaternion quat_sub(const Quaternion& p, const Quaternion& q,
                           FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(0, 4);
  return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

inline Quaternion quat_neg(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

inline Quaternion quat_conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double quat_norm_sq(const Quaternion& q, FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(4, 3);
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double quat_abs(const Quaternion& q) { return std::sqrt(quat_norm_sq(q)); }

/// conj(q) / |q|^2, realized as one reciprocal and four scalings.
inline Quaternion quat_inv(const Quaternion& q, FlopCounter* fc = nullptr) {
  const double n2 = quat_norm_sq(q, fc);
  if (!(n2 >= DBL_MIN)) {
    throw SingularScalarError("quaternion inverse of a zero (or underflowed) scalar");
  }
  if (fc != nullptr) fc->add(4, 0, 1);
  const double r = 1.0 / n2;
  return {q.w * r, -q.x * r, -q.y * r, -q.z * r};
}

/// Usual complex product: 4 real multiplications, 2 real additions.
inline ComplexScalar complex_mul(const ComplexScalar& p, const ComplexScalar& q,
                                 FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(4, 2);
  return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

inline ComplexScalar complex_add(const ComplexScalar& p, const ComplexScalar& q,
                                 FlopCounter* fc = nullptr) {
  if (fc != nullptr) fc->add(0, 2);
  return {p.re + q.re, p.im + q.im};
}

/// The 2x2 complex matrix representing left multiplication by
/// w + ix + jy + kz:  [[w+ix, y+iz], [-y+iz, w-ix]].
inline std::array<std::array<ComplexScalar, 2>, 2> quat_as_complex_2x2(
    const Quaternion& q) {
  return {{{{{q.w, q.x}, {q.y, q.z}}}, {{{-q.y, q.z}, {q.w, -q.x}}}}};
}

}  // namespace quatmat

#pragma once

#include <cstddef>

#include "quatmat/errors.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

// Structure-preserving representations of quaternion matrices over smaller
// scalar fields, plus the simplex/perplex split against the complex subfield.
//
// Conventions, fixed once here and consumed everywhere else:
//   Z = (A + iB) + (C + iD) * j        (perplex factor multiplied by j on the right)
//     = (A + iB) + j * (C - iD)        (equivalently, j pulled to the left)
// Both identities follow from j * i = -i * j; the split stores C + iD and the
// left-j assembly consumes C - iD.

/// Simplex part A + iB and perplex part C + iD of Z = simplex + perplex * j.
struct ComplexSplit {
  ComplexMatrix simplex;
  ComplexMatrix perplex;

  ComplexMatrix simplex_conj() const { return conj(simplex); }
  ComplexMatrix perplex_conj() const { return conj(perplex); }
};

inline ComplexSplit complex_split(const QuatMatrix& z) {
  return {{z.a, z.b}, {z.c, z.d}};
}

/// Exact reconstruction of Z from its split (plane copies only).
inline QuatMatrix merge(const ComplexSplit& s) {
  return {s.simplex.re, s.simplex.im, s.perplex.re, s.perplex.im};
}

/// Assembles Z = u + j * v from complex n x n matrices u and v.
/// Since j * (p + iq) = j*p - k*q, the planes are (Re u, Im u, Re v, -Im v).
inline QuatMatrix assemble_quat(const ComplexMatrix& u, const ComplexMatrix& v) {
  detail::require_same_shape(u.rows(), u.cols(), v.rows(), v.cols(), "assemble_quat");
  return {u.re, u.im, v.re, mat_neg(v.im)};
}

/// Complex adjoint representation: the injective algebra homomorphism sending
/// an n x n quaternion matrix to the 2n x 2n complex block matrix
///   [[A + iB, C + iD], [-C + iD, A - iB]].
inline ComplexMatrix complex_adjoint(const QuatMatrix& z) {
  const std::size_t n = z.rows();
  detail::require_square(n, z.cols(), "complex_adjoint");
  ComplexMatrix out(2 * n, 2 * n);
  set_block(out.re, 0, 0, z.a);
  set_block(out.im, 0, 0, z.b);
  set_block(out.re, 0, n, z.c);
  set_block(out.im, 0, n, z.d);
  set_block(out.re, n, 0, mat_neg(z.c));
  set_block(out.im, n, 0, z.d);
  set_block(out.re, n, n, z.a);
  set_block(out.im, n, n, mat_neg(z.b));
  return out;
}

/// Reads a quaternion matrix back from (near) the image of complex_adjoint.
/// Only the top block row defines the result; the remaining blocks are
/// redundancy whose deviation ||y - complex_adjoint(result)||_F is reported
/// through `deviation_out` and rejected above 1e-8 * ||y||_F.
inline QuatMatrix complex_adjoint_inverse(const ComplexMatrix& y,
                                          double* deviation_out = nullptr) {
  detail::require_square(y.rows(), y.cols(), "complex_adjoint_inverse");
  if (y.rows() % 2 != 0) {
    throw DimensionError("complex_adjoint_inverse: order must be even");
  }
  const std::size_t n = y.rows() / 2;
  QuatMatrix z{block(y.re, 0, 0, n, n), block(y.im, 0, 0, n, n),
               block(y.re, 0, n, n, n), block(y.im, 0, n, n, n)};
  const ComplexMatrix rebuilt = complex_adjoint(z);
  const double dev = frobenius_norm(mat_sub(y, rebuilt));
  if (deviation_out != nullptr) *deviation_out = dev;
  if (dev > 1e-8 * frobenius_norm(y)) {
    throw NotInImageError(
        "complex_adjoint_inverse: input is not the adjoint of a quaternion matrix "
        "(deviation " +
            std::to_string(dev) + ")",
        dev);
  }
  return z;
}

/// Real adjoint representation: the 4n x 4n real block matrix
///   [[ A,  B,  C,  D],
///    [-B,  A, -D,  C],
///    [-C,  D,  A, -B],
///    [-D, -C,  B,  A]].
inline RealMatrix real_adjoint(const QuatMatrix& z) {
  const std::size_t n = z.rows();
  detail::require_square(n, z.cols(), "real_adjoint");
  RealMatrix out(4 * n, 4 * n);
  const RealMatrix nb = mat_neg(z.b), nc = mat_neg(z.c), nd = mat_neg(z.d);
  set_block(out, 0, 0 * n, z.a);
  set_block(out, 0, 1 * n, z.b);
  set_block(out, 0, 2 * n, z.c);
  set_block(out, 0, 3 * n, z.d);
  set_block(out, n, 0 * n, nb);
  set_block(out, n, 1 * n, z.a);
  set_block(out, n, 2 * n, nd);
  set_block(out, n, 3 * n, z.c);
  set_block(out, 2 * n, 0 * n, nc);
  set_block(out, 2 * n, 1 * n, z.d);
  set_block(out, 2 * n, 2 * n, z.a);
  set_block(out, 2 * n, 3 * n, nb);
  set_block(out, 3 * n, 0 * n, nd);
  set_block(out, 3 * n, 1 * n, nc);
  set_block(out, 3 * n, 2 * n, z.b);
  set_block(out, 3 * n, 3 * n, z.a);
  return out;
}

/// Mirror of complex_adjoint_inverse for the real representation: reads
/// (A, B, C, D) from the first block row and checks the rest as redundancy.
inline QuatMatrix real_adjoint_inverse(const RealMatrix& y,
                                       double* deviation_out = nullptr) {
  detail::require_square(y.rows(), y.cols(), "real_adjoint_inverse");
  if (y.rows() % 4 != 0) {
    throw DimensionError("real_adjoint_inverse: order must be a multiple of 4");
  }
  const std::size_t n = y.rows() / 4;
  QuatMatrix z{block(y, 0, 0, n, n), block(y, 0, n, n, n), block(y, 0, 2 * n, n, n),
               block(y, 0, 3 * n, n, n)};
  const RealMatrix rebuilt = real_adjoint(z);
  const double dev = frobenius_norm(mat_sub(y, rebuilt));
  if (deviation_out != nullptr) *deviation_out = dev;
  if (dev > 1e-8 * frobenius_norm(y)) {
    throw NotInImageError(
        "real_adjoint_inverse: input is not the adjoint of a quaternion matrix "
        "(deviation " +
            std::to_string(dev) + ")",
        dev);
  }
  return z;
}

}  // namespace quatmat

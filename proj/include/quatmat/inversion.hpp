#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "quatmat/embeddings.hpp"
#include "quatmat/errors.hpp"
#include "quatmat/flops.hpp"
#include "quatmat/lu.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

/// The six inversion methods, numbered by their stable integer codes.
enum class Algorithm : int {
  complex_frobenius = 1,  // two complex inversions + three complex products
  real_frobenius = 2,     // four real inversions + thirteen real products
  complex_adjoint = 3,    // one complex inversion at order 2n
  real_adjoint = 4,       // one real inversion at order 4n
  skew_real = 5,          // four real inversions + sixteen real products
  schur_recursive = 6,    // block Schur recursion over H down to scalars
};

inline Algorithm algorithm_from_code(int code) {
  if (code < 1 || code > 6) {
    throw UsageError("unknown algorithm id " + std::to_string(code));
  }
  return static_cast<Algorithm>(code);
}

inline int algorithm_code(Algorithm alg) { return static_cast<int>(alg); }

inline const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::complex_frobenius: return "complex-frobenius";
    case Algorithm::real_frobenius: return "real-frobenius";
    case Algorithm::complex_adjoint: return "complex-adjoint";
    case Algorithm::real_adjoint: return "real-adjoint";
    case Algorithm::skew_real: return "skew-real";
    case Algorithm::schur_recursive: return "schur-recursive";
  }
  return "?";
}

/// Which genericity branch a run took. Only the complex Frobenius method
/// branches: `simplex` inverts through A + iB, `perplex` through C + iD.
enum class Branch { none, simplex, perplex };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::none: return "-";
    case Branch::simplex: return "simplex";
    case Branch::perplex: return "perplex";
  }
  return "?";
}

struct InversionReport {
  QuatMatrix inverse;
  Branch branch = Branch::none;
  FlopCounter flops;  // filled by invert(); empty from the per-algorithm calls
  double min_pivot = std::numeric_limits<double>::infinity();
};

namespace detail {

// Simplex branch of the complex Frobenius method. With S = A + iB invertible
// and T = C + iD, the inverse of Z = S + T*j is
//   Z^{-1} = core^{-1} + j * ( -conj(S)^{-1} conj(T) core^{-1} ),
//   core   = S + T conj(S)^{-1} conj(T).
inline QuatMatrix cf_simplex(const ComplexSplit& s, FlopCounter* fc, double* mp) {
  const ComplexMatrix lead_inv = lu_invert(s.simplex_conj(), fc, mp);
  const ComplexMatrix lead = mat_mul(lead_inv, s.perplex_conj(), fc);
  const ComplexMatrix cross = mat_mul(s.perplex, lead, fc);
  const ComplexMatrix core_inv = lu_invert(mat_add(s.simplex, cross, fc), fc, mp);
  const ComplexMatrix jpart = mat_neg(mat_mul(lead, core_inv, fc));
  return assemble_quat(core_inv, jpart);
}

// Perplex branch: requires T = C + iD invertible instead.
//   Z^{-1} = lead * core^{-1} - j * core^{-1},
//   lead   = conj(T)^{-1} conj(S),  core = S * lead + T.
inline QuatMatrix cf_perplex(const ComplexSplit& s, FlopCounter* fc, double* mp) {
  const ComplexMatrix lead_inv = lu_invert(s.perplex_conj(), fc, mp);
  const ComplexMatrix lead = mat_mul(lead_inv, s.simplex_conj(), fc);
  const ComplexMatrix cross = mat_mul(s.simplex, lead, fc);
  const ComplexMatrix core_inv = lu_invert(mat_add(cross, s.perplex, fc), fc, mp);
  const ComplexMatrix head = mat_mul(lead, core_inv, fc);
  return assemble_quat(head, mat_neg(core_inv));
}

}  // namespace detail

/// Algorithm 1: Frobenius inversion over the complex subfield. Performs
/// exactly 2 complex n x n inversions and 3 complex n x n multiplications.
/// Requires at least one of A + iB, C + iD invertible; tries the simplex
/// branch first and falls back to the perplex branch on a singular pivot.
/// When counting, only the successful branch's work is reported.
inline InversionReport invert_complex_frobenius(const QuatMatrix& z,
                                                FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_complex_frobenius");
  const ComplexSplit s = complex_split(z);
  {
    FlopCounter local;
    double mp = std::numeric_limits<double>::infinity();
    try {
      QuatMatrix inv = detail::cf_simplex(s, fc != nullptr ? &local : nullptr, &mp);
      if (fc != nullptr) fc->merge(local);
      return {std::move(inv), Branch::simplex, {}, mp};
    } catch (const SingularMatrixError& simplex_err) {
      FlopCounter local2;
      double mp2 = std::numeric_limits<double>::infinity();
      try {
        QuatMatrix inv = detail::cf_perplex(s, fc != nullptr ? &local2 : nullptr, &mp2);
        if (fc != nullptr) fc->merge(local2);
        return {std::move(inv), Branch::perplex, {}, mp2};
      } catch (const SingularMatrixError& perplex_err) {
        throw NotGenericError(
            std::string("complex-frobenius: both branches failed; simplex branch "
                        "(A+iB side): ") +
                simplex_err.what() + "; perplex branch (C+iD side): " +
                perplex_err.what(),
            "simplex and perplex");
      }
    }
  }
}

/// Algorithm 2: Frobenius inversion expanded over the reals. Exactly 4 real
/// n x n inversions (two of them fused solves) and 13 real n x n products.
/// Genericity needs A, A + B A^{-1} B, W1 and W1 + W2 W3 all nonsingular.
inline InversionReport invert_real_frobenius(const QuatMatrix& z,
                                             FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_real_frobenius");
  double mp = std::numeric_limits<double>::infinity();
  auto solve = [&](const RealMatrix& m, const RealMatrix& rhs, const char* step) {
    try {
      return lu_solve(m, rhs, fc, &mp);
    } catch (const SingularMatrixError& e) {
      throw NotGenericError(std::string("real-frobenius: singular intermediate ") +
                                step + ": " + e.what(),
                            step);
    }
  };
  auto invert = [&](const RealMatrix& m, const char* step) {
    try {
      return lu_invert(m, fc, &mp);
    } catch (const SingularMatrixError& e) {
      throw NotGenericError(std::string("real-frobenius: singular intermediate ") +
                                step + ": " + e.what(),
                            step);
    }
  };

  const RealMatrix &a = z.a, &b = z.b, &c = z.c, &d = z.d;
  // Shared factor for the two three-product complex multiplications below.
  const RealMatrix k = mat_add(c, d, fc);

  // (A - iB)^{-1} = u2 + i*u3.
  const RealMatrix u1 = solve(a, b, "inversion 1 of 4 (A)");
  const RealMatrix u2 =
      invert(mat_add(a, mat_mul(b, u1, fc), fc), "inversion 2 of 4 (A + B*A^-1*B)");
  const RealMatrix u3 = mat_mul(u1, u2, fc);
  const RealMatrix u4 = mat_mul(u3, c, fc);
  const RealMatrix u5 = mat_mul(u2, d, fc);

  // lead = (A - iB)^{-1}(C - iD) = v1 + i*v2, three products via the K trick.
  const RealMatrix v1 =
      mat_sub(mat_sub(mat_mul(mat_add(u2, u3, fc), k, fc), u4, fc), u5, fc);
  const RealMatrix v2 = mat_sub(u4, u5, fc);
  const RealMatrix v3 = mat_sub(v1, v2, fc);
  const RealMatrix v4 = mat_mul(c, v2, fc);
  const RealMatrix v5 = mat_mul(d, v1, fc);

  // core = (A + iB) + (C + iD)*lead = w1 + i*w2.
  const RealMatrix w1 =
      mat_sub(mat_add(mat_add(mat_mul(k, v3, fc), a, fc), v4, fc), v5, fc);
  const RealMatrix w2 = mat_add(mat_add(b, v4, fc), v5, fc);

  // core^{-1} = e + i*f.
  const RealMatrix w3 = solve(w1, w2, "inversion 3 of 4 (W1)");
  const RealMatrix e = invert(mat_add(w1, mat_mul(w2, w3, fc), fc),
                              "inversion 4 of 4 (W1 + W2*W3)");
  const RealMatrix e1 = mat_mul(v2, e, fc);
  const RealMatrix f = mat_neg(mat_mul(w3, e, fc));
  const RealMatrix f1 = mat_mul(v1, f, fc);

  // j,k planes of core^{-1} + j*(-lead * core^{-1}).
  const RealMatrix g =
      mat_sub(mat_sub(f1, e1, fc), mat_mul(v3, mat_add(e, f, fc), fc), fc);
  const RealMatrix h = mat_add(f1, e1, fc);

  return {QuatMatrix{e, f, g, h}, Branch::none, {}, mp};
}

/// Algorithm 3: invert the 2n x 2n complex adjoint by one complex LU.
inline InversionReport invert_complex_adjoint(const QuatMatrix& z,
                                              FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_complex_adjoint");
  double mp = std::numeric_limits<double>::infinity();
  const ComplexMatrix v = lu_invert(complex_adjoint(z), fc, &mp);
  return {complex_adjoint_inverse(v), Branch::none, {}, mp};
}

/// Algorithm 4: invert the 4n x 4n real adjoint by one real LU.
inline InversionReport invert_real_adjoint(const QuatMatrix& z,
                                           FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_real_adjoint");
  double mp = std::numeric_limits<double>::infinity();
  const RealMatrix v = lu_invert(real_adjoint(z), fc, &mp);
  return {real_adjoint_inverse(v), Branch::none, {}, mp};
}

/// Reference inverse held as the test oracle: the real-adjoint pipeline.
inline QuatMatrix reference_inverse(const QuatMatrix& z, FlopCounter* fc = nullptr) {
  return invert_real_adjoint(z, fc).inverse;
}

/// Algorithm 5: the skew-structured real method. Exactly 4 real inversions
/// and 16 real n x n products.
///
/// Sign conventions here are pinned by the identities each block satisfies
/// (and by the adjoint-oracle regression tests):
///   (A - iB)^{-1} = u3 + i*u4,
///   lead = (A - iB)^{-1}(C - iD) = v1 + i*v2  with  v2 = U4*C - U3*D,
///   core = (A + iB) + (C + iD)*lead = w1 + i*w2,  core^{-1} = x + i*y,
/// and the result planes are (x, y, -V1*X + V2*Y, V1*Y + V2*X).
/// Published statements of this method differ in the sign of v2 and of the
/// k plane; the combination below is the one that satisfies Z * Z^{-1} = I.
inline InversionReport invert_skew_real(const QuatMatrix& z,
                                        FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_skew_real");
  double mp = std::numeric_limits<double>::infinity();
  auto solve = [&](const RealMatrix& m, const RealMatrix& rhs, const char* step) {
    try {
      return lu_solve(m, rhs, fc, &mp);
    } catch (const SingularMatrixError& e) {
      throw NotGenericError(
          std::string("skew-real: singular intermediate ") + step + ": " + e.what(),
          step);
    }
  };
  auto invert = [&](const RealMatrix& m, const char* step) {
    try {
      return lu_invert(m, fc, &mp);
    } catch (const SingularMatrixError& e) {
      throw NotGenericError(
          std::string("skew-real: singular intermediate ") + step + ": " + e.what(),
          step);
    }
  };

  const RealMatrix &a = z.a, &b = z.b, &c = z.c, &d = z.d;
  const RealMatrix u1 = solve(a, b, "inversion 1 of 4 (A)");
  const RealMatrix u2 = mat_add(a, mat_mul(b, u1, fc), fc);
  const RealMatrix u3 = invert(u2, "inversion 2 of 4 (A + B*A^-1*B)");
  const RealMatrix u4 = mat_mul(u1, u3, fc);

  const RealMatrix v1 = mat_add(mat_mul(u3, c, fc), mat_mul(u4, d, fc), fc);
  const RealMatrix v2 = mat_sub(mat_mul(u4, c, fc), mat_mul(u3, d, fc), fc);

  const RealMatrix w1 =
      mat_sub(mat_add(a, mat_mul(c, v1, fc), fc), mat_mul(d, v2, fc), fc);
  const RealMatrix w2 =
      mat_add(mat_add(b, mat_mul(d, v1, fc), fc), mat_mul(c, v2, fc), fc);

  const RealMatrix w3 = solve(w1, w2, "inversion 3 of 4 (W1)");
  const RealMatrix x = invert(mat_add(w1, mat_mul(w2, w3, fc), fc),
                              "inversion 4 of 4 (W1 + W2*W3)");
  const RealMatrix y = mat_neg(mat_mul(w3, x, fc));

  const RealMatrix zj =
      mat_add(mat_neg(mat_mul(v1, x, fc)), mat_mul(v2, y, fc), fc);
  const RealMatrix wk = mat_add(mat_mul(v1, y, fc), mat_mul(v2, x, fc), fc);

  return {QuatMatrix{x, y, zj, wk}, Branch::none, {}, mp};
}

namespace detail {

// Block Schur recursion over H. Each level partitions into a floor(n/2)
// leading block and its Schur complement, spends six half-size quaternion
// products, and bottoms out in scalar quaternion inverses.
inline QuatMatrix schur_step(const QuatMatrix& z, FlopCounter* fc, double* min_leaf,
                             const std::string& path) {
  const std::size_t n = z.rows();
  if (n == 1) {
    const Quaternion q = z.at(0, 0);
    if (fc != nullptr) fc->log_inversion(Field::quat, 1);
    Quaternion qi;
    try {
      qi = quat_inv(q, fc);
    } catch (const SingularScalarError& e) {
      throw NotGenericError(std::string("schur-recursive: singular 1x1 block at ") +
                                (path.empty() ? "top" : path) + ": " + e.what(),
                            path.empty() ? "top" : path);
    }
    *min_leaf = std::min(*min_leaf, quat_abs(q));
    QuatMatrix out(1, 1);
    out.set(0, 0, qi);
    return out;
  }
  const std::size_t n1 = n / 2;
  const std::size_t n2 = n - n1;
  const QuatMatrix z11 = block(z, 0, 0, n1, n1);
  const QuatMatrix z12 = block(z, 0, n1, n1, n2);
  const QuatMatrix z21 = block(z, n1, 0, n2, n1);
  const QuatMatrix z22 = block(z, n1, n1, n2, n2);

  const QuatMatrix t11 = schur_step(z11, fc, min_leaf, path + ".leading");
  const QuatMatrix u2 = mat_mul(t11, z12, fc);
  const QuatMatrix u3 = mat_mul(z21, t11, fc);
  const QuatMatrix schur = mat_sub(z22, mat_mul(u3, z12, fc), fc);
  const QuatMatrix t22 = schur_step(schur, fc, min_leaf, path + ".schur");
  const QuatMatrix u5 = mat_mul(t22, u3, fc);

  QuatMatrix r(n, n);
  set_block(r, 0, 0, mat_add(t11, mat_mul(u2, u5, fc), fc));
  set_block(r, 0, n1, mat_neg(mat_mul(u2, t22, fc)));
  set_block(r, n1, 0, mat_neg(u5));
  set_block(r, n1, n1, t22);
  return r;
}

}  // namespace detail

/// Algorithm 6: recursive Schur-complement inversion entirely over H,
/// with scalar quaternion inverses at the n = 1 leaves. min_pivot reports
/// the smallest leaf scalar magnitude encountered.
inline InversionReport invert_schur_recursive(const QuatMatrix& z,
                                              FlopCounter* fc = nullptr) {
  detail::require_square(z.rows(), z.cols(), "invert_schur_recursive");
  double min_leaf = std::numeric_limits<double>::infinity();
  QuatMatrix inv = detail::schur_step(z, fc, &min_leaf, "");
  return {std::move(inv), Branch::none, {}, min_leaf};
}

inline InversionReport invert_with(Algorithm alg, const QuatMatrix& z,
                                   FlopCounter* fc = nullptr) {
  switch (alg) {
    case Algorithm::complex_frobenius: return invert_complex_frobenius(z, fc);
    case Algorithm::real_frobenius: return invert_real_frobenius(z, fc);
    case Algorithm::complex_adjoint: return invert_complex_adjoint(z, fc);
    case Algorithm::real_adjoint: return invert_real_adjoint(z, fc);
    case Algorithm::skew_real: return invert_skew_real(z, fc);
    case Algorithm::schur_recursive: return invert_schur_recursive(z, fc);
  }
  throw UsageError("unknown algorithm id " +
                   std::to_string(static_cast<int>(alg)));
}

/// Runs one algorithm, optionally with flop counting; the report's `flops`
/// snapshot covers exactly this call.
inline InversionReport invert(Algorithm alg, const QuatMatrix& z,
                              bool count_flops = false) {
  FlopCounter fc;
  InversionReport rep = invert_with(alg, z, count_flops ? &fc : nullptr);
  rep.flops = std::move(fc);
  return rep;
}

}  // namespace quatmat

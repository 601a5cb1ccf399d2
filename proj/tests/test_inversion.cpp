#include <catch2/catch_amalgamated.hpp>

#include <future>
#include <vector>

#include "oracles.hpp"
#include "quatmat/inversion.hpp"
#include "quatmat/metrics.hpp"
#include "quatmat/random.hpp"

using namespace quatmat;

namespace {

QuatMatrix unit_matrix(std::size_t n, int plane) {
  QuatMatrix z(n, n);
  RealMatrix* planes[4] = {&z.a, &z.b, &z.c, &z.d};
  *planes[plane] = RealMatrix::identity(n);
  return z;
}

const std::vector<Algorithm> kAll = {
    Algorithm::complex_frobenius, Algorithm::real_frobenius,
    Algorithm::complex_adjoint,   Algorithm::real_adjoint,
    Algorithm::skew_real,         Algorithm::schur_recursive};

}  // namespace

TEST_CASE("every algorithm inverts the identity") {
  for (Algorithm alg : kAll) {
    const InversionReport rep = invert_with(alg, QuatMatrix::identity(4));
    CHECK(max_abs_diff(rep.inverse, QuatMatrix::identity(4)) <= 1e-15);
  }
}

TEST_CASE("complex frobenius on j*I runs the perplex branch") {
  const QuatMatrix z = unit_matrix(3, 2);  // j * I
  const InversionReport rep = invert_complex_frobenius(z);
  CHECK(rep.branch == Branch::perplex);
  CHECK(max_abs_diff(rep.inverse, mat_neg(z)) <= 1e-15);  // (jI)^{-1} = -jI
}

TEST_CASE("complex frobenius prefers the simplex branch when both apply") {
  QuatMatrix z = QuatMatrix::identity(3);
  z.c = RealMatrix::identity(3);  // Z = (1 + j) I, both halves invertible
  const InversionReport rep = invert_complex_frobenius(z);
  CHECK(rep.branch == Branch::simplex);
  CHECK(right_residual(z, rep.inverse) <= 1e-15);
}

TEST_CASE("adjoint methods invert k*I") {
  const QuatMatrix z = unit_matrix(3, 3);  // k * I
  for (Algorithm alg : {Algorithm::complex_adjoint, Algorithm::real_adjoint}) {
    const InversionReport rep = invert_with(alg, z);
    CHECK(max_abs_diff(rep.inverse, mat_neg(z)) <= 1e-15);
  }
}

TEST_CASE("real frobenius 1x1 matches the scalar conjugate-over-norm") {
  QuatMatrix z(1, 1);
  z.set(0, 0, {1, 1, 1, 1});
  const InversionReport rep = invert_real_frobenius(z);
  const Quaternion q = rep.inverse.at(0, 0);
  CHECK(q.w == Catch::Approx(0.25).margin(1e-15));
  CHECK(q.x == Catch::Approx(-0.25).margin(1e-15));
  CHECK(q.y == Catch::Approx(-0.25).margin(1e-15));
  CHECK(q.z == Catch::Approx(-0.25).margin(1e-15));
}

// Pins the corrected sign conventions (v2 and the k plane); with either sign
// flipped the k plane below comes out +0.25 instead of -0.25.
TEST_CASE("skew real 1x1 regression: k plane sign") {
  QuatMatrix z(1, 1);
  z.set(0, 0, {1, 1, 1, 1});
  const InversionReport rep = invert_skew_real(z);
  const Quaternion q = rep.inverse.at(0, 0);
  CHECK(q.w == Catch::Approx(0.25).margin(1e-15));
  CHECK(q.x == Catch::Approx(-0.25).margin(1e-15));
  CHECK(q.y == Catch::Approx(-0.25).margin(1e-15));
  CHECK(q.z == Catch::Approx(-0.25).margin(1e-15));
}

TEST_CASE("skew real on a purely real matrix reduces to real inversion") {
  QuatMatrix z(3, 3);
  z.a = oracles::random_real_matrix(3, 3, 1201);
  const InversionReport rep = invert_skew_real(z);
  CHECK(max_abs_diff(rep.inverse.a, lu_invert(z.a)) <= 1e-13);
  CHECK(max_abs(rep.inverse.b) == 0.0);
  CHECK(max_abs(rep.inverse.c) == 0.0);
  CHECK(max_abs(rep.inverse.d) == 0.0);
}

TEST_CASE("schur recursion base case and small matrices") {
  QuatMatrix z(1, 1);
  z.set(0, 0, {0.5, -1.0, 0.25, 2.0});
  const InversionReport rep = invert_schur_recursive(z);
  const Quaternion expected = quat_inv(z.at(0, 0));
  const Quaternion got = rep.inverse.at(0, 0);
  CHECK(got.w == expected.w);
  CHECK(got.x == expected.x);
  CHECK(got.y == expected.y);
  CHECK(got.z == expected.z);
}

TEST_CASE("every algorithm matches the adjoint oracle") {
  const struct {
    Algorithm alg;
    std::size_t n;
    double tol;
  } cases[] = {
      {Algorithm::complex_frobenius, 3, 1e-11},
      {Algorithm::real_frobenius, 5, 1e-11},
      {Algorithm::complex_adjoint, 4, 1e-11},
      {Algorithm::real_adjoint, 4, 1e-11},
      {Algorithm::skew_real, 2, 1e-11},
      {Algorithm::schur_recursive, 6, 1e-10},
      {Algorithm::schur_recursive, 7, 1e-10},  // odd split
  };
  for (const auto& c : cases) {
    const QuatMatrix z = random_quat_matrix(c.n, 1300 + c.n);
    const QuatMatrix ref = reference_inverse(z);
    const InversionReport rep = invert_with(c.alg, z);
    CHECK(max_abs_diff(rep.inverse, ref) <= c.tol);
  }
}

TEST_CASE("the oracle itself passes a residual self-check") {
  const QuatMatrix z = random_quat_matrix(3, 1400);
  CHECK(right_residual(z, reference_inverse(z)) <= 1e-12);
  const QuatMatrix ji = unit_matrix(2, 2);
  CHECK(max_abs_diff(reference_inverse(ji), mat_neg(ji)) <= 1e-15);
}

TEST_CASE("two-sided residuals stay in the expected regime") {
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 16u, 32u}) {
    const QuatMatrix z = random_quat_matrix(n, 1500 + n);
    for (Algorithm alg : kAll) {
      const InversionReport rep = invert_with(alg, z);
      CHECK(right_residual(z, rep.inverse) <= 5e-13);
      // left residual via ||Zhat * Z - I||_F / n^2
      QuatMatrix prod = mat_mul(rep.inverse, z);
      for (std::size_t i = 0; i < n; ++i) prod.a(i, i) -= 1.0;
      CHECK(frobenius_norm(prod) / (static_cast<double>(n) * n) <= 5e-13);
    }
  }
}

TEST_CASE("all six algorithms agree pairwise on a random 8x8") {
  const QuatMatrix z = random_quat_matrix(8, 1600);
  std::vector<QuatMatrix> inverses;
  for (Algorithm alg : kAll) inverses.push_back(invert_with(alg, z).inverse);
  for (std::size_t i = 0; i < inverses.size(); ++i) {
    for (std::size_t j = i + 1; j < inverses.size(); ++j) {
      CHECK(max_abs_diff(inverses[i], inverses[j]) <= 1e-10);
    }
  }
}

TEST_CASE("frobenius methods reduce to the complex formula when C = D = 0") {
  for (int t = 0; t < 5; ++t) {
    QuatMatrix z(8, 8);
    z.a = oracles::random_real_matrix(8, 8, 1700 + t);
    z.b = oracles::random_real_matrix(8, 8, 1800 + t);
    const ComplexMatrix ref = oracles::complex_frobenius_ref(z.a, z.b);
    for (Algorithm alg : {Algorithm::complex_frobenius, Algorithm::real_frobenius}) {
      const InversionReport rep = invert_with(alg, z);
      CHECK(max_abs_diff(rep.inverse.a, ref.re) <= 1e-12);
      CHECK(max_abs_diff(rep.inverse.b, ref.im) <= 1e-12);
      CHECK(max_abs(rep.inverse.c) <= 1e-12);
      CHECK(max_abs(rep.inverse.d) <= 1e-12);
    }
  }
}

TEST_CASE("operation-count certificates") {
  const QuatMatrix z = random_quat_matrix(6, 1900);
  {
    FlopCounter fc;
    (void)invert_complex_frobenius(z, &fc);
    CHECK(fc.inversion_count(Field::cplx, 6) == 2);
    CHECK(fc.multiplication_count(Field::cplx, 6) == 3);
    CHECK(fc.inversion_count(Field::cplx) == 2);
    CHECK(fc.multiplication_count(Field::cplx) == 3);
    CHECK(fc.inversion_count(Field::real) == 0);
    CHECK(fc.multiplication_count(Field::real) == 0);
    CHECK(fc.multiplication_count(Field::quat) == 0);
  }
  {
    FlopCounter fc;
    (void)invert_real_frobenius(z, &fc);
    CHECK(fc.inversion_count(Field::real, 6) == 4);
    CHECK(fc.multiplication_count(Field::real, 6) == 13);
    CHECK(fc.inversion_count(Field::real) == 4);
    CHECK(fc.multiplication_count(Field::real) == 13);
    CHECK(fc.inversion_count(Field::cplx) == 0);
  }
  {
    FlopCounter fc;
    (void)invert_skew_real(z, &fc);
    CHECK(fc.inversion_count(Field::real, 6) == 4);
    CHECK(fc.multiplication_count(Field::real, 6) == 16);
    CHECK(fc.inversion_count(Field::real) == 4);
    CHECK(fc.multiplication_count(Field::real) == 16);
  }
  {
    FlopCounter fc;
    (void)invert_complex_adjoint(z, &fc);
    CHECK(fc.inversion_count(Field::cplx, 12) == 1);
    CHECK(fc.inversion_count(Field::cplx) == 1);
    CHECK(fc.multiplication_count(Field::cplx) == 0);
  }
  {
    FlopCounter fc;
    (void)invert_real_adjoint(z, &fc);
    CHECK(fc.inversion_count(Field::real, 24) == 1);
    CHECK(fc.multiplication_count(Field::real) == 0);
  }
  {
    FlopCounter fc;
    (void)invert_schur_recursive(z, &fc);
    CHECK(fc.inversion_count(Field::quat, 1) == 6);  // one scalar inverse per leaf
    CHECK(fc.inversion_count(Field::real) == 0);
    CHECK(fc.inversion_count(Field::cplx) == 0);
  }
}

TEST_CASE("counts survive the perplex fallback uncorrupted") {
  const QuatMatrix z = unit_matrix(4, 2);  // j*I forces the fallback
  FlopCounter fc;
  const InversionReport rep = invert_complex_frobenius(z, &fc);
  CHECK(rep.branch == Branch::perplex);
  CHECK(fc.inversion_count(Field::cplx, 4) == 2);
  CHECK(fc.multiplication_count(Field::cplx, 4) == 3);
}

TEST_CASE("inverting twice returns the original matrix") {
  const QuatMatrix z = random_quat_matrix(8, 2000);
  for (Algorithm alg : kAll) {
    const QuatMatrix once = invert_with(alg, z).inverse;
    const QuatMatrix twice = invert_with(alg, once).inverse;
    CHECK(max_abs_diff(twice, z) <= 1e-9);
  }
}

TEST_CASE("non-generic inputs raise structured errors") {
  {
    // A singular: the real-structured methods cannot start
    const QuatMatrix ji = unit_matrix(3, 2);
    CHECK_THROWS_AS(invert_real_frobenius(ji), NotGenericError);
    CHECK_THROWS_AS(invert_skew_real(ji), NotGenericError);
    try {
      (void)invert_real_frobenius(ji);
    } catch (const NotGenericError& e) {
      CHECK(e.step == "inversion 1 of 4 (A)");
    }
  }
  {
    // both complex halves singular although Z = diag(1, j) is invertible
    QuatMatrix z(2, 2);
    z.a(0, 0) = 1.0;
    z.c(1, 1) = 1.0;
    CHECK_THROWS_AS(invert_complex_frobenius(z), NotGenericError);
    // the schur recursion handles it fine
    const InversionReport rep = invert_schur_recursive(z);
    CHECK(right_residual(z, rep.inverse) <= 1e-15);
  }
  {
    // singular leading 1x1 block carries its recursion path
    QuatMatrix z(2, 2);
    z.a(0, 1) = 1.0;
    z.a(1, 0) = 1.0;
    try {
      (void)invert_schur_recursive(z);
      FAIL("expected NotGenericError");
    } catch (const NotGenericError& e) {
      CHECK(e.step == ".leading");
    }
  }
  {
    const QuatMatrix zero(3, 3);
    CHECK_THROWS_AS(invert_complex_adjoint(zero), SingularMatrixError);
    CHECK_THROWS_AS(invert_real_adjoint(zero), SingularMatrixError);
  }
}

TEST_CASE("reports expose a positive finite min_pivot on generic input") {
  const QuatMatrix z = random_quat_matrix(5, 2100);
  for (Algorithm alg : kAll) {
    const InversionReport rep = invert_with(alg, z);
    CHECK(rep.min_pivot > 0.0);
    CHECK(std::isfinite(rep.min_pivot));
  }
}

TEST_CASE("all algorithms agree pairwise at n = 100") {
  const QuatMatrix z = random_quat_matrix(100, 2200);
  std::vector<QuatMatrix> inverses;
  for (Algorithm alg : kAll) inverses.push_back(invert_with(alg, z).inverse);
  for (std::size_t i = 1; i < inverses.size(); ++i) {
    CHECK(max_abs_diff(inverses[0], inverses[i]) <= 1e-10);
  }
}

TEST_CASE("concurrent inversions reproduce serial results") {
  std::vector<QuatMatrix> inputs;
  for (int t = 0; t < 4; ++t) inputs.push_back(random_quat_matrix(6, 2300 + t));
  std::vector<QuatMatrix> serial;
  for (const auto& z : inputs) serial.push_back(invert_real_frobenius(z).inverse);

  std::vector<std::future<QuatMatrix>> jobs;
  for (const auto& z : inputs) {
    jobs.push_back(std::async(std::launch::async,
                              [&z] { return invert_real_frobenius(z).inverse; }));
  }
  for (int t = 0; t < 4; ++t) {
    CHECK(max_abs_diff(jobs[t].get(), serial[t]) == 0.0);
  }
}

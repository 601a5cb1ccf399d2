#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "quatmat/embeddings.hpp"
#include "quatmat/matrix.hpp"
#include "quatmat/random.hpp"

using namespace quatmat;

TEST_CASE("identity is a left and right unit for mat_mul") {
  const RealMatrix x = oracles::random_real_matrix(4, 4, 17);
  CHECK(max_abs_diff(mat_mul(RealMatrix::identity(4), x), x) == 0.0);
  CHECK(max_abs_diff(mat_mul(x, RealMatrix::identity(4)), x) == 0.0);

  const QuatMatrix z = random_quat_matrix(3, 21);
  CHECK(max_abs_diff(mat_mul(QuatMatrix::identity(3), z), z) == 0.0);
  CHECK(max_abs_diff(mat_mul(z, QuatMatrix::identity(3)), z) == 0.0);
}

TEST_CASE("1x1 quaternion matrices follow the unit table") {
  QuatMatrix i(1, 1), j(1, 1);
  i.set(0, 0, {0, 1, 0, 0});
  j.set(0, 0, {0, 0, 1, 0});
  const QuatMatrix k = mat_mul(i, j);
  const Quaternion q = k.at(0, 0);
  CHECK(q.w == 0.0);
  CHECK(q.x == 0.0);
  CHECK(q.y == 0.0);
  CHECK(q.z == 1.0);
}

TEST_CASE("real mat_mul matches the extended-precision dot-product oracle") {
  const RealMatrix x = oracles::random_real_matrix(3, 3, 4001);
  const RealMatrix y = oracles::random_real_matrix(3, 3, 4002);
  CHECK(max_abs_diff(mat_mul(x, y), oracles::matmul_ref(x, y)) <= 1e-15);

  const RealMatrix a = oracles::random_real_matrix(5, 7, 4003);
  const RealMatrix b = oracles::random_real_matrix(7, 2, 4004);
  CHECK(max_abs_diff(mat_mul(a, b), oracles::matmul_ref(a, b)) <= 1e-14);
}

TEST_CASE("elementwise operations") {
  const RealMatrix x = oracles::random_real_matrix(4, 4, 51);
  const RealMatrix y = oracles::random_real_matrix(4, 4, 52);
  const RealMatrix zero(4, 4);
  CHECK(max_abs_diff(mat_add(x, zero), x) == 0.0);
  CHECK(max_abs(mat_sub(x, x)) == 0.0);
  CHECK(max_abs_diff(mat_sub(mat_add(x, y), y), x) <= 1e-15);
  CHECK(max_abs_diff(mat_neg(mat_neg(x)), x) == 0.0);
  CHECK(max_abs_diff(mat_scale(x, 2.0), mat_add(x, x)) == 0.0);
}

TEST_CASE("shape mismatches raise dimension errors") {
  const RealMatrix x(2, 3), y(2, 3);
  CHECK_THROWS_AS(mat_mul(x, y), DimensionError);
  CHECK_THROWS_AS(mat_add(x, RealMatrix(3, 2)), DimensionError);
  CHECK_THROWS_AS(mat_sub(QuatMatrix(2, 2), QuatMatrix(3, 3)), DimensionError);
}

TEST_CASE("complex mat_mul equals the real-plane expansion bit for bit") {
  const ComplexMatrix x{oracles::random_real_matrix(5, 5, 61),
                        oracles::random_real_matrix(5, 5, 62)};
  const ComplexMatrix y{oracles::random_real_matrix(5, 5, 63),
                        oracles::random_real_matrix(5, 5, 64)};
  const ComplexMatrix p = mat_mul(x, y);
  const RealMatrix re = mat_sub(mat_mul(x.re, y.re), mat_mul(x.im, y.im));
  const RealMatrix im = mat_add(mat_mul(x.re, y.im), mat_mul(x.im, y.re));
  CHECK(max_abs_diff(p.re, re) == 0.0);
  CHECK(max_abs_diff(p.im, im) == 0.0);
}

TEST_CASE("quaternion mat_mul agrees with the real adjoint embedding") {
  const QuatMatrix z = random_quat_matrix(4, 71);
  const QuatMatrix w = random_quat_matrix(4, 72);
  const RealMatrix lhs = real_adjoint(mat_mul(z, w));
  const RealMatrix rhs = mat_mul(real_adjoint(z), real_adjoint(w));
  CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("frobenius norm") {
  CHECK(frobenius_norm(QuatMatrix(3, 3)) == 0.0);
  CHECK(frobenius_norm(QuatMatrix::identity(9)) == 3.0);
  QuatMatrix ipj(1, 1);
  ipj.set(0, 0, {0, 1, 1, 0});
  CHECK(frobenius_norm(ipj) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
}

TEST_CASE("matmul counting is exact at the scalar expansion") {
  {
    FlopCounter fc;
    (void)mat_mul(oracles::random_real_matrix(3, 5, 1), oracles::random_real_matrix(5, 4, 2),
                  &fc);
    CHECK(fc.real_mults == 3u * 5 * 4);
    CHECK(fc.real_adds == 3u * 4 * 4);  // r*c*(m-1)
    CHECK(fc.multiplication_count(Field::real, 3) == 1);
  }
  {
    FlopCounter fc;
    const ComplexMatrix x{oracles::random_real_matrix(4, 4, 3),
                          oracles::random_real_matrix(4, 4, 4)};
    (void)mat_mul(x, x, &fc);
    // n^3 complex products (4 mults, 2 adds) + n^2(n-1) complex adds (2 adds)
    CHECK(fc.real_mults == 4u * 64);
    CHECK(fc.real_adds == 2u * 64 + 2u * 48);
    CHECK(fc.multiplication_count(Field::cplx, 4) == 1);
    CHECK(fc.multiplication_count(Field::real, 4) == 0);
  }
  {
    FlopCounter fc;
    const QuatMatrix z = random_quat_matrix(4, 5);
    (void)mat_mul(z, z, &fc);
    // n^3 quaternion products (16, 12) + n^2(n-1) quaternion adds (4)
    CHECK(fc.real_mults == 16u * 64);
    CHECK(fc.real_adds == 12u * 64 + 4u * 48);
    CHECK(fc.multiplication_count(Field::quat, 4) == 1);
  }
  {
    FlopCounter fc;
    (void)mat_add(oracles::random_real_matrix(6, 6, 7), oracles::random_real_matrix(6, 6, 8),
                  &fc);
    CHECK(fc.real_adds == 36);
    CHECK(fc.real_mults == 0);
  }
}

TEST_CASE("block extraction and insertion round-trip") {
  const QuatMatrix z = random_quat_matrix(5, 91);
  QuatMatrix rebuilt(5, 5);
  set_block(rebuilt, 0, 0, block(z, 0, 0, 2, 2));
  set_block(rebuilt, 0, 2, block(z, 0, 2, 2, 3));
  set_block(rebuilt, 2, 0, block(z, 2, 0, 3, 2));
  set_block(rebuilt, 2, 2, block(z, 2, 2, 3, 3));
  CHECK(max_abs_diff(z, rebuilt) == 0.0);
}

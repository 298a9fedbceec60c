#include <doctest.h>

#include "qaffine/rmatrix.hpp"

using namespace qaffine;

namespace {

CMatrix unit(int k, int i, int j) {
  CMatrix e(k, k);
  e.set(i, j, 1);
  return e;
}

// q sum e_ii(x)e_ii + sum_{i!=j} e_ii(x)e_jj + (q - q^{-1}) sum_{i>j} e_ij(x)e_ji
CMatrix oracle_R(int k) {
  CMatrix r(k * k, k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const QScalar c = i == j ? QScalar::q_pow(1) : QScalar(1);
      r = r + c * kron(unit(k, i, i), unit(k, j, j));
      if (i > j) r = r + QScalar::q_diff() * kron(unit(k, i, j), unit(k, j, i));
    }
  }
  return r;
}

}  // namespace

TEST_CASE("k=2 entries") {
  const CMatrix R = build_R(2);
  const QScalar q = QScalar::q_pow(1);
  CHECK(R.at(0, 0) == q);
  CHECK(R.at(1, 1) == QScalar(1));
  CHECK(R.at(2, 2) == QScalar(1));
  CHECK(R.at(3, 3) == q);
  CHECK(R.at(2, 1) == QScalar::q_diff());
  CHECK(R.at(1, 2).is_zero());
  CHECK(R.entries().size() == 5);
}

TEST_CASE("R agrees with the unit-matrix expansion") {
  for (int k = 1; k <= 4; ++k) CHECK(build_R(k) == oracle_R(k));
  CHECK(build_R(0).rows() == 0);
  CHECK_THROWS_AS(build_R(-1), std::invalid_argument);
}

TEST_CASE("flip matrices") {
  const CMatrix P = build_P(2, 3);
  CHECK(P.rows() == 6);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(P.at(j * 2 + i, i * 3 + j) == QScalar(1));
  }
  CHECK(P.entries().size() == 6);
  CHECK(build_P(3) * build_P(3) == CMatrix::identity(9));
  CHECK(build_P(3, 2) * build_P(2, 3) == CMatrix::identity(6));
}

TEST_CASE("identities for k = 1..4") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(yang_baxter_residual(k).is_zero());
    CHECK(rrp_residual(k).is_zero());
    CHECK(rrp_product_residual(k).is_zero());
    CHECK(rrp_transpose_residual(k).is_zero());
    CHECK(pr_residual(k).is_zero());
    CHECK(inverse_residual(k).is_zero());
    CHECK(check_yang_baxter(k));
    CHECK(check_rrp_identity(k));
  }
}

TEST_CASE("yang-baxter fails for a perturbed R") {
  const int k = 2;
  CMatrix R = build_R(k);
  R.set(1, 2, 1);
  const CMatrix r12 = embed_pair(R, k, 0, 1), r13 = embed_pair(R, k, 0, 2), r23 = embed_pair(R, k, 1, 2);
  CHECK_FALSE((r12 * r13 * r23 - r23 * r13 * r12).is_zero());
}

TEST_CASE("affine scalar identity") {
  for (int k = 1; k <= 3; ++k) {
    for (const CMatrix& m : affine_scalar_residuals(k)) CHECK(m.is_zero());
    for (const CMatrix& m : partial_transpose_commutators(k)) CHECK(m.is_zero());
  }
  const auto [RiT, R] = affine_R_pair(2);
  CHECK(R - RiT == QScalar::q_diff() * build_P(2));
}

TEST_CASE("partial transposes") {
  const int k = 3;
  const CMatrix R = build_R(k);
  CHECK(partial_transpose_1(partial_transpose_1(R, k), k) == R);
  CHECK(partial_transpose_2(partial_transpose_1(R, k), k) == R.transpose());
  const CMatrix R1 = partial_transpose_1(R, k);
  // (e_10 (x) e_01)^{t1} = e_01 (x) e_01
  CHECK(R1.at(0 * k + 0, 1 * k + 1) == QScalar::q_diff());
  CHECK(R1.at(1 * k + 0, 0 * k + 1).is_zero());
}

TEST_CASE("sparse matrix algebra") {
  CMatrix a(2, 2);
  a.set(0, 1, QScalar::q_pow(1));
  a.add(0, 1, -QScalar::q_pow(1));
  CHECK(a.is_zero());
  CHECK_THROWS_AS(CMatrix(2, 2) * CMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(2, 2) + CMatrix(3, 3), std::invalid_argument);
  CHECK(build_R(2).bar() == build_R(2, true));
}

#include <doctest.h>

#include "qaffine/qmatrix.hpp"

using namespace qaffine;

namespace {

FormPtr form4() { return SkewForm::make({{0, 1, 0, -1}, {-1, 0, 2, 0}, {0, -2, 0, 1}, {1, 0, -1, 0}}); }

QElem w(const FormPtr& f, Exponent a, QScalar c = 1) { return QElem::weyl(f, std::move(a), std::move(c)); }

QMatrix mat(const FormPtr& f, int r, int c, const std::vector<QElem>& xs) {
  QMatrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m.at(i, j) = xs[static_cast<size_t>(i * c + j)];
  }
  return m;
}

}  // namespace

TEST_CASE("sheet products place factors in order") {
  const FormPtr f = form4();
  const QMatrix A = mat(f, 2, 1, {w(f, {1, 0, 0, 0}), w(f, {0, 1, 0, 0})});
  const QMatrix B = mat(f, 1, 2, {w(f, {0, 0, 1, 0}), w(f, {0, 0, 0, 1})});
  const QMatrix s12 = sheet_product(A, B, SheetOrder::Sheet12);
  const QMatrix s21 = sheet_product(A, B, SheetOrder::Sheet21);
  REQUIRE(s12.rows() == 2);
  REQUIRE(s12.cols() == 2);
  for (int i = 0; i < 2; ++i) {
    for (int l = 0; l < 2; ++l) {
      CHECK(s12.at(i, l) == A.at(i, 0) * B.at(0, l));
      CHECK(s21.at(i, l) == B.at(0, l) * A.at(i, 0));
    }
  }
  CHECK(s12 != s21);
}

TEST_CASE("classical action and products") {
  const FormPtr f = form4();
  const QMatrix M = mat(f, 2, 2, {w(f, {1, 0, 0, 0}), w(f, {0, 1, 0, 0}), QElem(f), w(f, {0, 0, 1, 1})});
  CMatrix c(2, 2);
  c.set(0, 0, QScalar::q_pow(1));
  c.set(1, 0, 1);
  const QMatrix left = classical_act(c, M, Side::Left);
  CHECK(left.at(0, 0) == QScalar::q_pow(1) * M.at(0, 0));
  CHECK(left.at(1, 1) == M.at(0, 1));
  const QMatrix right = classical_act(c, M, Side::Right);
  CHECK(right.at(0, 0) == QScalar::q_pow(1) * M.at(0, 0) + M.at(0, 1));
  CHECK(matmul(M, QMatrix::identity(2, f)) == M);
  CHECK(matrix_power(M, 0) == QMatrix::identity(2, f));
  CHECK(matrix_power(M, 3) == matmul(M, matmul(M, M)));
  CHECK_THROWS(matmul(M, QMatrix(3, 1, f)));
}

TEST_CASE("transpose and blocks") {
  const FormPtr f = form4();
  const QMatrix M = mat(f, 2, 3, {w(f, {1, 0, 0, 0}), w(f, {0, 1, 0, 0}), w(f, {0, 0, 1, 0}),
                                  w(f, {0, 0, 0, 1}), QElem(f), w(f, {1, 1, 0, 0})});
  CHECK(M.transpose().at(2, 1) == M.at(1, 2));
  const QMatrix b = M.block(0, 1, 2, 2);
  CHECK(b.at(1, 1) == M.at(1, 2));
  QMatrix z = QMatrix::zero(2, 3, f);
  z.set_block(0, 1, b);
  CHECK(z.at(0, 1) == M.at(0, 1));
  CHECK(z.at(0, 0).is_zero());
  CHECK(M.render("X").rfind("X[0,0] = (1*v^0) * w[1,0,0,0]\n", 0) == 0);
}

TEST_CASE("inverse of a unit monomial and a triangular matrix") {
  const FormPtr f = form4();
  const QMatrix one = mat(f, 1, 1, {w(f, {1, -1, 0, 2}, QScalar::monomial(-1, 3))});
  const QMatrix inv = invert_restricted(one);
  CHECK(inv.at(0, 0) == w(f, {-1, 1, 0, -2}, QScalar::monomial(-1, -3)));

  const QElem a = w(f, {1, 0, 0, 0}), d = w(f, {0, 1, 0, 0}), g = w(f, {0, 0, 1, 0}, QScalar::q_diff());
  const QMatrix L = mat(f, 2, 2, {a, QElem(f), g, d});
  const QMatrix Li = invert_restricted(L);
  const QElem ai = invert_monomial(a), di = invert_monomial(d);
  // [[a,0],[g,d]]^{-1} = [[a^{-1},0],[-d^{-1} g a^{-1}, d^{-1}]]
  CHECK(Li == mat(f, 2, 2, {ai, QElem(f), -(di * g * ai), di}));
}

TEST_CASE("block-triangular inverse matches the block formula") {
  const FormPtr f = form4();
  const QElem x = w(f, {1, 0, 0, 0}), y = w(f, {0, 1, 0, 0}), z = w(f, {0, 0, 1, 0}), t = w(f, {0, 0, 0, 1});
  // A = [[x, y], [0, z]] is upper triangular; D = [t]; B couples them.
  QMatrix M(3, 3, f);
  M.at(0, 0) = x;
  M.at(0, 1) = y;
  M.at(1, 1) = z;
  M.at(0, 2) = x + y;
  M.at(1, 2) = z * t;
  M.at(2, 2) = t;
  const QMatrix Ai = invert_restricted(M.block(0, 0, 2, 2));
  const QMatrix Di = invert_restricted(M.block(2, 2, 1, 1));
  QMatrix expect(3, 3, f);
  expect.set_block(0, 0, Ai);
  expect.set_block(2, 2, Di);
  expect.set_block(0, 2, -matmul(matmul(Ai, M.block(0, 2, 2, 1)), Di));
  CHECK(invert_restricted(M) == expect);
  CHECK(matmul(M, expect) == QMatrix::identity(3, f));
}

TEST_CASE("matrices outside the supported class are rejected") {
  const FormPtr f = form4();
  const QElem x = w(f, {1, 0, 0, 0});
  CHECK_THROWS_AS(invert_restricted(mat(f, 1, 1, {x + QElem::scalar(f, 1)})), NotInvertibleInSupportedClass);
  CHECK_THROWS_AS(invert_restricted(mat(f, 1, 1, {QElem(f)})), NotInvertibleInSupportedClass);
  CHECK_THROWS_AS(invert_restricted(mat(f, 2, 2, {x, x, x, x})), NotInvertibleInSupportedClass);
  CHECK_THROWS_AS(invert_restricted(QMatrix(2, 3, f)), NotInvertibleInSupportedClass);
  CHECK(invert_restricted(QMatrix(0, 0, f)).rows() == 0);
}

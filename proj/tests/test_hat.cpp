#include <doctest.h>

#include "qaffine/hat.hpp"

using namespace qaffine;

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < b.size(); ++k) {
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// Inverse of the lower all-ones r x r block: 1 on the diagonal, -1 just below.
IntMatrix bidiagonal(int r) {
  IntMatrix m(static_cast<size_t>(r), std::vector<BigInt>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    if (i > 0) m[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = -1;
  }
  return m;
}

}  // namespace

TEST_CASE("hat matrix") {
  CHECK(hat_matrix(1) == IntMatrix{{1, 1}, {1, 1}});
  const IntMatrix h = hat_matrix(4);
  REQUIRE(h.size() == 5);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) CHECK(h[static_cast<size_t>(i)][static_cast<size_t>(j)] == (i - j + 1 >= 0 ? 1 : 0));
  }
  // Upper-right r x r block is lower unitriangular all-ones.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(h[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] == (j <= i ? 1 : 0));
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(-3, 1) == -3);
}

TEST_CASE("inverse powers by repeated multiplication") {
  for (int r = 1; r <= 8; ++r) {
    IntMatrix acc = bidiagonal(r);
    for (int p = 1; p <= 8; ++p) {
      CAPTURE(r);
      CAPTURE(p);
      CHECK(hat_inverse_power(r, p) == acc);
      acc = multiply(acc, bidiagonal(r));
    }
  }
}

TEST_CASE("f values") {
  for (FrpMode mode : {FrpMode::Matrix, FrpMode::Recursion, FrpMode::Closed}) {
    CHECK(f_rp(3, 5, mode) == 3);
    CHECK(f_rp(2, 2, mode) == 0);
    CHECK(f_rp(1, 7, mode) == 1);
    CHECK(f_rp(4, 1, mode) == 1);
  }
  // [1,1] [[1,0],[-2,1]] [1,1]^T
  CHECK(f_rp(2, 2, FrpMode::Matrix) == BigInt(1 + 1 - 2));
  for (int r = 1; r <= 8; ++r) {
    for (int p = 1; p <= 8; ++p) {
      const BigInt m = f_rp(r, p, FrpMode::Matrix);
      CHECK(m == f_rp(r, p, FrpMode::Recursion));
      CHECK(m == f_rp(r, p, FrpMode::Closed));
      if (1 < p && p <= r) CHECK(m == 0);
    }
  }
  CHECK_THROWS(f_rp(0, 1, FrpMode::Closed));
}

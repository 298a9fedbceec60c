#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qaffine {

using BigInt = mpz_class;

/// Laurent polynomial in v = q^{1/2} with integer coefficients.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long c);  // NOLINT: implicit integer promotion is intended
  QScalar(const BigInt& c);  // NOLINT

  static QScalar monomial(const BigInt& c, int v_exp);
  static QScalar v_pow(int k) { return monomial(1, k); }
  static QScalar q_pow(int k) { return monomial(1, 2 * k); }
  /// q - q^{-1}
  static QScalar q_diff();

  bool is_zero() const { return terms_.empty(); }
  /// Single term with coefficient +1 or -1.
  bool is_unit() const;
  /// Inverse of a unit; throws std::domain_error otherwise.
  QScalar unit_inverse() const;

  QScalar bar() const;
  QScalar shifted(int v_exp) const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  bool operator==(const QScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  /// Terms sorted by ascending v-exponent, all coefficients nonzero.
  const std::vector<std::pair<int, BigInt>>& terms() const { return terms_; }
  BigInt coeff(int v_exp) const;

  /// "c*v^k + ..." in ascending exponent order, "0" when zero.
  std::string to_string() const;

 private:
  void add_term(int v_exp, const BigInt& c);

  std::vector<std::pair<int, BigInt>> terms_;
};

}  // namespace qaffine

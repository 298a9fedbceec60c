#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/qscalar.hpp"

namespace qaffine {

using Exponent = std::vector<int>;

/// Integer skew form E = 2*epsilon on the generators of a quantum torus.
class SkewForm {
 public:
  /// Throws std::invalid_argument unless `e2` is a skew-symmetric n x n matrix.
  SkewForm(int n, std::vector<int> e2);
  static std::shared_ptr<const SkewForm> make(const std::vector<std::vector<int>>& e2);

  int rank() const { return n_; }
  int at(int i, int j) const { return e2_[static_cast<size_t>(i * n_ + j)]; }
  /// a^T E b
  long pairing(const Exponent& a, const Exponent& b) const;
  const std::vector<int>& raw() const { return e2_; }

 private:
  int n_;
  std::vector<int> e2_;
};

using FormPtr = std::shared_ptr<const SkewForm>;

/// Block-diagonal sum of forms, generators concatenated in order.
FormPtr direct_sum(const std::vector<FormPtr>& forms);

/// Element of the quantum torus: finite sum of scalars times Weyl-ordered monomials.
class QElem {
 public:
  struct Term {
    Exponent exp;
    QScalar coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  QElem() = default;
  explicit QElem(FormPtr form) : form_(std::move(form)) {}

  static QElem weyl(FormPtr form, Exponent a, QScalar coeff = QScalar(1));
  static QElem scalar(FormPtr form, const QScalar& c);

  const FormPtr& form() const { return form_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term whose coefficient is a unit.
  bool is_unit_monomial() const;

  QElem operator-() const;
  QElem& operator+=(const QElem& o);
  QElem& operator-=(const QElem& o);
  QElem& operator*=(const QScalar& c);
  friend QElem operator+(QElem a, const QElem& b) { return a += b; }
  friend QElem operator-(QElem a, const QElem& b) { return a -= b; }
  friend QElem operator*(QElem a, const QScalar& c) { return a *= c; }
  friend QElem operator*(const QScalar& c, QElem a) { return a *= c; }
  /// Noncommutative product in the quantum torus.
  friend QElem operator*(const QElem& x, const QElem& y);
  bool operator==(const QElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const QElem& o) const { return !(*this == o); }

  /// Canonical form "(coeff) * w[a1,...,an] + ...", terms sorted by exponent; "0" when zero.
  std::string render() const;

 private:
  void add_term(const Exponent& a, const QScalar& c);
  void check_compatible(const QElem& o) const;
  void adopt_form(const QElem& o);

  FormPtr form_;
  std::vector<Term> terms_;
};

struct NotAUnit : std::domain_error {
  using std::domain_error::domain_error;
};

QElem qmul(const QElem& x, const QElem& y);
QElem invert_monomial(const QElem& x);
std::string render(const QElem& x);

}  // namespace qaffine

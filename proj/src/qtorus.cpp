#include "qaffine/qtorus.hpp"

#include <algorithm>
#include <map>

namespace qaffine {

SkewForm::SkewForm(int n, std::vector<int> e2) : n_(n), e2_(std::move(e2)) {
  if (n < 0 || e2_.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::invalid_argument("skew form: expected an n x n matrix");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != -at(j, i)) {
        throw std::invalid_argument("skew form: not skew-symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
  }
}

FormPtr SkewForm::make(const std::vector<std::vector<int>>& e2) {
  const int n = static_cast<int>(e2.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n * n));
  for (const auto& row : e2) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("skew form: ragged matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<const SkewForm>(n, std::move(flat));
}

long SkewForm::pairing(const Exponent& a, const Exponent& b) const {
  long s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    long row = 0;
    for (int j = 0; j < n_; ++j) row += static_cast<long>(at(i, j)) * b[static_cast<size_t>(j)];
    s += a[static_cast<size_t>(i)] * row;
  }
  return s;
}

FormPtr direct_sum(const std::vector<FormPtr>& forms) {
  int n = 0;
  for (const auto& f : forms) n += f->rank();
  std::vector<int> e(static_cast<size_t>(n * n), 0);
  int off = 0;
  for (const auto& f : forms) {
    for (int i = 0; i < f->rank(); ++i) {
      for (int j = 0; j < f->rank(); ++j) e[static_cast<size_t>((off + i) * n + off + j)] = f->at(i, j);
    }
    off += f->rank();
  }
  return std::make_shared<const SkewForm>(n, std::move(e));
}

QElem QElem::weyl(FormPtr form, Exponent a, QScalar coeff) {
  if (static_cast<int>(a.size()) != form->rank()) {
    throw std::invalid_argument("weyl: exponent length does not match the form");
  }
  QElem x(std::move(form));
  if (!coeff.is_zero()) x.terms_.push_back({std::move(a), std::move(coeff)});
  return x;
}

QElem QElem::scalar(FormPtr form, const QScalar& c) {
  Exponent zero(static_cast<size_t>(form->rank()), 0);
  return weyl(std::move(form), std::move(zero), c);
}

bool QElem::is_unit_monomial() const { return terms_.size() == 1 && terms_[0].coeff.is_unit(); }

void QElem::check_compatible(const QElem& o) const {
  if (form_ && o.form_ && form_ != o.form_ && form_->raw() != o.form_->raw()) {
    throw std::invalid_argument("quantum torus elements over different forms");
  }
}

void QElem::adopt_form(const QElem& o) {
  check_compatible(o);
  if (!form_) form_ = o.form_;
}

void QElem::add_term(const Exponent& a, const QScalar& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                             [](const Term& t, const Exponent& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == a) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term{a, c});
  }
}

QElem QElem::operator-() const {
  QElem r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

QElem& QElem::operator+=(const QElem& o) {
  adopt_form(o);
  for (const auto& t : o.terms_) add_term(t.exp, t.coeff);
  return *this;
}

QElem& QElem::operator-=(const QElem& o) {
  adopt_form(o);
  for (const auto& t : o.terms_) add_term(t.exp, -t.coeff);
  return *this;
}

QElem& QElem::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

QElem operator*(const QElem& x, const QElem& y) {
  x.check_compatible(y);
  QElem r(x.form_ ? x.form_ : y.form_);
  if (x.is_zero() || y.is_zero()) return r;
  const SkewForm& f = *r.form_;
  const size_t n = static_cast<size_t>(f.rank());
  std::map<Exponent, QScalar> acc;
  std::vector<long> row(n);
  Exponent sum(n);
  for (const auto& tx : x.terms_) {
    // row = a^T E
    for (size_t j = 0; j < n; ++j) {
      long s = 0;
      for (size_t i = 0; i < n; ++i) s += static_cast<long>(tx.exp[i]) * f.at(static_cast<int>(i), static_cast<int>(j));
      row[j] = s;
    }
    for (const auto& ty : y.terms_) {
      long k = 0;
      for (size_t j = 0; j < n; ++j) {
        k += row[j] * ty.exp[j];
        sum[j] = tx.exp[j] + ty.exp[j];
      }
      QScalar c = (tx.coeff * ty.coeff).shifted(static_cast<int>(-k));
      auto [it, inserted] = acc.try_emplace(sum, c);
      if (!inserted) it->second += c;
    }
  }
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
  }
  return r;
}

QElem qmul(const QElem& x, const QElem& y) { return x * y; }

QElem invert_monomial(const QElem& x) {
  if (!x.is_unit_monomial()) throw NotAUnit("element is not a unit monomial: " + x.render());
  const auto& t = x.terms()[0];
  Exponent neg = t.exp;
  for (auto& e : neg) e = -e;
  // :w^a:^{-1} = :w^{-a}: because a^T E a = 0
  return QElem::weyl(x.form(), std::move(neg), t.coeff.unit_inverse());
}

std::string QElem::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += "(" + terms_[i].coeff.to_string() + ") * w[";
    for (size_t j = 0; j < terms_[i].exp.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(terms_[i].exp[j]);
    }
    out += "]";
  }
  return out;
}

std::string render(const QElem& x) { return x.render(); }

}  // namespace qaffine

#include "qaffine/qscalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qaffine {

QScalar::QScalar(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

QScalar::QScalar(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QScalar QScalar::monomial(const BigInt& c, int v_exp) {
  QScalar s;
  if (c != 0) s.terms_.emplace_back(v_exp, c);
  return s;
}

QScalar QScalar::q_diff() { return q_pow(1) - q_pow(-1); }

bool QScalar::is_unit() const {
  return terms_.size() == 1 && abs(terms_[0].second) == 1;
}

QScalar QScalar::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("scalar is not a unit: " + to_string());
  return monomial(terms_[0].second, -terms_[0].first);
}

QScalar QScalar::bar() const {
  QScalar s;
  s.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    s.terms_.emplace_back(-it->first, it->second);
  }
  return s;
}

QScalar QScalar::shifted(int v_exp) const {
  QScalar s = *this;
  for (auto& t : s.terms_) t.first += v_exp;
  return s;
}

QScalar QScalar::operator-() const {
  QScalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

void QScalar::add_term(int v_exp, const BigInt& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v_exp,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == v_exp) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c != 0) {
    terms_.insert(it, {v_exp, c});
  }
}

QScalar& QScalar::operator+=(const QScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

BigInt QScalar::coeff(int v_exp) const {
  for (const auto& [e, c] : terms_) {
    if (e == v_exp) return c;
  }
  return 0;
}

std::string QScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].second.get_str() + "*v^" + std::to_string(terms_[i].first);
  }
  return out;
}

}  // namespace qaffine

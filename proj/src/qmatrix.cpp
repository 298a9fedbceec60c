#include "qaffine/qmatrix.hpp"

#include <optional>

namespace qaffine {

QMatrix::QMatrix(int rows, int cols, FormPtr form)
    : rows_(rows), cols_(cols), form_(form), data_(static_cast<size_t>(rows * cols), QElem(form)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

QMatrix QMatrix::identity(int n, FormPtr form) {
  QMatrix m(n, n, form);
  for (int i = 0; i < n; ++i) m.at(i, i) = QElem::scalar(form, 1);
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

QMatrix QMatrix::operator-() const {
  QMatrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  if (!form_) form_ = o.form_;
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  if (!form_) form_ = o.form_;
  return *this;
}

QMatrix operator*(const QScalar& s, QMatrix a) {
  for (auto& e : a.data_) e *= s;
  return a;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_, form_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
    throw std::out_of_range("block out of range");
  }
  QMatrix b(nr, nc, form_);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  }
  return b;
}

void QMatrix::set_block(int r0, int c0, const QMatrix& b) {
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
  }
}

std::string QMatrix::render(const std::string& name) const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out += name + "[" + std::to_string(i) + "," + std::to_string(j) + "] = " + at(i, j).render() + "\n";
    }
  }
  return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  QMatrix r(a.rows(), b.cols(), a.form() ? a.form() : b.form());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const QElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const QElem& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

QMatrix sheet_product(const QMatrix& a, const QMatrix& b, SheetOrder order) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.form() ? a.form() : b.form());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const QElem& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          const QElem& y = b.at(k, l);
          if (y.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = order == SheetOrder::Sheet12 ? x * y : y * x;
        }
      }
    }
  }
  return r;
}

QMatrix classical_act(const CMatrix& c, const QMatrix& m, Side side) {
  if (side == Side::Left) {
    if (c.cols() != m.rows()) throw std::invalid_argument("classical_act shape mismatch");
    QMatrix r(c.rows(), m.cols(), m.form());
    for (const auto& [key, s] : c.entries()) {
      for (int j = 0; j < m.cols(); ++j) {
        const QElem& y = m.at(key.second, j);
        if (!y.is_zero()) r.at(key.first, j) += y * s;
      }
    }
    return r;
  }
  if (m.cols() != c.rows()) throw std::invalid_argument("classical_act shape mismatch");
  QMatrix r(m.rows(), c.cols(), m.form());
  for (const auto& [key, s] : c.entries()) {
    for (int i = 0; i < m.rows(); ++i) {
      const QElem& y = m.at(i, key.first);
      if (!y.is_zero()) r.at(i, key.second) += y * s;
    }
  }
  return r;
}

QMatrix matrix_power(const QMatrix& m, int p) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: not square");
  if (p < 0) throw std::invalid_argument("matrix_power: negative exponent");
  QMatrix r = QMatrix::identity(m.rows(), m.form());
  for (int i = 0; i < p; ++i) r = matmul(r, m);
  return r;
}

namespace {

bool is_identity(const QMatrix& m) { return m == QMatrix::identity(m.rows(), m.form()); }

bool unit_diagonal(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_unit_monomial()) return false;
  }
  return true;
}

bool zero_block(const QMatrix& m, int r0, int c0, int nr, int nc) {
  for (int i = r0; i < r0 + nr; ++i) {
    for (int j = c0; j < c0 + nc; ++j) {
      if (!m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::optional<QMatrix> invert_triangular(const QMatrix& m) {
  const int n = m.rows();
  if (!unit_diagonal(m)) return std::nullopt;
  QMatrix inv(n, n, m.form());
  std::vector<QElem> dinv;
  for (int i = 0; i < n; ++i) dinv.push_back(invert_monomial(m.at(i, i)));
  bool lower = true, upper = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (j > i) lower = false;
      if (j < i) upper = false;
    }
  }
  if (lower) {
    for (int j = 0; j < n; ++j) {
      inv.at(j, j) = dinv[static_cast<size_t>(j)];
      for (int i = j + 1; i < n; ++i) {
        QElem s(m.form());
        for (int k = j; k < i; ++k) s += m.at(i, k) * inv.at(k, j);
        inv.at(i, j) = -(dinv[static_cast<size_t>(i)] * s);
      }
    }
    return inv;
  }
  if (upper) {
    for (int j = 0; j < n; ++j) {
      inv.at(j, j) = dinv[static_cast<size_t>(j)];
      for (int i = j - 1; i >= 0; --i) {
        QElem s(m.form());
        for (int k = i + 1; k <= j; ++k) s += m.at(i, k) * inv.at(k, j);
        inv.at(i, j) = -(dinv[static_cast<size_t>(i)] * s);
      }
    }
    return inv;
  }
  return std::nullopt;
}

std::optional<QMatrix> invert_any(const QMatrix& m);

std::optional<QMatrix> invert_block_triangular(const QMatrix& m) {
  const int n = m.rows();
  for (int s = 1; s < n; ++s) {
    const int t = n - s;
    const bool lower = zero_block(m, 0, s, s, t);
    const bool upper = zero_block(m, s, 0, t, s);
    if (!lower && !upper) continue;
    const QMatrix a = m.block(0, 0, s, s), c = m.block(s, s, t, t);
    auto ai = invert_any(a);
    if (!ai) continue;
    auto ci = invert_any(c);
    if (!ci) continue;
    QMatrix inv(n, n, m.form());
    inv.set_block(0, 0, *ai);
    inv.set_block(s, s, *ci);
    if (lower) {
      inv.set_block(s, 0, -matmul(matmul(*ci, m.block(s, 0, t, s)), *ai));
    } else {
      inv.set_block(0, s, -matmul(matmul(*ai, m.block(0, s, s, t)), *ci));
    }
    return inv;
  }
  return std::nullopt;
}

std::optional<QMatrix> invert_any(const QMatrix& m) {
  if (m.rows() == 0) return m;
  if (m.rows() == 1) {
    if (!m.at(0, 0).is_unit_monomial()) return std::nullopt;
    QMatrix r(1, 1, m.form());
    r.at(0, 0) = invert_monomial(m.at(0, 0));
    return r;
  }
  if (auto t = invert_triangular(m)) return t;
  return invert_block_triangular(m);
}

}  // namespace

QMatrix invert_restricted(const QMatrix& m) {
  if (m.rows() != m.cols()) throw NotInvertibleInSupportedClass("matrix is not square");
  auto inv = invert_any(m);
  if (!inv) throw NotInvertibleInSupportedClass("matrix is not in the supported invertible class");
  if (!is_identity(matmul(m, *inv)) || !is_identity(matmul(*inv, m))) {
    throw NotInvertibleInSupportedClass("computed inverse failed the two-sided check");
  }
  return *inv;
}

}  // namespace qaffine

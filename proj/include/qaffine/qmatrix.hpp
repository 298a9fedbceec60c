#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/qtorus.hpp"
#include "qaffine/rmatrix.hpp"

namespace qaffine {

/// Dense matrix with entries in a quantum torus.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols, FormPtr form);

  static QMatrix zero(int rows, int cols, FormPtr form) { return QMatrix(rows, cols, std::move(form)); }
  static QMatrix identity(int n, FormPtr form);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FormPtr& form() const { return form_; }
  const QElem& at(int r, int c) const { return data_[idx(r, c)]; }
  QElem& at(int r, int c) { return data_[idx(r, c)]; }
  bool is_zero() const;

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QScalar& s, QMatrix a);
  bool operator==(const QMatrix& o) const;
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix transpose() const;
  QMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const QMatrix& b);

  /// One line per entry: "name[i,j] = <render>", row-major.
  std::string render(const std::string& name = "M") const;

 private:
  size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(r * cols_ + c);
  }

  int rows_ = 0;
  int cols_ = 0;
  FormPtr form_;
  std::vector<QElem> data_;
};

enum class SheetOrder { Sheet12, Sheet21 };
enum class Side { Left, Right };

struct NotInvertibleInSupportedClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QMatrix matmul(const QMatrix& a, const QMatrix& b);
/// Entry ((i,k),(j,l)) is A_ij B_kl (Sheet12) or B_kl A_ij (Sheet21).
QMatrix sheet_product(const QMatrix& a, const QMatrix& b, SheetOrder order);
/// C*M or M*C with a scalar matrix C.
QMatrix classical_act(const CMatrix& c, const QMatrix& m, Side side);
/// Inverse for unit monomials, unit-diagonal triangular and block-triangular matrices.
/// Both products with the result are checked to be the identity.
QMatrix invert_restricted(const QMatrix& m);
/// Nonnegative powers only.
QMatrix matrix_power(const QMatrix& m, int p);

}  // namespace qaffine

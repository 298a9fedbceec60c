#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/qscalar.hpp"

namespace qaffine {

/// Sparse matrix with QScalar entries.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QScalar at(int r, int c) const;
  void set(int r, int c, const QScalar& v);
  void add(int r, int c, const QScalar& v);
  const std::map<std::pair<int, int>, QScalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  CMatrix operator-() const;
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const QScalar& s, const CMatrix& a);
  bool operator==(const CMatrix& o) const;

  CMatrix transpose() const;
  /// Apply the bar involution to every entry.
  CMatrix bar() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, QScalar> entries_;
};

/// Kronecker product; row (i,k) maps to i*b.rows()+k.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// R-matrix on V_k (x) V_k. With `inverse_q` the parameter q is replaced by q^{-1}.
CMatrix build_R(int k, bool inverse_q = false);
/// R(q^{-1}) transposed.
CMatrix build_R_inv_T(int k);
/// Flip V_k (x) V_k.
CMatrix build_P(int k);
/// Flip V_a (x) V_b -> V_b (x) V_a.
CMatrix build_P(int a, int b);

/// Partial transposes on V_k (x) V_k.
CMatrix partial_transpose_1(const CMatrix& m, int k);
CMatrix partial_transpose_2(const CMatrix& m, int k);

/// Lift a matrix on V_k (x) V_k to the factors (x,y) of V_k^{(x)3}, 0-based x < y.
CMatrix embed_pair(const CMatrix& m, int k, int x, int y);

/// (R^{-T}, R): coefficients of the spectral R-matrix lambda R^{-T} - mu R.
std::pair<CMatrix, CMatrix> affine_R_pair(int k);

bool check_yang_baxter(int k);
/// Both forms: R R^T = (q - q^{-1}) R P + I and R - R^{-T} = R^T - R^{-1} = (q - q^{-1}) P.
bool check_rrp_identity(int k);

/// Each returns the residual matrix, zero on success. The overloads taking R
/// use R.bar() for R(q^{-1}).
CMatrix yang_baxter_residual(const CMatrix& R, int k);
CMatrix rrp_residual(const CMatrix& R, int k);
CMatrix rrp_product_residual(const CMatrix& R, int k);
CMatrix rrp_transpose_residual(const CMatrix& R, int k);
CMatrix pr_residual(const CMatrix& R, int k);
CMatrix inverse_residual(const CMatrix& R, int k);

CMatrix yang_baxter_residual(int k);
/// R - R(q^{-1})^T - (q - q^{-1}) P
CMatrix rrp_residual(int k);
/// R R^T - (q - q^{-1}) R P - I
CMatrix rrp_product_residual(int k);
/// R^T - R^{-1} - (q - q^{-1}) P
CMatrix rrp_transpose_residual(int k);
/// P R P - R^T
CMatrix pr_residual(int k);
/// R * R(q^{-1}) - I
CMatrix inverse_residual(int k);
/// Coefficients of u^2, uv, v^2 in (uR - vR^{-T})(uR^{-1} - vR^T) - (u^2 + v^2 - (q^2+q^{-2})uv) I.
std::vector<CMatrix> affine_scalar_residuals(int k);
/// Commutators of the transposed affine pair with the affine pair, four coefficient matrices.
std::vector<CMatrix> partial_transpose_commutators(int k);

}  // namespace qaffine

#include "qaffine/rmatrix.hpp"

#include <stdexcept>

namespace qaffine {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

QScalar CMatrix::at(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? QScalar() : it->second;
}

void CMatrix::set(int r, int c, const QScalar& v) {
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

void CMatrix::add(int r, int c, const QScalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

CMatrix CMatrix::operator-() const {
  CMatrix r = *this;
  for (auto& [k, v] : r.entries_) v = -v;
  return r;
}

static void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b);
  CMatrix r = a;
  for (const auto& [k, v] : b.entries_) r.add(k.first, k.second, v);
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) { return a + (-b); }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<std::vector<std::pair<int, const QScalar*>>> brows(static_cast<size_t>(b.rows()));
  for (const auto& [k, v] : b.entries_) brows[static_cast<size_t>(k.first)].emplace_back(k.second, &v);
  CMatrix r(a.rows(), b.cols());
  for (const auto& [k, v] : a.entries_) {
    for (const auto& [c, w] : brows[static_cast<size_t>(k.second)]) r.add(k.first, c, v * *w);
  }
  return r;
}

CMatrix operator*(const QScalar& s, const CMatrix& a) {
  CMatrix r(a.rows(), a.cols());
  for (const auto& [k, v] : a.entries_) r.set(k.first, k.second, s * v);
  return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (const auto& [k, v] : entries_) r.set(k.second, k.first, v);
  return r;
}

CMatrix CMatrix::bar() const {
  CMatrix r(rows_, cols_);
  for (const auto& [k, v] : entries_) r.set(k.first, k.second, v.bar());
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      r.set(ka.first * b.rows() + kb.first, ka.second * b.cols() + kb.second, va * vb);
    }
  }
  return r;
}

CMatrix build_R(int k, bool inverse_q) {
  if (k < 0) throw std::invalid_argument("build_R: negative dimension");
  const int s = inverse_q ? -1 : 1;
  CMatrix r(k * k, k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int idx = i * k + j;
      r.set(idx, idx, i == j ? QScalar::q_pow(s) : QScalar(1));
      if (j < i) {
        // e_ij (x) e_ji
        r.set(i * k + j, j * k + i, QScalar::q_pow(s) - QScalar::q_pow(-s));
      }
    }
  }
  return r;
}

CMatrix build_R_inv_T(int k) { return build_R(k, true).transpose(); }

CMatrix build_P(int k) { return build_P(k, k); }

CMatrix build_P(int a, int b) {
  CMatrix p(b * a, a * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) p.set(j * a + i, i * b + j, 1);
  }
  return p;
}

CMatrix partial_transpose_1(const CMatrix& m, int k) {
  CMatrix r(m.rows(), m.cols());
  for (const auto& [key, v] : m.entries()) {
    const int i = key.first / k, a = key.first % k;
    const int j = key.second / k, b = key.second % k;
    r.set(j * k + a, i * k + b, v);
  }
  return r;
}

CMatrix partial_transpose_2(const CMatrix& m, int k) {
  CMatrix r(m.rows(), m.cols());
  for (const auto& [key, v] : m.entries()) {
    const int i = key.first / k, a = key.first % k;
    const int j = key.second / k, b = key.second % k;
    r.set(i * k + b, j * k + a, v);
  }
  return r;
}

CMatrix embed_pair(const CMatrix& m, int k, int x, int y) {
  if (!(0 <= x && x < y && y < 3)) throw std::invalid_argument("embed_pair: bad factors");
  const int n = k * k * k;
  CMatrix r(n, n);
  const int z = 3 - x - y;
  for (const auto& [key, v] : m.entries()) {
    const int rx = key.first / k, ry = key.first % k;
    const int cx = key.second / k, cy = key.second % k;
    for (int t = 0; t < k; ++t) {
      int row[3], col[3];
      row[x] = rx; row[y] = ry; row[z] = t;
      col[x] = cx; col[y] = cy; col[z] = t;
      r.set((row[0] * k + row[1]) * k + row[2], (col[0] * k + col[1]) * k + col[2], v);
    }
  }
  return r;
}

CMatrix yang_baxter_residual(const CMatrix& R, int k) {
  const CMatrix r12 = embed_pair(R, k, 0, 1);
  const CMatrix r13 = embed_pair(R, k, 0, 2);
  const CMatrix r23 = embed_pair(R, k, 1, 2);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

CMatrix rrp_residual(const CMatrix& R, int k) {
  return R - R.bar().transpose() - QScalar::q_diff() * build_P(k);
}

CMatrix rrp_product_residual(const CMatrix& R, int k) {
  return R * R.transpose() - QScalar::q_diff() * (R * build_P(k)) - CMatrix::identity(k * k);
}

CMatrix rrp_transpose_residual(const CMatrix& R, int k) {
  return R.transpose() - R.bar() - QScalar::q_diff() * build_P(k);
}

CMatrix pr_residual(const CMatrix& R, int k) {
  const CMatrix P = build_P(k);
  return P * R * P - R.transpose();
}

CMatrix inverse_residual(const CMatrix& R, int k) { return R * R.bar() - CMatrix::identity(k * k); }

CMatrix yang_baxter_residual(int k) { return yang_baxter_residual(build_R(k), k); }
CMatrix rrp_residual(int k) { return rrp_residual(build_R(k), k); }
CMatrix rrp_product_residual(int k) { return rrp_product_residual(build_R(k), k); }
CMatrix rrp_transpose_residual(int k) { return rrp_transpose_residual(build_R(k), k); }
CMatrix pr_residual(int k) { return pr_residual(build_R(k), k); }
CMatrix inverse_residual(int k) { return inverse_residual(build_R(k), k); }

std::pair<CMatrix, CMatrix> affine_R_pair(int k) { return {build_R_inv_T(k), build_R(k)}; }

bool check_yang_baxter(int k) { return yang_baxter_residual(k).is_zero(); }

bool check_rrp_identity(int k) {
  return rrp_residual(k).is_zero() && rrp_product_residual(k).is_zero() && rrp_transpose_residual(k).is_zero();
}

std::vector<CMatrix> affine_scalar_residuals(int k) {
  const CMatrix R = build_R(k), Ri = build_R(k, true);
  const CMatrix RiT = Ri.transpose(), RT = R.transpose();
  const CMatrix I = CMatrix::identity(k * k);
  return {
      R * Ri - I,
      (QScalar::q_pow(2) + QScalar::q_pow(-2)) * I - R * RT - RiT * Ri,
      RiT * RT - I,
  };
}

std::vector<CMatrix> partial_transpose_commutators(int k) {
  const CMatrix R = build_R(k), RiT = build_R_inv_T(k);
  const CMatrix R1 = partial_transpose_1(R, k), RiT1 = partial_transpose_1(RiT, k);
  std::vector<CMatrix> out;
  for (const CMatrix* a : {&RiT1, &R1}) {
    for (const CMatrix* b : {&RiT, &R}) out.push_back(*a * *b - *b * *a);
  }
  return out;
}

}  // namespace qaffine

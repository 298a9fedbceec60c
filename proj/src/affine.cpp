#include "qaffine/affine.hpp"

namespace qaffine {

TSeries::TSeries(int rows, int cols, FormPtr form, int support_lo, int support_hi)
    : rows_(rows), cols_(cols), form_(std::move(form)), support_lo_(support_lo), support_hi_(support_hi) {}

void TSeries::set(int level, QMatrix m) {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("series level has the wrong shape");
  if (level < support_lo_ || level > support_hi_) throw std::invalid_argument("level outside the declared support");
  if (computed_lo_ > computed_hi_) {
    computed_lo_ = computed_hi_ = level;
  } else if (level == computed_lo_ - 1) {
    computed_lo_ = level;
  } else if (level == computed_hi_ + 1) {
    computed_hi_ = level;
  } else if (level < computed_lo_ || level > computed_hi_) {
    throw std::invalid_argument("series levels must be filled contiguously");
  }
  levels_[level] = std::move(m);
}

bool TSeries::available(int level) const {
  return level < support_lo_ || level > support_hi_ || (level >= computed_lo_ && level <= computed_hi_);
}

QMatrix TSeries::get(int level) const {
  if (level < support_lo_ || level > support_hi_) return QMatrix::zero(rows_, cols_, form_);
  auto it = levels_.find(level);
  if (it == levels_.end()) {
    throw TruncationError("level " + std::to_string(level) + " is beyond the computed truncation [" +
                          std::to_string(computed_lo_) + ", " + std::to_string(computed_hi_) + "]");
  }
  return it->second;
}

TSeries TSeries::transposed_reversed() const {
  auto neg = [](int x) { return x == INT_MIN ? INT_MAX : x == INT_MAX ? INT_MIN : -x; };
  TSeries r(cols_, rows_, form_, neg(support_hi_), neg(support_lo_));
  for (int n = computed_hi_; n >= computed_lo_; --n) r.set(-n, levels_.at(n).transpose());
  return r;
}

TSeries levels_T(const BlockTransport& b, int K) {
  TSeries t(b.split.n2, b.split.n1, b.M.form(), 0, INT_MAX);
  t.set(0, b.M21);
  QMatrix left = b.M22;  // M22 M12^{k-1}
  for (int k = 1; k <= K; ++k) {
    t.set(k, matmul(left, b.M11));
    left = matmul(left, b.M12);
  }
  return t;
}

QMatrix groupoid_defect(const BlockTransport& b) {
  const QMatrix inv = invert_restricted(b.M12);
  return matmul(matmul(b.M22, inv), b.M11) - b.M21;
}

LoopGenerators loop_generators(const BlockTransport& b, int K, bool groupoid) {
  const FormPtr& f = b.M.form();
  const int n2 = b.split.n2, n1 = b.split.n1;
  LoopGenerators g{TSeries(n2, n1, f, 0, INT_MAX), TSeries(n2, n1, f, INT_MIN, -1)};
  const QMatrix inv = invert_restricted(b.M12);
  if (groupoid && !(matmul(matmul(b.M22, inv), b.M11) - b.M21).is_zero()) {
    throw GroupoidViolation("M22 M12^{-1} M11 != M21");
  }
  // M22 M12^p for p = -(K+1) .. K-1
  std::map<int, QMatrix> left;
  left[0] = b.M22;
  for (int p = 1; p < K; ++p) left[p] = matmul(left[p - 1], b.M12);
  for (int p = -1; p >= -(K + 1); --p) left[p] = matmul(left[p + 1], inv);

  for (int k = 0; k <= K; ++k) {
    if (!groupoid && k == 0) {
      g.plus.set(0, b.M21);
    } else {
      g.plus.set(k, matmul(left.at(k - 1), b.M11));
    }
  }
  for (int k = 1; k <= K; ++k) {
    QMatrix m = matmul(left.at(groupoid ? -k - 1 : -k), b.M11);
    if (!groupoid && k == 1) m -= b.M21;
    g.minus.set(-k, m);
  }
  return g;
}

TSeries reflection_series(const TSeries& plus, const TSeries& minus, int K) {
  TSeries a(plus.cols(), plus.cols(), plus.form(), 0, INT_MAX);
  for (int k = 0; k <= K; ++k) {
    QMatrix s = QMatrix::zero(plus.cols(), plus.cols(), plus.form());
    for (int j = 1; j <= k + 1; ++j) s += matmul(minus.get(-j).transpose(), plus.get(k + 1 - j));
    a.set(k, s);
  }
  return a;
}

}  // namespace qaffine

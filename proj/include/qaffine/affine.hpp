#pragma once

#include <climits>
#include <map>
#include <stdexcept>

#include "qaffine/network.hpp"

namespace qaffine {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupoidViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated two-sided family of matrix coefficients.
/// Levels outside the support are zero; levels inside the support but
/// outside the computed range raise TruncationError.
class TSeries {
 public:
  TSeries() = default;
  TSeries(int rows, int cols, FormPtr form, int support_lo, int support_hi);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FormPtr& form() const { return form_; }
  int support_lo() const { return support_lo_; }
  int support_hi() const { return support_hi_; }
  int computed_lo() const { return computed_lo_; }
  int computed_hi() const { return computed_hi_; }

  void set(int level, QMatrix m);
  QMatrix get(int level) const;
  bool available(int level) const;
  const std::map<int, QMatrix>& levels() const { return levels_; }

  /// Level n of the result is level -n of this series, transposed.
  TSeries transposed_reversed() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  FormPtr form_;
  int support_lo_ = INT_MIN;
  int support_hi_ = INT_MAX;
  int computed_lo_ = 1;
  int computed_hi_ = 0;
  std::map<int, QMatrix> levels_;
};

/// T_0 = M21 and T_k = M22 M12^{k-1} M11 for 1 <= k <= K.
TSeries levels_T(const BlockTransport& b, int K);

struct LoopGenerators {
  TSeries plus;   ///< levels 0..K
  TSeries minus;  ///< T^-_k stored at level -k, k = 1..K
};

/// Default mode subtracts M21 from T^-_1; groupoid mode shifts the M12 powers
/// and requires M22 M12^{-1} M11 = M21.
LoopGenerators loop_generators(const BlockTransport& b, int K, bool groupoid = false);

/// M22 M12^{-1} M11 - M21.
QMatrix groupoid_defect(const BlockTransport& b);

/// A^{(k)} = sum over i + j = k + 1, j >= 1 of (T^-_j)^T T^+_i, for k = 0..K.
TSeries reflection_series(const TSeries& plus, const TSeries& minus, int K);

}  // namespace qaffine

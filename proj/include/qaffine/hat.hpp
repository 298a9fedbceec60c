#pragma once

#include <vector>

#include "qaffine/qscalar.hpp"

namespace qaffine {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// (r+1) x (r+1) matrix with entry 1 iff i - j + 1 >= 0.
IntMatrix hat_matrix(int r);
/// Binomial coefficient, also for negative upper argument.
BigInt binomial(long n, long k);
/// p-th power of the inverse of the r x r lower all-ones block.
IntMatrix hat_inverse_power(int r, int p);

enum class FrpMode { Matrix, Recursion, Closed };
BigInt f_rp(int r, int p, FrpMode mode);

}  // namespace qaffine

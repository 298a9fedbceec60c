#include "qaffine/hat.hpp"

#include <stdexcept>

namespace qaffine {

namespace {

IntMatrix zeros(int n, int m) {
  return IntMatrix(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(m), 0));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r = zeros(static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

// Inverse of a unipotent lower-triangular matrix by forward substitution.
IntMatrix unipotent_inverse(const IntMatrix& l) {
  const int n = static_cast<int>(l.size());
  IntMatrix inv = zeros(n, n);
  for (int j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (int i = j + 1; i < n; ++i) {
      BigInt s = 0;
      for (int k = j; k < i; ++k) s += l[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

}  // namespace

IntMatrix hat_matrix(int r) {
  if (r < 1) throw std::invalid_argument("hat_matrix: r must be positive");
  IntMatrix m = zeros(r + 1, r + 1);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) m[i][j] = (i - j + 1 >= 0) ? 1 : 0;
  }
  return m;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    BigInt b = binomial(k - n - 1, k);
    return (k % 2) ? BigInt(-b) : b;
  }
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntMatrix hat_inverse_power(int r, int p) {
  const IntMatrix h = hat_matrix(r);
  IntMatrix m12 = zeros(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m12[i][j] = h[i][j + 1];
  }
  const IntMatrix inv = unipotent_inverse(m12);
  IntMatrix pw = zeros(r, r);
  for (int i = 0; i < r; ++i) pw[i][i] = 1;
  for (int t = 0; t < p; ++t) pw = multiply(pw, inv);
  return pw;
}

BigInt f_rp(int r, int p, FrpMode mode) {
  if (r < 1 || p < 1) throw std::invalid_argument("f_rp: r and p must be positive");
  switch (mode) {
    case FrpMode::Closed: {
      BigInt b = binomial(p - 2, r - 1);
      return (r - 1) % 2 ? BigInt(-b) : b;
    }
    case FrpMode::Recursion: {
      // table[rr][pp] for rr <= r, pp <= p
      std::vector<std::vector<BigInt>> f(static_cast<size_t>(r + 1), std::vector<BigInt>(static_cast<size_t>(p + 1), 0));
      for (int pp = 1; pp <= p; ++pp) {
        for (int rr = 1; rr <= r; ++rr) {
          if (pp == 1 || rr == 1) {
            f[rr][pp] = 1;
          } else {
            f[rr][pp] = f[rr][pp - 1] - f[rr - 1][pp - 1];
          }
        }
      }
      return f[r][p];
    }
    case FrpMode::Matrix: {
      // rows split (r | 1), columns split (1 | r)
      const IntMatrix h = hat_matrix(r);
      IntMatrix m11 = zeros(r, 1), m22 = zeros(1, r);
      for (int i = 0; i < r; ++i) {
        m11[i][0] = h[i][0];
        m22[0][i] = h[r][i + 1];
      }
      return multiply(multiply(m22, hat_inverse_power(r, p)), m11)[0][0];
    }
  }
  throw std::invalid_argument("f_rp: unknown mode");
}

}  // namespace qaffine

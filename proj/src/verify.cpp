#include "qaffine/verify.hpp"

#include <chrono>
#include <json.hpp>

namespace qaffine {

namespace {

const QScalar& h() {
  static const QScalar v = QScalar::q_diff();
  return v;
}

QMatrix ident(int n, const FormPtr& f) { return QMatrix::identity(n, f); }

// A on sheet 1, V_d on sheet 2.
QMatrix s1(const QMatrix& a, int d) { return sheet_product(a, ident(d, a.form()), SheetOrder::Sheet12); }
// V_d on sheet 1, B on sheet 2.
QMatrix s2(int d, const QMatrix& b) { return sheet_product(ident(d, b.form()), b, SheetOrder::Sheet12); }
// (1)A (2)B
QMatrix one_two(const QMatrix& a, const QMatrix& b) { return sheet_product(a, b, SheetOrder::Sheet12); }
// (2)B (1)A
QMatrix two_one(const QMatrix& a, const QMatrix& b) { return sheet_product(a, b, SheetOrder::Sheet21); }

QMatrix L(const CMatrix& c, const QMatrix& m) { return classical_act(c, m, Side::Left); }
QMatrix Rt(const QMatrix& m, const CMatrix& c) { return classical_act(c, m, Side::Right); }

CMatrix R(int k) { return build_R(k); }
CMatrix Rinv(int k) { return build_R(k, true); }
CMatrix RiT(int k) { return build_R_inv_T(k); }

template <class F>
CheckReport timed(const std::string& name, F&& body) {
  CheckReport r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string fmt(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

void CheckReport::add(const std::string& relation, const QMatrix& residual) {
  bool ok = true;
  for (int i = 0; i < residual.rows(); ++i) {
    for (int j = 0; j < residual.cols(); ++j) {
      if (residual.at(i, j).is_zero()) continue;
      ok = false;
      residuals.push_back({relation + "[" + std::to_string(i) + "," + std::to_string(j) + "]",
                           residual.at(i, j).render()});
    }
  }
  relations.emplace_back(relation, ok);
  passed = passed && ok;
}

void CheckReport::add(const std::string& relation, const CMatrix& residual) {
  for (const auto& [key, v] : residual.entries()) {
    residuals.push_back({relation + "[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]",
                         v.to_string()});
  }
  relations.emplace_back(relation, residual.is_zero());
  passed = passed && residual.is_zero();
}

void CheckReport::add_flag(const std::string& relation, bool ok, const std::string& detail) {
  if (!ok) residuals.push_back({relation, detail});
  relations.emplace_back(relation, ok);
  passed = passed && ok;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& [k, ok] : other.relations) relations.emplace_back(prefix + k, ok);
  for (const auto& res : other.residuals) residuals.push_back({prefix + res.index, res.value});
  passed = passed && other.passed;
}

namespace {

nlohmann::ordered_json report_json(const CheckReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["passed"] = r.passed;
  j["residuals"] = nlohmann::ordered_json::array();
  for (const auto& res : r.residuals) j["residuals"].push_back({{"index", res.index}, {"value", res.value}});
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& [k, ok] : r.relations) j["relations"].push_back({{"name", k}, {"passed", ok}});
  j["timing_ms"] = with_timing ? nlohmann::ordered_json(r.timing_ms) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& r, bool with_timing) { return report_json(r, with_timing).dump(2); }

std::string reports_to_json(const std::vector<CheckReport>& rs, bool with_timing) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rs) a.push_back(report_json(r, with_timing));
  return a.dump(2);
}

std::string report_summary(const CheckReport& r) {
  std::string s = std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name;
  for (const auto& [k, v] : r.parameters) s += " " + k + "=" + v;
  size_t failed = 0;
  for (const auto& rel : r.relations) failed += rel.second ? 0 : 1;
  s += "  (" + std::to_string(r.relations.size() - failed) + "/" + std::to_string(r.relations.size()) +
       " relations)";
  return s;
}

CheckReport check_rmatrix(const CMatrix& Rk, int k) {
  return timed("rmatrix", [&](CheckReport& r) {
    if (Rk.rows() != k * k || Rk.cols() != k * k) throw std::invalid_argument("R must act on V_k (x) V_k");
    r.param("k", std::to_string(k));
    r.add("yang_baxter", yang_baxter_residual(Rk, k));
    r.add("rrp_difference", rrp_residual(Rk, k));
    r.add("rrp_product", rrp_product_residual(Rk, k));
    r.add("rrp_transpose", rrp_transpose_residual(Rk, k));
    r.add("pr", pr_residual(Rk, k));
    r.add("inverse", inverse_residual(Rk, k));
  });
}

CheckReport check_rmatrix(int k) { return check_rmatrix(build_R(k), k); }

CheckReport check_rmatrix_affine(int k) {
  return timed("rmatrix_affine", [&](CheckReport& r) {
    r.param("k", std::to_string(k));
    const auto sc = affine_scalar_residuals(k);
    r.add("scalar_u2", sc[0]);
    r.add("scalar_uv", sc[1]);
    r.add("scalar_v2", sc[2]);
    const auto cm = partial_transpose_commutators(k);
    const char* names[] = {"t1_commute_RiT1_RiT", "t1_commute_RiT1_R", "t1_commute_R1_RiT", "t1_commute_R1_R"};
    for (size_t i = 0; i < cm.size(); ++i) r.add(names[i], cm[i]);
    for (int m = 0; m <= k; ++m) {
      // Block form of R_k under the split (m | k - m).
      const int n = k - m;
      const CMatrix Rk = R(k);
      // Rows/cols of the blocks: (a,b) with a, b each in the first or second part.
      auto index_set = [&](bool first_a, bool first_b) {
        std::vector<int> idx;
        for (int a = 0; a < k; ++a) {
          if ((a < m) != first_a) continue;
          for (int b = 0; b < k; ++b) {
            if ((b < m) == first_b) idx.push_back(a * k + b);
          }
        }
        return idx;
      };
      auto restrict = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        CMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i) {
          for (size_t j = 0; j < cols.size(); ++j) b.set(static_cast<int>(i), static_cast<int>(j), Rk.at(rows[i], cols[j]));
        }
        return b;
      };
      const auto s11 = index_set(true, true), s12 = index_set(true, false);
      const auto s21 = index_set(false, true), s22 = index_set(false, false);
      const std::string tag = "block_m" + std::to_string(m);
      r.add(tag + "_11", restrict(s11, s11) - R(m));
      r.add(tag + "_22", restrict(s22, s22) - R(n));
      r.add(tag + "_12_12", restrict(s12, s12) - CMatrix::identity(m * n));
      r.add(tag + "_21_21", restrict(s21, s21) - CMatrix::identity(m * n));
      // The (21) rows pick up (q - q^{-1}) P from the (12) columns.
      r.add(tag + "_21_12", restrict(s21, s12) - h() * build_P(m, n));
      r.add(tag + "_12_21", restrict(s12, s21));
    }
  });
}

CheckReport check_rtt(const QMatrix& M) {
  return timed("rtt", [&](CheckReport& r) {
    r.param("rows", std::to_string(M.rows()));
    r.param("cols", std::to_string(M.cols()));
    r.add("rtt", L(R(M.rows()), one_two(M, M)) - Rt(two_one(M, M), R(M.cols())));
  });
}

CheckReport check_block_algebra(const BlockTransport& B) {
  return timed("blocks", [&](CheckReport& r) {
    const int n1 = B.split.n1, m = B.split.m, n2 = B.split.n2;
    r.param("split", std::to_string(n1) + "," + std::to_string(m) + "," + std::to_string(n2));
    const std::pair<const char*, const QMatrix*> blocks[] = {
        {"M11", &B.M11}, {"M12", &B.M12}, {"M21", &B.M21}, {"M22", &B.M22}};
    for (const auto& [name, X] : blocks) {
      const int a = X->rows(), b = X->cols();
      r.add(std::string("same_") + name + "_R", L(R(a), one_two(*X, *X)) - Rt(two_one(*X, *X), R(b)));
      r.add(std::string("same_") + name + "_RiT", L(RiT(a), one_two(*X, *X)) - Rt(two_one(*X, *X), RiT(b)));
    }
    r.add("mixed_11_12", two_one(B.M12, B.M11) - L(R(m), one_two(B.M12, B.M11)));
    r.add("mixed_12_22", one_two(B.M12, B.M22) - Rt(two_one(B.M12, B.M22), R(m)));
    r.add("mixed_11_21", one_two(B.M11, B.M21) - Rt(two_one(B.M11, B.M21), R(n1)));
    r.add("mixed_21_22", two_one(B.M22, B.M21) - L(R(n2), one_two(B.M22, B.M21)));
    r.add("commute_12_21", one_two(B.M12, B.M21) - two_one(B.M12, B.M21));
    r.add("commutator_11_22", one_two(B.M11, B.M22) - two_one(B.M11, B.M22) -
                                  h() * Rt(two_one(B.M12, B.M21), build_P(n1, m)));
  });
}

CheckReport check_affine_summed(const TSeries& T, int k, int p) {
  return timed("affine_summed", [&](CheckReport& r) {
    if (k < p || p < 0) throw std::invalid_argument("affine_summed needs k >= p >= 0");
    r.param("k", std::to_string(k));
    r.param("p", std::to_string(p));
    const int no = T.rows(), ni = T.cols();
    const QMatrix Tk = T.get(k), Tp = T.get(p);
    QMatrix res = L(R(no), one_two(Tk, Tp)) - Rt(two_one(Tk, Tp), R(ni));
    for (int m = 1; m <= p; ++m) {
      const QMatrix a = T.get(k + m), b = T.get(p - m);
      res += h() * L(build_P(no), one_two(a, b));
      res -= h() * Rt(two_one(a, b), build_P(ni));
    }
    r.add("summed" + fmt(k, p), res);
  });
}

QMatrix spectral_residual(const TSeries& X, const TSeries& Y, int a, int b) {
  const int ro = X.rows(), ci = X.cols();
  if (Y.rows() != ro || Y.cols() != ci) throw std::invalid_argument("spectral relation needs equal shapes");
  const QMatrix Xa = X.get(a), Xa1 = X.get(a + 1), Yb = Y.get(b), Yb1 = Y.get(b + 1);
  return L(RiT(ro), one_two(Xa1, Yb)) - L(R(ro), one_two(Xa, Yb1)) - Rt(two_one(Xa1, Yb), RiT(ci)) +
         Rt(two_one(Xa, Yb1), R(ci));
}

CheckReport check_spectral_componentwise(const TSeries& X, const TSeries& Y, int a, int b) {
  return timed("spectral_componentwise", [&](CheckReport& r) {
    r.param("a", std::to_string(a));
    r.param("b", std::to_string(b));
    r.add("componentwise" + fmt(a, b), spectral_residual(X, Y, a, b));
  });
}

CheckReport check_telescoping(const TSeries& T, int k, int p) {
  return timed("telescoping", [&](CheckReport& r) {
    r.param("k", std::to_string(k));
    r.param("p", std::to_string(p));
    const int no = T.rows(), ni = T.cols();
    const QMatrix Tk = T.get(k), Tp = T.get(p);
    QMatrix summed = L(R(no), one_two(Tk, Tp)) - Rt(two_one(Tk, Tp), R(ni));
    for (int m = 1; m <= p; ++m) {
      const QMatrix a = T.get(k + m), b = T.get(p - m);
      summed += h() * L(build_P(no), one_two(a, b));
      summed -= h() * Rt(two_one(a, b), build_P(ni));
    }
    QMatrix total = summed;
    for (int m = 1; m <= p + 1; ++m) {
      const int a = k + m - 1, b = p - m;
      // The level a + 1 factor meets Y_{-1} = 0 when b = -1.
      if (b == -1 && !T.available(a + 1)) {
        const QMatrix Xa = T.get(a), Y0 = T.get(0);
        total += -(L(R(no), one_two(Xa, Y0))) + Rt(two_one(Xa, Y0), R(ni));
      } else {
        total += spectral_residual(T, T, a, b);
      }
    }
    r.add("telescoping" + fmt(k, p), total);
  });
}

std::vector<int> componentwise_indices(const TSeries& X) {
  std::vector<int> out;
  const long lo = static_cast<long>(X.computed_lo()) - 1, hi = X.computed_hi();
  auto in_support = [&](long n) { return n >= X.support_lo() && n <= X.support_hi(); };
  for (long a = lo; a <= hi; ++a) {
    if (!X.available(static_cast<int>(a)) || !X.available(static_cast<int>(a + 1))) continue;
    if (!in_support(a) && !in_support(a + 1)) continue;
    out.push_back(static_cast<int>(a));
  }
  return out;
}

CheckReport check_loop_algebra(const LoopGenerators& g) {
  return timed("loop", [&](CheckReport& r) {
    r.param("order", std::to_string(g.plus.computed_hi()));
    const std::pair<const char*, std::pair<const TSeries*, const TSeries*>> rels[] = {
        {"R++", {&g.plus, &g.plus}},
        {"R+-", {&g.plus, &g.minus}},
        {"R--", {&g.minus, &g.minus}},
        {"R-+", {&g.minus, &g.plus}},
    };
    for (const auto& [name, xy] : rels) {
      for (int a : componentwise_indices(*xy.first)) {
        for (int b : componentwise_indices(*xy.second)) {
          r.add(std::string(name) + fmt(a, b), spectral_residual(*xy.first, *xy.second, a, b));
        }
      }
    }
  });
}

CheckReport check_subalgebra(const QMatrix& T0, const QMatrix& T1m) {
  return timed("subalgebra", [&](CheckReport& r) {
    const int no = T0.rows(), ni = T0.cols();
    r.add("T0-T0_R", L(R(no), one_two(T0, T0)) - Rt(two_one(T0, T0), R(ni)));
    r.add("T0-T0_RiT", L(RiT(no), one_two(T0, T0)) - Rt(two_one(T0, T0), RiT(ni)));
    r.add("T0-T1_R", L(R(no), one_two(T1m, T0)) - Rt(two_one(T1m, T0), R(ni)));
    r.add("T1-T1_R", L(R(no), one_two(T1m, T1m)) - Rt(two_one(T1m, T1m), R(ni)));
    r.add("T1-T1_RiT", L(RiT(no), one_two(T1m, T1m)) - Rt(two_one(T1m, T1m), RiT(ni)));
  });
}

CheckReport check_auxiliary(const BlockTransport& B) {
  return timed("auxiliary", [&](CheckReport& r) {
    const int n1 = B.split.n1, m = B.split.m, n2 = B.split.n2;
    const QMatrix N = invert_restricted(B.M12);
    const QMatrix X = matmul(matmul(B.M22, N), B.M11);
    r.add("inv_22", matmul(Rt(s2(m, B.M22), Rinv(m)), s1(N, m)) - one_two(N, B.M22));
    r.add("inv_11", matmul(Rt(s1(N, m), Rinv(m)), s2(m, B.M11)) - two_one(N, B.M11));
    r.add("inv_12_12", Rt(one_two(N, N), R(m)) - L(R(m), two_one(N, N)));
    r.add("X_22", L(R(n2), one_two(X, B.M22)) - two_one(X, B.M22) -
                      h() * Rt(L(R(n2), one_two(B.M22, B.M21)), build_P(n1, m)));
    r.add("X_11", Rt(one_two(X, B.M11), Rinv(n1)) - two_one(X, B.M11) +
                      h() * Rt(one_two(B.M21, B.M11), build_P(n1)));
  });
}

CheckReport check_groupoid(const BlockTransport& B) {
  return timed("groupoid", [&](CheckReport& r) { r.add("groupoid", groupoid_defect(B)); });
}

QMatrix reflection_residual(const QMatrix& A) {
  const int n = A.rows();
  const CMatrix Rn = R(n), Rt1 = partial_transpose_1(R(n), n);
  const QMatrix A1 = s1(A, n), A2 = s2(n, A);
  return matmul(Rt(L(Rn, A1), Rt1), A2) - Rt(matmul(Rt(A2, Rt1), A1), Rn);
}

CheckReport check_reflection_A0(const QMatrix& A0) {
  return timed("reflection", [&](CheckReport& r) {
    if (A0.rows() != A0.cols()) throw std::invalid_argument("reflection equation needs a square matrix");
    r.add("reflection", reflection_residual(A0));
  });
}

bool reflection_affine_checkable(int a, int b, int K) {
  const std::pair<int, int> terms[] = {{a, b}, {a + 1, b + 1}, {a - 1, b + 1}, {a, b + 2}};
  for (const auto& [x, y] : terms) {
    if (x >= 0 && y >= 0 && (x > K || y > K)) return false;
  }
  return true;
}

QMatrix reflection_affine_residual(const TSeries& A, int a, int b) {
  const int n = A.rows();
  const CMatrix Rn = R(n), RiTn = RiT(n);
  const CMatrix X = partial_transpose_1(RiTn, n), Y = partial_transpose_1(Rn, n);
  QMatrix res = QMatrix::zero(n * n, n * n, A.form());
  auto lhs = [&](const CMatrix& outer, int x, const CMatrix& mid, int y) -> QMatrix {
    if (x < 0 || y < 0) return QMatrix::zero(n * n, n * n, A.form());
    return matmul(Rt(L(outer, s1(A.get(x), n)), mid), s2(n, A.get(y)));
  };
  auto rhs = [&](int y, const CMatrix& mid, int x, const CMatrix& outer) -> QMatrix {
    if (x < 0 || y < 0) return QMatrix::zero(n * n, n * n, A.form());
    return Rt(matmul(Rt(s2(n, A.get(y)), mid), s1(A.get(x), n)), outer);
  };
  res += lhs(RiTn, a, X, b);
  res -= lhs(RiTn, a + 1, Y, b + 1);
  res -= lhs(Rn, a - 1, X, b + 1);
  res += lhs(Rn, a, Y, b + 2);
  res -= rhs(b, X, a, RiTn);
  res += rhs(b + 1, X, a - 1, Rn);
  res += rhs(b + 1, Y, a + 1, RiTn);
  res -= rhs(b + 2, Y, a, Rn);
  return res;
}

CheckReport check_reflection_affine(const TSeries& A, int K) {
  return timed("reflection_affine", [&](CheckReport& r) {
    if (A.rows() != A.cols()) throw std::invalid_argument("reflection equation needs square levels");
    if (!A.available(K)) throw TruncationError("reflection series not computed to order " + std::to_string(K));
    r.param("order", std::to_string(K));
    int checked = 0;
    for (int a = -1; a <= K + 1; ++a) {
      for (int b = -2; b <= K; ++b) {
        if (!reflection_affine_checkable(a, b, K)) continue;
        ++checked;
        r.add("bidegree" + fmt(a, b), reflection_affine_residual(A, a, b));
      }
    }
    r.param("bidegrees", std::to_string(checked));
  });
}

CheckReport check_transposed_loop(const TSeries& T) {
  return timed("transposed_loop", [&](CheckReport& r) {
    const TSeries S = T.transposed_reversed();
    for (int a : componentwise_indices(S)) {
      for (int b : componentwise_indices(S)) r.add("transposed" + fmt(a, b), spectral_residual(S, S, a, b));
    }
  });
}

CheckReport check_disc_reflection(const QMatrix& M) {
  return timed("disc_reflection", [&](CheckReport& r) {
    if (M.rows() % 2) throw std::invalid_argument("disc reflection needs an even number of rows");
    const int n2 = M.rows() / 2, n1 = M.cols();
    r.param("n1", std::to_string(n1));
    r.param("n2", std::to_string(n2));
    const QMatrix A = matmul(M.block(0, 0, n2, n1).transpose(), M.block(n2, 0, n2, n1));
    bool upper = true;
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < i; ++j) upper = upper && A.at(i, j).is_zero();
    }
    r.param("upper_triangular", upper ? "true" : "false");
    r.add("reflection", reflection_residual(A));
  });
}

QMatrix appendix_residual(const QMatrix& T2, const QMatrix& T3, const QMatrix& D) {
  const int no = T2.rows(), ni = T2.cols();
  return L(RiT(no), one_two(T2, T2)) - Rt(two_one(T2, T2), RiT(ni)) - h() * L(build_P(no), one_two(T3, D)) +
         h() * Rt(two_one(T3, D), build_P(ni));
}

CheckReport check_appendix(const BlockTransport& B) {
  return timed("appendix", [&](CheckReport& r) {
    const int n1 = B.split.n1, n2 = B.split.n2;
    const QMatrix N = invert_restricted(B.M12);
    QMatrix left = B.M22;
    std::vector<QMatrix> T;  // T[j] = M22 N^j M11
    T.push_back(matmul(B.M22, B.M11));
    for (int j = 1; j <= 3; ++j) {
      left = matmul(left, N);
      T.push_back(matmul(left, B.M11));
    }
    const QMatrix D = T[1] - B.M21;
    r.add("appendix", appendix_residual(T[2], T[3], D));
    const bool groupoid = D.is_zero();
    r.param("groupoid", groupoid ? "true" : "false");
    if (groupoid) r.add("homogeneous", L(RiT(n2), one_two(T[2], T[2])) - Rt(two_one(T[2], T[2]), RiT(n1)));
  });
}

CheckReport check_frp_table(const std::vector<std::vector<BigInt>>& table) {
  return timed("frp", [&](CheckReport& r) {
    const int rmax = static_cast<int>(table.size());
    const int pmax = rmax ? static_cast<int>(table[0].size()) : 0;
    r.param("r", std::to_string(rmax));
    r.param("p", std::to_string(pmax));
    for (int rr = 1; rr <= rmax; ++rr) {
      for (int p = 1; p <= pmax; ++p) {
        const BigInt& v = table[static_cast<size_t>(rr - 1)].at(static_cast<size_t>(p - 1));
        const BigInt m = f_rp(rr, p, FrpMode::Matrix), rc = f_rp(rr, p, FrpMode::Recursion),
                     c = f_rp(rr, p, FrpMode::Closed);
        const std::string at = fmt(rr, p);
        r.add_flag("modes" + at, v == m && v == rc && v == c,
                   "value=" + v.get_str() + " matrix=" + m.get_str() + " recursion=" + rc.get_str() +
                       " closed=" + c.get_str());
        if (p > 1 && p <= rr) r.add_flag("zero" + at, v == 0, v.get_str());
      }
    }
    for (int rr = 1; rr <= rmax; ++rr) {
      for (int p = 1; p <= pmax; ++p) {
        const IntMatrix inv = hat_inverse_power(rr, p);
        bool ok = true;
        std::string bad;
        for (int i = 0; i < rr; ++i) {
          for (int j = 0; j < rr; ++j) {
            BigInt expect = binomial(p, i - j);
            if ((i - j) % 2) expect = -expect;
            if (inv[static_cast<size_t>(i)][static_cast<size_t>(j)] != expect) {
              ok = false;
              bad = fmt(i, j) + "=" + inv[static_cast<size_t>(i)][static_cast<size_t>(j)].get_str() + " expected " +
                    expect.get_str();
            }
          }
        }
        r.add_flag("inverse_power" + fmt(rr, p), ok, bad);
      }
    }
  });
}

CheckReport check_frp(int rmax, int pmax) {
  std::vector<std::vector<BigInt>> table;
  for (int rr = 1; rr <= rmax; ++rr) {
    table.emplace_back();
    for (int p = 1; p <= pmax; ++p) table.back().push_back(f_rp(rr, p, FrpMode::Closed));
  }
  return check_frp_table(table);
}

}  // namespace qaffine

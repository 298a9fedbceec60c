#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qaffine/affine.hpp"
#include "qaffine/hat.hpp"

namespace qaffine {

struct Residual {
  std::string index;
  std::string value;
};

/// Outcome of one checker; passed iff residuals is empty.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::vector<Residual> residuals;
  /// Per-relation outcome, in evaluation order.
  std::vector<std::pair<std::string, bool>> relations;
  double timing_ms = 0;

  void param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }
  void add(const std::string& relation, const QMatrix& residual);
  void add(const std::string& relation, const CMatrix& residual);
  void add_flag(const std::string& relation, bool ok, const std::string& detail);
  /// Append another report's relations and residuals under a prefix.
  void merge(const CheckReport& other, const std::string& prefix);
};

/// JSON text; timing is written as null unless `with_timing`.
std::string report_to_json(const CheckReport& r, bool with_timing);
std::string reports_to_json(const std::vector<CheckReport>& rs, bool with_timing);
std::string report_summary(const CheckReport& r);

// R-matrix identities.
CheckReport check_rmatrix(int k);
/// Same identities for a candidate R on V_k (x) V_k.
CheckReport check_rmatrix(const CMatrix& R, int k);
/// Scalar identity of the affine pair, partial-transpose commutation, block structure.
CheckReport check_rmatrix_affine(int k);

CheckReport check_rtt(const QMatrix& M);
CheckReport check_block_algebra(const BlockTransport& B);

CheckReport check_affine_summed(const TSeries& T, int k, int p);
QMatrix spectral_residual(const TSeries& X, const TSeries& Y, int a, int b);
CheckReport check_spectral_componentwise(const TSeries& X, const TSeries& Y, int a, int b);
/// Summed residual at (k, p) equals minus the sum of componentwise residuals.
CheckReport check_telescoping(const TSeries& T, int k, int p);
/// Indices a with levels a and a + 1 both available and not both outside the support.
std::vector<int> componentwise_indices(const TSeries& X);
/// All four loop relations at every reachable bidegree.
CheckReport check_loop_algebra(const LoopGenerators& g);
CheckReport check_subalgebra(const QMatrix& T0, const QMatrix& T1m);
/// Inverse-block relations and the two correction identities for M22 M12^{-1} M11.
CheckReport check_auxiliary(const BlockTransport& B);
CheckReport check_groupoid(const BlockTransport& B);

QMatrix reflection_residual(const QMatrix& A);
CheckReport check_reflection_A0(const QMatrix& A0);
/// Residual of the affine reflection equation at the coefficient of u^{-a-1} v^{-b-1}.
QMatrix reflection_affine_residual(const TSeries& A, int a, int b);
bool reflection_affine_checkable(int a, int b, int K);
CheckReport check_reflection_affine(const TSeries& A, int K);
/// Loop relation for the transposed series with inverted parameter.
CheckReport check_transposed_loop(const TSeries& T);

CheckReport check_disc_reflection(const QMatrix& M);
/// R^{-T} T2 T2 - T2 T2 R^{-T} - (q - q^{-1}) P T3 D + (q - q^{-1}) D T3 P with sheet products.
QMatrix appendix_residual(const QMatrix& T2, const QMatrix& T3, const QMatrix& D);
CheckReport check_appendix(const BlockTransport& B);
/// Candidate table of f^r_p, row r - 1, column p - 1, against all three modes,
/// the vanishing range and the inverse-power entries.
CheckReport check_frp_table(const std::vector<std::vector<BigInt>>& table);
CheckReport check_frp(int rmax, int pmax);

}  // namespace qaffine

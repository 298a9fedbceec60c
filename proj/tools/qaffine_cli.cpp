#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qaffine/network_io.hpp"
#include "qaffine/verify.hpp"

using namespace qaffine;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kTruncation = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string what;
  std::string input;
  std::string builder;
  int n = 2;
  int r = 8;
  std::optional<int> p;
  std::optional<int> k;
  std::string split;
  std::string dims;
  int kmax = 4;
  int pmax = 8;
  int order = 3;
  std::string out;
  bool json = false;
  bool timing = false;
  bool groupoid = false;
};

// Network-backed input: the matrix and the split used when none is given.
struct Source {
  QMatrix M;
  std::optional<Network> net;
  std::optional<BlockSplit> default_split;
};

FormPtr empty_form() { return std::make_shared<const SkewForm>(0, std::vector<int>{}); }

QMatrix hat_qmatrix(int r) {
  const IntMatrix h = hat_matrix(r);
  const FormPtr f = empty_form();
  QMatrix m(r + 1, r + 1, f);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) {
      const BigInt& v = h[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v != 0) m.at(i, j) = QElem::scalar(f, QScalar(v));
    }
  }
  return m;
}

CompositeDims parse_dims(const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("--dims must be n1,m2,m1,n2");
    }
  }
  if (v.size() != 4) throw UsageError("--dims must be n1,m2,m1,n2");
  for (int x : v) {
    if (x < 1) throw UsageError("--dims entries must be positive");
  }
  return {v[0], v[1], v[2], v[3]};
}

std::optional<Source> load_source(const Config& c) {
  if (!c.input.empty() && !c.builder.empty()) throw UsageError("give either --input or --builder, not both");
  Source s;
  if (!c.input.empty()) {
    s.net = load_network(c.input);
    s.M = transport_matrix(*s.net);
    return s;
  }
  if (c.builder.empty()) return std::nullopt;
  if (c.builder == "triangle") {
    if (c.n < 2) throw UsageError("triangle needs --n >= 2");
    s.net = build_triangle(c.n);
    s.M = transport_matrix(*s.net);
    s.default_split = BlockSplit{0, c.n, c.n};
  } else if (c.builder == "loop") {
    if (c.n < 1) throw UsageError("loop needs --n >= 1");
    s.net = build_loop(c.n);
    s.M = transport_matrix(*s.net);
    s.default_split = BlockSplit{c.n, 1, c.n};
  } else if (c.builder == "composite") {
    const CompositeDims d = parse_dims(c.dims);
    s.net = build_composite(d);
    s.M = transport_matrix(*s.net);
    s.default_split = BlockSplit{d.n1, d.m2 + d.m1, d.n2};
  } else if (c.builder == "hat") {
    if (c.r < 1) throw UsageError("hat needs --r >= 1");
    s.M = hat_qmatrix(c.r);
    s.default_split = BlockSplit{1, c.r, 1};
  } else {
    throw UsageError("unknown builder '" + c.builder + "'");
  }
  return s;
}

Source require_source(const Config& c) {
  auto s = load_source(c);
  if (!s) throw UsageError("'" + c.what + "' needs --input or --builder");
  return *s;
}

BlockTransport blocks_of(const Config& c, const Source& s) {
  if (!c.split.empty()) {
    try {
      return block_split(s.M, parse_split(c.split));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!s.default_split) throw UsageError("'" + c.what + "' needs --split n1,m,n2 for this input");
  return block_split(s.M, *s.default_split);
}

void require_nonneg(int v, const std::string& name) {
  if (v < 0) throw UsageError(name + " must be nonnegative");
}

std::vector<CheckReport> check_affine(const Config& c, const BlockTransport& B) {
  std::vector<CheckReport> out;
  if (c.k || c.p) {
    const int k = c.k.value_or(0), p = c.p.value_or(0);
    const TSeries T = levels_T(B, k + p + 1);
    out.push_back(check_affine_summed(T, k, p));
    out.push_back(check_telescoping(T, k, p));
    return out;
  }
  require_nonneg(c.order, "--order");
  const TSeries T = levels_T(B, 2 * c.order + 1);
  for (int k = 0; k <= c.order; ++k) {
    for (int p = 0; p <= k; ++p) {
      out.push_back(check_affine_summed(T, k, p));
      out.push_back(check_telescoping(T, k, p));
    }
  }
  return out;
}

std::vector<CheckReport> check_loop(const Config& c, const BlockTransport& B) {
  require_nonneg(c.order, "--order");
  const LoopGenerators g = loop_generators(B, c.order, c.groupoid);
  return {check_loop_algebra(g), check_auxiliary(B), check_transposed_loop(g.plus), check_transposed_loop(g.minus)};
}

CheckReport check_subalg(const BlockTransport& B, bool groupoid) {
  const LoopGenerators g = loop_generators(B, 1, groupoid);
  return check_subalgebra(g.plus.get(0), g.minus.get(-1));
}

CheckReport check_reflection0(const BlockTransport& B, bool groupoid) {
  const LoopGenerators g = loop_generators(B, 1, groupoid);
  return check_reflection_A0(reflection_series(g.plus, g.minus, 0).get(0));
}

CheckReport check_reflection_aff(const Config& c, const BlockTransport& B) {
  require_nonneg(c.order, "--order");
  const LoopGenerators g = loop_generators(B, c.order + 1, c.groupoid);
  return check_reflection_affine(reflection_series(g.plus, g.minus, c.order), c.order);
}

std::string frp_table(int rmax, int pmax) {
  std::ostringstream os;
  os << "f(r,p)  rows r = 1.." << rmax << ", columns p = 1.." << pmax << "\n";
  for (int r = 1; r <= rmax; ++r) {
    os << "r=" << r << ":";
    for (int p = 1; p <= pmax; ++p) os << " " << f_rp(r, p, FrpMode::Closed).get_str();
    os << "\n";
  }
  return os.str();
}

std::vector<CheckReport> run_check(const Config& c, std::string& preamble) {
  const std::string& w = c.what;
  if (w == "rmatrix") {
    const int k = c.k.value_or(2);
    if (k < 1) throw UsageError("--k must be positive");
    return {check_rmatrix(k), check_rmatrix_affine(k)};
  }
  if (w == "frp") {
    const int pmax = c.p.value_or(c.pmax);
    if (c.r < 1 || pmax < 1) throw UsageError("--r and --p must be positive");
    preamble = frp_table(c.r, pmax);
    return {check_frp(c.r, pmax)};
  }
  if (w == "all") {
    std::vector<CheckReport> out;
    const auto s = load_source(c);
    if (!s) {
      for (int k = 1; k <= c.kmax; ++k) {
        out.push_back(check_rmatrix(k));
        out.push_back(check_rmatrix_affine(k));
      }
      out.push_back(check_frp(c.r, c.pmax));
      return out;
    }
    out.push_back(check_rtt(s->M));
    for (const BlockSplit& sp : admissible_splits(s->M.rows(), s->M.cols())) out.push_back(check_block_algebra(block_split(s->M, sp)));
    if (s->M.rows() % 2 == 0) out.push_back(check_disc_reflection(s->M));
    if (!c.split.empty() || s->default_split) {
      const BlockTransport B = blocks_of(c, *s);
      for (auto& r : check_affine(c, B)) out.push_back(std::move(r));
      for (auto& r : check_loop(c, B)) out.push_back(std::move(r));
      out.push_back(check_subalg(B, c.groupoid));
      out.push_back(check_reflection0(B, c.groupoid));
      out.push_back(check_reflection_aff(c, B));
      out.push_back(check_appendix(B));
    }
    return out;
  }

  const Source s = require_source(c);
  if (w == "rtt") return {check_rtt(s.M)};
  if (w == "disc-reflection") return {check_disc_reflection(s.M)};
  if (w == "blocks") {
    if (c.split.empty()) {
      std::vector<CheckReport> out;
      for (const BlockSplit& sp : admissible_splits(s.M.rows(), s.M.cols())) out.push_back(check_block_algebra(block_split(s.M, sp)));
      return out;
    }
    return {check_block_algebra(blocks_of(c, s))};
  }
  const BlockTransport B = blocks_of(c, s);
  if (w == "affine") return check_affine(c, B);
  if (w == "loop") return check_loop(c, B);
  if (w == "subalgebra") return {check_subalg(B, c.groupoid)};
  if (w == "groupoid") return {check_groupoid(B)};
  if (w == "reflection") return {check_reflection0(B, c.groupoid)};
  if (w == "reflection-affine") return {check_reflection_aff(c, B)};
  if (w == "appendix") return {check_appendix(B)};
  throw UsageError("unknown check '" + w + "'");
}

std::string render_reports(const Config& c, const std::vector<CheckReport>& reports, const std::string& preamble) {
  if (c.json) return reports_to_json(reports, c.timing) + "\n";
  std::ostringstream os;
  os << preamble;
  size_t passed = 0;
  for (const CheckReport& r : reports) {
    os << report_summary(r);
    if (c.timing) os << "  " << r.timing_ms << " ms";
    os << "\n";
    const size_t shown = std::min<size_t>(r.residuals.size(), 8);
    for (size_t i = 0; i < shown; ++i) os << "    " << r.residuals[i].index << " = " << r.residuals[i].value << "\n";
    if (r.residuals.size() > shown) os << "    ... " << r.residuals.size() - shown << " more\n";
    passed += r.passed ? 1 : 0;
  }
  os << passed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

std::string matrices_json(const std::vector<std::pair<std::string, QMatrix>>& ms) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [name, m] : ms) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).render());
      rows.push_back(row);
    }
    doc[name] = rows;
  }
  return doc.dump(2) + "\n";
}

std::string run_export(const Config& c) {
  const Source s = require_source(c);
  std::vector<std::pair<std::string, QMatrix>> ms;
  if (c.what == "network") {
    if (!s.net) throw UsageError("this builder has no network form");
    return network_to_json(*s.net) + "\n";
  }
  require_nonneg(c.order, "--order");
  if (c.what == "transport") {
    ms.emplace_back("M", s.M);
  } else if (c.what == "levels") {
    const TSeries T = levels_T(blocks_of(c, s), c.order);
    for (int k = 0; k <= c.order; ++k) ms.emplace_back("T" + std::to_string(k), T.get(k));
  } else if (c.what == "reflection") {
    const LoopGenerators g = loop_generators(blocks_of(c, s), c.order + 1, c.groupoid);
    const TSeries A = reflection_series(g.plus, g.minus, c.order);
    for (int k = 0; k <= c.order; ++k) ms.emplace_back("A" + std::to_string(k), A.get(k));
  } else {
    throw UsageError("unknown export '" + c.what + "'");
  }
  if (c.json) return matrices_json(ms);
  std::string text;
  for (const auto& [name, m] : ms) text += m.render(name);
  return text;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ParseError("cannot write " + c.out);
  f << text;
}

void add_options(CLI::App* app, Config& c) {
  app->add_option("--input", c.input, "network JSON file");
  app->add_option("--builder", c.builder, "named network family")
      ->check(CLI::IsMember({"triangle", "composite", "hat", "loop"}));
  app->add_option("--n", c.n, "size for triangle and loop builders");
  app->add_option("--r", c.r, "size for the hat builder and the f table");
  app->add_option("--p", c.p, "p for the f table or a single affine (k,p)");
  app->add_option("--k", c.k, "R-matrix dimension or a single affine (k,p)");
  app->add_option("--split", c.split, "block split n1,m,n2");
  app->add_option("--dims", c.dims, "composite dimensions n1,m2,m1,n2");
  app->add_option("--kmax", c.kmax, "largest R-matrix dimension for 'check all'");
  app->add_option("--pmax", c.pmax, "largest p for the f table");
  app->add_option("--order", c.order, "truncation order K");
  app->add_option("--out", c.out, "write output to this file");
  app->add_flag("--json", c.json, "machine-readable output");
  app->add_flag("--timing", c.timing, "include timings");
  app->add_flag("--groupoid", c.groupoid, "groupoid-mode loop generators");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transport matrices of planar networks and their quantum algebras"};
  app.require_subcommand(1);
  Config c;
  CLI::App* check = app.add_subcommand("check", "verify relations");
  check->add_option("what", c.what, "relation family")
      ->required()
      ->check(CLI::IsMember({"rmatrix", "rtt", "blocks", "affine", "loop", "subalgebra", "groupoid", "reflection",
                             "reflection-affine", "disc-reflection", "appendix", "frp", "all"}));
  add_options(check, c);
  CLI::App* exp = app.add_subcommand("export", "write matrices in canonical rendering");
  exp->add_option("what", c.what, "object to export")
      ->required()
      ->check(CLI::IsMember({"transport", "levels", "reflection", "network"}));
  add_options(exp, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (check->parsed()) {
      std::string preamble;
      const std::vector<CheckReport> reports = run_check(c, preamble);
      emit(c, render_reports(c, reports, preamble));
      for (const CheckReport& r : reports) {
        if (!r.passed) return kFail;
      }
      return kPass;
    }
    emit(c, run_export(c));
    return kPass;
  } catch (const TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return kTruncation;
  } catch (const TruncationRequired& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return kTruncation;
  } catch (const CyclicWithoutGeometry& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return kTruncation;
  } catch (const NotInvertibleInSupportedClass& e) {
    std::cerr << "not invertible: " << e.what() << "\n";
    return kInput;
  } catch (const GroupoidViolation& e) {
    std::cerr << "groupoid condition violated: " << e.what() << "\n";
    return kInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const NetworkError& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

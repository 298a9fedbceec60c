#include <algorithm>

#include "qaffine/network.hpp"

namespace qaffine {

namespace {

struct FaceGrid {
  // chord x-positions per level, sorted
  std::vector<std::vector<int>> xs;
  std::vector<int> offset;  // generator index of segment 0 per level
  int count = 0;

  int segment(int level, double x) const {
    const auto& v = xs[static_cast<size_t>(level)];
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  }
  int face(int level, double x) const { return offset[static_cast<size_t>(level)] + segment(level, x); }
};

void add_form(std::vector<int>& e, int n, int a, int b, int val) {
  e[static_cast<size_t>(a * n + b)] += val;
  e[static_cast<size_t>(b * n + a)] -= val;
}

std::string vname(const std::string& prefix, int line, int x) {
  return prefix + "l" + std::to_string(line) + "x" + std::to_string(x);
}

}  // namespace

Network build_layered(const LayeredSpec& spec) {
  const int L = spec.lines;
  const int C = static_cast<int>(spec.chords.size());
  if (L < 1) throw std::invalid_argument("layered network needs at least one line");
  if (spec.source_lines.size() != spec.source_names.size() || spec.sink_lines.size() != spec.sink_names.size()) {
    throw std::invalid_argument("layered network: boundary names do not match boundary lines");
  }

  FaceGrid g;
  g.xs.resize(static_cast<size_t>(L + 1));
  for (int t = 0; t < C; ++t) {
    const int lv = spec.chords[static_cast<size_t>(t)].level;
    if (lv < 1 || lv >= L) throw std::invalid_argument("chord level out of range");
    g.xs[static_cast<size_t>(lv)].push_back(t + 1);
  }
  for (int k = 0; k <= L; ++k) {
    g.offset.push_back(g.count);
    g.count += static_cast<int>(g.xs[static_cast<size_t>(k)].size()) + 1;
  }
  const int N = g.count;

  Network net;
  Geometry geo;
  std::vector<Point> markers;
  for (int k = 0; k <= L; ++k) {
    const auto& xs = g.xs[static_cast<size_t>(k)];
    for (size_t s = 0; s <= xs.size(); ++s) {
      const double left = s == 0 ? 0.0 : xs[s - 1];
      markers.push_back({left + 0.5, -k - 0.5});
    }
  }
  geo.face_markers = markers;

  std::vector<int> e(static_cast<size_t>(N * N), 0);
  for (int t = 0; t < C; ++t) {
    const auto [lv, down] = spec.chords[static_cast<size_t>(t)];
    const int x = t + 1;
    const int left = g.offset[static_cast<size_t>(lv)] + g.segment(lv, x);
    const int right = left + 1;
    const int above = g.face(lv - 1, x);
    const int below = g.face(lv + 1, x);
    const int a = down ? left : right;
    const int b = down ? right : left;
    add_form(e, N, a, below, -1);
    add_form(e, N, b, below, 1);
    add_form(e, N, a, b, 2);
    add_form(e, N, above, a, 1);
    add_form(e, N, above, b, -1);
  }
  net.form = std::make_shared<const SkewForm>(N, std::move(e));

  auto boundary_name = [&](int line, bool left) -> std::string {
    const auto& lines = left ? spec.source_lines : spec.sink_lines;
    const auto& names = left ? spec.source_names : spec.sink_names;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (lines[i] == line) return names[i];
    }
    return vname(spec.prefix, line, left ? 0 : C + 1);
  };

  for (int line = 1; line <= L; ++line) {
    std::vector<int> xs{0};
    for (int t = 0; t < C; ++t) {
      const int lv = spec.chords[static_cast<size_t>(t)].level;
      if (lv == line || lv + 1 == line) xs.push_back(t + 1);
    }
    xs.push_back(C + 1);
    std::vector<std::string> names;
    for (size_t i = 0; i < xs.size(); ++i) {
      std::string nm = i == 0 ? boundary_name(line, true)
                              : i + 1 == xs.size() ? boundary_name(line, false) : vname(spec.prefix, line, xs[i]);
      names.push_back(nm);
      net.vertices.push_back(nm);
      geo.coords[nm] = {static_cast<double>(xs[i]), static_cast<double>(-line)};
    }
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      Exponent a(static_cast<size_t>(N), 0);
      for (int k = line; k <= L; ++k) {
        const auto& cx = g.xs[static_cast<size_t>(k)];
        for (size_t s = 0; s <= cx.size(); ++s) {
          const double mx = (s == 0 ? 0.0 : cx[s - 1]) + 0.5;
          if (mx > xs[i] && mx < xs[i + 1]) a[static_cast<size_t>(g.offset[static_cast<size_t>(k)] + static_cast<int>(s))] = 1;
        }
      }
      net.edges.push_back({names[i], names[i + 1], a});
    }
  }
  for (int t = 0; t < C; ++t) {
    const auto [lv, down] = spec.chords[static_cast<size_t>(t)];
    const std::string upper = vname(spec.prefix, lv, t + 1), lower = vname(spec.prefix, lv + 1, t + 1);
    net.edges.push_back({down ? upper : lower, down ? lower : upper, Exponent(static_cast<size_t>(N), 0)});
  }
  for (size_t i = 0; i < spec.source_lines.size(); ++i) net.sources.push_back(spec.source_names[i]);
  for (size_t i = 0; i < spec.sink_lines.size(); ++i) net.sinks.push_back(spec.sink_names[i]);
  net.geometry = geo;
  net.validate();
  return net;
}

Network build_triangle(int n) {
  if (n < 1) throw std::invalid_argument("triangle network needs n >= 1");
  LayeredSpec s;
  s.lines = 2 * n;
  for (int l = n; l >= 1; --l) {
    for (int c = l; c <= n + l - 1; ++c) s.chords.push_back({c, true});
  }
  for (int i = 1; i <= n; ++i) {
    s.source_lines.push_back(i);
    s.source_names.push_back(std::to_string(i));
  }
  for (int i = 1; i <= 2 * n; ++i) {
    s.sink_lines.push_back(i);
    s.sink_names.push_back(i <= n ? std::to_string(i) + "'" : std::to_string(i - n) + "''");
  }
  return build_layered(s);
}

Network build_loop(int n) {
  if (n < 1) throw std::invalid_argument("loop network needs n >= 1");
  LayeredSpec s;
  s.lines = n + 1;
  for (int c = 1; c <= n; ++c) s.chords.push_back({c, true});
  for (int c = n; c >= 1; --c) s.chords.push_back({c, false});
  for (int c = 1; c <= n; ++c) s.chords.push_back({c, true});
  for (int i = 1; i <= n + 1; ++i) {
    s.source_lines.push_back(i);
    s.source_names.push_back(std::to_string(i));
    s.sink_lines.push_back(i);
    s.sink_names.push_back(std::to_string(i) + "'");
  }
  return build_layered(s);
}

QMatrix embed_matrix(const QMatrix& m, const FormPtr& form, int offset) {
  QMatrix r(m.rows(), m.cols(), form);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      QElem x(form);
      for (const auto& t : m.at(i, j).terms()) {
        Exponent a(static_cast<size_t>(form->rank()), 0);
        std::copy(t.exp.begin(), t.exp.end(), a.begin() + offset);
        x += QElem::weyl(form, a, t.coeff);
      }
      r.at(i, j) = x;
    }
  }
  return r;
}

namespace {

LayeredSpec down_stage(int lines, const std::vector<int>& src, const std::vector<int>& snk, const std::string& prefix) {
  LayeredSpec s;
  s.lines = lines;
  s.prefix = prefix;
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 1; c < lines; ++c) s.chords.push_back({c, true});
  }
  s.source_lines = src;
  s.sink_lines = snk;
  for (int l : src) s.source_names.push_back(prefix + "s" + std::to_string(l));
  for (int l : snk) s.sink_names.push_back(prefix + "t" + std::to_string(l));
  return s;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void check_dims(const CompositeDims& d) {
  if (d.n1 < 0 || d.n2 < 0 || d.m1 < 1 || d.m2 < 1) {
    throw std::invalid_argument("composite network needs m1, m2 >= 1 and n1, n2 >= 0");
  }
}

}  // namespace

CompositeParts build_composite_parts(const CompositeDims& d) {
  check_dims(d);
  const int k = d.m1;
  CompositeParts p;
  p.stage_a = build_layered(down_stage(d.n1 + d.m2, range(1, d.n1 + d.m2), range(d.n1 + 1, d.n1 + d.m2), "a."));
  p.stage_b = build_layered(down_stage(d.m2 + d.m1, range(1, d.m2 + d.m1), range(1, d.m2 + k), "b."));
  p.stage_c = build_layered(down_stage(d.m1 + d.n2, range(1, k), range(1, d.m1 + d.n2), "c."));
  p.form = direct_sum({p.stage_a.form, p.stage_b.form, p.stage_c.form});
  const int oa = 0, ob = p.stage_a.form->rank(), oc = ob + p.stage_b.form->rank();
  p.T1 = embed_matrix(transport_matrix(p.stage_a), p.form, oa);
  p.T2 = embed_matrix(transport_matrix(p.stage_b), p.form, ob);
  p.T3 = embed_matrix(transport_matrix(p.stage_c), p.form, oc);
  return p;
}

CompositeBlocks composite_blocks(const CompositeParts& p, const CompositeDims& d) {
  const int k = d.m1;
  CompositeBlocks b;
  b.T1_2 = p.T1.block(0, 0, d.m2, d.n1);
  b.T1_1 = p.T1.block(0, d.n1, d.m2, d.m2);
  if (!p.T2.block(0, d.m2, d.m2, d.m1).is_zero()) throw std::invalid_argument("stage B transports into the m2 sinks");
  b.T2_1 = p.T2.block(0, 0, d.m2, d.m2);
  b.T2_2 = p.T2.block(d.m2, 0, k, d.m2);
  b.T2_3 = p.T2.block(d.m2, d.m2, k, d.m1);
  b.T3_1 = p.T3.block(0, 0, d.m1, k);
  b.T3_2 = p.T3.block(d.m1, 0, d.n2, k);
  return b;
}

BlockTransport assemble_composite(const CompositeBlocks& b) {
  const int m2 = b.T1_1.rows(), n1 = b.T1_2.cols(), k = b.T2_2.rows();
  const int m1 = b.T2_3.cols(), n2 = b.T3_2.rows();
  const bool ok = b.T1_2.rows() == m2 && b.T1_1.cols() == m2 && b.T2_1.rows() == m2 && b.T2_1.cols() == m2 &&
                  b.T2_2.cols() == m2 && b.T2_3.rows() == k && b.T3_1.rows() == m1 && b.T3_1.cols() == k &&
                  b.T3_2.cols() == k;
  if (!ok || m1 < 1 || m2 < 1) throw std::invalid_argument("composite blocks have incompatible shapes");
  const FormPtr f = b.T1_1.form();
  QMatrix M(m2 + m1 + n2, n1 + m2 + m1, f);
  const QMatrix t22_12 = matmul(b.T2_2, b.T1_2), t22_11 = matmul(b.T2_2, b.T1_1);
  M.set_block(0, 0, matmul(b.T2_1, b.T1_2));
  M.set_block(0, n1, matmul(b.T2_1, b.T1_1));
  M.set_block(m2, 0, matmul(b.T3_1, t22_12));
  M.set_block(m2, n1, matmul(b.T3_1, t22_11));
  M.set_block(m2, n1 + m2, matmul(b.T3_1, b.T2_3));
  M.set_block(m2 + m1, 0, matmul(b.T3_2, t22_12));
  M.set_block(m2 + m1, n1, matmul(b.T3_2, t22_11));
  M.set_block(m2 + m1, n1 + m2, matmul(b.T3_2, b.T2_3));
  return block_split(M, {n1, m2 + m1, n2});
}

Network build_composite(const CompositeDims& d) {
  const CompositeParts p = build_composite_parts(d);
  const int k = d.m1;
  Network net;
  net.form = p.form;
  int offset = 0;
  for (const Network* st : {&p.stage_a, &p.stage_b, &p.stage_c}) {
    for (const auto& v : st->vertices) net.vertices.push_back(v);
    for (const auto& e : st->edges) {
      Exponent a(static_cast<size_t>(p.form->rank()), 0);
      std::copy(e.exponent->begin(), e.exponent->end(), a.begin() + offset);
      net.edges.push_back({e.from, e.to, a});
    }
    offset += st->form->rank();
  }
  const Exponent zero(static_cast<size_t>(p.form->rank()), 0);
  for (int j = 0; j < d.m2; ++j) {
    net.edges.push_back({p.stage_a.sinks[static_cast<size_t>(j)], p.stage_b.sources[static_cast<size_t>(j)], zero});
  }
  for (int j = 0; j < k; ++j) {
    net.edges.push_back({p.stage_b.sinks[static_cast<size_t>(d.m2 + j)], p.stage_c.sources[static_cast<size_t>(j)], zero});
  }
  net.sources = p.stage_a.sources;
  for (int j = 0; j < d.m1; ++j) net.sources.push_back(p.stage_b.sources[static_cast<size_t>(d.m2 + j)]);
  for (int j = 0; j < d.m2; ++j) net.sinks.push_back(p.stage_b.sinks[static_cast<size_t>(j)]);
  for (const auto& s : p.stage_c.sinks) net.sinks.push_back(s);
  net.validate();
  return net;
}

}  // namespace qaffine

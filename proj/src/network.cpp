#include "qaffine/network.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace qaffine {

namespace {

struct Indexed {
  std::unordered_map<std::string, int> id;
  std::vector<std::vector<int>> out;  // edge indices by tail vertex
  std::vector<int> head;
};

Indexed index_network(const Network& net) {
  Indexed ix;
  for (size_t i = 0; i < net.vertices.size(); ++i) ix.id[net.vertices[i]] = static_cast<int>(i);
  ix.out.resize(net.vertices.size());
  for (size_t e = 0; e < net.edges.size(); ++e) {
    ix.out[static_cast<size_t>(ix.id.at(net.edges[e].from))].push_back(static_cast<int>(e));
    ix.head.push_back(ix.id.at(net.edges[e].to));
  }
  return ix;
}

bool algebraic(const Network& net) {
  for (const auto& e : net.edges) {
    if (!e.exponent) return false;
  }
  return true;
}

std::vector<int> topological_order(const Network& net, const Indexed& ix) {
  const size_t n = net.vertices.size();
  std::vector<int> indeg(n, 0);
  for (int h : ix.head) ++indeg[static_cast<size_t>(h)];
  std::vector<int> order, stack;
  for (size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int e : ix.out[static_cast<size_t>(v)]) {
      const int h = ix.head[static_cast<size_t>(e)];
      if (--indeg[static_cast<size_t>(h)] == 0) stack.push_back(h);
    }
  }
  return order;
}

Point point_of(const Network& net, const std::string& v) {
  auto it = net.geometry->coords.find(v);
  if (it == net.geometry->coords.end()) throw NetworkError("geometry: no coordinates for vertex " + v);
  return it->second;
}

// Path followed by the clockwise return arc around all vertices.
std::vector<Point> closed_loop(const Network& net, const std::vector<std::string>& path) {
  const auto& coords = net.geometry->coords;
  Point c;
  for (const auto& [name, p] : coords) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(coords.size());
  c.y /= static_cast<double>(coords.size());
  double radius = 1;
  for (const auto& [name, p] : coords) radius = std::max(radius, std::hypot(p.x - c.x, p.y - c.y));
  for (const auto& p : net.geometry->face_markers) radius = std::max(radius, std::hypot(p.x - c.x, p.y - c.y));
  radius = 2 * radius + 1;

  std::vector<Point> loop;
  for (const auto& v : path) loop.push_back(point_of(net, v));
  const Point t = loop.back(), s = loop.front();
  const double at = std::atan2(t.y - c.y, t.x - c.x);
  double as = std::atan2(s.y - c.y, s.x - c.x);
  while (as >= at) as -= 2 * std::numbers::pi;
  const int steps = 64;
  for (int i = 0; i <= steps; ++i) {
    const double a = at + (as - at) * i / steps;
    loop.push_back({c.x + radius * std::cos(a), c.y + radius * std::sin(a)});
  }
  std::vector<Point> dedup;
  for (const auto& p : loop) {
    if (dedup.empty() || std::hypot(p.x - dedup.back().x, p.y - dedup.back().y) > 1e-12) dedup.push_back(p);
  }
  if (dedup.size() > 1 && std::hypot(dedup.front().x - dedup.back().x, dedup.front().y - dedup.back().y) < 1e-12) {
    dedup.pop_back();
  }
  return dedup;
}

int winding_number(const std::vector<Point>& loop, Point m) {
  double total = 0;
  for (size_t i = 0; i < loop.size(); ++i) {
    const Point a = loop[i], b = loop[(i + 1) % loop.size()];
    const double a1 = std::atan2(a.y - m.y, a.x - m.x), a2 = std::atan2(b.y - m.y, b.x - m.x);
    double d = a2 - a1;
    while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
    total += d;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace

void Network::validate() const {
  if (!form) throw NetworkError("network has no skew form");
  std::unordered_map<std::string, int> seen;
  for (const auto& v : vertices) {
    if (!seen.emplace(v, 0).second) throw NetworkError("duplicate vertex " + v);
  }
  bool any_exp = false, any_missing = false;
  for (const auto& e : edges) {
    if (!seen.count(e.from) || !seen.count(e.to)) {
      throw NetworkError("edge references unknown vertex: " + e.from + " -> " + e.to);
    }
    if (e.exponent) {
      any_exp = true;
      if (static_cast<int>(e.exponent->size()) != form->rank()) {
        throw NetworkError("edge " + e.from + " -> " + e.to + ": exponent length " +
                           std::to_string(e.exponent->size()) + " != " + std::to_string(form->rank()));
      }
    } else {
      any_missing = true;
    }
  }
  if (any_exp && any_missing) throw NetworkError("either all edges or no edges carry exponents");
  for (const auto* list : {&sources, &sinks}) {
    for (const auto& v : *list) {
      if (!seen.count(v)) throw NetworkError("unknown boundary vertex " + v);
    }
  }
  if (geometry) {
    for (const auto& v : vertices) {
      if (!geometry->coords.count(v)) throw NetworkError("geometry: no coordinates for vertex " + v);
    }
    if (static_cast<int>(geometry->face_markers.size()) != form->rank()) {
      throw NetworkError("geometry: need one face marker per generator");
    }
  }
  if (!any_exp && !edges.empty() && !geometry) {
    throw NetworkError("edges without exponents require geometry");
  }
  if (max_cycle_uses && *max_cycle_uses < 1) throw NetworkError("max_cycle_uses must be positive");
}

bool Network::is_acyclic() const {
  const Indexed ix = index_network(*this);
  return topological_order(*this, ix).size() == vertices.size();
}

Exponent winding_exponent(const Network& net, const std::vector<std::string>& path) {
  if (!net.geometry) throw NetworkError("winding exponents require geometry");
  const auto loop = closed_loop(net, path);
  Exponent e;
  for (const auto& m : net.geometry->face_markers) e.push_back(-winding_number(loop, m));
  return e;
}

int self_intersection_parity(const Network& net, const std::vector<std::string>& path) {
  if (!net.geometry) throw CyclicWithoutGeometry("self-intersections require geometry");
  const auto loop = closed_loop(net, path);
  double turning = 0;
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    const Point a = loop[(i + n - 1) % n], b = loop[i], c = loop[(i + 1) % n];
    double d = std::atan2(c.y - b.y, c.x - b.x) - std::atan2(b.y - a.y, b.x - a.x);
    while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
    turning += d;
  }
  const long rot = std::lround(turning / (2 * std::numbers::pi));
  // Whitney: double points = rot + 1 (mod 2)
  return static_cast<int>(((rot + 1) % 2 + 2) % 2);
}

QElem transport_entry(const Network& net, int sink, int source) {
  net.validate();
  const Indexed ix = index_network(net);
  const int s = ix.id.at(net.sources.at(static_cast<size_t>(source)));
  const int t = ix.id.at(net.sinks.at(static_cast<size_t>(sink)));
  const bool acyclic = topological_order(net, ix).size() == net.vertices.size();
  const size_t rank = static_cast<size_t>(net.form->rank());

  if (acyclic && algebraic(net)) {
    // Exponent multiset per vertex, propagated in topological order.
    std::vector<std::map<Exponent, BigInt>> acc(net.vertices.size());
    acc[static_cast<size_t>(s)][Exponent(rank, 0)] = 1;
    for (int v : topological_order(net, ix)) {
      const auto& here = acc[static_cast<size_t>(v)];
      if (here.empty()) continue;
      for (int e : ix.out[static_cast<size_t>(v)]) {
        auto& there = acc[static_cast<size_t>(ix.head[static_cast<size_t>(e)])];
        const Exponent& de = *net.edges[static_cast<size_t>(e)].exponent;
        for (const auto& [a, cnt] : here) {
          Exponent b = a;
          for (size_t i = 0; i < rank; ++i) b[i] += de[i];
          there[b] += cnt;
        }
      }
    }
    QElem r(net.form);
    for (const auto& [a, cnt] : acc[static_cast<size_t>(t)]) r += QElem::weyl(net.form, a, QScalar(cnt));
    return r;
  }

  if (!acyclic && !net.geometry) throw CyclicWithoutGeometry("cyclic network needs geometry for signs");
  if (!acyclic && !net.max_cycle_uses) throw TruncationRequired("cyclic network needs max_cycle_uses");
  const int bound = acyclic ? 1 : *net.max_cycle_uses;

  QElem r(net.form);
  std::vector<int> uses(net.edges.size(), 0);
  std::vector<int> vpath{s};
  std::vector<int> epath;
  std::function<void(int)> dfs = [&](int v) {
    if (v == t) {
      std::vector<std::string> names;
      for (int u : vpath) names.push_back(net.vertices[static_cast<size_t>(u)]);
      Exponent a(rank, 0);
      if (algebraic(net)) {
        for (int e : epath) {
          const Exponent& de = *net.edges[static_cast<size_t>(e)].exponent;
          for (size_t i = 0; i < rank; ++i) a[i] += de[i];
        }
      } else {
        a = winding_exponent(net, names);
      }
      const int parity = acyclic ? 0 : self_intersection_parity(net, names);
      r += QElem::weyl(net.form, a, QScalar(parity ? -1 : 1));
    }
    for (int e : ix.out[static_cast<size_t>(v)]) {
      if (uses[static_cast<size_t>(e)] >= bound) continue;
      ++uses[static_cast<size_t>(e)];
      epath.push_back(e);
      vpath.push_back(ix.head[static_cast<size_t>(e)]);
      dfs(ix.head[static_cast<size_t>(e)]);
      vpath.pop_back();
      epath.pop_back();
      --uses[static_cast<size_t>(e)];
    }
  };
  dfs(s);
  return r;
}

QMatrix transport_matrix(const Network& net) {
  QMatrix m(static_cast<int>(net.sinks.size()), static_cast<int>(net.sources.size()), net.form);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = transport_entry(net, i, j);
  }
  return m;
}

BlockSplit parse_split(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("split must be n1,m,n2 (got '" + text + "')");
    }
  }
  if (parts.size() != 3) throw std::invalid_argument("split must be n1,m,n2 (got '" + text + "')");
  return {parts[0], parts[1], parts[2]};
}

BlockTransport block_split(const QMatrix& M, BlockSplit sp) {
  if (sp.m < 1 || sp.n1 < 0 || sp.n2 < 0 || M.rows() != sp.m + sp.n2 || M.cols() != sp.n1 + sp.m) {
    throw std::invalid_argument("split (" + std::to_string(sp.n1) + "," + std::to_string(sp.m) + "," +
                                std::to_string(sp.n2) + ") does not fit a " + std::to_string(M.rows()) +
                                "x" + std::to_string(M.cols()) + " matrix");
  }
  BlockTransport b;
  b.M = M;
  b.split = sp;
  b.M11 = M.block(0, 0, sp.m, sp.n1);
  b.M12 = M.block(0, sp.n1, sp.m, sp.m);
  b.M21 = M.block(sp.m, 0, sp.n2, sp.n1);
  b.M22 = M.block(sp.m, sp.n1, sp.n2, sp.m);
  return b;
}

std::vector<BlockSplit> admissible_splits(int rows, int cols) {
  std::vector<BlockSplit> out;
  for (int m = 1; m <= std::min(rows, cols); ++m) out.push_back({cols - m, m, rows - m});
  return out;
}

}  // namespace qaffine

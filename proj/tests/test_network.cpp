#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qaffine/network_io.hpp"
#include "qaffine/verify.hpp"

using namespace qaffine;

namespace {

// Independent path enumeration: every path from s to t, weights multiplied as
// Weyl monomials of the summed exponent.
QElem dfs_oracle(const Network& net, const std::string& s, const std::string& t) {
  QElem total(net.form);
  const size_t n = static_cast<size_t>(net.form->rank());
  std::vector<std::pair<std::string, Exponent>> stack{{s, Exponent(n, 0)}};
  while (!stack.empty()) {
    auto [v, a] = stack.back();
    stack.pop_back();
    if (v == t) total += QElem::weyl(net.form, a);
    for (const Edge& e : net.edges) {
      if (e.from != v) continue;
      Exponent b = a;
      for (size_t i = 0; i < n; ++i) b[i] += (*e.exponent)[i];
      stack.emplace_back(e.to, b);
    }
  }
  return total;
}

void check_against_oracle(const Network& net) {
  const QMatrix M = transport_matrix(net);
  REQUIRE(M.rows() == static_cast<int>(net.sinks.size()));
  REQUIRE(M.cols() == static_cast<int>(net.sources.size()));
  for (size_t i = 0; i < net.sinks.size(); ++i) {
    for (size_t j = 0; j < net.sources.size(); ++j) {
      CHECK(M.at(static_cast<int>(i), static_cast<int>(j)) == dfs_oracle(net, net.sources[j], net.sinks[i]));
    }
  }
}

Network strip_exponents(Network net) {
  for (Edge& e : net.edges) e.exponent.reset();
  return net;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FormPtr form2() { return SkewForm::make({{0, 1}, {-1, 0}}); }

}  // namespace

TEST_CASE("single edges and parallel edges") {
  Network net;
  net.form = form2();
  net.vertices = {"s", "t"};
  net.edges = {{"s", "t", Exponent{1, 0}}};
  net.sources = {"s"};
  net.sinks = {"t"};
  CHECK(transport_entry(net, 0, 0) == QElem::weyl(net.form, {1, 0}));
  net.edges.push_back({"s", "t", Exponent{0, 1}});
  CHECK(transport_entry(net, 0, 0) == QElem::weyl(net.form, {1, 0}) + QElem::weyl(net.form, {0, 1}));
  net.vertices.push_back("u");
  net.edges = {{"s", "u", Exponent{1, 0}}, {"u", "t", Exponent{0, 1}}};
  CHECK(transport_entry(net, 0, 0) == QElem::weyl(net.form, {1, 1}));
}

TEST_CASE("isolated source-sink pairs give a permutation matrix") {
  Network net;
  net.form = form2();
  net.vertices = {"a", "b", "x", "y"};
  net.edges = {{"a", "y", Exponent{1, 0}}, {"b", "x", Exponent{0, 1}}};
  net.sources = {"a", "b"};
  net.sinks = {"x", "y"};
  const QMatrix M = transport_matrix(net);
  CHECK(M.at(0, 0).is_zero());
  CHECK(M.at(1, 1).is_zero());
  CHECK(M.at(0, 1) == QElem::weyl(net.form, {0, 1}));
  CHECK(M.at(1, 0) == QElem::weyl(net.form, {1, 0}));
}

TEST_CASE("transport agrees with path enumeration on builder networks") {
  check_against_oracle(build_triangle(2));
  check_against_oracle(build_triangle(3));
  check_against_oracle(build_loop(1));
  check_against_oracle(build_loop(2));
  check_against_oracle(build_composite({1, 1, 1, 1}));
}

TEST_CASE("winding exponents reproduce the algebraic exponents") {
  for (const Network& net : {build_triangle(2), build_triangle(3), build_loop(1), build_loop(2)}) {
    CHECK(transport_matrix(strip_exponents(net)) == transport_matrix(net));
  }
}

TEST_CASE("triangle shape, labels and behaviour") {
  const Network t6 = build_triangle(6);
  CHECK(t6.sources == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  REQUIRE(t6.sinks.size() == 12);
  CHECK(t6.sinks[0] == "1'");
  CHECK(t6.sinks[5] == "6'");
  CHECK(t6.sinks[6] == "1''");
  CHECK(t6.sinks[11] == "6''");
  const QMatrix M6 = transport_matrix(t6);
  CHECK(M6.rows() == 12);
  CHECK(M6.cols() == 6);
  for (int n = 2; n <= 3; ++n) {
    const QMatrix M = transport_matrix(build_triangle(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(M.at(i, j).is_zero() == (j > i));
        CHECK(M.at(n + i, j).is_zero() == (j < i));
      }
    }
  }
}

TEST_CASE("loop network has a unit-monomial corner") {
  for (int n = 1; n <= 3; ++n) {
    const BlockTransport B = block_split(transport_matrix(build_loop(n)), {n, 1, n});
    CHECK(B.M12.at(0, 0).is_unit_monomial());
  }
}

TEST_CASE("block split") {
  const QMatrix M = transport_matrix(build_loop(1));
  const BlockTransport B = block_split(M, parse_split("1,1,1"));
  CHECK(B.M11.at(0, 0) == M.at(0, 0));
  CHECK(B.M12.at(0, 0) == M.at(0, 1));
  CHECK(B.M21.at(0, 0) == M.at(1, 0));
  CHECK(B.M22.at(0, 0) == M.at(1, 1));
  const QMatrix T = transport_matrix(build_triangle(3));
  for (const BlockSplit& s : admissible_splits(T.rows(), T.cols())) {
    const BlockTransport b = block_split(T, s);
    QMatrix back(T.rows(), T.cols(), T.form());
    back.set_block(0, 0, b.M11);
    back.set_block(0, s.n1, b.M12);
    back.set_block(s.m, 0, b.M21);
    back.set_block(s.m, s.n1, b.M22);
    CHECK(back == T);
  }
  CHECK(admissible_splits(6, 3).size() == 3);
  CHECK_THROWS_AS(block_split(M, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(block_split(M, {2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(parse_split("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_split("1,x,2"), std::invalid_argument);
}

TEST_CASE("composite network matches the block table") {
  for (const CompositeDims d : {CompositeDims{1, 1, 1, 1}, CompositeDims{2, 1, 1, 2}, CompositeDims{1, 2, 1, 1}}) {
    const CompositeParts parts = build_composite_parts(d);
    const CompositeBlocks b = composite_blocks(parts, d);
    const BlockTransport B = assemble_composite(b);
    CHECK(B.split.n1 == d.n1);
    CHECK(B.split.m == d.m2 + d.m1);
    CHECK(B.split.n2 == d.n2);
    CHECK(transport_matrix(build_composite(d)) == B.M);
    // Entries are the displayed products.
    CHECK(B.M12.block(0, 0, d.m2, d.m2) == matmul(b.T2_1, b.T1_1));
    CHECK(B.M12.block(0, d.m2, d.m2, d.m1).is_zero());
    CHECK(B.M11.block(d.m2, 0, d.m1, d.n1) == matmul(matmul(b.T3_1, b.T2_2), b.T1_2));
    CHECK(B.M22.block(0, d.m2, d.n2, d.m1) == matmul(b.T3_2, b.T2_3));
    // Block inverse of M12.
    const QMatrix A = invert_restricted(matmul(b.T2_1, b.T1_1));
    const QMatrix D = invert_restricted(matmul(b.T3_1, b.T2_3));
    QMatrix expect(d.m2 + d.m1, d.m2 + d.m1, B.M.form());
    expect.set_block(0, 0, A);
    expect.set_block(d.m2, d.m2, D);
    expect.set_block(d.m2, 0, -matmul(matmul(matmul(matmul(D, b.T3_1), b.T2_2), b.T1_1), A));
    CHECK(invert_restricted(B.M12) == expect);
  }
  CompositeBlocks bad = composite_blocks(build_composite_parts({}), {});
  bad.T2_1 = QMatrix(2, 1, bad.T2_1.form());
  CHECK_THROWS(assemble_composite(bad));
}

TEST_CASE("cyclic network with alternating loop signs") {
  const Network net = load_network(QAFFINE_FIXTURES "/cyclic_loop.json");
  CHECK_FALSE(net.is_acyclic());
  REQUIRE(net.max_cycle_uses);
  const int U = *net.max_cycle_uses;
  // Each extra turn around the loop adds one self-intersection and one unit of winding.
  QElem expect(net.form);
  for (int k = 0; k < U; ++k) expect += QElem::weyl(net.form, {k + 1}, QScalar(k % 2 ? -1 : 1));
  CHECK(transport_entry(net, 0, 0) == expect);
  CHECK(self_intersection_parity(net, {"s", "a", "b", "t"}) == 0);
  CHECK(self_intersection_parity(net, {"s", "a", "b", "c", "a", "b", "t"}) == 1);
  CHECK(winding_exponent(net, {"s", "a", "b", "c", "a", "b", "c", "a", "b", "t"}) == Exponent{3});
}

TEST_CASE("cyclic networks need geometry and a bound") {
  Network net = load_network(QAFFINE_FIXTURES "/cyclic_loop.json");
  net.max_cycle_uses.reset();
  CHECK_THROWS_AS(transport_matrix(net), TruncationRequired);
  CHECK_THROWS_AS(transport_matrix(load_network(QAFFINE_FIXTURES "/cyclic_unbounded.json")), TruncationRequired);
  Network bare;
  bare.form = SkewForm::make({{0}});
  bare.vertices = {"s", "a", "t"};
  bare.edges = {{"s", "a", Exponent{0}}, {"a", "s", Exponent{1}}, {"a", "t", Exponent{0}}};
  bare.sources = {"s"};
  bare.sinks = {"t"};
  bare.max_cycle_uses = 2;
  CHECK_THROWS_AS(transport_matrix(bare), CyclicWithoutGeometry);
}

TEST_CASE("json round trip") {
  const Network net = build_triangle(2);
  const Network back = parse_network(network_to_json(net));
  CHECK(back.vertices == net.vertices);
  CHECK(back.sources == net.sources);
  CHECK(back.sinks == net.sinks);
  CHECK(back.form->raw() == net.form->raw());
  CHECK(transport_matrix(back) == transport_matrix(net));
  const Network file = load_network(QAFFINE_FIXTURES "/triangle2.json");
  CHECK(transport_matrix(file) == transport_matrix(net));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_network("{"), ParseError);
  CHECK_THROWS_AS(parse_network(read_file(QAFFINE_FIXTURES "/malformed.json")), ParseError);
  CHECK_THROWS_AS(parse_network(R"({"generators":1,"epsilon2":[[0]],"vertices":["s"],"edges":[{"from":"s","to":"z","exponent":[0]}],"sources":["s"],"sinks":["s"]})"),
                  NetworkError);
  CHECK_THROWS_AS(parse_network(R"({"generators":2,"epsilon2":[[0,1],[1,0]],"vertices":[],"edges":[],"sources":[],"sinks":[]})"),
                  ParseError);
  CHECK_THROWS(load_network(QAFFINE_FIXTURES "/does_not_exist.json"));
}

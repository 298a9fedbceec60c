#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/qmatrix.hpp"

namespace qaffine {

struct Point {
  double x = 0;
  double y = 0;
};

struct Edge {
  std::string from;
  std::string to;
  /// Absent when exponents are derived from geometry.
  std::optional<Exponent> exponent;
};

struct Geometry {
  std::map<std::string, Point> coords;
  /// One marker per generator, inside its face.
  std::vector<Point> face_markers;
};

struct NetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CyclicWithoutGeometry : NetworkError {
  using NetworkError::NetworkError;
};
struct TruncationRequired : NetworkError {
  using NetworkError::NetworkError;
};

/// Directed network embedded in a disc, with edge weights in a quantum torus.
struct Network {
  FormPtr form;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> sources;
  std::vector<std::string> sinks;
  std::optional<Geometry> geometry;
  /// Bound on how often a path may traverse any single edge.
  std::optional<int> max_cycle_uses;

  /// Throws NetworkError on dangling names or wrong exponent lengths.
  void validate() const;
  bool is_acyclic() const;
};

/// Sum over paths from source index j to sink index i.
QElem transport_entry(const Network& net, int sink, int source);
/// Rows indexed by sinks, columns by sources.
QMatrix transport_matrix(const Network& net);

/// Parity of the self-intersections of a vertex path, from its rotation index.
int self_intersection_parity(const Network& net, const std::vector<std::string>& path);
/// Exponent of a vertex path from winding numbers around the face markers.
Exponent winding_exponent(const Network& net, const std::vector<std::string>& path);

struct BlockSplit {
  int n1 = 0;
  int m = 1;
  int n2 = 0;
};

/// Rows split (m | n2), columns split (n1 | m).
struct BlockTransport {
  QMatrix M;
  QMatrix M11, M12, M21, M22;
  BlockSplit split;
};

BlockSplit parse_split(const std::string& text);
/// Throws std::invalid_argument unless the split matches the matrix shape with m >= 1.
BlockTransport block_split(const QMatrix& M, BlockSplit split);
std::vector<BlockSplit> admissible_splits(int rows, int cols);

// Builders.

struct Chord {
  int level;  ///< 1-based: joins line `level` and line `level + 1`
  bool down;  ///< down: from line `level` to line `level + 1`
};

struct LayeredSpec {
  int lines = 0;
  std::vector<Chord> chords;  ///< left to right
  std::vector<int> source_lines;
  std::vector<int> sink_lines;
  std::vector<std::string> source_names;
  std::vector<std::string> sink_names;
  std::string prefix;  ///< prepended to vertex names
};

/// Horizontal lines joined by vertical chords; faces carry the generators.
Network build_layered(const LayeredSpec& spec);

/// n sources, 2n sinks; the n x n halves are lower and upper triangular.
Network build_triangle(int n);
/// n + 1 lines with a single path from the last source to the first sink.
Network build_loop(int n);

struct CompositeDims {
  int n1 = 1;
  int m2 = 1;
  int m1 = 1;
  int n2 = 1;
};

struct CompositeParts {
  Network stage_a, stage_b, stage_c;
  FormPtr form;  ///< direct sum of the three stage forms
  QMatrix T1, T2, T3;  ///< stage transports embedded over `form`
};

/// Three stages with disjoint generators; stage transports over the common form.
CompositeParts build_composite_parts(const CompositeDims& d);
/// The glued network whose transport is the composite matrix.
Network build_composite(const CompositeDims& d);
/// Sub-blocks of the stage transports: stage A = [T1_2 | T1_1],
/// stage B = [[T2_1, 0], [T2_2, T2_3]], stage C = [T3_1; T3_2].
struct CompositeBlocks {
  QMatrix T1_1, T1_2, T2_1, T2_2, T2_3, T3_1, T3_2;
};

CompositeBlocks composite_blocks(const CompositeParts& parts, const CompositeDims& d);
/// Composite matrix with split (n1, m2 + m1, n2); throws on shape mismatch or
/// when the upper-right block of stage B is nonzero.
BlockTransport assemble_composite(const CompositeBlocks& b);

/// Re-express a matrix over `form` by shifting its generators by `offset`.
QMatrix embed_matrix(const QMatrix& m, const FormPtr& form, int offset);

}  // namespace qaffine

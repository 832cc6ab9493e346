#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cosr/bits.hpp"
#include "cosr/matrix.hpp"

namespace cosr {

/// Vertex labels in the order the graph stores them.
using VertexSet = std::vector<Label>;

/// Simple undirected graph over labelled vertices, bitset adjacency.
///
/// Vertices keep an insertion order; every "first"/"ascending" rule in the
/// graph algorithms refers to that order. Graphs read from files and derived
/// graphs of unaugmented matrices store labels ascending. A derived graph's
/// vertex labels are the labels of the rows they come from.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph. Throws std::invalid_argument on duplicate labels.
  explicit Graph(std::vector<Label> labels);
  /// Vertices 1..n.
  static Graph with_vertices(std::size_t n);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const;  // edge count

  Label label(std::size_t v) const { return labels_[v]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(Label l) const;
  /// Throws std::invalid_argument for an unknown label.
  std::size_t require(Label l) const;

  /// By index. Throws std::invalid_argument on a loop.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const Bits& neighbors(std::size_t v) const { return adj_[v]; }

  /// Induced subgraph on `keep` (bits over indices), preserving order.
  Graph induced(const Bits& keep) const;
  Bits all() const { return full_bits(order()); }

  VertexSet labels_of(const Bits& vertices) const;
  Bits indices_of(const VertexSet& vertices) const;

  bool is_clique(const Bits& vertices) const;

  std::vector<std::pair<Label, Label>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.labels_ == b.labels_ && a.adj_ == b.adj_; }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<Bits> adj_;
};

/// G(M): a vertex per row, adjacent iff the rows share a column.
Graph derived_graph(const BinaryMatrix& m);

/// vert(c): labels of rows with a 1 in column `col`. Throws
/// std::invalid_argument for an unknown column.
VertexSet vert(const BinaryMatrix& m, Label col);

/// G(M)[vert(ci) ∪ vert(cj)]. Columns must be distinct and known.
Graph pair_subgraph(const BinaryMatrix& m, Label ci, Label cj);

/// Same as pair_subgraph, by column index, reusing an already built G(M).
Graph pair_subgraph(const BinaryMatrix& m, const Graph& derived, std::size_t ci, std::size_t cj);

/// Graph text format:
///
///   # comment lines anywhere
///   n m
///   [sides k]          (bipartite inputs only: vertices 1..k form one side)
///   <m lines "u v", 1 <= u, v <= n, u != v>
///
/// Vertices are labelled 1..n. Throws ParseError naming the line.
struct GraphFile {
  Graph graph;
  std::optional<std::size_t> sides;
};

GraphFile parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace cosr

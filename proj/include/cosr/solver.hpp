#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cosr/cop.hpp"
#include "cosr/graph.hpp"
#include "cosr/interval.hpp"
#include "cosr/matrix.hpp"

namespace cosr {

enum class BranchRule {
  HellyTriple,      // rows of a pairwise intersecting triple violating H1/H2
  PairHole,         // rows of an induced C4 inside some G[vert(ci) ∪ vert(cj)]
  UncoveredClique,  // three rows of a minimal uncovered part of a maximal clique
};

struct SolveStats {
  std::size_t branching_nodes = 0;
  std::size_t leaves = 0;  // interval-deletion calls
  std::size_t helly_branches = 0;
  std::size_t hole_branches = 0;
  std::size_t clique_branches = 0;
};

struct SolveReport {
  bool feasible = false;
  RowSet solution;                // labels of the input matrix
  ColumnPermutation certificate;  // for the input minus `solution`
  SolveStats stats;
};

struct BranchEvent {
  BranchRule rule;
  const BinaryMatrix& matrix;
  int budget;
  std::vector<Label> rows;
};

/// State at an interval-deletion leaf: no branching rule applies to `matrix`.
struct LeafEvent {
  const BinaryMatrix& matrix;
  int budget;
  const BinaryMatrix& augmented;
  const Graph& graph;  // G(augmented)
  const std::optional<VertexSet>& deletion;
};

struct SolveOptions {
  IntervalDeletionOptions leaf_solver;
  std::function<void(const BranchEvent&)> on_branch;
  std::function<void(const LeafEvent&)> on_leaf;
};

/// Decides whether deleting at most d rows gives M the consecutive ones
/// property, and finds such rows.
///
/// Each call tests COP, then the budget, then Rules 1-3 in that order,
/// branching on the rows each rule names (ascending, depth-first, first
/// success wins). When no rule applies, G(M~) is solved for interval
/// deletion with the remaining budget and the deleted vertices are mapped
/// back to rows. Throws std::invalid_argument for d < 0.
SolveReport cos_r(const BinaryMatrix& m, int d, const SolveOptions& options = {});

/// "YES"/"NO", then the sorted deleted rows and the certificate when YES.
std::string format_report(const SolveReport& report);

/// Bipartite graph whose first `left` vertices (by index) form V1.
struct BipartiteGraph {
  Graph graph;
  std::size_t left = 0;
};

/// Rows are V1 (labelled by vertex), columns are V2 (labelled by vertex).
/// Throws std::invalid_argument if an edge joins two vertices of one side.
BinaryMatrix half_adjacency(const BipartiteGraph& b);

/// cos_r on the half adjacency matrix; the solution holds V1 vertex labels
/// and the certificate orders V2 vertex labels.
SolveReport convex_bipartite_deletion(const BipartiteGraph& b, int d, const SolveOptions& options = {});

}  // namespace cosr

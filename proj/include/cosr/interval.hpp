#pragma once

#include <cstddef>
#include <optional>

#include "cosr/graph.hpp"

namespace cosr {

/// Chordal, and the clique matrix built from the PEO cliques has consecutive
/// ones.
bool is_interval(const Graph& g);

struct IntervalDeletionOptions {
  /// Branching nodes allowed before switching to exhaustive subset search.
  std::size_t node_budget = 100000;
  /// Vertex labels that may not be deleted.
  VertexSet protected_vertices;
};

/// Smallest V' with |V'| <= d and G - V' interval, or nullopt (also for d < 0).
/// V' avoids `options.protected_vertices`.
///
/// Iterative deepening over the budget; each level branches on the vertices
/// of an obstruction: a shortest hole when G is not chordal, otherwise a
/// minimal non-interval induced subgraph found by greedy vertex removal.
/// Every solution hits every obstruction, so the search is exact. The result
/// is passed through minimalize_solution.
std::optional<VertexSet> interval_deletion(const Graph& g, int d, const IntervalDeletionOptions& options = {});

/// Drops vertices from `solution` (latest first) while G minus the rest
/// stays interval. Throws ContractViolation if G - solution is not interval.
VertexSet minimalize_solution(const Graph& g, const VertexSet& solution);

namespace detail {
bool is_interval_on(const Graph& g, const Bits& alive);
/// Vertex indices of a minimal non-interval induced subgraph of g[alive].
Bits obstruction(const Graph& g, const Bits& alive);
}  // namespace detail

}  // namespace cosr

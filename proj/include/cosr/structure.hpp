#pragma once

// Structural detectors on set systems and graphs that drive the branching
// rules: Helly-type triples, induced 4-cycles, chordality, and maximal cliques
// not realised by any column.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cosr/graph.hpp"
#include "cosr/matrix.hpp"

namespace cosr {

enum class HellyKind {
  EmptyCore,      // H1: pairwise intersecting, common intersection empty
  NoneCovered,    // H2: no set lies inside the union of the other two
};

struct HellyViolation {
  std::array<Label, 3> rows;
  HellyKind kind;
};

/// First triple (row order) of pairwise intersecting sets violating H1 or H2.
/// H1 is tested before H2 on each triple.
std::optional<HellyViolation> find_helly_violation(const SetSystem& sets);

/// An induced 4-cycle in cyclic order. Scans non-adjacent pairs (u, w) in
/// vertex order for two non-adjacent common neighbours.
std::optional<std::array<Label, 4>> find_c4(const Graph& g);

/// Perfect elimination ordering (labels) by maximum cardinality search, or
/// nullopt if g is not chordal.
std::optional<VertexSet> is_chordal(const Graph& g);

/// Maximal cliques of a chordal graph from a verified PEO, in PEO order.
/// Throws ContractViolation if `peo` is not a perfect elimination ordering.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const VertexSet& peo);

bool is_simplicial(const Graph& g, Label v);

/// Rule-3 witness: a maximal clique of G(M) equal to no vert(c), plus an
/// inclusion-minimal subset that no single column covers.
struct UncoveredClique {
  VertexSet clique;
  VertexSet core;
};

/// Requires Rules 1 and 2 to be inapplicable; throws ContractViolation if a
/// pair subgraph turns out to be non-chordal.
std::optional<UncoveredClique> find_uncovered_clique(const BinaryMatrix& m);

/// Index-level primitives, shared with the interval module.
namespace detail {

/// PEO as vertex indices, or nullopt.
std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& peo);
std::vector<Bits> chordal_cliques(const Graph& g, const std::vector<std::size_t>& peo);

/// A shortest induced cycle of length >= 4 in cyclic order, or nullopt.
std::optional<std::vector<std::size_t>> shortest_hole(const Graph& g);

}  // namespace detail

}  // namespace cosr

#pragma once

// Exhaustive reference implementations. They share the matrix and graph
// types with the production code and nothing else.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cosr/cop.hpp"
#include "cosr/graph.hpp"
#include "cosr/matrix.hpp"
#include "cosr/solver.hpp"

namespace cosr::oracle {

inline constexpr std::size_t kMaxCopColumns = 12;
inline constexpr std::size_t kMaxCliqueVertices = 16;
inline constexpr std::size_t kMaxSubsets = 2'000'000;

/// Lexicographically first column order (by column position) giving
/// consecutive ones. Depth-first over permutations; a prefix is abandoned
/// as soon as some row is interrupted, and placed-column sets already shown
/// to be dead ends are remembered. Refuses n > kMaxCopColumns.
std::optional<ColumnPermutation> brute_cop(const BinaryMatrix& m);

/// Smallest row set (lexicographically first among ties) whose deletion gives
/// COP, if its size is at most d.
std::optional<RowSet> brute_cosr(const BinaryMatrix& m, int d);

/// Every minimum-size deletion set, provided the minimum is at most d.
std::vector<RowSet> all_minimum_deletions(const BinaryMatrix& m, int d);

/// Maximal cliques by exhaustive subset enumeration. Refuses n > 16.
std::vector<VertexSet> brute_maximal_cliques(const Graph& g);

/// At most n maximal cliques, and the clique matrix passes brute_cop's search.
bool brute_is_interval(const Graph& g);

/// Smallest vertex set (lexicographically first among ties) of size at most
/// d whose removal leaves brute_is_interval true. Refuses n > 12 with d > 3.
std::optional<VertexSet> brute_interval_deletion(const Graph& g, int d);

/// Matrix cells drawn from std::mt19937_64(seed) in row-major order: a cell
/// is 1 iff (draw >> 11) * 2^-53 < density.
BinaryMatrix random_instance(std::uint64_t seed, std::size_t m, std::size_t n, double density);

/// G(n, p) over pairs (i < j) in row-major order, same draw rule.
Graph random_graph(std::uint64_t seed, std::size_t n, double p);

/// Intersection graph of n intervals with endpoints drawn from [0, span).
Graph random_interval_graph(std::uint64_t seed, std::size_t n, std::size_t span);

/// Random bipartite graph with V1 = 1..left, V2 = left+1..left+right.
BipartiteGraph random_bipartite(std::uint64_t seed, std::size_t left, std::size_t right, double p);

}  // namespace cosr::oracle

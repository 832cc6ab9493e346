#pragma once

#include <fstream>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "cosr/graph.hpp"
#include "cosr/matrix.hpp"
#include "cosr/matrix_io.hpp"

namespace fixtures {

inline std::string slurp(const std::string& name) {
  std::ifstream in(std::string(COSR_TEST_DATA) + "/" + name, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline cosr::BinaryMatrix load(const std::string& name) { return cosr::parse_matrix(slurp(name)); }

inline cosr::BinaryMatrix m1() { return load("m1.txt"); }
inline cosr::BinaryMatrix m2() { return load("m2.txt"); }
inline cosr::BinaryMatrix mh4() { return load("mh4.txt"); }
inline cosr::BinaryMatrix tucker3() { return load("tucker3.txt"); }

inline cosr::BinaryMatrix identity(std::size_t n) {
  std::vector<std::vector<int>> cells(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cells[i][i] = 1;
  return cosr::BinaryMatrix::from_dense(cells, n);
}

inline cosr::Graph graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  auto g = cosr::Graph::with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  return g;
}

inline cosr::Graph cycle(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i % n + 1));
  return graph(n, e);
}

inline cosr::Graph path(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return graph(n, e);
}

inline cosr::Graph complete(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return graph(n, e);
}

/// Hub 1, middles 2..4, leaves 5..7.
inline cosr::Graph spider222() { return graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}}); }

inline cosr::Graph two_c4() {
  return graph(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}});
}

}  // namespace fixtures

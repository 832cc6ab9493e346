#include <doctest.h>

#include <algorithm>
#include <set>

#include "cosr/oracle.hpp"
#include "cosr/solver.hpp"
#include "cosr/structure.hpp"
#include "fixtures.hpp"

using namespace cosr;

namespace {

bool verifies(const BinaryMatrix& m, const SolveReport& r, int d) {
  return r.feasible && r.solution.size() <= static_cast<std::size_t>(d) &&
         verify_cop(delete_rows(m, r.solution), r.certificate);
}

std::size_t node_bound(int d) {
  std::size_t p = 1;
  for (int i = 0; i <= d; ++i) p *= 4;
  return (p - 1) / 3;
}

// Cells only; half adjacency keeps V2 vertex labels on its columns.
bool same_cells(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.row(i) != b.row(i)) return false;
  return true;
}

std::set<VertexSet> sorted_cliques(const Graph& g) {
  std::set<VertexSet> out;
  for (auto q : oracle::brute_maximal_cliques(g)) {
    std::sort(q.begin(), q.end());
    out.insert(q);
  }
  return out;
}

}  // namespace

TEST_CASE("cos_r anchors") {
  auto m1 = fixtures::m1();
  CHECK_FALSE(cos_r(m1, 0).feasible);
  auto r = cos_r(m1, 1);
  CHECK(verifies(m1, r, 1));
  CHECK(r.solution.size() == 1);

  auto mh4 = fixtures::mh4();
  CHECK_FALSE(cos_r(mh4, 1).feasible);
  CHECK(verifies(mh4, cos_r(mh4, 2), 2));
  CHECK(cos_r(mh4, 2).stats.clique_branches >= 1);

  auto id = fixtures::identity(4);
  auto ri = cos_r(id, 0);
  CHECK(ri.feasible);
  CHECK(ri.solution.empty());
  CHECK(ri.stats.branching_nodes == 0);

  CHECK(cos_r(BinaryMatrix(0, 3), 0).feasible);
  CHECK(cos_r(parse_matrix("3 1\n1\n0\n1\n"), 0).feasible);
  CHECK_THROWS_AS(cos_r(m1, -1), std::invalid_argument);
}

TEST_CASE("cos_r matches the oracle on random matrices") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t m = 3 + seed % 6, n = 3 + (seed / 6) % 6;
    auto mat = oracle::random_instance(seed + 7000, m, n, 0.3 + 0.2 * static_cast<double>(seed % 3));
    for (int d = 0; d <= 3; ++d) {
      auto fast = cos_r(mat, d);
      auto brute = oracle::brute_cosr(mat, d);
      REQUIRE(fast.feasible == brute.has_value());
      if (fast.feasible) CHECK(verifies(mat, fast, d));
      CHECK(fast.stats.branching_nodes <= node_bound(d));
      CHECK(cos_r(mat, d).solution == fast.solution);
    }
  }
}

TEST_CASE("every branch includes a row of some minimum solution") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto mat = oracle::random_instance(seed + 8000, 4 + seed % 5, 4 + seed % 4, 0.5);
    SolveOptions opts;
    opts.on_branch = [&](const BranchEvent& e) {
      auto minima = oracle::all_minimum_deletions(e.matrix, e.budget);
      if (minima.empty()) return;
      ++checked;
      bool hit = false;
      for (const auto& sol : minima)
        for (Label r : e.rows) hit = hit || sol.count(r);
      CHECK(hit);
      CHECK(e.rows.size() == (e.rule == BranchRule::PairHole ? 4u : 3u));
    };
    cos_r(mat, 3, opts);
  }
  CHECK(checked > 50);
}

TEST_CASE("leaves satisfy the clique-matrix invariant") {
  std::size_t leaves = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto mat = oracle::random_instance(seed + 9000, 4 + seed % 5, 3 + seed % 5, 0.5);
    SolveOptions opts;
    opts.on_leaf = [&](const LeafEvent& e) {
      ++leaves;
      const BinaryMatrix& leaf = e.matrix;
      CHECK_FALSE(find_helly_violation(set_system(leaf)));

      // On non-zero rows, maximal cliques are exactly the column supports.
      Bits live(leaf.rows());
      for (std::size_t i = 0; i < leaf.rows(); ++i) live[i] = leaf.row(i).any();
      const Graph g = derived_graph(leaf).induced(live);
      std::set<VertexSet> cols;
      for (Label c : leaf.col_labels()) {
        auto v = vert(leaf, c);
        if (!v.empty()) cols.insert(v);
      }
      for (const auto& q : sorted_cliques(g)) CHECK(cols.count(q));

      // The augmented matrix lists the maximal cliques of its derived graph.
      Bits alive(e.augmented.rows());
      for (std::size_t i = 0; i < e.augmented.rows(); ++i) alive[i] = e.augmented.row(i).any();
      std::set<VertexSet> aug_cols;
      for (Label c : e.augmented.col_labels()) aug_cols.insert(vert(e.augmented, c));
      CHECK(sorted_cliques(e.graph.induced(alive)) == aug_cols);
    };
    cos_r(mat, 3, opts);
  }
  CHECK(leaves > 50);
}

TEST_CASE("augmenting preserves feasibility of every deletion set") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto mat = oracle::random_instance(seed + 11000, 5, 5, 0.5);
    auto aug = augment(mat);
    for (unsigned mask = 0; mask < 32; mask += 3) {
      RowSet d;
      for (unsigned i = 0; i < 5; ++i)
        if (mask >> i & 1) d.insert(static_cast<Label>(i + 1));
      CHECK(oracle::brute_cop(delete_rows(mat, d)).has_value() ==
            oracle::brute_cop(delete_rows(aug, d)).has_value());
    }
  }
}

TEST_CASE("format_report") {
  SolveReport no;
  CHECK(format_report(no) == "NO\n");
  SolveReport yes;
  yes.feasible = true;
  yes.solution = {3, 1};
  yes.certificate.order = {2, 1, 3};
  CHECK(format_report(yes) == "YES\n1 3\n2 1 3\n");
  yes.solution.clear();
  CHECK(format_report(yes) == "YES\n\n2 1 3\n");
}

TEST_CASE("half_adjacency") {
  auto one = Graph::with_vertices(2);
  one.add_edge(0, 1);
  CHECK(same_cells(half_adjacency({one, 1}), parse_matrix("1 1\n1\n")));
  CHECK(half_adjacency({one, 1}).col_labels() == std::vector<Label>{2});

  auto k22 = fixtures::graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(same_cells(half_adjacency({k22, 2}), parse_matrix("2 2\n1 1\n1 1\n")));
  CHECK(same_cells(half_adjacency({Graph::with_vertices(5), 2}), BinaryMatrix(2, 3)));

  auto inside = fixtures::graph(3, {{1, 2}});
  CHECK_THROWS_AS(half_adjacency({inside, 2}), std::invalid_argument);

  auto file = parse_graph(fixtures::slurp("bip_m1.graph"));
  auto half = half_adjacency({file.graph, *file.sides});
  CHECK(same_cells(half, fixtures::m1()));
  CHECK(half.row_labels() == std::vector<Label>{1, 2, 3});
}

TEST_CASE("convex_bipartite_deletion") {
  auto k22 = fixtures::graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto r0 = convex_bipartite_deletion({k22, 2}, 0);
  CHECK(r0.feasible);
  CHECK(r0.solution.empty());

  auto file = parse_graph(fixtures::slurp("bip_m1.graph"));
  BipartiteGraph b{file.graph, *file.sides};
  CHECK_FALSE(convex_bipartite_deletion(b, 0).feasible);
  auto r1 = convex_bipartite_deletion(b, 1);
  REQUIRE(r1.feasible);
  REQUIRE(r1.solution.size() == 1);
  CHECK(*r1.solution.begin() >= 1);
  CHECK(*r1.solution.begin() <= 3);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "cosr/error.hpp"
#include "cosr/graph.hpp"
#include "cosr/oracle.hpp"
#include "cosr/structure.hpp"
#include "fixtures.hpp"

using namespace cosr;

namespace {

std::set<VertexSet> as_set(std::vector<VertexSet> cliques) {
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  return {cliques.begin(), cliques.end()};
}

// Any induced C4, by checking every 4-subset and its three cyclic orders.
bool has_induced_c4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::size_t q[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (auto& o : q) {
            bool cyc = g.adjacent(o[0], o[1]) && g.adjacent(o[1], o[2]) && g.adjacent(o[2], o[3]) && g.adjacent(o[3], o[0]);
            if (cyc && !g.adjacent(o[0], o[2]) && !g.adjacent(o[1], o[3])) return true;
          }
        }
  return false;
}

bool any_pair_c4(const BinaryMatrix& m) {
  for (std::size_t a = 0; a < m.cols(); ++a)
    for (std::size_t b = a + 1; b < m.cols(); ++b)
      if (find_c4(pair_subgraph(m, m.col_label(a), m.col_label(b)))) return true;
  return false;
}

Bits nonzero_rows(const BinaryMatrix& m) {
  Bits b(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) b[i] = m.row(i).any();
  return b;
}

}  // namespace

TEST_CASE("derived_graph") {
  auto id = derived_graph(fixtures::identity(3));
  CHECK(id.order() == 3);
  CHECK(id.size() == 0);

  auto tri = derived_graph(fixtures::m1());
  CHECK(tri.size() == 3);
  CHECK(tri.labels() == std::vector<Label>{1, 2, 3});

  auto path = derived_graph(parse_matrix("3 2\n1 0\n1 1\n0 1\n"));
  CHECK(path.edges() == std::vector<std::pair<Label, Label>>{{1, 2}, {2, 3}});
}

TEST_CASE("vert") {
  CHECK(vert(fixtures::identity(3), 1) == VertexSet{1});
  CHECK(vert(fixtures::m1(), 6) == VertexSet{2, 3});
  CHECK(vert(parse_matrix("2 2\n1 0\n1 0\n"), 2).empty());
  CHECK_THROWS_AS(vert(fixtures::m1(), 0), std::invalid_argument);

  auto m = fixtures::m1();
  auto g = derived_graph(m);
  for (Label c : m.col_labels()) CHECK(g.is_clique(g.indices_of(vert(m, c))));
}

TEST_CASE("find_helly_violation") {
  auto h1 = find_helly_violation(set_system(fixtures::m1()));
  REQUIRE(h1);
  CHECK(h1->rows == std::array<Label, 3>{1, 2, 3});
  CHECK(h1->kind == HellyKind::EmptyCore);

  auto h2 = find_helly_violation(set_system(fixtures::m2()));
  REQUIRE(h2);
  CHECK(h2->rows == std::array<Label, 3>{1, 2, 3});
  CHECK(h2->kind == HellyKind::NoneCovered);

  CHECK_FALSE(find_helly_violation(set_system(fixtures::identity(3))));
}

TEST_CASE("pair_subgraph") {
  auto iso = pair_subgraph(fixtures::identity(3), 1, 2);
  CHECK(iso.order() == 2);
  CHECK(iso.size() == 0);

  auto tri = pair_subgraph(fixtures::m1(), 1, 6);
  CHECK(tri.labels() == std::vector<Label>{1, 2, 3});
  CHECK(tri.size() == 3);

  auto same = pair_subgraph(parse_matrix("3 2\n1 1\n1 1\n0 0\n"), 1, 2);
  CHECK(same.order() == 2);
  CHECK(same.size() == 1);

  CHECK_THROWS_AS(pair_subgraph(fixtures::m1(), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_subgraph(fixtures::m1(), 1, 9), std::invalid_argument);
}

TEST_CASE("find_c4") {
  auto c = find_c4(fixtures::cycle(4));
  REQUIRE(c);
  CHECK(*c == std::array<Label, 4>{1, 2, 3, 4});
  CHECK_FALSE(find_c4(fixtures::complete(4)));
  CHECK_FALSE(find_c4(fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = oracle::random_graph(seed, 7, 0.45);
    auto found = find_c4(g);
    CHECK(found.has_value() == has_induced_c4(g));
    if (found) {
      auto& q = *found;
      auto at = [&](int i) { return *g.index_of(q[static_cast<std::size_t>(i % 4)]); };
      for (int i = 0; i < 4; ++i) {
        CHECK(g.adjacent(at(i), at(i + 1)));
        CHECK_FALSE(g.adjacent(at(i), at(i + 2)));
      }
    }
  }
}

TEST_CASE("is_chordal") {
  auto tri = fixtures::complete(3);
  auto peo = is_chordal(tri);
  REQUIRE(peo);
  CHECK(peo->size() == 3);

  CHECK_FALSE(is_chordal(fixtures::cycle(4)));
  CHECK_FALSE(is_chordal(fixtures::cycle(6)));

  auto tree = fixtures::graph(6, {{1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}});
  auto tp = is_chordal(tree);
  REQUIRE(tp);
  CHECK(is_simplicial(tree, tp->front()));
  CHECK(tree.neighbors(tree.require(tp->front())).count() == 1);
}

TEST_CASE("maximal_cliques_chordal") {
  auto cliques = [](const Graph& g) { return as_set(maximal_cliques_chordal(g, *is_chordal(g))); };

  CHECK(cliques(fixtures::path(3)) == std::set<VertexSet>{{1, 2}, {2, 3}});
  CHECK(cliques(fixtures::complete(4)) == std::set<VertexSet>{{1, 2, 3, 4}});
  // triangle 1-2-3 with pendant 4 on vertex 3, enumerated by hand
  auto tp = fixtures::graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  CHECK(cliques(tp) == std::set<VertexSet>{{1, 2, 3}, {3, 4}});

  CHECK_THROWS_AS(maximal_cliques_chordal(fixtures::path(3), {2, 1, 3}), ContractViolation);
  CHECK_THROWS_AS(maximal_cliques_chordal(fixtures::path(3), {1, 3}), ContractViolation);
}

TEST_CASE("chordal cliques agree with exhaustive enumeration") {
  std::size_t chordal = 0;
  for (std::uint64_t seed = 0; seed < 600 && chordal < 150; ++seed) {
    auto g = oracle::random_graph(seed, 4 + seed % 9, 0.2 + 0.1 * static_cast<double>(seed % 6));
    auto peo = is_chordal(g);
    if (!peo) continue;
    ++chordal;
    CHECK(as_set(maximal_cliques_chordal(g, *peo)) == as_set(oracle::brute_maximal_cliques(g)));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = oracle::random_interval_graph(seed, 12, 30);
    auto peo = is_chordal(g);
    REQUIRE(peo);
    CHECK(as_set(maximal_cliques_chordal(g, *peo)) == as_set(oracle::brute_maximal_cliques(g)));
  }
  CHECK(chordal >= 100);
}

TEST_CASE("is_simplicial") {
  auto tree = fixtures::graph(4, {{1, 2}, {2, 3}, {2, 4}});
  CHECK(is_simplicial(tree, 1));
  CHECK_FALSE(is_simplicial(fixtures::path(3), 2));
  for (Label v = 1; v <= 5; ++v) CHECK(is_simplicial(fixtures::complete(5), v));
  CHECK_THROWS_AS(is_simplicial(tree, 9), std::invalid_argument);
}

TEST_CASE("find_uncovered_clique") {
  CHECK_FALSE(find_uncovered_clique(parse_matrix("3 1\n1\n1\n1\n")));
  CHECK_FALSE(find_uncovered_clique(fixtures::identity(3)));

  auto mh4 = fixtures::mh4();
  // Rules 1 and 2 do not apply: checked exhaustively on triples and 4-subsets.
  CHECK_FALSE(find_helly_violation(set_system(mh4)));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      CHECK_FALSE(has_induced_c4(pair_subgraph(mh4, mh4.col_label(a), mh4.col_label(b))));
  auto u = find_uncovered_clique(mh4);
  REQUIRE(u);
  CHECK(u->clique == VertexSet{1, 2, 3, 4});
  CHECK(u->core == VertexSet{1, 2, 3, 4});
}

TEST_CASE("structural properties on random matrices") {
  std::size_t past_rule1 = 0, past_rule2 = 0, uncovered = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    auto m = oracle::random_instance(seed + 90000, 3 + seed % 6, 2 + (seed / 6) % 6, 0.3 + 0.2 * static_cast<double>(seed % 3));
    if (find_helly_violation(set_system(m))) continue;
    ++past_rule1;
    const Graph g = derived_graph(m);
    const Graph gnz = g.induced(nonzero_rows(m));
    const auto cliques = oracle::brute_maximal_cliques(gnz);

    // Every maximal clique lies in vert(ci) ∪ vert(cj) for some pair.
    for (const auto& q : cliques) {
      const Bits qb = g.indices_of(q);
      bool inside = false;
      for (std::size_t a = 0; a < m.cols() && !inside; ++a)
        for (std::size_t b = a; b < m.cols() && !inside; ++b)
          inside = qb.is_subset_of(m.column(a) | m.column(b));
      CHECK(inside);
    }
    // No C4 in a pair subgraph means it is chordal.
    for (std::size_t a = 0; a < m.cols(); ++a)
      for (std::size_t b = a + 1; b < m.cols(); ++b) {
        auto sub = pair_subgraph(m, m.col_label(a), m.col_label(b));
        if (!find_c4(sub)) CHECK(is_chordal(sub));
      }
    if (any_pair_c4(m)) continue;
    ++past_rule2;

    // Pair-subgraph cliques, kept when maximal in G(M), are exactly the
    // maximal cliques of G(M) on its non-isolated rows.
    std::set<VertexSet> from_pairs;
    for (std::size_t a = 0; a < m.cols(); ++a)
      for (std::size_t b = a + 1; b < m.cols(); ++b) {
        auto sub = pair_subgraph(m, m.col_label(a), m.col_label(b));
        for (auto q : maximal_cliques_chordal(sub, *is_chordal(sub))) {
          Bits qb = g.indices_of(q);
          Bits common = ~qb;
          for (auto v : members(qb)) common &= g.neighbors(v);
          std::sort(q.begin(), q.end());
          if (common.none()) from_pairs.insert(q);
        }
      }
    if (m.cols() >= 2) CHECK(from_pairs == as_set(cliques));

    // Uncovered core is minimal and has at least three vertices.
    if (auto u = find_uncovered_clique(m)) {
      ++uncovered;
      CHECK(u->core.size() >= 3);
      auto covered = [&](const Bits& x) {
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (x.is_subset_of(m.column(j))) return true;
        return false;
      };
      const Bits core = g.indices_of(u->core);
      CHECK_FALSE(covered(core));
      for (auto v : members(core)) {
        Bits less = core;
        less.reset(v);
        CHECK(covered(less));
      }
    }
  }
  CHECK(past_rule1 > 100);
  CHECK(past_rule2 > 50);
  MESSAGE("instances past rule 1: " << past_rule1 << ", past rule 2: " << past_rule2 << ", uncovered: " << uncovered);
}

TEST_CASE("graph file format") {
  auto f = parse_graph(fixtures::slurp("c4.graph"));
  CHECK(f.graph == fixtures::cycle(4));
  CHECK_FALSE(f.sides);
  CHECK(parse_graph(serialize_graph(f.graph)).graph == f.graph);

  auto b = parse_graph(fixtures::slurp("bip_m1.graph"));
  REQUIRE(b.sides);
  CHECK(*b.sides == 3);

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 1\n1 4\n") == 2);
  CHECK(line_of("3 2\n1 2\n# c\n2 1\n") == 4);
  CHECK(line_of("3 2\n1 2\n") == 2);
  CHECK(line_of("3\n") == 1);
}

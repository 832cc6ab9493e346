#include "cosr/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cosr/structure.hpp"

namespace cosr {

namespace {

class CosR {
 public:
  CosR(const SolveOptions& options, SolveStats& stats) : options_(options), stats_(stats) {}

  std::optional<RowSet> solve(const BinaryMatrix& m, const RowSet& taken, int d) {
    // Step 0
    if (d >= 0 && cop_order(m)) return taken;
    // Step 1
    if (d < 0) return std::nullopt;

    // Step 2: Rule 1
    if (auto h = find_helly_violation(set_system(m))) {
      std::vector<Label> rows(h->rows.begin(), h->rows.end());
      return branch(BranchRule::HellyTriple, m, taken, d, std::move(rows));
    }

    // Step 3: Rule 2
    const Graph g = derived_graph(m);
    for (std::size_t a = 0; a < m.cols(); ++a) {
      for (std::size_t b = a + 1; b < m.cols(); ++b) {
        if (auto c4 = find_c4(pair_subgraph(m, g, a, b))) {
          std::vector<Label> rows(c4->begin(), c4->end());
          return branch(BranchRule::PairHole, m, taken, d, std::move(rows));
        }
      }
    }

    // Step 4: Rule 3
    if (auto u = find_uncovered_clique(m)) {
      std::vector<Label> core = u->core;
      std::sort(core.begin(), core.end());
      core.resize(3);
      return branch(BranchRule::UncoveredClique, m, taken, d, std::move(core));
    }

    // Step 5
    ++stats_.leaves;
    const BinaryMatrix tilde = augment(m);
    const Graph gt = derived_graph(tilde);
    // Identity-row vertices are never deleted: they map to no input row, and
    // a minimal solution can still contain them.
    IntervalDeletionOptions leaf = options_.leaf_solver;
    for (std::size_t i = 0; i < tilde.rows(); ++i)
      if (tilde.is_identity_row(i)) leaf.protected_vertices.push_back(tilde.row_label(i));
    const auto deletion = interval_deletion(gt, d, leaf);
    if (options_.on_leaf) options_.on_leaf(LeafEvent{m, d, tilde, gt, deletion});

    // Step 6
    if (!deletion) return std::nullopt;
    RowSet out = taken;
    for (Label v : *deletion) {
      const auto i = tilde.row_index(v);
      if (tilde.is_identity_row(*i)) throw std::logic_error("cos_r: interval deletion removed a protected vertex");
      out.insert(v);
    }
    return out;
  }

 private:
  std::optional<RowSet> branch(BranchRule rule, const BinaryMatrix& m, const RowSet& taken, int d,
                               std::vector<Label> rows) {
    std::sort(rows.begin(), rows.end());
    ++stats_.branching_nodes;
    switch (rule) {
      case BranchRule::HellyTriple: ++stats_.helly_branches; break;
      case BranchRule::PairHole: ++stats_.hole_branches; break;
      case BranchRule::UncoveredClique: ++stats_.clique_branches; break;
    }
    if (options_.on_branch) options_.on_branch(BranchEvent{rule, m, d, rows});
    for (Label r : rows) {
      RowSet next = taken;
      next.insert(r);
      if (auto found = solve(delete_rows(m, {r}), next, d - 1)) return found;
    }
    return std::nullopt;
  }

  const SolveOptions& options_;
  SolveStats& stats_;
};

}  // namespace

SolveReport cos_r(const BinaryMatrix& m, int d, const SolveOptions& options) {
  if (d < 0) throw std::invalid_argument("cos_r: deletion budget must be non-negative");
  SolveReport report;
  CosR search(options, report.stats);
  auto found = search.solve(m, {}, d);
  if (!found) return report;
  auto cert = cop_order(delete_rows(m, *found));
  if (!cert || found->size() > static_cast<std::size_t>(d))
    throw std::logic_error("cos_r: returned rows do not leave a COP matrix");
  report.feasible = true;
  report.solution = std::move(*found);
  report.certificate = std::move(*cert);
  return report;
}

std::string format_report(const SolveReport& report) {
  std::ostringstream out;
  if (!report.feasible) {
    out << "NO\n";
    return out.str();
  }
  out << "YES\n";
  bool first = true;
  for (Label r : report.solution) {
    out << (first ? "" : " ") << r;
    first = false;
  }
  out << '\n';
  first = true;
  for (Label c : report.certificate.order) {
    out << (first ? "" : " ") << c;
    first = false;
  }
  out << '\n';
  return out.str();
}

BinaryMatrix half_adjacency(const BipartiteGraph& b) {
  const Graph& g = b.graph;
  if (b.left > g.order()) throw std::invalid_argument("half_adjacency: side larger than the graph");
  const std::size_t m = b.left, n = g.order() - b.left;
  std::vector<Bits> rows(m, Bits(n));
  for (std::size_t u = 0; u < g.order(); ++u) {
    for_each_bit(g.neighbors(u), [&](std::size_t v) {
      if ((u < m) == (v < m))
        throw std::invalid_argument("half_adjacency: edge " + std::to_string(g.label(u)) + "-" +
                                    std::to_string(g.label(v)) + " lies inside one side");
      if (u < m) rows[u].set(v - m);
    });
  }
  std::vector<Label> row_labels(g.labels().begin(), g.labels().begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<Label> col_labels(g.labels().begin() + static_cast<std::ptrdiff_t>(m), g.labels().end());
  return BinaryMatrix(n, std::move(rows), std::move(row_labels), std::move(col_labels));
}

SolveReport convex_bipartite_deletion(const BipartiteGraph& b, int d, const SolveOptions& options) {
  return cos_r(half_adjacency(b), d, options);
}

}  // namespace cosr

#include "cosr/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cosr/error.hpp"

namespace cosr::oracle {

namespace {

using Mask = std::uint32_t;

class PermutationSearch {
 public:
  PermutationSearch(std::vector<Mask> rows, std::size_t n) : rows_(std::move(rows)), n_(n), dead_(std::size_t{1} << n, false) {}

  std::optional<std::vector<std::size_t>> run() {
    order_.clear();
    if (extend(0)) return order_;
    return std::nullopt;
  }

 private:
  bool extend(Mask placed) {
    if (order_.size() == n_) return true;
    if (dead_[placed]) return false;
    // Rows begun but not finished must continue with the next column.
    Mask must = ~Mask{0};
    for (Mask r : rows_)
      if ((r & placed) && (r & ~placed)) must &= r;
    for (std::size_t c = 0; c < n_; ++c) {
      const Mask bit = Mask{1} << c;
      if ((placed & bit) || !(must & bit)) continue;
      order_.push_back(c);
      if (extend(placed | bit)) return true;
      order_.pop_back();
    }
    dead_[placed] = true;
    return false;
  }

  std::vector<Mask> rows_;
  std::size_t n_;
  std::vector<bool> dead_;
  std::vector<std::size_t> order_;
};

Mask to_mask(const Bits& b) {
  Mask m = 0;
  for_each_bit(b, [&](std::size_t j) { m |= Mask{1} << j; });
  return m;
}

std::optional<std::vector<std::size_t>> first_order(const std::vector<Mask>& rows, std::size_t n) {
  return PermutationSearch(rows, n).run();
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls f(pick) for every k-subset of 0..n-1 in lexicographic order until f
// returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (f(pick)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void guard_subsets(std::size_t n, int d) {
  std::uint64_t total = 0;
  for (int k = 0; k <= d && static_cast<std::size_t>(k) <= n; ++k) total += binomial(n, static_cast<std::size_t>(k));
  if (total > kMaxSubsets) throw OracleRefusal("subset enumeration of " + std::to_string(total) + " sets exceeds guard");
}

// Minimum-size row subsets whose removal leaves consecutive ones; stops at
// the first hit unless `all` is set.
std::vector<RowSet> minimum_deletions(const BinaryMatrix& m, int d, bool all) {
  if (m.cols() > kMaxCopColumns)
    throw OracleRefusal("brute force COP refuses " + std::to_string(m.cols()) + " columns");
  std::vector<RowSet> out;
  if (d < 0) return out;
  guard_subsets(m.rows(), d);
  std::vector<Mask> rows;
  for (const auto& r : m.row_bits()) rows.push_back(to_mask(r));
  for (std::size_t k = 0; k <= static_cast<std::size_t>(d) && k <= m.rows(); ++k) {
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& pick) {
      std::vector<Mask> kept;
      std::size_t p = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (p < pick.size() && pick[p] == i) {
          ++p;
          continue;
        }
        kept.push_back(rows[i]);
      }
      if (!first_order(kept, m.cols())) return false;
      RowSet s;
      for (auto i : pick) s.insert(m.row_label(i));
      out.push_back(std::move(s));
      return !all;
    });
    if (!out.empty()) break;
  }
  return out;
}

}  // namespace

std::optional<ColumnPermutation> brute_cop(const BinaryMatrix& m) {
  if (m.cols() > kMaxCopColumns)
    throw OracleRefusal("brute force COP refuses " + std::to_string(m.cols()) + " columns");
  std::vector<Mask> rows;
  for (const auto& r : m.row_bits()) rows.push_back(to_mask(r));
  auto order = first_order(rows, m.cols());
  if (!order) return std::nullopt;
  ColumnPermutation p;
  for (auto j : *order) p.order.push_back(m.col_label(j));
  return p;
}

std::optional<RowSet> brute_cosr(const BinaryMatrix& m, int d) {
  auto found = minimum_deletions(m, d, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<RowSet> all_minimum_deletions(const BinaryMatrix& m, int d) { return minimum_deletions(m, d, true); }

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCliqueVertices)
    throw OracleRefusal("brute force cliques refuse " + std::to_string(n) + " vertices");
  std::vector<Mask> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (u != v && g.adjacent(u, v)) adj[v] |= Mask{1} << u;

  const std::size_t total = std::size_t{1} << n;
  std::vector<bool> clique(total, false);
  clique[0] = true;
  for (std::size_t s = 1; s < total; ++s) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(s));
    const Mask rest = static_cast<Mask>(s & (s - 1));
    clique[s] = clique[rest] && (rest & ~adj[low]) == 0;
  }
  std::vector<VertexSet> out;
  for (std::size_t s = 1; s < total; ++s) {
    if (!clique[s]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const Mask bit = Mask{1} << v;
      if (!(s & bit) && clique[s | bit]) maximal = false;
    }
    if (!maximal) continue;
    VertexSet c;
    for (std::size_t v = 0; v < n; ++v)
      if (s & (Mask{1} << v)) c.push_back(g.label(v));
    out.push_back(std::move(c));
  }
  return out;
}

bool brute_is_interval(const Graph& g) {
  const auto cliques = brute_maximal_cliques(g);
  // An interval graph has at most one maximal clique per vertex.
  if (cliques.size() > g.order()) return false;
  std::vector<Mask> rows(g.order(), 0);
  for (std::size_t q = 0; q < cliques.size(); ++q)
    for (Label l : cliques[q]) rows[*g.index_of(l)] |= Mask{1} << q;
  return first_order(rows, cliques.size()).has_value();
}

std::optional<VertexSet> brute_interval_deletion(const Graph& g, int d) {
  const std::size_t n = g.order();
  if (n > 12 && d > 3) throw OracleRefusal("brute interval deletion refuses n > 12 with d > 3");
  if (d < 0) return std::nullopt;
  guard_subsets(n, d);
  std::optional<VertexSet> found;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(d) && k <= n && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& pick) {
      Bits keep = g.all();
      for (auto v : pick) keep.reset(v);
      if (!brute_is_interval(g.induced(keep))) return false;
      VertexSet s;
      for (auto v : pick) s.push_back(g.label(v));
      found = std::move(s);
      return true;
    });
  }
  return found;
}

BinaryMatrix random_instance(std::uint64_t seed, std::size_t m, std::size_t n, double density) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> cells(m, std::vector<int>(n, 0));
  for (auto& row : cells)
    for (auto& c : row) c = unit(rng) < density ? 1 : 0;
  return BinaryMatrix::from_dense(cells, n);
}

Graph random_graph(std::uint64_t seed, std::size_t n, double p) {
  std::mt19937_64 rng(seed);
  Graph g = Graph::with_vertices(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit(rng) < p) g.add_edge(u, v);
  return g;
}

Graph random_interval_graph(std::uint64_t seed, std::size_t n, std::size_t span) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> iv(n);
  for (auto& [lo, hi] : iv) {
    lo = rng() % span;
    hi = rng() % span;
    if (lo > hi) std::swap(lo, hi);
  }
  Graph g = Graph::with_vertices(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (std::max(iv[u].first, iv[v].first) <= std::min(iv[u].second, iv[v].second)) g.add_edge(u, v);
  return g;
}

BipartiteGraph random_bipartite(std::uint64_t seed, std::size_t left, std::size_t right, double p) {
  std::mt19937_64 rng(seed);
  BipartiteGraph b{Graph::with_vertices(left + right), left};
  for (std::size_t u = 0; u < left; ++u)
    for (std::size_t v = 0; v < right; ++v)
      if (unit(rng) < p) b.graph.add_edge(u, left + v);
  return b;
}

}  // namespace cosr::oracle

#include "cosr/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cosr/error.hpp"

namespace cosr {

std::optional<HellyViolation> find_helly_violation(const SetSystem& s) {
  const auto& sets = s.sets;
  const std::size_t m = sets.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!sets[a].intersects(sets[b])) continue;
      const Bits ab = sets[a] & sets[b];
      for (std::size_t c = b + 1; c < m; ++c) {
        if (!sets[a].intersects(sets[c]) || !sets[b].intersects(sets[c])) continue;
        const std::array<Label, 3> rows{s.labels[a], s.labels[b], s.labels[c]};
        if (!ab.intersects(sets[c])) return HellyViolation{rows, HellyKind::EmptyCore};
        const bool a_in = sets[a].is_subset_of(sets[b] | sets[c]);
        const bool b_in = sets[b].is_subset_of(sets[a] | sets[c]);
        const bool c_in = sets[c].is_subset_of(sets[a] | sets[b]);
        if (!a_in && !b_in && !c_in) return HellyViolation{rows, HellyKind::NoneCovered};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Label, 4>> find_c4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      const Bits common = g.neighbors(u) & g.neighbors(w);
      for (auto x = common.find_first(); x != Bits::npos; x = common.find_next(x)) {
        for (auto y = common.find_next(x); y != Bits::npos; y = common.find_next(y)) {
          if (!g.adjacent(x, y)) return std::array<Label, 4>{g.label(u), g.label(x), g.label(w), g.label(y)};
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::size_t> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    numbered[best] = true;
    visit.push_back(best);
    for_each_bit(g.neighbors(best), [&](std::size_t u) {
      if (!numbered[u]) ++weight[u];
    });
  }
  std::vector<std::size_t> peo(visit.rbegin(), visit.rend());
  if (!is_perfect_elimination_order(g, peo)) return std::nullopt;
  return peo;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& peo) {
  const std::size_t n = g.order();
  if (peo.size() != n) return false;
  Bits later(n);
  for (auto v : peo) {
    if (v >= n || later[v]) return false;
    later.set(v);
  }
  // `later` now marks everything; peel vertices off front to back.
  for (auto v : peo) {
    later.reset(v);
    const Bits succ = g.neighbors(v) & later;
    if (!g.is_clique(succ)) return false;
  }
  return true;
}

std::vector<Bits> chordal_cliques(const Graph& g, const std::vector<std::size_t>& peo) {
  const std::size_t n = g.order();
  std::vector<Bits> candidates;
  candidates.reserve(n);
  Bits later = g.all();
  for (auto v : peo) {
    later.reset(v);
    Bits c = g.neighbors(v) & later;
    c.set(v);
    candidates.push_back(std::move(c));
  }
  std::vector<Bits> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j || !candidates[i].is_subset_of(candidates[j])) continue;
      // Equal candidates cannot arise from a PEO (each contains its own
      // vertex and no earlier one), so containment is strict.
      maximal = false;
    }
    if (maximal) out.push_back(candidates[i]);
  }
  return out;
}

std::optional<std::vector<std::size_t>> shortest_hole(const Graph& g) {
  const std::size_t n = g.order();
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = members(g.neighbors(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const std::size_t a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        // Shortest a-b path avoiding v's closed neighbourhood except a, b.
        Bits allowed = ~g.neighbors(v);
        allowed.reset(v);
        allowed.set(a);
        allowed.set(b);
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{a};
        parent[a] = a;
        while (!queue.empty() && parent[b] == n) {
          const auto x = queue.front();
          queue.pop_front();
          const Bits next = g.neighbors(x) & allowed;
          for_each_bit(next, [&](std::size_t y) {
            if (parent[y] == n) {
              parent[y] = x;
              queue.push_back(y);
            }
          });
        }
        if (parent[b] == n) continue;
        std::vector<std::size_t> path;
        for (std::size_t x = b; x != a; x = parent[x]) path.push_back(x);
        path.push_back(a);
        if (best && path.size() + 1 >= best->size()) continue;
        std::vector<std::size_t> cycle{v};
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        best = std::move(cycle);
        if (best->size() == 4) return best;
      }
    }
  }
  return best;
}

}  // namespace detail

std::optional<VertexSet> is_chordal(const Graph& g) {
  auto peo = detail::perfect_elimination_order(g);
  if (!peo) return std::nullopt;
  VertexSet out;
  for (auto v : *peo) out.push_back(g.label(v));
  return out;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const VertexSet& peo) {
  std::vector<std::size_t> idx;
  idx.reserve(peo.size());
  for (Label l : peo) {
    auto i = g.index_of(l);
    if (!i) throw ContractViolation("maximal_cliques_chordal: ordering names an unknown vertex");
    idx.push_back(*i);
  }
  if (!detail::is_perfect_elimination_order(g, idx))
    throw ContractViolation("maximal_cliques_chordal: not a perfect elimination ordering");
  std::vector<VertexSet> out;
  for (const auto& c : detail::chordal_cliques(g, idx)) out.push_back(g.labels_of(c));
  return out;
}

bool is_simplicial(const Graph& g, Label v) {
  return g.is_clique(g.neighbors(g.require(v)));
}

std::optional<UncoveredClique> find_uncovered_clique(const BinaryMatrix& m) {
  const Graph g = derived_graph(m);
  const std::size_t n = m.cols();
  std::vector<Bits> columns;
  columns.reserve(n);
  for (std::size_t j = 0; j < n; ++j) columns.push_back(m.column(j));

  auto covered = [&](const Bits& x) {
    return std::any_of(columns.begin(), columns.end(), [&](const Bits& c) { return x.is_subset_of(c); });
  };
  auto realised = [&](const Bits& x) {
    return std::any_of(columns.begin(), columns.end(), [&](const Bits& c) { return x == c; });
  };
  auto maximal_in_g = [&](const Bits& q) {
    Bits common = ~q;
    for_each_bit(q, [&](std::size_t v) { common &= g.neighbors(v); });
    return common.none();
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n == 1) pairs.emplace_back(0, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<Bits> checked;
  for (auto [a, b] : pairs) {
    const Bits span = columns[a] | columns[b];
    const Graph sub = g.induced(span);
    auto peo = detail::perfect_elimination_order(sub);
    if (!peo) throw ContractViolation("find_uncovered_clique: pair subgraph is not chordal");
    const auto local_to_global = members(span);
    for (const auto& local : detail::chordal_cliques(sub, *peo)) {
      Bits q(m.rows());
      for_each_bit(local, [&](std::size_t v) { q.set(local_to_global[v]); });
      if (std::find(checked.begin(), checked.end(), q) != checked.end()) continue;
      checked.push_back(q);
      if (!maximal_in_g(q) || realised(q)) continue;

      Bits core = q;
      for_each_bit(q, [&](std::size_t v) {
        core.reset(v);
        if (covered(core)) core.set(v);
      });
      if (core.count() < 3) throw std::logic_error("find_uncovered_clique: uncovered core smaller than 3");
      return UncoveredClique{g.labels_of(q), g.labels_of(core)};
    }
  }
  return std::nullopt;
}

}  // namespace cosr

#include "cosr/interval.hpp"

#include "cosr/cop.hpp"
#include "cosr/error.hpp"
#include "cosr/structure.hpp"

namespace cosr {

bool is_interval(const Graph& g) {
  auto peo = detail::perfect_elimination_order(g);
  if (!peo) return false;
  const auto cliques = detail::chordal_cliques(g, *peo);
  // Clique matrix: a row per vertex, a column per maximal clique.
  std::vector<Bits> rows(g.order(), Bits(cliques.size()));
  for (std::size_t q = 0; q < cliques.size(); ++q)
    for_each_bit(cliques[q], [&](std::size_t v) { rows[v].set(q); });
  return consecutive_order(rows, cliques.size()).has_value();
}

namespace detail {

bool is_interval_on(const Graph& g, const Bits& alive) { return is_interval(g.induced(alive)); }

Bits obstruction(const Graph& g, const Bits& alive) {
  const Graph h = g.induced(alive);
  const auto local_to_global = members(alive);
  Bits out(g.order());
  if (auto hole = shortest_hole(h)) {
    for (auto v : *hole) out.set(local_to_global[v]);
    return out;
  }
  Bits keep = h.all();
  for (std::size_t v = 0; v < h.order(); ++v) {
    keep.reset(v);
    if (is_interval(h.induced(keep))) keep.set(v);
  }
  for_each_bit(keep, [&](std::size_t v) { out.set(local_to_global[v]); });
  return out;
}

}  // namespace detail

namespace {

struct BudgetExhausted {};

class DeletionSearch {
 public:
  DeletionSearch(const Graph& g, std::size_t budget, const Bits& deletable)
      : g_(g), budget_(budget), deletable_(deletable) {}

  std::optional<Bits> run(const Bits& alive, int k) {
    if (detail::is_interval_on(g_, alive)) return Bits(g_.order());
    if (k == 0) return std::nullopt;
    if (++nodes_ > budget_) throw BudgetExhausted{};
    const Bits hit = detail::obstruction(g_, alive) & deletable_;
    for (auto v = hit.find_first(); v != Bits::npos; v = hit.find_next(v)) {
      Bits next = alive;
      next.reset(v);
      if (auto r = run(next, k - 1)) {
        r->set(v);
        return r;
      }
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  std::size_t budget_;
  const Bits& deletable_;
  std::size_t nodes_ = 0;
};

// Lexicographically first subset of exactly k deletable vertices whose
// removal leaves an interval graph.
std::optional<Bits> exhaustive(const Graph& g, const Bits& deletable, std::size_t k) {
  const auto pool = members(deletable);
  const std::size_t n = pool.size();
  if (k > n) return std::nullopt;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Bits alive = g.all();
    for (auto v : pick) alive.reset(pool[v]);
    if (detail::is_interval_on(g, alive)) return ~alive;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<VertexSet> interval_deletion(const Graph& g, int d, const IntervalDeletionOptions& options) {
  if (d < 0) return std::nullopt;
  Bits deletable = ~g.indices_of(options.protected_vertices);
  std::optional<Bits> found;
  try {
    DeletionSearch search(g, options.node_budget, deletable);
    for (int k = 0; k <= d && !found; ++k) found = search.run(g.all(), k);
  } catch (const BudgetExhausted&) {
    found.reset();
    for (int k = 0; k <= d && !found; ++k) found = exhaustive(g, deletable, static_cast<std::size_t>(k));
  }
  if (!found) return std::nullopt;
  return minimalize_solution(g, g.labels_of(*found));
}

VertexSet minimalize_solution(const Graph& g, const VertexSet& solution) {
  Bits removed = g.indices_of(solution);
  if (!detail::is_interval_on(g, ~removed))
    throw ContractViolation("minimalize_solution: graph minus the solution is not interval");
  const auto order = members(removed);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    removed.reset(*it);
    if (!detail::is_interval_on(g, ~removed)) removed.set(*it);
  }
  return g.labels_of(removed);
}

}  // namespace cosr

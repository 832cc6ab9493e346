#include "cosr/cop.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cosr/error.hpp"

namespace cosr {

namespace {

bool overlaps(const Bits& a, const Bits& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

struct Component {
  std::vector<std::size_t> sets;  // overlap-BFS order
  Bits span;
  std::vector<Bits> classes;      // left to right
};

// Inserts `s` into the ordered partition. `s` overlaps a set that is already
// placed, so the placement is forced except for the very first extension,
// where the two ends are symmetric.
bool place(std::vector<Bits>& classes, Bits& placed, const Bits& s) {
  const Bits fresh = s - placed;

  std::size_t a = classes.size(), b = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].intersects(s)) {
      a = std::min(a, i);
      b = std::max(b, i);
    }
  }
  if (a == classes.size()) throw std::logic_error("consecutive_order: set does not meet its component");
  for (std::size_t i = a + 1; i < b; ++i) {
    if (!classes[i].is_subset_of(s)) return false;
  }

  auto split = [&](std::size_t i, bool covered_first) {
    if (classes[i].is_subset_of(s)) return;
    Bits in = classes[i] & s;
    Bits out = classes[i] - s;
    if (covered_first) {
      classes[i] = std::move(in);
      classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(out));
    } else {
      classes[i] = std::move(out);
      classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(in));
    }
  };

  const std::size_t last = classes.size() - 1;
  if (fresh.none()) {
    if (a == b) throw std::logic_error("consecutive_order: overlapping set inside one class");
    split(b, true);
    split(a, false);
  } else {
    const bool right = b == last && (a == b || classes[b].is_subset_of(s));
    const bool left = a == 0 && (a == b || classes[a].is_subset_of(s));
    if (right) {
      split(a, false);
      classes.push_back(fresh);
    } else if (left) {
      split(b, true);
      classes.insert(classes.begin(), fresh);
    } else {
      return false;
    }
  }
  placed |= s;
  return true;
}

}  // namespace

bool consecutive_under(const std::vector<Bits>& sets, const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
  for (const auto& s : sets) {
    const std::size_t count = s.count();
    if (count <= 1) continue;
    std::size_t lo = n, hi = 0;
    for_each_bit(s, [&](std::size_t j) {
      lo = std::min(lo, pos[j]);
      hi = std::max(hi, pos[j]);
    });
    if (hi - lo + 1 != count) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> consecutive_order(const std::vector<Bits>& input, std::size_t n) {
  std::vector<Bits> sets;
  for (const auto& s : input) {
    if (s.size() != n) throw std::invalid_argument("consecutive_order: set width does not match n");
    if (s.count() < 2) continue;
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  const std::size_t k = sets.size();

  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (overlaps(sets[i], sets[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }

  std::vector<Component> comps;
  std::vector<bool> seen(k, false);
  for (std::size_t root = 0; root < k; ++root) {
    if (seen[root]) continue;
    Component c;
    c.span = Bits(n);
    seen[root] = true;
    c.sets.push_back(root);
    for (std::size_t head = 0; head < c.sets.size(); ++head) {
      for (std::size_t nb : adj[c.sets[head]]) {
        if (!seen[nb]) {
          seen[nb] = true;
          c.sets.push_back(nb);
        }
      }
    }
    c.classes.push_back(sets[root]);
    c.span = sets[root];
    for (std::size_t idx = 1; idx < c.sets.size(); ++idx) {
      if (!place(c.classes, c.span, sets[c.sets[idx]])) return std::nullopt;
    }
    comps.push_back(std::move(c));
  }

  // A component whose span meets another's lies inside a single class of it
  // (or vice versa). The parent is the innermost such container.
  const std::size_t nc = comps.size();
  auto class_holding = [&](std::size_t outer, std::size_t inner) -> std::optional<std::size_t> {
    if (outer == inner) return std::nullopt;
    const auto& cls = comps[outer].classes;
    for (std::size_t q = 0; q < cls.size(); ++q)
      if (comps[inner].span.is_subset_of(cls[q])) return q;
    return std::nullopt;
  };

  std::vector<std::vector<std::vector<std::size_t>>> children(nc);
  for (std::size_t c = 0; c < nc; ++c) children[c].resize(comps[c].classes.size());
  std::vector<bool> is_root(nc, true);
  for (std::size_t b = 0; b < nc; ++b) {
    std::vector<std::size_t> holders;
    for (std::size_t a = 0; a < nc; ++a)
      if (class_holding(a, b)) holders.push_back(a);
    if (holders.empty()) continue;
    // Holders form a chain; pick the one nested in all the others.
    std::size_t parent = holders.front();
    for (std::size_t h : holders) {
      bool innermost = true;
      for (std::size_t o : holders)
        if (o != h && !class_holding(o, h)) innermost = false;
      if (innermost) {
        parent = h;
        break;
      }
    }
    children[parent][*class_holding(parent, b)].push_back(b);
    is_root[b] = false;
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  Bits placed(n);
  auto emit = [&](auto&& self, std::size_t c) -> void {
    for (std::size_t q = 0; q < comps[c].classes.size(); ++q) {
      for (std::size_t child : children[c][q]) self(self, child);
      for_each_bit(comps[c].classes[q], [&](std::size_t j) {
        if (!placed[j]) {
          placed.set(j);
          order.push_back(j);
        }
      });
    }
  };
  for (std::size_t c = 0; c < nc; ++c)
    if (is_root[c]) emit(emit, c);
  for (std::size_t j = 0; j < n; ++j)
    if (!placed[j]) order.push_back(j);

  if (order.size() != n || !consecutive_under(input, order))
    throw std::logic_error("consecutive_order: constructed order failed verification");
  return order;
}

std::optional<ColumnPermutation> cop_order(const BinaryMatrix& m) {
  auto order = consecutive_order(m.row_bits(), m.cols());
  if (!order) return std::nullopt;
  ColumnPermutation perm;
  perm.order.reserve(order->size());
  for (std::size_t j : *order) perm.order.push_back(m.col_label(j));
  if (!verify_cop(m, perm)) throw std::logic_error("cop_order: certificate failed verification");
  return perm;
}

namespace {

std::vector<std::size_t> positions_of(const BinaryMatrix& m, const ColumnPermutation& perm) {
  if (perm.order.size() != m.cols()) throw std::invalid_argument("permutation length does not match column count");
  std::vector<std::size_t> order;
  std::vector<bool> used(m.cols(), false);
  for (Label l : perm.order) {
    auto j = m.col_index(l);
    if (!j) throw std::invalid_argument("unknown column label " + std::to_string(l) + " in permutation");
    if (used[*j]) throw std::invalid_argument("column label " + std::to_string(l) + " repeated in permutation");
    used[*j] = true;
    order.push_back(*j);
  }
  return order;
}

}  // namespace

bool verify_cop(const BinaryMatrix& m, const ColumnPermutation& perm) {
  return consecutive_under(m.row_bits(), positions_of(m, perm));
}

IntervalAssignment interval_assignment(const BinaryMatrix& m, const ColumnPermutation& perm) {
  const auto order = positions_of(m, perm);
  if (!consecutive_under(m.row_bits(), order))
    throw ContractViolation("interval_assignment: permutation does not give consecutive ones");
  std::vector<std::size_t> pos(m.cols());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p + 1;

  IntervalAssignment out;
  out.labels = m.row_labels();
  out.intervals.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).none()) continue;
    Interval iv{m.cols() + 1, 0};
    for_each_bit(m.row(i), [&](std::size_t j) {
      iv.first = std::min(iv.first, pos[j]);
      iv.last = std::max(iv.last, pos[j]);
    });
    out.intervals[i] = iv;
  }
  return out;
}

bool is_icpia(const SetSystem& sets, const IntervalAssignment& assignment) {
  std::vector<std::optional<Interval>> iv(sets.sets.size());
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    auto it = std::find(assignment.labels.begin(), assignment.labels.end(), sets.labels[i]);
    if (it != assignment.labels.end()) iv[i] = assignment.intervals[static_cast<std::size_t>(it - assignment.labels.begin())];
    if (!iv[i] && sets.sets[i].any())
      throw std::invalid_argument("no interval for nonempty set of row " + std::to_string(sets.labels[i]));
  }
  auto meet = [](const std::optional<Interval>& x, const std::optional<Interval>& y) -> std::size_t {
    if (!x || !y) return 0;
    const std::size_t lo = std::max(x->first, y->first);
    const std::size_t hi = std::min(x->last, y->last);
    return hi >= lo ? hi - lo + 1 : 0;
  };
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = i + 1; j < iv.size(); ++j) {
      if ((sets.sets[i] & sets.sets[j]).count() != meet(iv[i], iv[j])) return false;
    }
  }
  return true;
}

}  // namespace cosr

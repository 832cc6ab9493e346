#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cosr/matrix.hpp"

namespace cosr {

/// A column order, given as column labels left to right.
struct ColumnPermutation {
  std::vector<Label> order;

  friend bool operator==(const ColumnPermutation&, const ColumnPermutation&) = default;
};

/// Closed integer interval of 1-based positions.
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval per row (absent for all-zero rows), keyed by row label.
struct IntervalAssignment {
  std::vector<Label> labels;
  std::vector<std::optional<Interval>> intervals;
};

/// Column order (as column positions) placing every set's members
/// consecutively, or nullopt if none exists.
///
/// Sets with fewer than two members and repeated sets are dropped first. The
/// rest are split into overlap components (two sets overlap when they meet
/// and neither contains the other). Each component's column classes are
/// fixed up to reversal by partition refinement in overlap-BFS order, and the
/// components nest inside single classes of one another, which gives the
/// final order by a tree walk. O(k^2 n / 64 + k n) for k sets.
std::optional<std::vector<std::size_t>> consecutive_order(const std::vector<Bits>& sets, std::size_t n);

/// True iff every set occupies a contiguous run under `order` (column
/// positions). `order` must be a permutation of 0..n-1.
bool consecutive_under(const std::vector<Bits>& sets, const std::vector<std::size_t>& order);

/// A certified COP column order for M, or nullopt.
std::optional<ColumnPermutation> cop_order(const BinaryMatrix& m);

/// Throws std::invalid_argument if `order` is not a permutation of M's columns.
bool verify_cop(const BinaryMatrix& m, const ColumnPermutation& order);

/// I_i = [first, last] position of row i's ones under `order`. Throws
/// ContractViolation if `order` does not give M consecutive ones.
IntervalAssignment interval_assignment(const BinaryMatrix& m, const ColumnPermutation& order);

/// Pairwise intersection cardinalities of sets and intervals agree. Throws
/// std::invalid_argument if a nonempty set has no interval.
bool is_icpia(const SetSystem& sets, const IntervalAssignment& intervals);

}  // namespace cosr

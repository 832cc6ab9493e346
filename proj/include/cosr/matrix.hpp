#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "cosr/bits.hpp"

namespace cosr {

/// Row and column labels. Matrices read from files are labelled 1..m and
/// 1..n; rows added by `augment` carry negative labels so they never collide
/// with input rows.
using Label = int;

/// A set of row labels (a deletion set).
using RowSet = std::set<Label>;

/// Immutable 0/1 matrix, stored as one bitset per row.
///
/// Rows keep their labels through deletion, so a row removed three levels
/// deep in a search can still be reported against the original input.
/// Columns are never removed.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  /// m x n zero matrix labelled 1..m / 1..n.
  BinaryMatrix(std::size_t m, std::size_t n);

  /// Takes ownership of `rows` (each of size `n`). Throws std::invalid_argument
  /// if labels are duplicated or sizes disagree.
  BinaryMatrix(std::size_t n, std::vector<Bits> rows, std::vector<Label> row_labels,
               std::vector<Label> col_labels, std::vector<bool> identity_rows = {});

  /// Dense row-major construction with default labels.
  static BinaryMatrix from_dense(const std::vector<std::vector<int>>& cells, std::size_t n);
  static BinaryMatrix from_dense(const std::vector<std::vector<int>>& cells);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Bits& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Bits>& row_bits() const noexcept { return rows_; }

  Label row_label(std::size_t i) const { return row_labels_[i]; }
  Label col_label(std::size_t j) const { return col_labels_[j]; }
  const std::vector<Label>& row_labels() const noexcept { return row_labels_; }
  const std::vector<Label>& col_labels() const noexcept { return col_labels_; }

  std::optional<std::size_t> row_index(Label label) const;
  std::optional<std::size_t> col_index(Label label) const;

  /// True for rows that came from the identity block of `augment`.
  bool is_identity_row(std::size_t i) const { return !identity_.empty() && identity_[i]; }
  bool has_identity_rows() const noexcept { return !identity_.empty(); }

  /// Column j as a bitset over row positions.
  Bits column(std::size_t j) const;

  std::size_t ones_in_row(std::size_t i) const { return rows_[i].count(); }

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<Bits> rows_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::vector<bool> identity_;
};

/// Row-set view: S_i = { j | M_ij = 1 }, bits over column positions.
struct SetSystem {
  std::size_t universe = 0;
  std::vector<Label> labels;
  std::vector<Bits> sets;
};

/// M \ D. Throws std::invalid_argument for labels not in M.
BinaryMatrix delete_rows(const BinaryMatrix& m, const RowSet& drop);

/// The n x n identity stacked above M; the new rows are flagged as identity
/// rows and labelled below every existing label.
BinaryMatrix augment(const BinaryMatrix& m);

SetSystem set_system(const BinaryMatrix& m);

/// supp(c): rows with a 1 in column `col`. Throws std::invalid_argument for an
/// unknown column.
RowSet support(const BinaryMatrix& m, Label col);

}  // namespace cosr

#include "cosr/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cosr {

namespace {

std::vector<Label> default_labels(std::size_t count) {
  std::vector<Label> labels(count);
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

void require_unique(const std::vector<Label>& labels, const char* what) {
  std::unordered_set<Label> seen;
  for (Label l : labels) {
    if (!seen.insert(l).second)
      throw std::invalid_argument(std::string("duplicate ") + what + " label " + std::to_string(l));
  }
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t m, std::size_t n)
    : cols_(n), rows_(m, Bits(n)), row_labels_(default_labels(m)), col_labels_(default_labels(n)) {}

BinaryMatrix::BinaryMatrix(std::size_t n, std::vector<Bits> rows, std::vector<Label> row_labels,
                           std::vector<Label> col_labels, std::vector<bool> identity_rows)
    : cols_(n),
      rows_(std::move(rows)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      identity_(std::move(identity_rows)) {
  if (row_labels_.size() != rows_.size())
    throw std::invalid_argument("row label count does not match row count");
  if (col_labels_.size() != cols_)
    throw std::invalid_argument("column label count does not match column count");
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("row width does not match column count");
  }
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  if (!identity_.empty()) {
    if (identity_.size() != rows_.size())
      throw std::invalid_argument("identity marker count does not match row count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (identity_[i] && rows_[i].count() != 1)
        throw std::invalid_argument("identity row must contain exactly one 1");
    }
    if (std::none_of(identity_.begin(), identity_.end(), [](bool b) { return b; })) identity_.clear();
  }
}

BinaryMatrix BinaryMatrix::from_dense(const std::vector<std::vector<int>>& cells, std::size_t n) {
  std::vector<Bits> rows;
  rows.reserve(cells.size());
  for (const auto& r : cells) {
    if (r.size() != n) throw std::invalid_argument("row length mismatch");
    Bits b(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] != 0 && r[j] != 1) throw std::invalid_argument("cell is not 0 or 1");
      b[j] = r[j] == 1;
    }
    rows.push_back(std::move(b));
  }
  return BinaryMatrix(n, std::move(rows), default_labels(cells.size()), default_labels(n));
}

BinaryMatrix BinaryMatrix::from_dense(const std::vector<std::vector<int>>& cells) {
  return from_dense(cells, cells.empty() ? 0 : cells.front().size());
}

std::optional<std::size_t> BinaryMatrix::row_index(Label label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::optional<std::size_t> BinaryMatrix::col_index(Label label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - col_labels_.begin());
}

Bits BinaryMatrix::column(std::size_t j) const {
  Bits c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
  return c;
}

bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.row_labels_ == b.row_labels_ &&
         a.col_labels_ == b.col_labels_ && a.identity_ == b.identity_;
}

BinaryMatrix delete_rows(const BinaryMatrix& m, const RowSet& drop) {
  for (Label l : drop) {
    if (!m.row_index(l)) throw std::invalid_argument("unknown row label " + std::to_string(l));
  }
  std::vector<Bits> rows;
  std::vector<Label> labels;
  std::vector<bool> identity;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (drop.count(m.row_label(i))) continue;
    rows.push_back(m.row(i));
    labels.push_back(m.row_label(i));
    if (m.has_identity_rows()) identity.push_back(m.is_identity_row(i));
  }
  return BinaryMatrix(m.cols(), std::move(rows), std::move(labels), m.col_labels(), std::move(identity));
}

BinaryMatrix augment(const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  Label lowest = 0;
  for (Label l : m.row_labels()) lowest = std::min(lowest, l);

  std::vector<Bits> rows;
  std::vector<Label> labels;
  std::vector<bool> identity;
  rows.reserve(n + m.rows());
  for (std::size_t k = 0; k < n; ++k) {
    Bits b(n);
    b.set(k);
    rows.push_back(std::move(b));
    labels.push_back(lowest - 1 - static_cast<Label>(k));
    identity.push_back(true);
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
    labels.push_back(m.row_label(i));
    identity.push_back(false);
  }
  return BinaryMatrix(n, std::move(rows), std::move(labels), m.col_labels(), std::move(identity));
}

SetSystem set_system(const BinaryMatrix& m) {
  return SetSystem{m.cols(), m.row_labels(), m.row_bits()};
}

RowSet support(const BinaryMatrix& m, Label col) {
  auto j = m.col_index(col);
  if (!j) throw std::invalid_argument("unknown column label " + std::to_string(col));
  RowSet out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.at(i, *j)) out.insert(m.row_label(i));
  }
  return out;
}

}  // namespace cosr

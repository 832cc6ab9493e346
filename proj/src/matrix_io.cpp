#include "cosr/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "cosr/error.hpp"

namespace cosr {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'm n'");

  const auto& header = lines.front();
  auto head = tokens(header.text);
  if (head.size() != 2) throw ParseError(header.number, "header must be 'm n'");
  const std::size_t m = parse_count(head[0], header.number, "row count");
  const std::size_t n = parse_count(head[1], header.number, "column count");

  // Rows of a zero-width matrix are blank lines, which carry no content.
  if (n == 0) {
    if (lines.size() > 1) throw ParseError(lines[1].number, "unexpected cells in zero-width matrix");
    return BinaryMatrix(m, 0);
  }
  std::vector<Bits> rows;
  rows.reserve(m);
  const std::size_t present = std::min(m, lines.size() - 1);
  for (std::size_t i = 0; i < present; ++i) {
    const auto& line = lines[i + 1];
    Bits b(n);
    std::size_t j = 0;
    for (auto tok : tokens(line.text)) {
      for (char c : tok) {
        if (c != '0' && c != '1')
          throw ParseError(line.number, std::string("cell '") + c + "' is not 0 or 1");
        if (j < n) b[j] = c == '1';
        ++j;
      }
    }
    if (j != n)
      throw ParseError(line.number, "row has " + std::to_string(j) + " cells, expected " + std::to_string(n));
    rows.push_back(std::move(b));
  }
  if (present < m)
    throw ParseError(lines.back().number + 1,
                     "expected " + std::to_string(m) + " rows, found " + std::to_string(present));
  if (lines.size() - 1 > m) throw ParseError(lines[m + 1].number, "unexpected extra row");

  std::vector<Label> row_labels(m), col_labels(n);
  for (std::size_t i = 0; i < m; ++i) row_labels[i] = static_cast<Label>(i + 1);
  for (std::size_t j = 0; j < n; ++j) col_labels[j] = static_cast<Label>(j + 1);
  return BinaryMatrix(n, std::move(rows), std::move(row_labels), std::move(col_labels));
}

std::string serialize_matrix(const BinaryMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << (m.at(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cosr

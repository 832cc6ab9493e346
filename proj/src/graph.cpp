#include "cosr/graph.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cosr/error.hpp"

namespace cosr {

Graph::Graph(std::vector<Label> labels) : labels_(std::move(labels)), adj_(labels_.size(), Bits(labels_.size())) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate vertex label " + std::to_string(labels_[i]));
  }
}

Graph Graph::with_vertices(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  return Graph(std::move(labels));
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.count();
  return twice / 2;
}

std::optional<std::size_t> Graph::index_of(Label l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::require(Label l) const {
  auto i = index_of(l);
  if (!i) throw std::invalid_argument("unknown vertex " + std::to_string(l));
  return *i;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(labels_[u]));
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph Graph::induced(const Bits& keep) const {
  const auto kept = members(keep);
  std::vector<Label> labels;
  labels.reserve(kept.size());
  for (auto v : kept) labels.push_back(labels_[v]);
  Graph sub(std::move(labels));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b)
      if (adj_[kept[a]][kept[b]]) sub.add_edge(a, b);
  return sub;
}

VertexSet Graph::labels_of(const Bits& vertices) const {
  VertexSet out;
  for_each_bit(vertices, [&](std::size_t v) { out.push_back(labels_[v]); });
  return out;
}

Bits Graph::indices_of(const VertexSet& vertices) const {
  Bits b(order());
  for (Label l : vertices) b.set(require(l));
  return b;
}

bool Graph::is_clique(const Bits& vertices) const {
  for (auto v = vertices.find_first(); v != Bits::npos; v = vertices.find_next(v)) {
    Bits others = vertices;
    others.reset(v);
    if (!others.is_subset_of(adj_[v])) return false;
  }
  return true;
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v))
      out.emplace_back(labels_[u], labels_[v]);
  return out;
}

Graph derived_graph(const BinaryMatrix& m) {
  Graph g(m.row_labels());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      if (m.row(i).intersects(m.row(j))) g.add_edge(i, j);
  return g;
}

VertexSet vert(const BinaryMatrix& m, Label col) {
  auto j = m.col_index(col);
  if (!j) throw std::invalid_argument("unknown column label " + std::to_string(col));
  VertexSet out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.at(i, *j)) out.push_back(m.row_label(i));
  return out;
}

Graph pair_subgraph(const BinaryMatrix& m, const Graph& derived, std::size_t ci, std::size_t cj) {
  return derived.induced(m.column(ci) | m.column(cj));
}

Graph pair_subgraph(const BinaryMatrix& m, Label ci, Label cj) {
  auto a = m.col_index(ci);
  auto b = m.col_index(cj);
  if (!a) throw std::invalid_argument("unknown column label " + std::to_string(ci));
  if (!b) throw std::invalid_argument("unknown column label " + std::to_string(cj));
  if (*a == *b) throw std::invalid_argument("pair_subgraph needs two distinct columns");
  return pair_subgraph(m, derived_graph(m), *a, *b);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

std::size_t number(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  struct Row {
    std::size_t number;
    std::vector<std::string_view> toks;
  };
  std::vector<Row> rows;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    rows.push_back({lineno, std::move(toks)});
  }
  if (rows.empty()) throw ParseError(1, "missing header 'n m'");
  if (rows.front().toks.size() != 2) throw ParseError(rows.front().number, "header must be 'n m'");
  const std::size_t n = number(rows.front().toks[0], rows.front().number);
  const std::size_t m = number(rows.front().toks[1], rows.front().number);

  GraphFile out{Graph::with_vertices(n), std::nullopt};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t edges = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.toks.front() == "sides") {
      if (row.toks.size() != 2) throw ParseError(row.number, "expected 'sides k'");
      if (out.sides) throw ParseError(row.number, "repeated 'sides' line");
      const std::size_t k = number(row.toks[1], row.number);
      if (k > n) throw ParseError(row.number, "side size exceeds vertex count");
      out.sides = k;
      continue;
    }
    if (row.toks.size() != 2) throw ParseError(row.number, "edge line must be 'u v'");
    std::size_t u = number(row.toks[0], row.number);
    std::size_t v = number(row.toks[1], row.number);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(row.number, "edge endpoint out of range");
    if (u == v) throw ParseError(row.number, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw ParseError(row.number, "repeated edge");
    if (++edges > m) throw ParseError(row.number, "more edges than declared");
    out.graph.add_edge(u - 1, v - 1);
  }
  if (edges != m) throw ParseError(rows.back().number, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges));
  return out;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  const auto e = g.edges();
  out << g.order() << ' ' << e.size() << '\n';
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto v = g.neighbors(u).find_next(u); v != Bits::npos; v = g.neighbors(u).find_next(v))
      out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace cosr

#include "matchstick/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "canonical.hpp"

namespace matchstick {

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw std::invalid_argument("bad graph text \"" + std::string(text) + "\": " + why);
}

int parse_int(std::string_view text, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) bad(text, "not a number");
  return value;
}

detail::WeightMatrix to_matrix(const Graph& g) {
  detail::WeightMatrix m;
  m.n = g.vertex_count();
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v) m.w[u][v] = g.has_edge(u, v) ? 1 : 0;
  return m;
}

}  // namespace

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
}

Graph Graph::from_text(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad(text, "missing ':'");
  int n = parse_int(text, text.substr(0, colon));
  if (n < 1 || n > kMaxVertices) bad(text, "vertex count out of range");
  Graph g(n);

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (item.empty()) bad(text, "empty edge item");
    if (comma != std::string_view::npos && comma + 1 == rest.size())
      bad(text, "trailing comma");
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) bad(text, "edge without '-'");
    int u = parse_int(text, item.substr(0, dash));
    int v = parse_int(text, item.substr(dash + 1));
    if (u < 0 || v < 0 || u >= n || v >= n) bad(text, "vertex out of range");
    if (u == v) bad(text, "self-loop");
    if (g.has_edge(u, v)) bad(text, "duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_text() const {
  std::string out = std::to_string(n_) + ":";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (has_edge(u, v)) return;
  adj_[u] |= std::uint16_t(1u << v);
  adj_[v] |= std::uint16_t(1u << u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  adj_[u] &= std::uint16_t(~(1u << v));
  adj_[v] &= std::uint16_t(~(1u << u));
  --m_;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::uint16_t seen = 1;
  for (;;) {
    std::uint16_t grown = seen;
    for (int v = 0; v < n_; ++v)
      if (seen & (1u << v)) grown |= adj_[v];
    if (grown == seen) break;
    seen = grown;
  }
  return seen == (1u << n_) - 1u;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::without_edge_cleaned(int u, int v) const {
  Graph trimmed = *this;
  trimmed.remove_edge(u, v);

  std::array<int, kMaxVertices> remap{};
  int kept = 0;
  for (int x = 0; x < n_; ++x) {
    bool isolated = trimmed.degree(x) == 0 && n_ > 1;
    remap[x] = isolated ? -1 : kept++;
  }
  Graph g(kept);
  for (auto [a, b] : trimmed.edges()) g.add_edge(remap[a], remap[b]);
  return g;
}

Graph Graph::subdivided(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("no such edge");
  Graph g(n_ + 1);
  for (auto [a, b] : edges()) {
    if (a == std::min(u, v) && b == std::max(u, v)) continue;
    g.add_edge(a, b);
  }
  g.add_edge(u, n_);
  g.add_edge(v, n_);
  return g;
}

std::string CanonicalKey::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out += digits[n >> 4];
  out += digits[n & 15];
  for (int shift = 56; shift >= 0; shift -= 8) {
    std::uint8_t byte = static_cast<std::uint8_t>(bits >> shift);
    out += digits[byte >> 4];
    out += digits[byte & 15];
  }
  return out;
}

std::array<int, kMaxVertices> canonical_labeling(const Graph& g) {
  return detail::canonical_order(to_matrix(g)).perm;
}

CanonicalKey canonical_form(const Graph& g) {
  auto perm = canonical_labeling(g);
  Graph c = g.relabeled(std::span<const int>(perm.data(), g.vertex_count()));
  CanonicalKey key;
  key.n = static_cast<std::uint8_t>(g.vertex_count());
  for (auto [u, v] : c.edges()) key.bits |= 1ull << (v * (v - 1) / 2 + u);
  return key;
}

Graph canonical_graph(const Graph& g) {
  auto perm = canonical_labeling(g);
  return g.relabeled(std::span<const int>(perm.data(), g.vertex_count()));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

std::int64_t automorphism_count(const Graph& g) {
  return detail::count_automorphisms(to_matrix(g));
}

}  // namespace matchstick

#include "matchstick/topology.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "canonical.hpp"
#include "matchstick/enumerate.hpp"

namespace matchstick {

Multigraph Multigraph::from_graph(const Graph& g) {
  Multigraph m;
  m.vertex_count = g.vertex_count();
  m.edges = g.edges();
  return m;
}

Multigraph Multigraph::from_text(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("missing ':'");
  auto parse = [&](std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad multigraph number");
    return value;
  };
  Multigraph m;
  m.vertex_count = parse(text.substr(0, colon));
  if (m.vertex_count < 1 || m.vertex_count > kMaxVertices)
    throw std::invalid_argument("multigraph vertex count out of range");
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw std::invalid_argument("edge without '-'");
    int u = parse(item.substr(0, dash));
    int v = parse(item.substr(dash + 1));
    if (u < 0 || v < 0 || u >= m.vertex_count || v >= m.vertex_count)
      throw std::invalid_argument("multigraph vertex out of range");
    m.add_edge(u, v);
  }
  m.normalize();
  return m;
}

std::string Multigraph::to_text() const {
  std::string out = std::to_string(vertex_count) + ":";
  bool first = true;
  for (auto [u, v] : edges) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

void Multigraph::add_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  edges.emplace_back(u, v);
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;  // a loop contributes twice
  }
  return d;
}

void Multigraph::normalize() { std::sort(edges.begin(), edges.end()); }

namespace {

bool has_loop(const Multigraph& m, int v) {
  for (auto [a, b] : m.edges)
    if (a == v && b == v) return true;
  return false;
}

Multigraph drop_vertex_relabel(const Multigraph& m, int gone) {
  Multigraph out;
  out.vertex_count = m.vertex_count - 1;
  for (auto [a, b] : m.edges) {
    int u = a > gone ? a - 1 : a;
    int v = b > gone ? b - 1 : b;
    out.add_edge(u, v);
  }
  out.normalize();
  return out;
}

}  // namespace

Multigraph smooth(const Multigraph& input) {
  Multigraph m = input;
  m.normalize();
  for (;;) {
    int target = -1;
    for (int v = 0; v < m.vertex_count && target < 0; ++v)
      if (m.degree(v) == 2 && !has_loop(m, v)) target = v;
    if (target < 0) return m;

    // Collect the two incidences of target.
    std::vector<int> nb;
    Multigraph rest;
    rest.vertex_count = m.vertex_count;
    for (auto [a, b] : m.edges) {
      if (a == target) {
        nb.push_back(b);
      } else if (b == target) {
        nb.push_back(a);
      } else {
        rest.add_edge(a, b);
      }
    }
    rest.add_edge(nb[0], nb[1]);  // nb[0] == nb[1] turns a parallel pair into a loop
    m = drop_vertex_relabel(rest, target);
  }
}

Multigraph smooth(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("smoothing requires a connected graph");
  return smooth(Multigraph::from_graph(g));
}

TopoKey multigraph_key(const Multigraph& m) {
  detail::WeightMatrix w;
  w.n = m.vertex_count;
  for (auto [a, b] : m.edges) {
    if (a == b) {
      w.w[a][a] = static_cast<std::uint8_t>(w.w[a][a] + 1);
    } else {
      w.w[a][b] = static_cast<std::uint8_t>(w.w[a][b] + 1);
      w.w[b][a] = w.w[a][b];
    }
  }
  TopoKey key;
  key.bytes = detail::canonical_order(w).key;
  return key;
}

TopoKey topo_key(const Graph& g) { return multigraph_key(smooth(g)); }

std::string TopoKey::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

int face_count(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("face count requires a connected graph");
  if (!is_planar(g)) throw std::invalid_argument("face count requires a planar graph");
  return g.edge_count() - g.vertex_count() + 2;
}

}  // namespace matchstick

#include "ks/graph.hpp"

#include <string>

#include "ks/error.hpp"

namespace ks {

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(mask_size(m));
  while (m) {
    out.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  rows_.assign(n, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[u] |= vertex_bit(v);
  rows_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  rows_[u] &= ~vertex_bit(v);
  rows_[v] &= ~vertex_bit(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += mask_size(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VertexMask later = rows_[u] & ~all_vertices(u + 1);
    while (later) {
      out.emplace_back(u, lowest_vertex(later));
      later &= later - 1;
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexMask seen = vertex_bit(0);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (int v : mask_to_vertices(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

}  // namespace ks

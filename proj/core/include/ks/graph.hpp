#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace ks {

using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask all_vertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (vertex_bit(n) - 1);
}

inline int mask_size(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

std::vector<int> mask_to_vertices(VertexMask m);

/// Finite simple undirected graph on vertices 0..n-1 with at most 64
/// vertices, stored as one adjacency bitset per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  // Throws InputError for n < 0 or n > kMaxVertices.
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  VertexMask vertices() const { return all_vertices(n_); }

  // Throws InputError on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return mask_size(rows_[v]); }

  std::size_t edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
};

bool is_connected(const Graph& g);

}  // namespace ks

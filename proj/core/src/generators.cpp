#include "ks/generators.hpp"

#include <string>

#include "ks/error.hpp"

namespace ks {
namespace {

void next_subset(std::vector<int>& s, int m) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == m - k + i) --i;
  if (i < 0) return;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
}

}  // namespace

Graph johnson_graph(int m, int k) {
  if (k < 1 || k >= m) throw InputError("johnson_graph: need 1 <= k < m");
  std::vector<VertexMask> subsets;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    VertexMask mask = 0;
    for (int x : s) mask |= vertex_bit(x);
    if (!subsets.empty() && subsets.back() == mask) break;
    subsets.push_back(mask);
    if (subsets.size() > static_cast<std::size_t>(Graph::kMaxVertices)) {
      throw InputError("johnson_graph: J(" + std::to_string(m) + "," + std::to_string(k) +
                       ") has more than 64 vertices");
    }
    next_subset(s, m);
  }
  const int n = static_cast<int>(subsets.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (mask_size(subsets[u] & subsets[v]) == k - 1) g.add_edge(u, v);
    }
  }
  return g;
}

Graph circulant(int n, std::span<const int> connections) {
  Graph g(n);
  std::vector<bool> in_set(n, false);
  for (int c : connections) {
    const int r = ((c % n) + n) % n;
    if (r == 0) throw InputError("circulant: connection set contains 0");
    in_set[r] = true;
  }
  for (int r = 1; r < n; ++r) {
    if (in_set[r] != in_set[n - r]) throw InputError("circulant: connection set not symmetric");
  }
  for (int i = 0; i < n; ++i) {
    for (int r = 1; r < n; ++r) {
      if (in_set[r]) g.add_edge(i, (i + r) % n);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexMask seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) throw InputError("induced_subgraph: vertex out of range");
    if (seen & vertex_bit(v)) throw InputError("induced_subgraph: duplicate vertex");
    seen |= vertex_bit(v);
  }
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw InputError("relabel: permutation size mismatch");
  VertexMask image = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n()) throw InputError("relabel: entry out of range");
    image |= vertex_bit(p);
  }
  if (image != g.vertices()) throw InputError("relabel: not a permutation");
  Graph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

// Kneser graph K(5,2): 2-subsets adjacent when disjoint.
Graph petersen_graph() { return complement(johnson_graph(5, 2)); }

}  // namespace ks

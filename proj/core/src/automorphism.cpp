#include "ks/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ks {
namespace {

using Partition = std::vector<VertexMask>;

// Splits every cell of pg/ph by neighbour counts into every other cell until
// nothing changes. Returns false as soon as the two sides disagree.
bool refine(const Graph& g, const Graph& h, Partition& pg, Partition& ph) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < pg.size(); ++s) {
      for (std::size_t c = 0; c < pg.size(); ++c) {
        if (mask_size(pg[c]) == 1) continue;
        std::map<int, VertexMask> split_g;
        std::map<int, VertexMask> split_h;
        for (int v : mask_to_vertices(pg[c])) split_g[mask_size(g.neighbors(v) & pg[s])] |= vertex_bit(v);
        for (int v : mask_to_vertices(ph[c])) split_h[mask_size(h.neighbors(v) & ph[s])] |= vertex_bit(v);
        if (split_g.size() != split_h.size()) return false;
        auto ig = split_g.begin();
        auto ih = split_h.begin();
        for (; ig != split_g.end(); ++ig, ++ih) {
          if (ig->first != ih->first || mask_size(ig->second) != mask_size(ih->second)) return false;
        }
        if (split_g.size() == 1) continue;
        Partition new_g;
        Partition new_h;
        for (auto& [k, m] : split_g) new_g.push_back(m);
        for (auto& [k, m] : split_h) new_h.push_back(m);
        pg[c] = new_g[0];
        ph[c] = new_h[0];
        pg.insert(pg.begin() + static_cast<std::ptrdiff_t>(c) + 1, new_g.begin() + 1, new_g.end());
        ph.insert(ph.begin() + static_cast<std::ptrdiff_t>(c) + 1, new_h.begin() + 1, new_h.end());
        changed = true;
      }
    }
  }
  return true;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> search(const Graph& g, const Graph& h, Partition pg, Partition ph) {
  if (!refine(g, h, pg, ph)) return std::nullopt;
  std::size_t target = pg.size();
  for (std::size_t c = 0; c < pg.size(); ++c) {
    if (mask_size(pg[c]) > 1) {
      target = c;
      break;
    }
  }
  if (target == pg.size()) {
    std::vector<int> map(g.n());
    for (std::size_t c = 0; c < pg.size(); ++c) map[lowest_vertex(pg[c])] = lowest_vertex(ph[c]);
    if (is_isomorphism(g, h, map)) return map;
    return std::nullopt;
  }
  const int v = lowest_vertex(pg[target]);
  for (int w : mask_to_vertices(ph[target])) {
    Partition qg = pg;
    Partition qh = ph;
    qg[target] &= ~vertex_bit(v);
    qh[target] &= ~vertex_bit(w);
    qg.insert(qg.begin() + static_cast<std::ptrdiff_t>(target), vertex_bit(v));
    qh.insert(qh.begin() + static_cast<std::ptrdiff_t>(target), vertex_bit(w));
    if (auto r = search(g, h, std::move(qg), std::move(qh))) return r;
  }
  return std::nullopt;
}

Partition unit_partition(const Graph& g) {
  if (g.n() == 0) return {};
  return {g.vertices()};
}

Partition individualized(const Graph& g, int v) {
  Partition p{vertex_bit(v)};
  if (g.vertices() & ~vertex_bit(v)) p.push_back(g.vertices() & ~vertex_bit(v));
  return p;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<int> parent;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.n() == 0) return std::vector<int>{};
  return search(g, h, unit_partition(g), unit_partition(h));
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::optional<std::vector<int>> find_automorphism(const Graph& g, int from, int to) {
  if (g.degree(from) != g.degree(to)) return std::nullopt;
  return search(g, g, individualized(g, from), individualized(g, to));
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
  const int n = g.n();
  DisjointSets sets(n);
  std::vector<int> reps;
  for (int w = 0; w < n; ++w) {
    if (sets.find(w) != w) continue;
    for (int r : reps) {
      if (sets.find(r) != r) continue;
      if (auto perm = find_automorphism(g, r, w)) {
        for (int v = 0; v < n; ++v) sets.unite(v, (*perm)[v]);
        break;
      }
    }
    if (sets.find(w) == w) reps.push_back(w);
  }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[sets.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

bool is_vertex_transitive(const Graph& g) { return g.n() > 0 && automorphism_orbits(g).size() == 1; }

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) return false;
  VertexMask image = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n()) return false;
    image |= vertex_bit(p);
  }
  return image == g.vertices() && is_isomorphism(g, g, perm);
}

}  // namespace ks

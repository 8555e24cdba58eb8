#include "ks/coloring.hpp"

#include <algorithm>

#include "ks/cliques.hpp"

namespace ks {
namespace {

// Picks the uncolored vertex with the fewest available colors; ties go to
// more uncolored neighbours, then the lower label.
int select_vertex(const Graph& g, VertexMask uncolored, const std::vector<VertexMask>& classes,
                  int used, int* available_out) {
  int pick = -1;
  int pick_avail = 1 << 30;
  int pick_deg = -1;
  for (int v : mask_to_vertices(uncolored)) {
    int blocked = 0;
    for (int c = 0; c < used; ++c) {
      if (classes[c] & g.neighbors(v)) ++blocked;
    }
    const int avail = used - blocked;
    const int deg = mask_size(g.neighbors(v) & uncolored);
    if (avail < pick_avail || (avail == pick_avail && deg > pick_deg)) {
      pick = v;
      pick_avail = avail;
      pick_deg = deg;
    }
  }
  if (available_out) *available_out = pick_avail;
  return pick;
}

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), colors_(g.n(), -1), classes_(k, 0) {}

  std::optional<std::vector<int>> run() {
    if (solve(g_.vertices(), 0)) return colors_;
    return std::nullopt;
  }

 private:
  bool solve(VertexMask uncolored, int used) {
    if (!uncolored) return true;
    const int v = select_vertex(g_, uncolored, classes_, used, nullptr);
    // Existing colors first, then at most one fresh color.
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & g_.neighbors(v)) continue;
      classes_[c] |= vertex_bit(v);
      colors_[v] = c;
      if (solve(uncolored & ~vertex_bit(v), std::max(used, c + 1))) return true;
      classes_[c] &= ~vertex_bit(v);
      colors_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colors_;
  std::vector<VertexMask> classes_;
};

}  // namespace

std::vector<int> greedy_coloring(const Graph& g) {
  std::vector<int> colors(g.n(), -1);
  std::vector<VertexMask> classes;
  VertexMask uncolored = g.vertices();
  while (uncolored) {
    const int v = select_vertex(g, uncolored, classes, static_cast<int>(classes.size()), nullptr);
    int c = 0;
    while (c < static_cast<int>(classes.size()) && (classes[c] & g.neighbors(v))) ++c;
    if (c == static_cast<int>(classes.size())) classes.push_back(0);
    classes[c] |= vertex_bit(v);
    colors[v] = c;
    uncolored &= ~vertex_bit(v);
  }
  return colors;
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (g.n() == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  return Colorer(g, k).run();
}

std::vector<int> optimal_coloring(const Graph& g) {
  if (g.n() == 0) return {};
  std::vector<int> best = greedy_coloring(g);
  const int upper = *std::max_element(best.begin(), best.end()) + 1;
  const int alpha = independence_number(g);
  const int lower = std::max(clique_number(g), (g.n() + alpha - 1) / alpha);
  for (int k = lower; k < upper; ++k) {
    if (auto c = k_coloring(g, k)) return *c;
  }
  return best;
}

int chromatic_number(const Graph& g) {
  if (g.n() == 0) return 0;
  const auto c = optimal_coloring(g);
  return *std::max_element(c.begin(), c.end()) + 1;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

}  // namespace ks

#include "ks/cliques.hpp"

#include <algorithm>
#include <array>

#include "ks/generators.hpp"

namespace ks {
namespace {

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    std::vector<int> current;
    if (g_.n() > 0) search(g_.vertices(), current);
    return best_;
  }

 private:
  // Greedy sequential coloring of cand; order[i] gets color bound[i], with
  // bounds nondecreasing so that scanning backwards prunes early.
  void search(VertexMask cand, std::vector<int>& current) {
    std::array<int, 64> order{};
    std::array<int, 64> bound{};
    int count = 0;
    VertexMask uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      VertexMask q = uncolored;
      while (q) {
        const int v = lowest_vertex(q);
        q &= ~vertex_bit(v);
        q &= ~g_.neighbors(v);
        uncolored &= ~vertex_bit(v);
        order[count] = v;
        bound[count] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current.push_back(v);
      const VertexMask next = cand & g_.neighbors(v);
      if (next) {
        search(next, current);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      cand &= ~vertex_bit(v);
    }
  }

  const Graph& g_;
  std::vector<int> best_;
};

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, int target) : g_(g), target_(target) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> r;
    expand(r, g_.vertices(), 0);
    return std::move(found_);
  }

 private:
  void expand(std::vector<int>& r, VertexMask p, VertexMask x) {
    if (static_cast<int>(r.size()) + mask_size(p) < target_) return;
    if (!p) {
      if (!x && static_cast<int>(r.size()) == target_) found_.push_back(r);
      return;
    }
    // Pivot maximizing |P ∩ N(u)|, lowest label on ties.
    int pivot = -1;
    int best = -1;
    for (int u : mask_to_vertices(p | x)) {
      const int c = mask_size(p & g_.neighbors(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    VertexMask branch = p & ~g_.neighbors(pivot);
    while (branch) {
      const int v = lowest_vertex(branch);
      branch &= branch - 1;
      r.push_back(v);
      expand(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.pop_back();
      p &= ~vertex_bit(v);
      x |= vertex_bit(v);
    }
  }

  const Graph& g_;
  int target_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
  auto c = MaxCliqueSearch(g).run();
  std::sort(c.begin(), c.end());
  return c;
}

int clique_number(const Graph& g) { return static_cast<int>(MaxCliqueSearch(g).run().size()); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

CliqueList maximum_cliques(const Graph& g) {
  CliqueList out;
  out.size = clique_number(g);
  if (out.size == 0) return out;
  out.cliques = CliqueEnumerator(g, out.size).run();
  for (auto& c : out.cliques) std::sort(c.begin(), c.end());
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

}  // namespace ks

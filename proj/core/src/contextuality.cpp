#include "ks/contextuality.hpp"

#include <algorithm>

#include "ks/automorphism.hpp"
#include "ks/cliques.hpp"
#include "ks/error.hpp"
#include "ks/theta.hpp"

namespace ks {

OrthogonalityGraph orthogonality_graph(const ContextSet& cs) {
  const int n = static_cast<int>(cs.rays.size());
  if (n > Graph::kMaxVertices) throw InputError("orthogonality_graph: more than 64 rays");
  OrthogonalityGraph out{Graph(n), {}};
  for (int i = 0; i < n; ++i) {
    out.vertex_of_ray.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (ray_equal(cs.rays[i], cs.rays[j])) {
        throw InputError("orthogonality_graph: rays " + std::to_string(i) + " and " + std::to_string(j) +
                         " are equal and must be merged first");
      }
      if (inner_product(cs.rays[i], cs.rays[j]).is_zero()) out.graph.add_edge(i, j);
    }
  }
  return out;
}

bool satisfies_contexts(const ContextSet& cs, const Assignment& a) {
  if (a.values.size() != cs.rays.size()) return false;
  return std::all_of(cs.contexts.begin(), cs.contexts.end(), [&](const auto& ctx) {
    return std::count_if(ctx.begin(), ctx.end(), [&](int r) { return a.values[r] == 1; }) == 1;
  });
}

namespace {

class KsSearch {
 public:
  explicit KsSearch(const ContextSet& cs)
      : cs_(cs), incidence_(ray_incidence(cs)), value_(cs.rays.size(), kUnset) {}

  std::optional<Assignment> run() {
    if (!solve(0)) return std::nullopt;
    Assignment a;
    a.values.reserve(value_.size());
    for (int v : value_) a.values.push_back(v == 1 ? 1 : 0);
    return a;
  }

 private:
  static constexpr int kUnset = -1;

  bool solve(std::size_t c) {
    if (c == cs_.contexts.size()) return true;
    const auto& ctx = cs_.contexts[c];
    const auto ones = std::count_if(ctx.begin(), ctx.end(), [&](int r) { return value_[r] == 1; });
    if (ones > 1) return false;
    std::vector<int> candidates;
    for (int r : ctx) {
      if (value_[r] == kUnset) candidates.push_back(r);
    }
    std::sort(candidates.begin(), candidates.end());
    if (ones == 1) {
      for (int r : candidates) value_[r] = 0;
      const bool ok = solve(c + 1);
      for (int r : candidates) value_[r] = kUnset;
      return ok;
    }
    for (int chosen : candidates) {
      if (!can_be_one(chosen)) continue;
      for (int r : candidates) value_[r] = (r == chosen) ? 1 : 0;
      if (solve(c + 1)) return true;
      for (int r : candidates) value_[r] = kUnset;
    }
    return false;
  }

  // A ray may take value 1 only if no context through it already has a 1.
  bool can_be_one(int ray) const {
    for (int c : incidence_[ray]) {
      for (int r : cs_.contexts[c]) {
        if (value_[r] == 1) return false;
      }
    }
    return true;
  }

  const ContextSet& cs_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> value_;
};

}  // namespace

std::optional<Assignment> ks_colorable(const ContextSet& cs) { return KsSearch(cs).run(); }

ParityCheck is_parity_proof(const Graph& g) {
  ParityCheck out;
  const CliqueList list = maximum_cliques(g);
  out.clique_size = list.size;
  out.clique_count = static_cast<int>(list.cliques.size());
  out.per_vertex.assign(g.n(), 0);
  for (const auto& c : list.cliques) {
    for (int v : c) ++out.per_vertex[v];
  }
  out.parity_proof = out.clique_count % 2 == 1 &&
                     std::all_of(out.per_vertex.begin(), out.per_vertex.end(), [](int k) { return k % 2 == 0; });
  return out;
}

ParityCheck context_parity(const ContextSet& cs) {
  ParityCheck out;
  out.clique_size = cs.dimension;
  out.clique_count = static_cast<int>(cs.contexts.size());
  out.per_vertex.assign(cs.rays.size(), 0);
  for (const auto& ctx : cs.contexts) {
    for (int r : ctx) ++out.per_vertex[r];
  }
  out.parity_proof = out.clique_count % 2 == 1 &&
                     std::all_of(out.per_vertex.begin(), out.per_vertex.end(), [](int k) { return k % 2 == 0; });
  return out;
}

bool contexts_are_maximum_cliques(const ContextSet& cs) {
  const CliqueList list = maximum_cliques(orthogonality_graph(cs).graph);
  if (list.size != cs.dimension) return false;
  std::vector<std::vector<int>> declared;
  for (auto ctx : cs.contexts) {
    std::sort(ctx.begin(), ctx.end());
    declared.push_back(std::move(ctx));
  }
  std::sort(declared.begin(), declared.end());
  return declared == list.cliques;
}

FullContextualityCheck is_fully_contextual(const Graph& g, double tol, double slack) {
  FullContextualityCheck out;
  out.alpha_star = fractional_packing_vt(g);
  out.alpha = independence_number(g);
  const ThetaResult theta = lovasz_theta(g, ThetaOptions{tol});
  out.theta = theta.value;
  out.theta_gap = theta.duality_gap;
  const double alpha_star = out.alpha_star.convert_to<double>();
  out.fully_contextual = out.alpha < out.theta - slack && std::abs(out.theta - alpha_star) <= slack;
  return out;
}

}  // namespace ks

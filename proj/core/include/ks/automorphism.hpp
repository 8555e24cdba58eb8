#pragma once

#include <optional>
#include <vector>

#include "ks/graph.hpp"

namespace ks {

/// An isomorphism g -> h as a vertex map (result[v] is the image of v).
/// Individualization-refinement backtracking: both graphs carry ordered
/// partitions that are refined in lockstep to equitable partitions, and a
/// branch dies as soon as the cell structures diverge.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

/// An automorphism of g sending `from` to `to`, if one exists.
std::optional<std::vector<int>> find_automorphism(const Graph& g, int from, int to);

/// Orbits of Aut(g) on the vertices. Each orbit is sorted; orbits are
/// ordered by their smallest vertex.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g);

bool is_vertex_transitive(const Graph& g);

bool is_automorphism(const Graph& g, const std::vector<int>& perm);

}  // namespace ks

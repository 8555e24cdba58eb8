#pragma once

#include <span>
#include <vector>

#include "ks/graph.hpp"

namespace ks {

/// J(m, k): k-subsets of {0..m-1} in lexicographic order, adjacent when
/// they share k-1 elements. Requires 1 <= k < m.
Graph johnson_graph(int m, int k);

/// Circulant graph on Z_n; i ~ j iff (j - i) mod n is in the connection set.
/// The set must be closed under negation and must not contain 0.
Graph circulant(int n, std::span<const int> connections);

Graph complement(const Graph& g);

/// Subgraph induced by the given vertices; vertex i of the result is
/// vertices[i]. Duplicates or out-of-range entries throw InputError.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Result has edge (perm[u], perm[v]) for every edge (u, v) of g.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

}  // namespace ks

#pragma once

#include <vector>

#include "ks/graph.hpp"

namespace ks {

struct CliqueList {
  int size = 0;
  // Each clique sorted ascending; the list sorted lexicographically.
  std::vector<std::vector<int>> cliques;
};

/// One maximum clique, found by bitset branch and bound with a greedy
/// coloring bound. Vertices are branched on in a fixed order, so the
/// witness is deterministic.
std::vector<int> maximum_clique(const Graph& g);

int clique_number(const Graph& g);

/// Size of a largest independent set: the clique number of the complement.
int independence_number(const Graph& g);

/// Every clique of size clique_number(g). Pivoting Bron-Kerbosch that
/// abandons branches which cannot reach that size.
CliqueList maximum_cliques(const Graph& g);

}  // namespace ks

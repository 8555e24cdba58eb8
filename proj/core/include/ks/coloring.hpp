#pragma once

#include <optional>
#include <vector>

#include "ks/graph.hpp"

namespace ks {

/// DSATUR greedy coloring; colors are 0-based.
std::vector<int> greedy_coloring(const Graph& g);

/// A proper coloring with at most k colors, if one exists.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);

/// Exact chromatic number. Lower bound max(clique number, ceil(n / alpha)),
/// upper bound from DSATUR, gap closed by backtracking.
int chromatic_number(const Graph& g);

/// Optimal coloring witnessing chromatic_number.
std::vector<int> optimal_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

}  // namespace ks

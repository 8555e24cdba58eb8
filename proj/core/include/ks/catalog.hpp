#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ks/context_set.hpp"
#include "ks/graph.hpp"

namespace ks {

/// The seven-context, 21-ray Kochen-Specker set in dimension 6. Rays are
/// numbered in the order 12, 13, ..., 67 where ray "ij" is the unique ray
/// shared by contexts B_i and B_j. Integrity (orthogonality, every ray in
/// exactly two contexts, the ij labelling) is checked on every call.
ContextSet builtin_seven_context();

/// Named graphs available without input files: "seven-context", "j52",
/// "j72", "pentagon", "petersen", "k6".
std::optional<Graph> builtin_graph(std::string_view name);
std::vector<std::string> builtin_graph_names();

/// Vector-set text format:
///
///   # comment
///   dimension 6                              (optional; else inferred)
///   basis B1: (1,0,0); (0,1,0); (0,0,1)
///
/// Entries are sums of terms `q`, `q w`, `q w^2` (q an optional rational,
/// `*` between coefficient and unit allowed, `ω` accepted for `w`).
/// Equal rays in different bases are merged. Throws VectorSetParseError
/// with line and column for syntax errors and InputError for semantic
/// failures (dimension mismatch, non-orthogonal basis).
ContextSet parse_vector_set(std::string_view text);

std::string render_vector_set(const ContextSet& cs);

}  // namespace ks

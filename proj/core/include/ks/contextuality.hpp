#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ks/context_set.hpp"
#include "ks/eisenstein.hpp"
#include "ks/graph.hpp"

namespace ks {

/// Comparison slack for equalities and inequalities involving theta.
inline constexpr double kThetaSlack = 1e-4;

struct OrthogonalityGraph {
  Graph graph;
  // ray index -> vertex; the identity map, kept explicit for callers.
  std::vector<int> vertex_of_ray;
};

/// One vertex per ray, an edge for every exactly orthogonal pair (whether or
/// not the pair shares a context). Throws InputError if two rays are equal
/// or there are more than 64 rays.
OrthogonalityGraph orthogonality_graph(const ContextSet& cs);

/// 0/1 value per ray.
struct Assignment {
  std::vector<std::uint8_t> values;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// True iff every context has exactly one ray set to 1.
bool satisfies_contexts(const ContextSet& cs, const Assignment& a);

/// Noncontextual 0/1 assignment with exactly one 1 per declared context, or
/// nullopt when none exists (a KS set). Contexts are processed in order and
/// the distinguished ray is tried in ascending ray index.
std::optional<Assignment> ks_colorable(const ContextSet& cs);

struct ParityCheck {
  bool parity_proof = false;
  int clique_size = 0;
  int clique_count = 0;
  std::vector<int> per_vertex;  // maximum cliques through each vertex
};

/// Parity condition over all maximum cliques: odd number of them, every
/// vertex in an even number.
ParityCheck is_parity_proof(const Graph& g);

/// The same condition over the declared contexts of cs rather than the
/// maximum cliques of its orthogonality graph.
ParityCheck context_parity(const ContextSet& cs);

/// True when the declared contexts are exactly the maximum cliques of the
/// orthogonality graph and have size cs.dimension.
bool contexts_are_maximum_cliques(const ContextSet& cs);

struct FullContextualityCheck {
  int alpha = 0;
  double theta = 0;
  double theta_gap = 0;
  Rational alpha_star;
  bool fully_contextual = false;
};

/// Evaluates alpha < theta = alpha* (within `slack`) with alpha* from the
/// vertex-transitive shortcut. Throws DomainError on a graph that is not
/// vertex-transitive.
FullContextualityCheck is_fully_contextual(const Graph& g, double tol = 1e-6, double slack = kThetaSlack);

/// Counting bound for five bases whose orthogonality pattern is J(5,2) with
/// every vertex blown up to a k-clique. The four block-row rank inequalities
/// each involve three k-column blocks; every block appears in exactly two
/// inequalities, so summing gives
///
///   6k  <=  sum of sub-column ranks  <=  4k + 2p
///
/// in dimension 4k + p. Hence p >= k and the structure needs dimension 5k.
struct JohnsonDimBound {
  int k = 0;
  int block_count = 0;           // distinct column blocks in the inequalities (6)
  int inequality_count = 0;      // block rows giving an inequality (4)
  long rank_sum_lower = 0;       // block_count * k
  long base_capacity = 0;        // inequality_count * k
  int extra_row_weight = 0;      // coefficient of p on the right-hand side
  int min_extra_rows = 0;        // smallest p satisfying the chain
  int min_dimension = 0;         // 4k + p
  std::vector<int> excluded_dimensions;  // 4k and 5k - 1
};

/// Throws DomainError for k < 1.
JohnsonDimBound johnson_dim_bound(int k);

/// Checks whether three maximum cliques could cover every vertex of an
/// n-vertex non-complete vertex-transitive graph at least twice:
/// 2n <= 3 omega, while alpha*omega <= n with alpha >= 2 forces omega <= n/2.
struct ThreeCliqueCheck {
  int n = 0;
  int omega = 0;
  long incidence_needed = 0;     // 2n
  long incidence_available = 0;  // 3 omega
  Rational ceiling;              // 3n/2
  bool feasible = false;
  std::string violated;          // human-readable violated inequality
};

/// Throws DomainError unless n >= 2 and 2 <= omega <= n/2.
ThreeCliqueCheck no_three_clique_symmetric_parity(int n, int omega);

}  // namespace ks

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ks/context_set.hpp"
#include "ks/eisenstein.hpp"
#include "ks/exact_matrix.hpp"

namespace ks {

// Largest number of +-1 assignments classical_max will enumerate.
inline constexpr std::uint64_t kMaxAssignmentBudget = std::uint64_t{1} << 24;

/// One dichotomic observable 2|v><v|/<v|v> - I per ray, indexed like cs.rays.
std::vector<ExactMatrix> build_observables(const ContextSet& cs);

/// Exact product of the observables of each context, in the order the
/// context lists its rays.
std::vector<ExactMatrix> context_products(const ContextSet& cs);

struct ExactQuantumValue {
  // Every context product is a rational multiple c_k of the identity, so
  // S = -sum_k c_k for every state.
  bool state_independent = false;
  std::optional<Rational> value;
  std::vector<bool> minus_identity;  // per context: product == -I
};

ExactQuantumValue quantum_value_exact(const ContextSet& cs);

/// S for a +-1 value per ray: sum over contexts of minus the product of the
/// context's signs.
int classical_value(const ContextSet& cs, std::span<const int> signs);

struct ClassicalMaxOptions {
  std::uint64_t budget = kMaxAssignmentBudget;
  int workers = 1;
};

struct ClassicalMax {
  int max = 0;
  // Assignment encoded as a bitmask, bit r set meaning ray r has value -1.
  // The smallest such mask attaining the maximum.
  std::uint64_t maximizer_mask = 0;
  std::vector<int> maximizer_signs;
  std::uint64_t maximizer_count = 0;
  std::uint64_t assignments = 0;
};

/// Exhaustive maximum of S over all 2^rays sign assignments. Throws
/// BudgetError when 2^rays exceeds the budget or the budget exceeds 2^24.
ClassicalMax classical_max(const ContextSet& cs, const ClassicalMaxOptions& options = {});

/// Floating-point S = -sum_k <psi|P_k|psi> for a pure state drawn uniformly
/// from the unit sphere with a seeded generator. P_k is the numeric product
/// of the numeric observables.
double quantum_value_numeric(const ContextSet& cs, std::uint64_t seed);

/// Same sum for the maximally mixed state I/d (trace form).
double quantum_value_maximally_mixed(const ContextSet& cs);

struct InequalityReport {
  int classical_max = 0;
  std::uint64_t classical_maximizer_count = 0;
  std::vector<int> classical_maximizer;
  std::optional<Rational> quantum_value;
  std::vector<bool> per_context_product_is_minus_identity;
  std::vector<std::pair<std::uint64_t, double>> state_samples;  // (seed, S)
  double maximally_mixed_value = 0;
};

InequalityReport inequality_report(const ContextSet& cs, std::span<const std::uint64_t> seeds,
                                   const ClassicalMaxOptions& options = {});

}  // namespace ks

#pragma once

#include <string>
#include <vector>

#include "ks/ket.hpp"

namespace ks {

/// Rays in dimension d grouped into contexts (orthogonal bases). Rays are
/// pairwise distinct under ray_equal; a context lists ray indices in the
/// order the basis was written.
struct ContextSet {
  int dimension = 0;
  std::vector<Ket> rays;
  std::vector<std::vector<int>> contexts;
  std::vector<std::string> context_names;

  std::size_t ray_count() const { return rays.size(); }
  std::size_t context_count() const { return contexts.size(); }

  friend bool operator==(const ContextSet&, const ContextSet&) = default;
};

struct NamedBasis {
  std::string name;
  std::vector<Ket> vectors;
};

/// Merges equal rays across bases (first occurrence wins, new rays are
/// numbered in order of first appearance) and validates the result.
/// Throws InputError on dimension mismatch or a non-orthogonal basis.
ContextSet build_context_set(int dimension, const std::vector<NamedBasis>& bases);

struct ContextSetReport {
  int dimension = 0;
  std::size_t ray_count = 0;
  std::size_t context_count = 0;
  // Number of contexts containing each ray.
  std::vector<int> multiplicity;
  // True when every ray lies in exactly two contexts.
  bool pairwise_sharing = false;
};

/// Checks that every context holds exactly `dimension` distinct rays that
/// are pairwise orthogonal, and that no two rays are equal. Throws
/// InputError naming the offending context/pair and the exact inner product.
ContextSetReport validate_context_set(const ContextSet& cs);

/// Display label per ray. When every ray lies in exactly two contexts i < j
/// (1-based) and there are at most nine contexts, the label is "ij";
/// otherwise "v<k>" with the 0-based ray index.
std::vector<std::string> ray_labels(const ContextSet& cs);

/// For each ray, the ascending list of contexts it belongs to.
std::vector<std::vector<int>> ray_incidence(const ContextSet& cs);

}  // namespace ks

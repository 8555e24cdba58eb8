#include <array>
#include <map>

#include "ks/contextuality.hpp"
#include "ks/error.hpp"

namespace ks {
namespace {

// Column blocks constrained in each block row once basis 0 is fixed to the
// identity: three blocks of k columns each whose nonzero sub-columns must
// be mutually orthogonal in that row.
enum class Block { D1, D2, D3, C1, C2, A1 };

constexpr std::array<std::array<Block, 3>, 4> kRowConstraints{{
    {Block::D1, Block::D2, Block::D3},
    {Block::C1, Block::C2, Block::D3},
    {Block::A1, Block::C2, Block::D2},
    {Block::A1, Block::C1, Block::D1},
}};

// Each of the p extra rows enters the summed right-hand side with weight 2,
// since every column block meets the extra rows in both of its inequalities.
constexpr int kExtraRowWeight = 2;

}  // namespace

JohnsonDimBound johnson_dim_bound(int k) {
  if (k < 1) throw DomainError("johnson_dim_bound: k must be positive");

  std::map<Block, int> appearances;
  for (const auto& row : kRowConstraints) {
    for (Block b : row) ++appearances[b];
  }
  // Summing the inequalities covers every block exactly twice, so each
  // block's rank k is bounded by the sum of its two sub-column ranks.
  for (const auto& [block, count] : appearances) {
    if (count != 2) throw std::logic_error("johnson_dim_bound: block incidence table is inconsistent");
  }

  JohnsonDimBound out;
  out.k = k;
  out.block_count = static_cast<int>(appearances.size());
  out.inequality_count = static_cast<int>(kRowConstraints.size());
  out.rank_sum_lower = static_cast<long>(out.block_count) * k;
  out.base_capacity = static_cast<long>(out.inequality_count) * k;
  out.extra_row_weight = kExtraRowWeight;

  // Smallest p with rank_sum_lower <= base_capacity + weight * p.
  const long deficit = out.rank_sum_lower - out.base_capacity;
  const long p = deficit <= 0 ? 0 : (deficit + kExtraRowWeight - 1) / kExtraRowWeight;
  out.min_extra_rows = static_cast<int>(p);
  out.min_dimension = static_cast<int>(out.base_capacity + p);

  const int base_dimension = static_cast<int>(out.base_capacity);
  if (out.min_dimension > base_dimension) out.excluded_dimensions.push_back(base_dimension);
  if (out.min_dimension - 1 > base_dimension) out.excluded_dimensions.push_back(out.min_dimension - 1);
  return out;
}

ThreeCliqueCheck no_three_clique_symmetric_parity(int n, int omega) {
  if (n < 2 || omega < 2 || 2 * omega > n) {
    throw DomainError("no_three_clique_symmetric_parity: need n >= 2 and 2 <= omega <= n/2 (got n=" +
                      std::to_string(n) + ", omega=" + std::to_string(omega) + ")");
  }
  ThreeCliqueCheck out;
  out.n = n;
  out.omega = omega;
  out.incidence_needed = 2L * n;
  out.incidence_available = 3L * omega;
  out.ceiling = Rational(3 * n, 2);
  out.feasible = out.incidence_needed <= out.incidence_available;
  if (!out.feasible) {
    out.violated = "2n <= 3*omega fails: " + std::to_string(out.incidence_needed) + " > " +
                   std::to_string(out.incidence_available) + " (3*omega <= 3n/2 = " + to_string(out.ceiling) + ")";
  }
  return out;
}

}  // namespace ks

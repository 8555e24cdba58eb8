#include "ks/inequality.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "ks/error.hpp"

namespace ks {
namespace {

using ComplexMatrix = Eigen::MatrixXcd;

ComplexMatrix to_numeric(const ExactMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dimension());
  ComplexMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

std::vector<ComplexMatrix> numeric_context_products(const ContextSet& cs) {
  std::vector<ComplexMatrix> observables;
  for (const auto& obs : build_observables(cs)) observables.push_back(to_numeric(obs));
  std::vector<ComplexMatrix> out;
  for (const auto& ctx : cs.contexts) {
    ComplexMatrix p = ComplexMatrix::Identity(cs.dimension, cs.dimension);
    for (int r : ctx) p = p * observables[r];
    out.push_back(std::move(p));
  }
  return out;
}

struct RangeResult {
  int max = -(1 << 30);
  std::uint64_t mask = 0;
  std::uint64_t count = 0;
};

RangeResult scan_range(const std::vector<std::uint64_t>& context_masks, std::uint64_t begin, std::uint64_t end) {
  RangeResult out;
  for (std::uint64_t a = begin; a < end; ++a) {
    int s = 0;
    // -prod(signs) is +1 exactly when the context holds an odd number of -1s.
    for (std::uint64_t cm : context_masks) s += (std::popcount(a & cm) & 1) ? 1 : -1;
    if (s > out.max) {
      out.max = s;
      out.mask = a;
      out.count = 1;
    } else if (s == out.max) {
      ++out.count;
    }
  }
  return out;
}

}  // namespace

std::vector<ExactMatrix> build_observables(const ContextSet& cs) {
  std::vector<ExactMatrix> out;
  out.reserve(cs.rays.size());
  for (const auto& r : cs.rays) out.push_back(observable_from_ray(r));
  return out;
}

std::vector<ExactMatrix> context_products(const ContextSet& cs) {
  const auto observables = build_observables(cs);
  std::vector<ExactMatrix> out;
  for (const auto& ctx : cs.contexts) {
    std::vector<ExactMatrix> factors;
    for (int r : ctx) factors.push_back(observables[r]);
    out.push_back(matrix_product(factors));
  }
  return out;
}

ExactQuantumValue quantum_value_exact(const ContextSet& cs) {
  ExactQuantumValue out;
  out.state_independent = true;
  Rational total = 0;
  const auto minus_identity = ExactMatrix::scalar(cs.dimension, -1);
  for (const auto& p : context_products(cs)) {
    out.minus_identity.push_back(p == minus_identity);
    EisensteinScalar factor;
    if (p.is_scalar_multiple_of_identity(&factor) && factor.is_real()) {
      total -= factor.a();
    } else {
      out.state_independent = false;
    }
  }
  if (out.state_independent) out.value = total;
  return out;
}

int classical_value(const ContextSet& cs, std::span<const int> signs) {
  if (signs.size() != cs.rays.size()) throw InputError("classical_value: one sign per ray required");
  int s = 0;
  for (const auto& ctx : cs.contexts) {
    int prod = 1;
    for (int r : ctx) prod *= signs[r];
    s -= prod;
  }
  return s;
}

ClassicalMax classical_max(const ContextSet& cs, const ClassicalMaxOptions& options) {
  if (options.budget > kMaxAssignmentBudget) {
    throw BudgetError("classical_max: budget above the 2^24 cap");
  }
  const std::size_t rays = cs.rays.size();
  if (rays >= 64 || (std::uint64_t{1} << rays) > options.budget) {
    throw BudgetError("classical_max: 2^" + std::to_string(rays) + " assignments exceed the budget of " +
                      std::to_string(options.budget));
  }
  std::vector<std::uint64_t> context_masks;
  for (const auto& ctx : cs.contexts) {
    std::uint64_t m = 0;
    for (int r : ctx) m |= std::uint64_t{1} << r;
    context_masks.push_back(m);
  }

  const std::uint64_t total = std::uint64_t{1} << rays;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, total);
  std::vector<RangeResult> parts(workers);
  if (workers == 1) {
    parts[0] = scan_range(context_masks, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = scan_range(context_masks, total * w / workers, total * (w + 1) / workers);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Parts are in ascending mask order, so the first part reaching the max
  // holds the smallest maximizer.
  ClassicalMax out;
  out.assignments = total;
  out.max = parts[0].max;
  for (const auto& p : parts) out.max = std::max(out.max, p.max);
  bool have_mask = false;
  for (const auto& p : parts) {
    if (p.max != out.max) continue;
    out.maximizer_count += p.count;
    if (!have_mask) {
      out.maximizer_mask = p.mask;
      have_mask = true;
    }
  }
  for (std::size_t r = 0; r < rays; ++r) out.maximizer_signs.push_back((out.maximizer_mask >> r) & 1 ? -1 : 1);
  return out;
}

double quantum_value_numeric(const ContextSet& cs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd psi(cs.dimension);
  for (int i = 0; i < cs.dimension; ++i) psi(i) = {normal(rng), normal(rng)};
  psi.normalize();
  double s = 0;
  for (const auto& p : numeric_context_products(cs)) s -= (psi.adjoint() * p * psi)(0).real();
  return s;
}

double quantum_value_maximally_mixed(const ContextSet& cs) {
  double s = 0;
  for (const auto& p : numeric_context_products(cs)) s -= p.trace().real() / cs.dimension;
  return s;
}

InequalityReport inequality_report(const ContextSet& cs, std::span<const std::uint64_t> seeds,
                                   const ClassicalMaxOptions& options) {
  InequalityReport out;
  const ClassicalMax cm = classical_max(cs, options);
  out.classical_max = cm.max;
  out.classical_maximizer_count = cm.maximizer_count;
  out.classical_maximizer = cm.maximizer_signs;
  const ExactQuantumValue q = quantum_value_exact(cs);
  out.quantum_value = q.value;
  out.per_context_product_is_minus_identity = q.minus_identity;
  for (auto seed : seeds) out.state_samples.emplace_back(seed, quantum_value_numeric(cs, seed));
  out.maximally_mixed_value = quantum_value_maximally_mixed(cs);
  return out;
}

}  // namespace ks

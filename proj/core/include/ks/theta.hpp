#pragma once

#include <string>

#include "ks/eisenstein.hpp"
#include "ks/error.hpp"
#include "ks/graph.hpp"

namespace ks {

struct ThetaOptions {
  double tol = 1e-6;  // absolute duality gap
  int max_iterations = 200;
};

struct ThetaResult {
  double value = 0;       // primal objective <J, X>
  double dual_value = 0;  // dual objective t, an upper bound on theta
  double duality_gap = 0;
  int iterations = 0;
};

/// Raised when the interior-point iteration cap is reached before the gap
/// closes; carries the best iterate.
class ThetaConvergenceError : public BudgetError {
 public:
  ThetaConvergenceError(const std::string& what, ThetaResult partial)
      : BudgetError(what), partial_(partial) {}
  const ThetaResult& partial() const { return partial_; }

 private:
  ThetaResult partial_;
};

/// Lovasz number of g:
///
///   maximize   <J, X>
///   subject to tr X = 1,  X_ij = 0 for every edge ij,  X PSD.
///
/// Solved with a dense primal-dual interior-point method (HKM search
/// direction, Mehrotra predictor-corrector). The dual is
///
///   minimize t  subject to  t I + sum_ij y_ij (E_ij + E_ji) - J  PSD.
///
/// Both iterates stay feasible from the start point X = I/n,
/// t = n + 1, y = 0, so [value, dual_value] brackets theta.
ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options = {});

/// Fractional packing number n / omega(g) for a vertex-transitive g.
/// Throws DomainError if g is not vertex-transitive.
Rational fractional_packing_vt(const Graph& g);

}  // namespace ks

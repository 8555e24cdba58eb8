#include "ks/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ks/automorphism.hpp"
#include "ks/cliques.hpp"

namespace ks {
namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Constraint k = 0 is tr X = 1; constraint k >= 1 is <E_ij + E_ji, X> = 0
// for the (k-1)-th edge.
struct ThetaSdp {
  int n;
  std::vector<std::pair<int, int>> edges;

  int constraints() const { return 1 + static_cast<int>(edges.size()); }

  // A(W) for a (not necessarily symmetric) matrix W.
  Vector apply(const Matrix& w) const {
    Vector out(constraints());
    out(0) = w.trace();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      out(static_cast<Eigen::Index>(e) + 1) = w(i, j) + w(j, i);
    }
    return out;
  }

  // A^T(y) = y_0 I + sum y_e (E_ij + E_ji)
  Matrix adjoint(const Vector& y) const {
    Matrix out = Matrix::Identity(n, n) * y(0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      const double v = y(static_cast<Eigen::Index>(e) + 1);
      out(i, j) += v;
      out(j, i) += v;
    }
    return out;
  }

  // Schur complement M_kl = tr(A_k X A_l Z^{-1}), symmetric positive definite.
  Matrix schur(const Matrix& x, const Matrix& zinv) const {
    const int m = constraints();
    Matrix out(m, m);
    const Matrix xz = x * zinv;
    out(0, 0) = (xz).trace();
    for (int l = 1; l < m; ++l) {
      auto [p, q] = edges[l - 1];
      out(0, l) = out(l, 0) = xz(p, q) + xz(q, p);
    }
    for (int k = 1; k < m; ++k) {
      auto [i, j] = edges[k - 1];
      for (int l = k; l < m; ++l) {
        auto [p, q] = edges[l - 1];
        const double v = x(j, p) * zinv(q, i) + x(j, q) * zinv(p, i) + x(i, p) * zinv(q, j) + x(i, q) * zinv(p, j);
        out(k, l) = out(l, k) = v;
      }
    }
    return out;
  }
};

// Largest alpha in (0, inf] with M + alpha * D PSD, given the Cholesky
// factor L of M.
double max_step(const Eigen::LLT<Matrix>& chol, const Matrix& d) {
  const Matrix linv_d = chol.matrixL().solve(d);
  const Matrix s = chol.matrixL().solve(linv_d.transpose()).transpose();
  const Matrix sym = 0.5 * (s + s.transpose());
  const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(sym, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (lmin >= 0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

}  // namespace

ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options) {
  if (g.n() == 0) throw DomainError("lovasz_theta: graph has no vertices");
  if (!(options.tol > 0)) throw DomainError("lovasz_theta: tolerance must be positive");

  const int n = g.n();
  const ThetaSdp sdp{n, g.edges()};
  const int m = sdp.constraints();

  // Standard form: minimize <C, X> with C = -J, A(X) = b, b = e_0.
  const Matrix c = -Matrix::Ones(n, n);
  Vector b = Vector::Zero(m);
  b(0) = 1.0;

  Matrix x = Matrix::Identity(n, n) / n;
  Vector y = Vector::Zero(m);
  y(0) = -(n + 1.0);
  Matrix z = c - sdp.adjoint(y);

  ThetaResult result;
  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    result.value = x.sum();
    result.dual_value = -y(0);
    result.duality_gap = std::abs(result.dual_value - result.value);
    result.iterations = iter;

    const Vector rp = b - sdp.apply(x);
    const Matrix rd = c - z - sdp.adjoint(y);
    const double infeas = std::max(rp.lpNorm<Eigen::Infinity>(), rd.lpNorm<Eigen::Infinity>());
    if (result.duality_gap <= 0.25 * options.tol && infeas <= 1e-9) return result;
    if (iter == options.max_iterations) break;

    const Eigen::LLT<Matrix> zchol(z);
    const Eigen::LLT<Matrix> xchol(x);
    if (zchol.info() != Eigen::Success || xchol.info() != Eigen::Success) break;
    const Matrix zinv = zchol.solve(Matrix::Identity(n, n));
    const double mu = (x.cwiseProduct(z)).sum() / n;

    const Eigen::LDLT<Matrix> schur(sdp.schur(x, zinv));
    if (schur.info() != Eigen::Success) break;

    auto direction = [&](const Matrix& target, Matrix& dx, Vector& dy, Matrix& dz) {
      // target is the complementarity right-hand side: dX + X dZ Z^{-1} = target
      dy = schur.solve(rp - sdp.apply(target - x * rd * zinv));
      dz = rd - sdp.adjoint(dy);
      dx = target - x * dz * zinv;
      dx = 0.5 * (dx + dx.transpose()).eval();
    };

    Matrix dx_aff, dz_aff;
    Vector dy_aff;
    direction(-x, dx_aff, dy_aff, dz_aff);
    const double ap_aff = std::min(1.0, max_step(xchol, dx_aff));
    const double ad_aff = std::min(1.0, max_step(zchol, dz_aff));
    const double mu_aff = ((x + ap_aff * dx_aff).cwiseProduct(z + ad_aff * dz_aff)).sum() / n;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    Matrix dx, dz;
    Vector dy;
    direction(sigma * mu * zinv - x - dx_aff * dz_aff * zinv, dx, dy, dz);
    const double ap = std::min(1.0, 0.95 * max_step(xchol, dx));
    const double ad = std::min(1.0, 0.95 * max_step(zchol, dz));

    x += ap * dx;
    x = 0.5 * (x + x.transpose()).eval();
    y += ad * dy;
    z += ad * dz;
    z = 0.5 * (z + z.transpose()).eval();
  }
  throw ThetaConvergenceError("lovasz_theta: duality gap " + std::to_string(result.duality_gap) +
                                  " above tolerance after " + std::to_string(result.iterations) + " iterations",
                              result);
}

Rational fractional_packing_vt(const Graph& g) {
  if (!is_vertex_transitive(g)) {
    throw DomainError("fractional_packing_vt: graph is not vertex-transitive");
  }
  return Rational(g.n(), clique_number(g));
}

}  // namespace ks

#include "uagg/baselines.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace uagg {

namespace {

// Unit top eigenvector of a symmetric matrix, sign-aligned to a
// nonnegative entry sum; warns on a near-degenerate top eigengap.
VectorXd top_eigenvector(const MatrixXd& M, std::vector<std::string>* warnings) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(M);
  const int d = static_cast<int>(M.rows());
  if (d >= 2 && warnings) {
    const double gap = eig.eigenvalues()[d - 1] - eig.eigenvalues()[d - 2];
    if (gap < 1e-8)
      warnings->push_back("top eigengap below 1e-8; direction resolved by index order");
  }
  VectorXd u = eig.eigenvectors().col(d - 1);
  if (u.sum() < 0) u = -u;
  return u;
}

}  // namespace

BaselineResult simple_average(const NormalizedMatrix& Yn) {
  BaselineResult out;
  out.method = BaselineMethod::average;
  out.v_hat = Yn.values.colwise().mean();
  return out;
}

BaselineResult pca_aggregate(const NormalizedMatrix& Yn) {
  BaselineResult out;
  out.method = BaselineMethod::pca;
  const MatrixXd G = Yn.values * Yn.values.transpose();
  out.u_hat = top_eigenvector(G, &out.warnings);
  out.has_u = true;
  out.v_hat = Yn.values.transpose() * out.u_hat;
  return out;
}

HeteroPcaGramResult hetero_pca_on_gram(const MatrixXd& G, int max_iters, double tol) {
  if (max_iters < 1) throw InputError("hetero_pca needs max_iters >= 1");
  MatrixXd off = G;
  off.diagonal().setZero();

  HeteroPcaGramResult out;
  MatrixXd M = off;
  out.converged = false;
  for (int it = 0; it < max_iters; ++it) {
    out.iterations = it + 1;
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(M);
    const int d = static_cast<int>(M.rows());
    const double lam1 = eig.eigenvalues()[d - 1];
    const VectorXd u1 = eig.eigenvectors().col(d - 1);
    const VectorXd new_diag = lam1 * u1.array().square().matrix();
    const double delta = (new_diag - M.diagonal()).cwiseAbs().maxCoeff();
    M = off;
    M.diagonal() = new_diag;
    if (delta < tol) {
      out.converged = true;
      break;
    }
  }
  out.u_hat = top_eigenvector(M, nullptr);
  return out;
}

BaselineResult hetero_pca_aggregate(const NormalizedMatrix& Yn, int max_iters,
                                    double tol) {
  BaselineResult out;
  out.method = BaselineMethod::hetero_pca;
  const MatrixXd G = Yn.values * Yn.values.transpose();
  HeteroPcaGramResult res = hetero_pca_on_gram(G, max_iters, tol);
  out.u_hat = std::move(res.u_hat);
  out.has_u = true;
  out.iterations = res.iterations;
  out.converged = res.converged;
  if (!res.converged)
    out.warnings.push_back("diagonal completion did not converge in " +
                           std::to_string(max_iters) + " iterations");
  out.v_hat = Yn.values.transpose() * out.u_hat;
  return out;
}

}  // namespace uagg

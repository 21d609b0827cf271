#pragma once

#include <string>
#include <vector>

#include "uagg/stabilize.hpp"
#include "uagg/types.hpp"

namespace uagg {

enum class BaselineMethod { average, pca, hetero_pca };

struct BaselineResult {
  VectorXd v_hat;
  VectorXd u_hat;  // empty for the simple average
  bool has_u = false;
  BaselineMethod method = BaselineMethod::average;
  int iterations = 0;  // HeteroPCA only
  bool converged = true;
  std::vector<std::string> warnings;
};

// v_hat = mean of the normalized rows.
BaselineResult simple_average(const NormalizedMatrix& Yn);

// u_hat = unit top eigenvector of G = Ybar Ybar^T, sign-aligned to a
// nonnegative entry sum; v_hat = Ybar^T u_hat. An eigengap below 1e-8
// attaches a warning (the solver's index order breaks the tie).
BaselineResult pca_aggregate(const NormalizedMatrix& Yn);

// Diagonal-deletion iteration on a symmetric G: M_0 = offdiag(G),
// M_{k+1} = offdiag(G) + diag(rank-1 approximation of M_k), stopping when
// the diagonal changes by less than tol in max norm. Returns the unit top
// eigenvector of the final iterate (sign-aligned) and the iteration count.
struct HeteroPcaGramResult {
  VectorXd u_hat;
  int iterations = 0;
  bool converged = true;
};
HeteroPcaGramResult hetero_pca_on_gram(const MatrixXd& G, int max_iters, double tol);

BaselineResult hetero_pca_aggregate(const NormalizedMatrix& Yn, int max_iters = 100,
                                    double tol = 1e-8);

}  // namespace uagg

#pragma once

#include <string>
#include <vector>

#include "uagg/types.hpp"

namespace uagg {

struct NormalizedMatrix {
  MatrixXd values;      // rows have unit l2 norm
  VectorXd row_norms;   // pre-normalization norms (after optional centering)
  bool centered = false;
};

// Row-wise centering (optional) and l2 normalization. A zero-norm row is a
// constant-prediction model and raises InputError naming its model id.
NormalizedMatrix normalize_rows(const PredictionMatrix& Y, bool center);
NormalizedMatrix normalize_rows(const MatrixXd& Y, bool center,
                                const std::vector<std::string>* model_ids = nullptr);

struct ResolventDiagonals {
  VectorXd g1;       // length d
  VectorXd g2;       // length n
  double theta_bar;  // median singular value (interpolated for even counts)
};

// Resolvent diagonal estimates at z = i*theta_bar from the SVD of a row
// matrix with d <= n: g1_i = sum_k theta_bar/(theta_k^2+theta_bar^2) U_ik^2,
// g2_j = 1/theta_bar + sum_k (theta_bar/(theta_k^2+theta_bar^2) - 1/theta_bar) V_jk^2.
// theta must be descending with d entries; U is d x d, V is n x d.
// Throws DegenerateSpectrumError when theta_bar vanishes.
ResolventDiagonals resolvent_diagonals(const MatrixXd& U, const VectorXd& theta,
                                       const MatrixXd& V);

struct DysonFactors {
  VectorXd h_hat;  // length d, strictly positive after flooring
  VectorXd f_hat;  // length n
  int floor_count = 0;
};

// h = (1/g1 - theta_bar)/sqrt(d - theta_bar*||g1||_1), f analogous with n and
// g2. Nonpositive entries are floored at 1e-8 * median(positive entries) and
// counted. Throws PipelineError("Dyson normalizer nonpositive") when a
// square-root argument is nonpositive.
DysonFactors dyson_factors(const VectorXd& g1, const VectorXd& g2, double theta_bar);

struct StabilizedMatrix {
  MatrixXd values;   // Yt, same orientation as the input
  VectorXd h_hat;    // length d (model factors)
  VectorXd f_hat;    // length n (sample factors)
  double theta_bar = 0.0;
  VectorXd g1;       // length d
  VectorXd g2;       // length n
  bool transposed = false;  // d > n was handled by internal transposition
  int floor_count = 0;
  std::vector<std::string> warnings;

  // Diagonals of the whitening matrices: m^{1/4} sqrt(h) and m^{1/4} sqrt(f)
  // with m = max(d, n), so that diag(H) * Yt * diag(F) reconstructs the
  // normalized input and the whitened noise has entry variance ~ 1/m.
  VectorXd H_diag() const;
  VectorXd F_diag() const;
};

// Algorithm: full SVD, resolvent diagonals at the median singular value,
// Dyson factor extraction, then Yt = H^{-1} Ybar F^{-1}. d > n runs on the
// transpose with the factor roles swapped back afterwards.
StabilizedMatrix stabilize(const NormalizedMatrix& Yn);

// Identity-whitening fallback used when the spectrum is degenerate
// (exactly rank-deficient input): h = f = n^{-1/2} makes H = F = 1.
StabilizedMatrix identity_stabilized(const MatrixXd& Yn_values);

}  // namespace uagg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uagg/amp.hpp"
#include "uagg/types.hpp"

namespace uagg {

struct CvConfig {
  int K = 5;
  std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::uint64_t seed = 0;
  AmpConfig amp;  // template; omega is overwritten per grid point
  bool center = false;

  void validate() const;  // K >= 2, grid nonempty strictly ascending in (0,1)
};

struct CvReport {
  double omega_hat = 0.0;
  MatrixXd losses;                   // |grid| x K
  std::vector<int> fold_assignment;  // length n, values in [0, K)
  std::vector<double> grid;
  std::vector<std::string> warnings;
};

// Uniformly random partition of [0, n) into K folds with sizes differing
// by at most one; deterministic given seed. InputError when n < K.
std::vector<int> split_folds(int n, int K, std::uint64_t seed);

// Algorithm: per fold, normalize+stabilize+AMP on the training columns
// (stabilization cached across the grid), unit-normalize the held-out
// weight vector, renormalize the held-out rows independently, and score
// l(omega) = ||Yk - u v^T||_F^2 with v = Yk^T u. Zero-norm held-out rows
// are excluded from that fold's loss with a warning; zero-norm training
// rows are dropped before stabilization and re-embedded as zero weights.
// omega_hat = argmin of the summed loss, ties to the smallest omega.
CvReport cv_omega(const PredictionMatrix& Y, const CvConfig& config);

// Held-out weight vector u^(-k) for one fold and omega: the quantity the
// fold loss scores (embedded over all d rows, scaled by the training H,
// unit-normalized). Exposed for the leave-out isolation test.
VectorXd cv_heldout_weights(const PredictionMatrix& Y,
                            const std::vector<int>& fold_assignment, int k,
                            double omega, const CvConfig& config);

}  // namespace uagg

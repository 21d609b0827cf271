#pragma once

#include <string>
#include <vector>

#include "uagg/stabilize.hpp"
#include "uagg/types.hpp"

namespace uagg {

// Onsager coefficient: "derivative" counts nonzeros of the thresholded
// iterate (mean derivative of soft thresholding); "literal" counts
// nonzeros of the pre-threshold iterate, which is 1 on generic dense input.
enum class OnsagerMode { derivative, literal };

// Threshold selection: "quantile" keeps the ceil(omega*d) largest |w|
// entries; "literal" takes the smallest x with (1/d)#{|w_i| <= x} >= omega.
enum class ThresholdMode { quantile, literal };

struct AmpConfig {
  double omega = 0.3;
  int max_iters = 100;
  double tol = 1e-6;  // direction change of v_t between iterations
  OnsagerMode onsager = OnsagerMode::derivative;
  ThresholdMode threshold = ThresholdMode::quantile;
  // Survivor-count override for rank-deficient inputs whose row count was
  // reduced upstream (quantile mode only); -1 = derive from omega.
  int keep_override = -1;
};

struct AmpState {
  int t = 0;
  VectorXd v_t;  // length n
  VectorXd u_t;  // length d (post threshold)
  VectorXd w_t;  // length d (pre threshold)
  double tau_t = 0.0;
  double c_t = 0.0;
  double rel_change = 0.0;
};

struct AmpTraceRow {
  int t;
  double tau;
  double c_t;
  int nnz;
  double rel_change;
  double cos_v_truth;  // NaN when no truth supplied
  double cos_u_truth;
};

struct AmpResult {
  VectorXd u_t;  // u^L before renormalization, sign-aligned
  VectorXd v_t;  // v^L
  int iterations = 0;
  bool converged = false;
  std::vector<AmpTraceRow> trace;
  std::vector<std::string> warnings;
};

struct AggregationResult {
  VectorXd v_hat;  // length n
  VectorXd u_hat;  // length d
  double omega_used = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<AmpTraceRow> trace;
  std::vector<std::string> warnings;
};

// sign(w) * max(|w| - tau, 0), entrywise.
VectorXd soft_threshold(const VectorXd& w, double tau);

// Quantile mode: tau = r-th smallest |w| with r = ceil((1-omega)*d)
// clamped to [1, d]; entries strictly above tau survive, ties at tau
// shrink to zero. keep_override k forces r = d - min(k, d) (r <= 0 gives
// tau = 0, keeping everything). Literal mode: the ceil(omega*d)-th
// smallest |w|.
double select_threshold(const VectorXd& w, double omega,
                        ThresholdMode mode = ThresholdMode::quantile,
                        int keep_override = -1);

// v^0 = sqrt(n) * top right singular vector, sign-aligned so the top left
// singular vector has nonnegative entry sum. Warns when the top singular
// gap is below 1e-8.
VectorXd amp_init(const MatrixXd& Yt, std::vector<std::string>* warnings = nullptr);

// One iteration: w = Yt v - (n/m) u_prev, tau = select_threshold(w),
// u = soft_threshold(w, tau), c = nnz/m, v_next = Yt^T u - c v, with
// m = max(d, n) (the whitened noise variance scale). rel_change is the
// distance between successive unit directions of v. Throws
// AmpDivergenceError on non-finite iterates.
AmpState amp_step(const AmpState& state, const MatrixXd& Yt, const AmpConfig& config);

// Full loop from amp_init until max_iters or rel_change < tol, then sign
// alignment (sum of u entries nonnegative). If every entry thresholds to
// zero the loop stops with zero vectors and a warning. Optional truth
// vectors populate the trace cosine columns.
AmpResult run_amp(const MatrixXd& Yt, const AmpConfig& config,
                  const VectorXd* v_truth = nullptr,
                  const VectorXd* u_truth = nullptr);

// v_hat = diag(F) v^L, u_hat = diag(H) u^L; re-applies the sign convention
// (sum of u_hat entries nonnegative).
AggregationResult renormalize(const AmpResult& amp, const StabilizedMatrix& stab,
                              double omega_used);

}  // namespace uagg

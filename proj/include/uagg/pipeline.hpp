#pragma once

#include <string>
#include <vector>

#include "uagg/amp.hpp"
#include "uagg/cv.hpp"
#include "uagg/types.hpp"

namespace uagg {

struct AggregateOptions {
  bool center = false;
  bool use_cv = true;  // select omega by cross-validation
  double omega = 0.3;  // used when use_cv is false
  CvConfig cv;         // grid, folds, seed
  AmpConfig amp;       // iteration caps and modes
};

struct PipelineResult {
  AggregationResult result;  // u_hat has length d with zeros at dropped rows
  double omega_hat = 0.0;
  bool used_cv = false;
  CvReport cv_report;  // populated when used_cv
  std::vector<int> dropped_rows;
  std::vector<std::string> warnings;
};

// Centering, zero-row dropping, normalization and whitening of a raw
// model-by-sample block. Zero-norm rows are dropped with a warning; an
// exactly rank-deficient retained block (degenerate spectrum) falls back
// to identity whitening with a warning.
struct PreparedInput {
  std::vector<int> kept;  // original indices of retained rows
  StabilizedMatrix stab;  // whitening of the retained block
  int d_original = 0;
  std::vector<std::string> warnings;
};
PreparedInput prepare_input(const MatrixXd& values, bool center);

// Survivor-count override for AMP when rows were dropped: the sparsity
// budget ceil(omega * d) refers to the original model count and must be
// clamped to the retained row count. -1 when nothing was dropped.
int keep_override_for(double omega, int d_original, int d_retained);

// Fixed-omega core shared by aggregate() and the CV fold loop: prepare ->
// AMP -> renormalize, with weights re-embedded over the original rows.
AggregationResult aggregate_fixed(const MatrixXd& values, double omega,
                                  const AmpConfig& amp, bool center,
                                  const VectorXd* v_truth = nullptr,
                                  const VectorXd* u_truth = nullptr);

// End-to-end aggregation: optional CV for omega, then the fixed-omega core.
PipelineResult aggregate(const PredictionMatrix& Y, const AggregateOptions& options);

}  // namespace uagg

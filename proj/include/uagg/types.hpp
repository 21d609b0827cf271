#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace uagg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Bad user-supplied data or configuration (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure inside the pipeline (CLI exit code 1).
struct PipelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All singular values zero: the resolvent diagonals are undefined.
struct DegenerateSpectrumError : PipelineError {
  using PipelineError::PipelineError;
};

struct AmpDivergenceError : PipelineError {
  using PipelineError::PipelineError;
};

// Raw d x n score matrix; rows are models, columns are samples.
struct PredictionMatrix {
  MatrixXd values;
  std::vector<std::string> model_ids;
  std::vector<std::string> sample_ids;

  int d() const { return static_cast<int>(values.rows()); }
  int n() const { return static_cast<int>(values.cols()); }

  // Finite entries, d,n >= 2, id lengths match, ids unique.
  void validate() const;
};

}  // namespace uagg

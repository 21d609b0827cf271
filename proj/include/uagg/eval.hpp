#pragma once

#include <string>
#include <vector>

#include "uagg/types.hpp"

namespace uagg {

// Sample Pearson correlation; throws InputError("zero variance") on a
// constant argument.
double pearson(const VectorXd& x, const VectorXd& y);

// <x, y> / (||x|| ||y||); throws InputError on a zero vector.
double cosine(const VectorXd& x, const VectorXd& y);

// rho_i = cor(Y_i, v)^2 per model row; a constant row scores 0 with a
// warning instead of erroring.
VectorXd model_performance(const MatrixXd& Y, const VectorXd& v,
                           std::vector<std::string>* warnings = nullptr);

// Pearson correlation between estimated weights and per-model performance.
double weight_concordance(const VectorXd& u_hat, const VectorXd& rho);

struct EvalReport {
  double cor_v = 0.0;
  double cos_v = 0.0;
  double cos_u = 0.0;       // valid only when has_cos_u
  bool has_cos_u = false;   // requires true u
  VectorXd rho;
  double concordance = 0.0;  // valid only when has_concordance
  bool has_concordance = false;
  std::string best_model_id;
  double best_model_cor = 0.0;  // max_i sqrt(rho_i)
  std::vector<std::string> warnings;
};

// Builds the full report for one method. u_hat/u_true may be null
// (methods without weights / no weight truth available).
EvalReport evaluate(const MatrixXd& Y, const std::vector<std::string>& model_ids,
                    const VectorXd& v_true, const VectorXd& v_hat,
                    const VectorXd* u_hat = nullptr, const VectorXd* u_true = nullptr);

}  // namespace uagg

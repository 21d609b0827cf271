#pragma once

#include <string>
#include <vector>

#include "uagg/amp.hpp"
#include "uagg/cv.hpp"
#include "uagg/eval.hpp"
#include "uagg/state_evolution.hpp"
#include "uagg/synth.hpp"
#include "uagg/types.hpp"

namespace uagg {

// Shortest round-trip decimal representation (std::to_chars); the single
// number formatter everywhere so fixed seeds give byte-identical files.
std::string fmt(double x);
std::string fmt(int x);

// PredictionMatrix CSV: header "model_id,<sample ids...>", one row per
// model. rows_are_models=false transposes on read (file rows are samples).
// Parse failures raise InputError naming the 1-based line.
PredictionMatrix read_prediction_csv(const std::string& path, bool rows_are_models = true);
void write_prediction_csv(const std::string& path, const PredictionMatrix& Y);

// GroundTruth JSON sidecar (v, u, sigma, f, c, s, support).
void write_truth_json(const std::string& path, const GroundTruth& truth);
GroundTruth read_truth_json(const std::string& path);

// Truth vector CSV "sample_id,value"; returned in the order of `sample_ids`
// (InputError on any id mismatch).
VectorXd read_truth_vector_csv(const std::string& path,
                               const std::vector<std::string>& sample_ids);

// AMP trace CSV: t,tau,c_t,nnz,rel_change plus cos_v_truth,cos_u_truth
// columns when any row carries truth values.
void write_amp_trace_csv(const std::string& path, const std::vector<AmpTraceRow>& trace);

// Loss surface CSV: rows omega, columns folds (header omega,fold_1,...).
void write_cv_losses_csv(const std::string& path, const CvReport& report);

// State-evolution trace CSV: t,mu,sigma,mu_bar,sigma_bar,cos_v,cos_u;
// with_residual appends the per-step max-norm change of (mu, sigma).
void write_se_trace_csv(const std::string& path, const SeTrace& trace,
                        bool with_residual = false);

void write_vector_csv(const std::string& path, const std::string& id_header,
                      const std::string& value_header,
                      const std::vector<std::string>& ids, const VectorXd& values);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uagg

#include "uagg/pipeline.hpp"

#include <cmath>

#include "uagg/stabilize.hpp"

namespace uagg {

PreparedInput prepare_input(const MatrixXd& values, bool center) {
  PreparedInput out;
  out.d_original = static_cast<int>(values.rows());
  const int n = static_cast<int>(values.cols());

  MatrixXd Z = values;
  if (center) Z.colwise() -= Z.rowwise().mean();
  const VectorXd norms = Z.rowwise().norm();
  for (int i = 0; i < out.d_original; ++i)
    if (norms[i] > 0.0) out.kept.push_back(i);

  const int dropped = out.d_original - static_cast<int>(out.kept.size());
  if (dropped > 0)
    out.warnings.push_back("dropped " + std::to_string(dropped) +
                           " zero-norm rows (constant predictions)");
  if (out.kept.size() < 2)
    throw PipelineError("fewer than two models with nonconstant predictions");

  MatrixXd Yw(out.kept.size(), n);
  for (std::size_t r = 0; r < out.kept.size(); ++r)
    Yw.row(r) = Z.row(out.kept[r]) / norms[out.kept[r]];

  NormalizedMatrix Yn;
  Yn.values = std::move(Yw);
  Yn.centered = center;
  Yn.row_norms = VectorXd::Ones(out.kept.size());
  try {
    out.stab = stabilize(Yn);
  } catch (const DegenerateSpectrumError&) {
    out.warnings.push_back("degenerate spectrum: falling back to identity whitening");
    out.stab = identity_stabilized(Yn.values);
  }
  for (const auto& w : out.stab.warnings) out.warnings.push_back(w);
  return out;
}

int keep_override_for(double omega, int d_original, int d_retained) {
  if (d_retained >= d_original) return -1;
  const int target = static_cast<int>(std::ceil(omega * d_original));
  return std::min(target, d_retained);
}

AggregationResult aggregate_fixed(const MatrixXd& values, double omega,
                                  const AmpConfig& amp, bool center,
                                  const VectorXd* v_truth, const VectorXd* u_truth) {
  PreparedInput prep = prepare_input(values, center);
  AmpConfig cfg = amp;
  cfg.omega = omega;
  cfg.keep_override = keep_override_for(omega, prep.d_original,
                                        static_cast<int>(prep.kept.size()));

  const AmpResult res = run_amp(prep.stab.values, cfg, v_truth, u_truth);
  AggregationResult out = renormalize(res, prep.stab, omega);

  if (static_cast<int>(prep.kept.size()) < prep.d_original) {
    VectorXd full = VectorXd::Zero(prep.d_original);
    for (std::size_t r = 0; r < prep.kept.size(); ++r) full[prep.kept[r]] = out.u_hat[r];
    out.u_hat = std::move(full);
  }
  for (auto& w : prep.warnings) out.warnings.push_back(std::move(w));
  return out;
}

PipelineResult aggregate(const PredictionMatrix& Y, const AggregateOptions& options) {
  Y.validate();
  PipelineResult out;
  double omega = options.omega;
  if (options.use_cv) {
    CvConfig cv = options.cv;
    cv.amp = options.amp;
    cv.center = options.center;
    out.cv_report = cv_omega(Y, cv);
    out.used_cv = true;
    omega = out.cv_report.omega_hat;
    for (const auto& w : out.cv_report.warnings) out.warnings.push_back(w);
  }
  out.omega_hat = omega;
  out.result = aggregate_fixed(Y.values, omega, options.amp, options.center);

  for (int i = 0; i < out.result.u_hat.size(); ++i)
    if (out.result.u_hat[i] == 0.0 && Y.values.row(i).norm() == 0.0)
      out.dropped_rows.push_back(i);
  for (const auto& w : out.result.warnings) out.warnings.push_back(w);
  return out;
}

}  // namespace uagg

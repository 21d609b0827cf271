#include "uagg/amp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace uagg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double abs_cosine(const VectorXd& a, const VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::abs(a.dot(b)) / (na * nb);
}

double kth_smallest_abs(const VectorXd& w, int k) {
  std::vector<double> a(w.size());
  for (int i = 0; i < w.size(); ++i) a[i] = std::abs(w[i]);
  std::nth_element(a.begin(), a.begin() + (k - 1), a.end());
  return a[k - 1];
}

}  // namespace

VectorXd soft_threshold(const VectorXd& w, double tau) {
  return w.unaryExpr([tau](double x) {
    const double shrunk = std::abs(x) - tau;
    return shrunk > 0 ? (x > 0 ? shrunk : -shrunk) : 0.0;
  });
}

double select_threshold(const VectorXd& w, double omega, ThresholdMode mode,
                        int keep_override) {
  const int d = static_cast<int>(w.size());
  if (mode == ThresholdMode::literal) {
    // Smallest x with (1/d) #{|w_i| <= x} >= omega: the ceil(omega d)-th
    // order statistic of |w|.
    const int k = std::clamp(static_cast<int>(std::ceil(omega * d)), 1, d);
    return kth_smallest_abs(w, k);
  }
  int r;
  if (keep_override >= 0) {
    r = d - std::min(keep_override, d);
    if (r <= 0) return 0.0;
  } else {
    r = std::clamp(static_cast<int>(std::ceil((1.0 - omega) * d)), 1, d);
  }
  return kth_smallest_abs(w, r);
}

VectorXd amp_init(const MatrixXd& Yt, std::vector<std::string>* warnings) {
  const int n = static_cast<int>(Yt.cols());
  Eigen::BDCSVD<MatrixXd> svd(Yt, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const VectorXd& theta = svd.singularValues();
  if (theta.size() >= 2 && theta[0] - theta[1] < 1e-8 && warnings)
    warnings->push_back("top singular gap below 1e-8; initial direction ill-determined");
  VectorXd v0 = std::sqrt(static_cast<double>(n)) * svd.matrixV().col(0);
  // Sign fixed immediately by the output convention (u-side entry sum).
  if (svd.matrixU().col(0).sum() < 0) v0 = -v0;
  return v0;
}

AmpState amp_step(const AmpState& state, const MatrixXd& Yt, const AmpConfig& config) {
  const int d = static_cast<int>(Yt.rows());
  const int n = static_cast<int>(Yt.cols());
  const double m = static_cast<double>(std::max(d, n));

  AmpState next;
  next.t = state.t + 1;
  next.w_t = Yt * state.v_t;
  if (state.u_t.size() == d) next.w_t -= (n / m) * state.u_t;

  next.tau_t = select_threshold(next.w_t, config.omega, config.threshold,
                                config.keep_override);
  next.u_t = soft_threshold(next.w_t, next.tau_t);

  const int nnz = static_cast<int>((next.u_t.array() != 0.0).count());
  const int nnz_w = static_cast<int>((next.w_t.array() != 0.0).count());
  next.c_t = (config.onsager == OnsagerMode::derivative ? nnz : nnz_w) / m;

  VectorXd v_next = Yt.transpose() * next.u_t - next.c_t * state.v_t;
  if (!v_next.allFinite() || !next.u_t.allFinite())
    throw AmpDivergenceError("AMP divergence at iteration " + std::to_string(state.t));

  const double nv_new = v_next.norm();
  const double nv_old = state.v_t.norm();
  next.rel_change = (nv_new > 0 && nv_old > 0)
                        ? (v_next / nv_new - state.v_t / nv_old).norm()
                        : std::numeric_limits<double>::infinity();
  next.v_t = std::move(v_next);
  return next;
}

AmpResult run_amp(const MatrixXd& Yt, const AmpConfig& config, const VectorXd* v_truth,
                  const VectorXd* u_truth) {
  const int d = static_cast<int>(Yt.rows());
  const int n = static_cast<int>(Yt.cols());
  AmpResult out;

  AmpState state;
  state.t = -1;
  state.v_t = amp_init(Yt, &out.warnings);
  state.u_t = VectorXd::Zero(d);

  for (int t = 0; t < config.max_iters; ++t) {
    AmpState next = amp_step(state, Yt, config);
    out.iterations = t + 1;

    AmpTraceRow row;
    row.t = t;
    row.tau = next.tau_t;
    row.c_t = next.c_t;
    row.nnz = static_cast<int>((next.u_t.array() != 0.0).count());
    row.rel_change = next.rel_change;
    row.cos_v_truth = v_truth ? abs_cosine(next.v_t, *v_truth) : kNaN;
    row.cos_u_truth = u_truth ? abs_cosine(next.u_t, *u_truth) : kNaN;
    out.trace.push_back(row);

    if (row.nnz == 0) {
      // Every entry tied at the threshold; nothing survives.
      out.warnings.push_back("all entries thresholded to zero at iteration " +
                             std::to_string(t));
      state.u_t = next.u_t;
      state.v_t = VectorXd::Zero(n);
      out.converged = true;
      break;
    }
    state = std::move(next);
    if (state.rel_change < config.tol) {
      out.converged = true;
      break;
    }
  }

  if (state.u_t.sum() < 0) {
    state.u_t = -state.u_t;
    state.v_t = -state.v_t;
  }
  out.u_t = std::move(state.u_t);
  out.v_t = std::move(state.v_t);
  return out;
}

AggregationResult renormalize(const AmpResult& amp, const StabilizedMatrix& stab,
                              double omega_used) {
  AggregationResult out;
  out.u_hat = stab.H_diag().cwiseProduct(amp.u_t);
  out.v_hat = stab.F_diag().cwiseProduct(amp.v_t);
  if (out.u_hat.sum() < 0) {
    out.u_hat = -out.u_hat;
    out.v_hat = -out.v_hat;
  }
  out.omega_used = omega_used;
  out.iterations = amp.iterations;
  out.converged = amp.converged;
  out.trace = amp.trace;
  out.warnings = amp.warnings;
  return out;
}

}  // namespace uagg

#include "uagg/stabilize.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace uagg {

namespace {

// Interpolated median of a descending sequence.
double median_descending(const VectorXd& theta) {
  const int k = static_cast<int>(theta.size());
  return k % 2 ? theta[k / 2] : 0.5 * (theta[k / 2 - 1] + theta[k / 2]);
}

// Floor nonpositive entries at eps * median(positive entries).
int floor_nonpositive(VectorXd& x) {
  std::vector<double> pos;
  pos.reserve(x.size());
  for (int i = 0; i < x.size(); ++i)
    if (x[i] > 0) pos.push_back(x[i]);
  int count = static_cast<int>(x.size()) - static_cast<int>(pos.size());
  if (count == 0) return 0;
  if (pos.empty()) throw PipelineError("Dyson factors all nonpositive");
  std::sort(pos.begin(), pos.end());
  const std::size_t k = pos.size();
  const double med = k % 2 ? pos[k / 2] : 0.5 * (pos[k / 2 - 1] + pos[k / 2]);
  const double floor_value = 1e-8 * med;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] <= 0) x[i] = floor_value;
  return count;
}

// Core for row count <= column count.
StabilizedMatrix stabilize_core(const MatrixXd& Yn) {
  const int d = static_cast<int>(Yn.rows());
  const int n = static_cast<int>(Yn.cols());
  Eigen::BDCSVD<MatrixXd> svd(Yn, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const ResolventDiagonals res =
      resolvent_diagonals(svd.matrixU(), svd.singularValues(), svd.matrixV());
  const DysonFactors fac = dyson_factors(res.g1, res.g2, res.theta_bar);

  StabilizedMatrix out;
  out.h_hat = fac.h_hat;
  out.f_hat = fac.f_hat;
  out.theta_bar = res.theta_bar;
  out.g1 = res.g1;
  out.g2 = res.g2;
  out.floor_count = fac.floor_count;
  if (fac.floor_count > 0)
    out.warnings.push_back("floored " + std::to_string(fac.floor_count) +
                           " nonpositive Dyson factor entries");
  const double scale = std::pow(static_cast<double>(n), 0.25);
  const VectorXd hi = (scale * out.h_hat.array().sqrt()).inverse().matrix();
  const VectorXd fi = (scale * out.f_hat.array().sqrt()).inverse().matrix();
  out.values = hi.asDiagonal() * Yn * fi.asDiagonal();
  (void)d;
  return out;
}

}  // namespace

NormalizedMatrix normalize_rows(const MatrixXd& Y, bool center,
                                const std::vector<std::string>* model_ids) {
  NormalizedMatrix out;
  out.centered = center;
  MatrixXd Z = Y;
  if (center) Z.colwise() -= Z.rowwise().mean();
  out.row_norms = Z.rowwise().norm();
  for (int i = 0; i < Z.rows(); ++i) {
    if (out.row_norms[i] == 0.0) {
      const std::string id =
          model_ids ? (*model_ids)[i] : "row " + std::to_string(i + 1);
      throw InputError("zero-norm row: " + id + " (constant-prediction model)");
    }
    Z.row(i) /= out.row_norms[i];
  }
  out.values = std::move(Z);
  return out;
}

NormalizedMatrix normalize_rows(const PredictionMatrix& Y, bool center) {
  return normalize_rows(Y.values, center, &Y.model_ids);
}

ResolventDiagonals resolvent_diagonals(const MatrixXd& U, const VectorXd& theta,
                                       const MatrixXd& V) {
  const int d = static_cast<int>(U.rows());
  const int n = static_cast<int>(V.rows());
  if (theta.size() != d || U.cols() != d || V.cols() != d || d > n)
    throw PipelineError("resolvent_diagonals: malformed SVD factors");
  const double tb = median_descending(theta);
  const double top = theta[0] > 0 ? theta[0] : 1.0;
  if (tb <= 1e-12 * top) throw DegenerateSpectrumError("degenerate spectrum");

  const VectorXd kernel = tb / (theta.array().square() + tb * tb);
  ResolventDiagonals out;
  out.theta_bar = tb;
  out.g1 = U.array().square().matrix() * kernel;
  // The n - d singular directions missing from the thin V each contribute
  // 1/theta_bar to a column diagonal.
  const VectorXd corr = (kernel.array() - 1.0 / tb).matrix();
  out.g2 = V.array().square().matrix() * corr;
  out.g2.array() += 1.0 / tb;
  return out;
}

DysonFactors dyson_factors(const VectorXd& g1, const VectorXd& g2, double theta_bar) {
  const int d = static_cast<int>(g1.size());
  const int n = static_cast<int>(g2.size());
  const double den_h = d - theta_bar * g1.cwiseAbs().sum();
  const double den_f = n - theta_bar * g2.cwiseAbs().sum();
  if (den_h <= 0 || den_f <= 0)
    throw PipelineError("Dyson normalizer nonpositive");
  DysonFactors out;
  out.h_hat = ((g1.cwiseInverse().array() - theta_bar) / std::sqrt(den_h)).matrix();
  out.f_hat = ((g2.cwiseInverse().array() - theta_bar) / std::sqrt(den_f)).matrix();
  out.floor_count = floor_nonpositive(out.h_hat) + floor_nonpositive(out.f_hat);
  return out;
}

VectorXd StabilizedMatrix::H_diag() const {
  const double m = static_cast<double>(std::max(values.rows(), values.cols()));
  return (std::pow(m, 0.25) * h_hat.array().sqrt()).matrix();
}

VectorXd StabilizedMatrix::F_diag() const {
  const double m = static_cast<double>(std::max(values.rows(), values.cols()));
  return (std::pow(m, 0.25) * f_hat.array().sqrt()).matrix();
}

StabilizedMatrix stabilize(const NormalizedMatrix& Yn) {
  const int d = static_cast<int>(Yn.values.rows());
  const int n = static_cast<int>(Yn.values.cols());
  if (d <= n) return stabilize_core(Yn.values);
  // Row count exceeds column count: run on the transpose and swap the
  // factor roles back.
  StabilizedMatrix core = stabilize_core(Yn.values.transpose());
  StabilizedMatrix out;
  out.values = core.values.transpose();
  out.h_hat = core.f_hat;
  out.f_hat = core.h_hat;
  out.theta_bar = core.theta_bar;
  out.g1 = core.g2;
  out.g2 = core.g1;
  out.transposed = true;
  out.floor_count = core.floor_count;
  out.warnings = std::move(core.warnings);
  return out;
}

StabilizedMatrix identity_stabilized(const MatrixXd& Yn_values) {
  const int d = static_cast<int>(Yn_values.rows());
  const int n = static_cast<int>(Yn_values.cols());
  const double m = static_cast<double>(std::max(d, n));
  StabilizedMatrix out;
  out.values = Yn_values;  // H = F = identity: m^{1/4} sqrt(m^{-1/2}) = 1
  out.h_hat = VectorXd::Constant(d, 1.0 / std::sqrt(m));
  out.f_hat = VectorXd::Constant(n, 1.0 / std::sqrt(m));
  out.g1 = VectorXd::Zero(d);
  out.g2 = VectorXd::Zero(n);
  out.theta_bar = 0.0;
  return out;
}

}  // namespace uagg

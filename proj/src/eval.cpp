#include "uagg/eval.hpp"

#include <cmath>

namespace uagg {

double pearson(const VectorXd& x, const VectorXd& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InputError("pearson needs two equal-length vectors of size >= 2");
  const VectorXd xc = x.array() - x.mean();
  const VectorXd yc = y.array() - y.mean();
  const double sx = xc.squaredNorm();
  const double sy = yc.squaredNorm();
  if (sx == 0.0 || sy == 0.0) throw InputError("zero variance");
  return xc.dot(yc) / std::sqrt(sx * sy);
}

double cosine(const VectorXd& x, const VectorXd& y) {
  if (x.size() != y.size()) throw InputError("cosine needs equal-length vectors");
  const double nx = x.norm();
  const double ny = y.norm();
  if (nx == 0.0 || ny == 0.0) throw InputError("cosine of a zero vector");
  return x.dot(y) / (nx * ny);
}

VectorXd model_performance(const MatrixXd& Y, const VectorXd& v,
                           std::vector<std::string>* warnings) {
  const VectorXd vc = v.array() - v.mean();
  const double sv = vc.squaredNorm();
  if (sv == 0.0) throw InputError("zero variance");
  VectorXd rho(Y.rows());
  for (int i = 0; i < Y.rows(); ++i) {
    const VectorXd yc = Y.row(i).transpose().array() - Y.row(i).mean();
    const double sy = yc.squaredNorm();
    if (sy == 0.0) {
      rho[i] = 0.0;  // constant rows carry no ranking information
      if (warnings)
        warnings->push_back("constant row " + std::to_string(i + 1) +
                            " scored rho = 0");
      continue;
    }
    const double r = yc.dot(vc) / std::sqrt(sy * sv);
    rho[i] = r * r;
  }
  return rho;
}

double weight_concordance(const VectorXd& u_hat, const VectorXd& rho) {
  return pearson(u_hat, rho);
}

EvalReport evaluate(const MatrixXd& Y, const std::vector<std::string>& model_ids,
                    const VectorXd& v_true, const VectorXd& v_hat,
                    const VectorXd* u_hat, const VectorXd* u_true) {
  EvalReport rep;
  rep.cor_v = pearson(v_hat, v_true);
  rep.cos_v = cosine(v_hat, v_true);
  rep.rho = model_performance(Y, v_true, &rep.warnings);
  if (u_hat && u_true) {
    rep.cos_u = cosine(*u_hat, *u_true);
    rep.has_cos_u = true;
  }
  if (u_hat) {
    rep.concordance = weight_concordance(*u_hat, rep.rho);
    rep.has_concordance = true;
  }
  int best = 0;
  for (int i = 1; i < rep.rho.size(); ++i)
    if (rep.rho[i] > rep.rho[best]) best = i;
  rep.best_model_id = model_ids.empty() ? std::to_string(best + 1) : model_ids[best];
  rep.best_model_cor = std::sqrt(rep.rho[best]);
  return rep;
}

}  // namespace uagg

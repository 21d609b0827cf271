#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uagg/types.hpp"

namespace uagg {

enum class NoiseRegime { homoskedastic, heteroskedastic };

// Scalar law descriptor. Supported names: "uniform" (p1=lo, p2=hi),
// "constant" (p1), "lognormal" (p1=mu, p2=sigma of log). Constant laws
// consume no RNG draws.
struct Law {
  std::string name = "constant";
  double p1 = 1.0;
  double p2 = 0.0;

  static Law uniform(double lo, double hi) { return {"uniform", lo, hi}; }
  static Law constant(double v) { return {"constant", v, 0.0}; }
  static Law lognormal(double mu, double sigma) { return {"lognormal", mu, sigma}; }
};

struct SynthConfig {
  int n = 1000;
  int d = 100;
  double omega = 0.3;  // target s/d
  NoiseRegime regime = NoiseRegime::heteroskedastic;
  std::uint64_t seed = 0;
  // 0 keeps v at its drawn scale (lambda = ||v||_2 grows like sqrt(n/3));
  // positive values rescale v so that ||v||_2 equals the target.
  double target_lambda = 0.0;

  // Law overrides; unset (empty name) means the regime default:
  // v ~ Unif(-1,1); sigma,f = 1 (homoskedastic) or Unif(0,2)
  // (heteroskedastic); c = 1.
  Law v_law{"", 0, 0};
  Law sigma_law{"", 0, 0};
  Law f_law{"", 0, 0};
  Law c_law{"", 0, 0};

  void validate() const;  // n,d >= 2; ceil(omega*d) >= 1; laws known
};

struct GroundTruth {
  VectorXd v;      // length n
  VectorXd u;      // length d, entries in {0, magnitude}
  VectorXd sigma;  // length d, nonnegative (zero models exact rows)
  VectorXd f;      // length n, strictly positive
  VectorXd c;      // length d, strictly positive
  int s = 0;       // nonzero count of u

  double lambda() const { return v.norm(); }
  std::vector<int> support() const;
};

// Y_i = c_i (v u_i + sigma_i sqrt(f) .* w_i), w_i ~ N(0, I/n);
// support drawn uniformly with exactly s = ceil(omega d) nonzeros of
// magnitude sqrt((d/n)/s). Identical seed reproduces identical bytes.
// Draw order: v, support, sigma, f, c, then W row by row.
std::pair<PredictionMatrix, GroundTruth> generate(const SynthConfig& config);

// Instance in the whitened domain used by the state-evolution checks:
// Y = u_t v_t^T + E with E_ij ~ N(0, 1/n), u_t = U/sqrt(n) where U is
// the (omega, Unif(0, sqrt(3/omega))) mixture, and v_t scaled so
// ||v_t|| ~ lambda.
struct WhitenedInstance {
  MatrixXd Y;
  VectorXd u_t;
  VectorXd v_t;
};
WhitenedInstance generate_whitened(int n, int d, double lambda, double omega,
                                   std::uint64_t seed);

}  // namespace uagg

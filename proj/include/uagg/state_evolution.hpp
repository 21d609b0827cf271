#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uagg/types.hpp"

namespace uagg {

// Signal-entry law: point mass at 0 w.p. 1-omega, Unif(0, c) w.p. omega,
// with c = sqrt(3/omega) so the second moment is exactly 1. The uniform
// component carries 64-point Gauss-Legendre nodes for deterministic
// expectations.
struct Mixture {
  double omega = 0.0;
  double c = 0.0;
  std::array<double, 64> nodes{};    // points in (0, c)
  std::array<double, 64> weights{};  // sum to 1
};
Mixture nu_u_mixture(double omega);  // InputError unless 0 < omega < 1

enum class TauPolicy { quantile_matched, fixed };

struct SeConfig {
  double lambda = 2.0;
  double alpha = 0.3;  // lim d/n
  double omega = 0.3;
  TauPolicy tau_policy = TauPolicy::quantile_matched;
  double fixed_tau = 0.0;  // used by TauPolicy::fixed
  int max_iters = 120;
  int mc_samples = 1000000;  // Monte Carlo cross-check path
  std::uint64_t seed = 0;
  // lambda^2 sqrt(alpha) <= 1 is below the detection threshold; the run
  // errors there unless this flag permits it (phase-transition plots).
  bool allow_subcritical = false;
};

struct SeRow {
  int t;
  double mu, sigma, mu_bar, sigma_bar;
  double cos_v;  // mu_{t+1} / (lambda sigma_{t+1})
  double cos_u;  // mu_bar_t / (sqrt(alpha) lambda sigma_bar_t)
  double tau;
  double delta;  // max-norm change of (mu, sigma) produced by this step
};

struct SeTrace {
  std::vector<SeRow> rows;
  bool converged = false;
  double mu_star = 0.0, sigma_star = 0.0, mu_bar_star = 0.0, sigma_bar_star = 0.0;
  double cos_v_star = 0.0, cos_u_star = 0.0;
  double residual = 0.0;  // max residual of the 4-equation fixed-point system
  std::vector<std::string> warnings;
};

// mu_0 = sqrt((1 - 1/(alpha lambda^4))/(1 + 1/lambda^2)), sigma_0 likewise;
// mu_0^2 + sigma_0^2 = 1 exactly. Subcritical (lambda^2 sqrt(alpha) < 1)
// errors unless allowed; exactly at threshold mu_0 = 0.
std::pair<double, double> se_init(double lambda, double alpha,
                                  bool allow_subcritical = false,
                                  std::vector<std::string>* warnings = nullptr);

struct SeStepResult {
  double mu_bar, sigma_bar, mu_next, sigma_next, tau;
};

// One recursion step with soft-threshold g:
//   mu_bar   = lambda alpha E[U g(mu U + sigma G)]
//   sigma_bar^2 = alpha E[g(mu U + sigma G)^2]
//   mu_next = lambda mu_bar, sigma_next^2 = mu_bar^2 + sigma_bar^2.
// Expectations use closed-form Gaussian soft-threshold moments integrated
// over the mixture's quadrature nodes. tau follows the policy
// (quantile-matched: the (1-omega)-quantile of |mu U + sigma G| by
// bisection on the mixture CDF).
SeStepResult se_step(double mu, double sigma, const SeConfig& config, const Mixture& mix);

// Iterates from se_init; declares the fixed point when successive (mu,
// sigma) change < 1e-8 in max norm or the derived cosines change < 1e-10.
SeTrace se_run(const SeConfig& config);

// Monte Carlo estimate of (E[U g], E[g^2]) at fixed (mu, sigma, tau); the
// cross-check oracle for the quadrature path.
std::pair<double, double> se_moments_mc(double mu, double sigma, double tau,
                                        double omega, int samples, std::uint64_t seed);

// P(|mu U + sigma G| <= x) under the mixture; exposed for threshold tests.
double mixture_abs_cdf(double x, double mu, double sigma, const Mixture& mix);
double quantile_tau(double mu, double sigma, const Mixture& mix);

}  // namespace uagg

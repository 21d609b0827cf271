#include "uagg/state_evolution.hpp"

#include <cmath>
#include <numbers>

#include "uagg/rng.hpp"

namespace uagg {

namespace {

double phi(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double Phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// E[soft(m + s G, tau)] for G ~ N(0,1).
double soft_mean(double m, double s, double tau) {
  const double z0 = (m - tau) / s;
  const double z1 = (-tau - m) / s;
  return (m - tau) * Phi(z0) + s * phi(z0) + (m + tau) * Phi(z1) - s * phi(z1);
}

// E[soft(m + s G, tau)^2].
double soft_second_moment(double m, double s, double tau) {
  const double z0 = (tau - m) / s;
  const double z1 = (-tau - m) / s;
  const double upper = (1.0 + z0 * z0) * (1.0 - Phi(z0)) - z0 * phi(z0);
  const double lower = (1.0 + z1 * z1) * Phi(z1) + z1 * phi(z1);
  return s * s * (upper + lower);
}

// 64-point Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on
// the Legendre polynomial (symmetric; only half computed).
struct GaussLegendre64 {
  std::array<double, 64> x{};
  std::array<double, 64> w{};
  GaussLegendre64() {
    constexpr int n = 64;
    for (int i = 0; i < n / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int k = 0; k < n; ++k) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
        }
        pp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[n - 1 - i] = w[i];
    }
  }
};

const GaussLegendre64& gl64() {
  static const GaussLegendre64 table;
  return table;
}

double subcritical_margin(double lambda, double alpha) {
  return lambda * lambda * std::sqrt(alpha) - 1.0;
}

}  // namespace

Mixture nu_u_mixture(double omega) {
  if (!(omega > 0.0 && omega < 1.0)) throw InputError("omega must be in (0, 1)");
  Mixture mix;
  mix.omega = omega;
  mix.c = std::sqrt(3.0 / omega);
  const auto& gl = gl64();
  for (int i = 0; i < 64; ++i) {
    mix.nodes[i] = 0.5 * mix.c * (gl.x[i] + 1.0);  // map [-1,1] -> (0, c)
    mix.weights[i] = 0.5 * gl.w[i];                // weights of Unif(0, c)
  }
  return mix;
}

std::pair<double, double> se_init(double lambda, double alpha, bool allow_subcritical,
                                  std::vector<std::string>* warnings) {
  if (!(lambda > 0) || !(alpha > 0)) throw InputError("se_init needs lambda, alpha > 0");
  const double margin = subcritical_margin(lambda, alpha);
  if (margin < 0) {
    if (!allow_subcritical)
      throw InputError("lambda^2 sqrt(alpha) <= 1: below the detection threshold "
                       "(pass the subcritical override to explore it)");
    if (warnings)
      warnings->push_back("subcritical regime: the spectral initialization carries "
                          "no signal");
    return {0.0, 1.0};  // no informative component below the transition
  }
  const double il2 = 1.0 / (lambda * lambda);
  const double il4 = il2 * il2;
  const double denom = 1.0 + il2;
  const double mu0_sq = (1.0 - il4 / alpha) / denom;
  const double mu0 = mu0_sq > 0 ? std::sqrt(mu0_sq) : 0.0;
  const double sigma0 = std::sqrt((il2 + il4 / alpha) / denom);
  return {mu0, sigma0};
}

double mixture_abs_cdf(double x, double mu, double sigma, const Mixture& mix) {
  if (x < 0) return 0.0;
  const double p0 = Phi(x / sigma) - Phi(-x / sigma);
  double pu = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double m = mu * mix.nodes[i];
    pu += mix.weights[i] * (Phi((x - m) / sigma) - Phi((-x - m) / sigma));
  }
  return (1.0 - mix.omega) * p0 + mix.omega * pu;
}

double quantile_tau(double mu, double sigma, const Mixture& mix) {
  const double target = 1.0 - mix.omega;
  double lo = 0.0;
  double hi = mu * mix.c + 12.0 * sigma;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mixture_abs_cdf(mid, mu, sigma, mix) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

SeStepResult se_step(double mu, double sigma, const SeConfig& config, const Mixture& mix) {
  if (!(sigma > 0)) throw PipelineError("se_step needs sigma > 0");
  SeStepResult out;
  out.tau = config.tau_policy == TauPolicy::fixed ? config.fixed_tau
                                                  : quantile_tau(mu, sigma, mix);
  // E[U g] over the uniform component; the point mass contributes zero.
  double Ug = 0.0;
  double g2_uniform = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double m = mu * mix.nodes[i];
    Ug += mix.weights[i] * mix.nodes[i] * soft_mean(m, sigma, out.tau);
    g2_uniform += mix.weights[i] * soft_second_moment(m, sigma, out.tau);
  }
  const double g2 = (1.0 - mix.omega) * soft_second_moment(0.0, sigma, out.tau) +
                    mix.omega * g2_uniform;
  if (!std::isfinite(Ug) || !std::isfinite(g2))
    throw PipelineError("state evolution produced a non-finite expectation");

  out.mu_bar = config.lambda * config.alpha * mix.omega * Ug;
  out.sigma_bar = std::sqrt(config.alpha * g2);
  out.mu_next = config.lambda * out.mu_bar;
  out.sigma_next = std::sqrt(out.mu_bar * out.mu_bar + out.sigma_bar * out.sigma_bar);
  return out;
}

SeTrace se_run(const SeConfig& config) {
  const Mixture mix = nu_u_mixture(config.omega);
  SeTrace trace;
  auto [mu, sigma] = se_init(config.lambda, config.alpha, config.allow_subcritical,
                             &trace.warnings);
  if (mu == 0.0) {
    // Spectral initialization is uninformative; the recursion stays at zero.
    trace.converged = true;
    trace.rows.push_back({0, mu, sigma, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    return trace;
  }

  double prev_cos_v = 0.0, prev_cos_u = 0.0;
  for (int t = 0; t < config.max_iters; ++t) {
    const SeStepResult step = se_step(mu, sigma, config, mix);
    const double cos_v = step.mu_next / (config.lambda * step.sigma_next);
    const double cos_u =
        step.mu_bar / (std::sqrt(config.alpha) * config.lambda * step.sigma_bar);
    const double delta =
        std::max(std::abs(step.mu_next - mu), std::abs(step.sigma_next - sigma));
    trace.rows.push_back({t, mu, sigma, step.mu_bar, step.sigma_bar, cos_v, cos_u,
                          step.tau, delta});

    const double angular =
        std::max(std::abs(cos_v - prev_cos_v), std::abs(cos_u - prev_cos_u));
    if (delta < 1e-8 || (t > 0 && angular < 1e-10)) {
      trace.converged = true;
      trace.mu_star = step.mu_next;
      trace.sigma_star = step.sigma_next;
      trace.mu_bar_star = step.mu_bar;
      trace.sigma_bar_star = step.sigma_bar;
      break;
    }
    prev_cos_v = cos_v;
    prev_cos_u = cos_u;
    mu = step.mu_next;
    sigma = step.sigma_next;
  }
  if (!trace.converged) {
    trace.warnings.push_back("state evolution did not reach its fixed point in " +
                             std::to_string(config.max_iters) + " iterations");
    trace.mu_star = mu;
    trace.sigma_star = sigma;
    trace.mu_bar_star = trace.rows.back().mu_bar;
    trace.sigma_bar_star = trace.rows.back().sigma_bar;
  }
  trace.cos_v_star = trace.rows.back().cos_v;
  trace.cos_u_star = trace.rows.back().cos_u;

  // Residual of the 4-equation fixed-point system at the declared point.
  const SeStepResult at_star = se_step(trace.mu_star, trace.sigma_star, config, mix);
  const double r1 = std::abs(at_star.mu_bar - trace.mu_bar_star);
  const double r2 = std::abs(at_star.sigma_bar - trace.sigma_bar_star);
  const double r3 = std::abs(config.lambda * trace.mu_bar_star - trace.mu_star);
  const double r4 = std::abs(std::sqrt(trace.mu_bar_star * trace.mu_bar_star +
                                       trace.sigma_bar_star * trace.sigma_bar_star) -
                             trace.sigma_star);
  trace.residual = std::max(std::max(r1, r2), std::max(r3, r4));
  return trace;
}

std::pair<double, double> se_moments_mc(double mu, double sigma, double tau,
                                        double omega, int samples, std::uint64_t seed) {
  if (!(omega > 0.0 && omega < 1.0)) throw InputError("omega must be in (0, 1)");
  const double c = std::sqrt(3.0 / omega);
  Rng rng(seed);
  double sum_ug = 0.0, sum_g2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double U = rng.uniform01() < omega ? rng.uniform(0, c) : 0.0;
    const double x = mu * U + sigma * rng.normal();
    const double shrunk = std::abs(x) - tau;
    const double g = shrunk > 0 ? (x > 0 ? shrunk : -shrunk) : 0.0;
    sum_ug += U * g;
    sum_g2 += g * g;
  }
  return {sum_ug / samples, sum_g2 / samples};
}

}  // namespace uagg

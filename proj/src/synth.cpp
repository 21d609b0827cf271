#include "uagg/synth.hpp"

#include <cmath>

#include "uagg/rng.hpp"

namespace uagg {

namespace {

Law resolve(const Law& override_law, const Law& fallback) {
  return override_law.name.empty() ? fallback : override_law;
}

void check_law(const Law& law) {
  if (law.name != "uniform" && law.name != "constant" && law.name != "lognormal")
    throw InputError("unknown distribution descriptor: '" + law.name + "'");
  if (law.name == "uniform" && !(law.p1 < law.p2))
    throw InputError("uniform law needs lo < hi");
  if (law.name == "lognormal" && !(law.p2 > 0))
    throw InputError("lognormal law needs positive sigma");
}

VectorXd draw(const Law& law, int n, Rng& rng) {
  if (law.name == "constant") return VectorXd::Constant(n, law.p1);
  if (law.name == "uniform") return rng.uniform_vec(n, law.p1, law.p2);
  VectorXd out(n);  // lognormal
  for (int i = 0; i < n; ++i) out[i] = std::exp(law.p1 + law.p2 * rng.normal());
  return out;
}

}  // namespace

void SynthConfig::validate() const {
  if (n < 2 || d < 2) throw InputError("synth config needs n >= 2 and d >= 2");
  if (!(omega > 0.0 && omega < 1.0)) throw InputError("omega must be in (0, 1)");
  if (static_cast<int>(std::ceil(omega * d)) < 1)
    throw InputError("omega * d rounds to zero informative models");
  if (target_lambda < 0) throw InputError("target lambda must be nonnegative");
  check_law(resolve(v_law, Law::uniform(-1, 1)));
  const Law def_noise = regime == NoiseRegime::heteroskedastic ? Law::uniform(0, 2)
                                                               : Law::constant(1);
  check_law(resolve(sigma_law, def_noise));
  check_law(resolve(f_law, def_noise));
  check_law(resolve(c_law, Law::constant(1)));
}

std::vector<int> GroundTruth::support() const {
  std::vector<int> idx;
  for (int i = 0; i < u.size(); ++i)
    if (u[i] != 0.0) idx.push_back(i);
  return idx;
}

std::pair<PredictionMatrix, GroundTruth> generate(const SynthConfig& config) {
  config.validate();
  const int n = config.n;
  const int d = config.d;
  Rng rng(config.seed);

  GroundTruth t;
  t.v = draw(resolve(config.v_law, Law::uniform(-1, 1)), n, rng);
  if (config.target_lambda > 0) t.v *= config.target_lambda / t.v.norm();

  t.s = static_cast<int>(std::ceil(config.omega * d));
  const std::vector<int> support = rng.sample_indices(d, t.s);
  const double magnitude = std::sqrt((static_cast<double>(d) / n) / t.s);
  t.u = VectorXd::Zero(d);
  for (int i : support) t.u[i] = magnitude;

  const Law def_noise = config.regime == NoiseRegime::heteroskedastic
                            ? Law::uniform(0, 2)
                            : Law::constant(1);
  t.sigma = draw(resolve(config.sigma_law, def_noise), d, rng);
  t.f = draw(resolve(config.f_law, def_noise), n, rng);
  t.c = draw(resolve(config.c_law, Law::constant(1)), d, rng);
  if ((t.sigma.array() < 0).any()) throw InputError("sigma law produced negative values");
  if ((t.f.array() <= 0).any() || (t.c.array() <= 0).any())
    throw InputError("f and c laws must produce strictly positive values");

  PredictionMatrix Y;
  Y.values.resize(d, n);
  const VectorXd sqrt_f = t.f.array().sqrt();
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) {
      const double w_ij = rng.normal() * inv_sqrt_n;
      Y.values(i, j) = t.c[i] * (t.u[i] * t.v[j] + t.sigma[i] * sqrt_f[j] * w_ij);
    }

  Y.model_ids.reserve(d);
  for (int i = 0; i < d; ++i) Y.model_ids.push_back("m" + std::to_string(i + 1));
  Y.sample_ids.reserve(n);
  for (int j = 0; j < n; ++j) Y.sample_ids.push_back("s" + std::to_string(j + 1));
  return {std::move(Y), std::move(t)};
}

WhitenedInstance generate_whitened(int n, int d, double lambda, double omega,
                                   std::uint64_t seed) {
  if (n < 2 || d < 2) throw InputError("whitened instance needs n >= 2 and d >= 2");
  if (!(omega > 0.0 && omega < 1.0)) throw InputError("omega must be in (0, 1)");
  Rng rng(seed);
  const double c = std::sqrt(3.0 / omega);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

  WhitenedInstance inst;
  inst.u_t.resize(d);
  for (int i = 0; i < d; ++i) {
    const bool on = rng.uniform01() < omega;
    inst.u_t[i] = on ? rng.uniform(0, c) * inv_sqrt_n : 0.0;
  }
  inst.v_t.resize(n);
  const double b = std::sqrt(3.0);
  for (int j = 0; j < n; ++j) inst.v_t[j] = lambda * rng.uniform(-b, b) * inv_sqrt_n;

  inst.Y.resize(d, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j)
      inst.Y(i, j) = inst.u_t[i] * inst.v_t[j] + rng.normal() * inv_sqrt_n;
  return inst;
}

}  // namespace uagg

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace uagg {

// mt19937_64 with explicit uniform/normal transforms. The engine's word
// stream is fixed by the standard; std::*_distribution output is not, so
// the transforms are spelled out here to keep seeded runs byte-stable
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller; consumes two uniforms per pair, caches the spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd uniform_vec(int n, double a, double b) {
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) out[i] = uniform(a, b);
    return out;
  }

  Eigen::VectorXd normal_vec(int n) {
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) out[i] = normal();
    return out;
  }

  // Integer in [0, bound]; bound + 1 <= 2^53 assumed.
  int below(int bound) {
    const int v = static_cast<int>(uniform01() * (bound + 1));
    return v > bound ? bound : v;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i)]);
    return p;
  }

  // k distinct indices from [0, n), ascending.
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> p = permutation(n);
    p.resize(k);
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace uagg

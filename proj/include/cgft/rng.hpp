#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cgft/measures.hpp"

namespace cgft {

// Seedable generator for the randomized property suites. Uniform and normal
// draws are derived from the raw 64-bit stream directly so that reports are
// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % n);
  }

  double normal() {
    // Box-Muller; u kept away from 0.
    double u = 0.0;
    do {
      u = uniform01();
    } while (u <= 1e-300);
    double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  Vector point(int dim, double lo, double hi) {
    Vector p(dim);
    for (int k = 0; k < dim; ++k) p[k] = uniform(lo, hi);
    return p;
  }

  /// Exp(1)-weighted density normalized against the node weights.
  std::vector<double> density(const NodeSet& nodes) {
    std::vector<double> d(nodes.size());
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = -std::log(1.0 - uniform01() + 1e-300);
      total += nodes.weight(i) * d[i];
    }
    for (double& v : d) v /= total;
    return d;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cgft

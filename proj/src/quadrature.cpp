#include "fermisea/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fermisea {

QuadratureRule gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points must be >= 1");
  const int n = points;
  QuadratureRule rule;
  rule.node.resize(static_cast<std::size_t>(n));
  rule.weight.resize(static_cast<std::size_t>(n));

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const std::size_t lo = static_cast<std::size_t>(i);
    const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
    rule.node[lo] = -x;
    rule.node[hi] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[lo] = w;
    rule.weight[hi] = w;
  }
  return rule;
}

const QuadratureRule& gauss_legendre_cached(int points) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(points);
  if (it == cache.end()) {
    it = cache.emplace(points, std::make_unique<const QuadratureRule>(gauss_legendre(points)))
             .first;
  }
  return *it->second;
}

}  // namespace fermisea

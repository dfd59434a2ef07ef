#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fermisea/special.hpp"

namespace fermisea {

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> node;
  std::vector<double> weight;
};

QuadratureRule gauss_legendre(int points);

/// Memoized rule lookup; the returned reference stays valid for the process
/// lifetime and the cache is safe to hit from several threads.
const QuadratureRule& gauss_legendre_cached(int points);

// Uniform solid-angle average of an azimuthally symmetric f(theta):
//   (1/2) int_0^pi f(theta) sin(theta) dtheta
// evaluated by Gauss-Legendre in cos(theta).
template <class F>
double average_over_directions(F&& f, int points = 256) {
  const QuadratureRule& rule = gauss_legendre_cached(points);
  KahanSum acc;
  for (std::size_t i = 0; i < rule.node.size(); ++i) {
    acc.add(rule.weight[i] * f(std::acos(rule.node[i])));
  }
  return 0.5 * acc.value();
}

}  // namespace fermisea

#pragma once

#include <cmath>

namespace fermisea {

// Neumaier-compensated accumulator. All series in this library are summed
// through it so that results are reproducible to ~1 ulp regardless of how
// many terms contribute.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const noexcept { return sum + comp; }
};

/// ln(n!). Exact-factorial table for n <= 20, lgamma above.
double log_factorial(int n);

/// Poisson probability e^{-mu} mu^k / k!, evaluated in log space with
/// saddle-point corrections so the result stays accurate for k, mu up to 1e4.
/// Underflow returns 0.
double poisson_pmf(int k, double mu);

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s) for
// integer shape s >= 0, through the finite Poisson-sum identity
//   P(s, x) = 1 - sum_{k=0}^{s-1} e^{-x} x^k / k! = sum_{k>=s} e^{-x} x^k / k!.
// Whichever of the two Poisson masses is smaller is summed directly, largest
// term first, so the relative error stays <= 1e-12 for s, x <= 1e4.
// Convention: P(0, x) = 1 for all x >= 0.
double regularized_gamma_p(int shape, double x);

/// Smallest K with sum_{k>K} Poisson(k; mu) < eps. K never exceeds
/// ceil(mu + 20 sqrt(mu+1) + 50).
int poisson_tail_cutoff(double mu, double eps);

// A single-axis recoil kernel: the probability of depositing k quanta into
// one oscillator axis is Poisson with mean mu.
struct PoissonKernel {
  double mu;

  explicit PoissonKernel(double mean);

  double pmf(int k) const { return poisson_pmf(k, mu); }
  int tail_cutoff(double eps) const { return poisson_tail_cutoff(mu, eps); }
};

}  // namespace fermisea

#include "fermisea/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermisea {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// stirlerr(n) = ln n! - [(n + 1/2) ln n - n + ln sqrt(2 pi)].
// Direct evaluation below n = 16, asymptotic series above; the series
// truncation is below 1e-16 absolute there.
double stirlerr(int n) {
  static constexpr double s0 = 1.0 / 12.0;
  static constexpr double s1 = 1.0 / 360.0;
  static constexpr double s2 = 1.0 / 1260.0;
  static constexpr double s3 = 1.0 / 1680.0;
  static constexpr double s4 = 1.0 / 1188.0;
  const double nn = static_cast<double>(n);
  if (n > 15) {
    const double inv2 = 1.0 / (nn * nn);
    return (s0 - (s1 - (s2 - (s3 - s4 * inv2) * inv2) * inv2) * inv2) / nn;
  }
  return log_factorial(n) - ((nn + 0.5) * std::log(nn) - nn + kLogSqrt2Pi);
}

// Poisson deviance k ln(k/x) + x - k without cancellation near k = x.
double bd0(double k, double x) {
  if (std::abs(k - x) < 0.1 * (k + x)) {
    const double v = (k - x) / (k + x);
    double s = (k - x) * v;
    double ej = 2.0 * k * v * v * v;
    const double v2 = v * v;
    for (int j = 1;; ++j) {
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
      ej *= v2;
    }
  }
  return k * std::log(k / x) + x - k;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: n must be >= 0");
  // Factorials through 20! are exact in 64-bit; take the log of the exact
  // value so the table is correct to the last ulp.
  static const std::array<double, 21> table = [] {
    std::array<double, 21> t{};
    long double f = 1.0L;
    t[0] = 0.0;
    for (int i = 1; i <= 20; ++i) {
      f *= static_cast<long double>(i);
      t[static_cast<std::size_t>(i)] = static_cast<double>(std::log(f));
    }
    return t;
  }();
  if (n <= 20) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double poisson_pmf(int k, double mu) {
  if (k < 0) throw std::invalid_argument("poisson_pmf: k must be >= 0");
  if (!(mu >= 0.0)) throw std::invalid_argument("poisson_pmf: mu must be >= 0");
  if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return std::exp(-mu);
  const double kk = static_cast<double>(k);
  const double lp = -stirlerr(k) - bd0(kk, mu) - 0.5 * std::log(2.0 * std::numbers::pi * kk);
  const double p = std::exp(lp);
  return p < 1.0 ? p : 1.0;
}

double regularized_gamma_p(int shape, double x) {
  if (shape < 0) throw std::invalid_argument("regularized_gamma_p: shape must be >= 0");
  if (!(x >= 0.0)) throw std::invalid_argument("regularized_gamma_p: x must be >= 0");
  if (shape == 0) return 1.0;  // empty-trap convention
  if (x == 0.0) return 0.0;

  const double s = static_cast<double>(shape);
  if (s - 1.0 >= x) {
    // Upper Poisson mass sum_{k>=s} is the smaller side; its terms decrease
    // from k = s on, so summing upward is largest-term-first.
    double term = poisson_pmf(shape, x);
    KahanSum acc;
    acc.add(term);
    for (int k = shape + 1;; ++k) {
      term *= x / static_cast<double>(k);
      acc.add(term);
      if (term == 0.0 || term < acc.value() * 1e-17) break;
    }
    const double p = acc.value();
    return p < 1.0 ? p : 1.0;
  }

  // Head mass sum_{k<=s-1}: the dominant term sits at k = s-1 because the
  // Poisson mode floor(x) lies at or above it. Walk downward.
  double term = poisson_pmf(shape - 1, x);
  KahanSum acc;
  acc.add(term);
  for (int k = shape - 1; k >= 1; --k) {
    term *= static_cast<double>(k) / x;
    acc.add(term);
    if (term == 0.0 || term < acc.value() * 1e-17) break;
  }
  const double p = 1.0 - acc.value();
  if (p < 0.0) return 0.0;
  return p < 1.0 ? p : 1.0;
}

int poisson_tail_cutoff(double mu, double eps) {
  if (!(mu >= 0.0)) throw std::invalid_argument("poisson_tail_cutoff: mu must be >= 0");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("poisson_tail_cutoff: eps must be in (0, 1)");
  }
  const int bound = static_cast<int>(std::ceil(mu + 20.0 * std::sqrt(mu + 1.0) + 50.0));
  double term = std::exp(-mu);
  KahanSum acc;
  acc.add(term);
  for (int k = 0; k < bound; ++k) {
    if (1.0 - acc.value() < eps) return k;
    term *= mu / static_cast<double>(k + 1);
    acc.add(term);
  }
  return bound;
}

PoissonKernel::PoissonKernel(double mean) : mu(mean) {
  if (!(mu >= 0.0)) throw std::invalid_argument("PoissonKernel: mean must be >= 0");
}

}  // namespace fermisea

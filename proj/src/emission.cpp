#include "fermisea/emission.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermisea/errors.hpp"
#include "fermisea/quadrature.hpp"
#include "fermisea/special.hpp"

namespace fermisea {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBruteforceAxisEps = 1e-13;
constexpr int kBruteforceAxisGuard = 1200;

double clamp_unit(double v) {
  if (v < 0.0) return 0.0;
  return v < 1.0 ? v : 1.0;
}

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
}

}  // namespace

EmissionProblem::EmissionProblem(TrapGeometry geometry, FermiSea fermi_sea, double eta_squared)
    : geom(geometry), sea(fermi_sea), eta2(eta_squared) {
  if (!(eta2 >= 0.0)) throw std::invalid_argument("EmissionProblem: eta2 must be >= 0");
}

AlphaBeta alpha_beta(const EmissionProblem& problem, double theta) {
  require_theta(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double c2 = c * c;
  const double s2 = s * s;
  if (problem.geom.shape == Shape::Pancake) {
    return {problem.eta2 * c2, problem.eta2 * s2};
  }
  return {problem.eta2 * s2, problem.eta2 * c2};
}

double modification_factor(const EmissionProblem& problem, double theta) {
  require_theta(theta);
  const int fermi = problem.sea.shell;
  if (fermi < 0) return 1.0;

  const auto [alpha, beta] = alpha_beta(problem, theta);
  const int lambda = problem.geom.aspect_ratio;
  const double tight_arg = alpha / lambda;
  const int tilde = fermi / lambda;

  // P(s, alpha/lambda) is needed for s = 1 .. tilde+1; each value is hit
  // lambda times as n varies, so tabulate once.
  std::vector<double> gamma_table(static_cast<std::size_t>(tilde) + 2);
  for (int s = 0; s <= tilde + 1; ++s) {
    gamma_table[static_cast<std::size_t>(s)] = regularized_gamma_p(s, tight_arg);
  }

  KahanSum acc;
  acc.add(regularized_gamma_p(fermi + 1, beta));
  for (int n = 0; n <= fermi; ++n) {
    const int s = (fermi - n) / lambda + 1;
    acc.add(poisson_pmf(n, beta) * gamma_table[static_cast<std::size_t>(s)]);
  }
  return clamp_unit(acc.value());
}

double modification_factor_bruteforce(const EmissionProblem& problem, double theta, double phi) {
  const RecoilCoupling coupling(problem.geom, problem.eta2);
  const PhotonDirection dir(theta, phi);
  const AxisMeans mu = axis_poisson_parameters(coupling, dir);

  const int kx = poisson_tail_cutoff(mu.x, kBruteforceAxisEps);
  const int ky = poisson_tail_cutoff(mu.y, kBruteforceAxisEps);
  const int kz = poisson_tail_cutoff(mu.z, kBruteforceAxisEps);
  if (kx > kBruteforceAxisGuard || ky > kBruteforceAxisGuard || kz > kBruteforceAxisGuard) {
    throw guard_error("modification_factor_bruteforce: truncation box exceeds guard");
  }

  const auto table = [](int count, double mean) {
    std::vector<double> t(static_cast<std::size_t>(count) + 1);
    for (int k = 0; k <= count; ++k) t[static_cast<std::size_t>(k)] = poisson_pmf(k, mean);
    return t;
  };
  const std::vector<double> px = table(kx, mu.x);
  const std::vector<double> py = table(ky, mu.y);
  const std::vector<double> pz = table(kz, mu.z);

  const int fermi = problem.sea.shell;
  KahanSum acc;
  for (int nz = 0; nz <= kz; ++nz) {
    for (int ny = 0; ny <= ky; ++ny) {
      const double pyz = py[static_cast<std::size_t>(ny)] * pz[static_cast<std::size_t>(nz)];
      for (int nx = 0; nx <= kx; ++nx) {
        if (shell_index(problem.geom, {nx, ny, nz}) > fermi) {
          acc.add(px[static_cast<std::size_t>(nx)] * pyz);
        }
      }
    }
  }
  return clamp_unit(acc.value());
}

double tight_axis_factor(const EmissionProblem& problem) {
  const int fermi = problem.sea.shell;
  if (fermi < 0) return 1.0;
  const int lambda = problem.geom.aspect_ratio;
  const int tilde = fermi / lambda;
  return regularized_gamma_p(tilde + 1, problem.eta2 / lambda);
}

double tight_axis_factor_continuous(double lambda, double eta2, int fermi_shell) {
  if (!(lambda > 0.0)) throw std::invalid_argument("tight_axis_factor_continuous: lambda must be > 0");
  if (!(eta2 >= 0.0)) throw std::invalid_argument("tight_axis_factor_continuous: eta2 must be >= 0");
  if (fermi_shell < -1) {
    throw std::invalid_argument("tight_axis_factor_continuous: fermi_shell must be >= -1");
  }
  if (fermi_shell < 0) return 1.0;
  const int tilde = static_cast<int>(std::floor(fermi_shell / lambda));
  return regularized_gamma_p(tilde + 1, eta2 / lambda);
}

double soft_axis_factor(const EmissionProblem& problem) {
  const int fermi = problem.sea.shell;
  if (fermi < 0) return 1.0;
  return regularized_gamma_p(fermi + 1, problem.eta2);
}

double partial_wave_factor(const EmissionProblem& problem, double theta, int tight_level,
                           PartialWaveForm form) {
  require_theta(theta);
  if (tight_level < 0) throw std::invalid_argument("partial_wave_factor: tight_level must be >= 0");
  const auto [alpha, beta] = alpha_beta(problem, theta);
  const int lambda = problem.geom.aspect_ratio;
  const double tight_arg = alpha / lambda;
  const int fermi = problem.sea.shell;

  const long long remaining = static_cast<long long>(fermi) -
                              static_cast<long long>(lambda) * tight_level + 1;
  const int s = remaining > 0 ? static_cast<int>(remaining) : 0;
  const double blocked_escape = regularized_gamma_p(s, beta);

  double weight;
  if (form == PartialWaveForm::PoissonConsistent) {
    weight = poisson_pmf(tight_level, tight_arg);
  } else {
    // Literal power term (eta2/lambda)^{n_t}; identical on the tight axis
    // where alpha = eta2, not elsewhere.
    const double base = problem.eta2 / lambda;
    if (base == 0.0) {
      weight = tight_level == 0 ? std::exp(-tight_arg) : 0.0;
    } else {
      weight = std::exp(-tight_arg + tight_level * std::log(base) - log_factorial(tight_level));
    }
  }
  return weight * blocked_escape;
}

double limit_factor(const EmissionProblem& problem, double theta) {
  require_theta(theta);
  const int fermi = problem.sea.shell;
  if (fermi < 0) return 1.0;
  const auto [alpha, beta] = alpha_beta(problem, theta);
  (void)alpha;
  return regularized_gamma_p(fermi + 1, beta);
}

double angle_averaged_factor(const EmissionProblem& problem, int quad_points) {
  return average_over_directions(
      [&](double theta) { return modification_factor(problem, theta); }, quad_points);
}

AngularPattern sample_pattern(const EmissionProblem& problem, int theta_count,
                              PatternVariant variant) {
  if (theta_count < 2) throw std::invalid_argument("sample_pattern: need at least 2 samples");

  const auto evaluate = [&](double theta) {
    switch (variant.kind) {
      case PatternVariant::Kind::Limit:
        return limit_factor(problem, theta);
      case PatternVariant::Kind::PartialWave:
        return partial_wave_factor(problem, theta, variant.tight_level);
      case PatternVariant::Kind::Full:
      default:
        return modification_factor(problem, theta);
    }
  };

  AngularPattern pattern{problem, variant, {}, {}};
  const std::size_t count = static_cast<std::size_t>(theta_count);
  pattern.theta.resize(count);
  pattern.value.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    pattern.theta[i] = (kPi * static_cast<double>(i)) / (count - 1);
  }
  // The pattern depends on the direction only through sin^2/cos^2, so it is
  // mirror symmetric about pi/2; compute the first half and reflect.
  for (std::size_t i = 0; 2 * i <= count - 1; ++i) {
    const double v = evaluate(pattern.theta[i]);
    pattern.value[i] = v;
    pattern.value[count - 1 - i] = v;
  }
  return pattern;
}

int count_interior_maxima(const AngularPattern& pattern) {
  if (pattern.theta.size() < 360) {
    throw std::invalid_argument("count_interior_maxima: need at least 360 samples over [0, pi]");
  }
  if (pattern.theta.size() != pattern.value.size()) {
    throw std::invalid_argument("count_interior_maxima: grid and values differ in length");
  }
  constexpr double kPlateauTol = 1e-12;
  const double half = kPi / 2.0 + 1e-14;

  // Walk the half-arc [0, pi/2]; a maximum is a significant rise followed by
  // a significant fall, with any flat stretch in between counting once.
  std::size_t last = 0;
  while (last + 1 < pattern.theta.size() && pattern.theta[last + 1] <= half) ++last;

  int count = 0;
  int trend = 0;  // sign of the last significant step
  for (std::size_t i = 1; i <= last; ++i) {
    const double step = pattern.value[i] - pattern.value[i - 1];
    if (step > kPlateauTol) {
      trend = 1;
    } else if (step < -kPlateauTol) {
      if (trend == 1) ++count;
      trend = -1;
    }
  }
  return count;
}

}  // namespace fermisea

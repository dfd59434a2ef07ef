#pragma once

#include <vector>

#include "fermisea/recoil.hpp"
#include "fermisea/trap.hpp"

namespace fermisea {

// Everything needed to evaluate the direction-resolved decay-rate
// modification M_f(theta) = Gamma(theta) / Gamma_0(theta).
struct EmissionProblem {
  TrapGeometry geom;
  FermiSea sea;
  double eta2;

  EmissionProblem(TrapGeometry geometry, FermiSea fermi_sea, double eta_squared);
};

struct AlphaBeta {
  double alpha = 0.0;  // squared recoil component along the tight direction(s)
  double beta = 0.0;   // squared recoil component along the soft direction(s)
};

/// alpha = eta2 cos^2(theta), beta = eta2 sin^2(theta) for pancake traps;
/// swapped for cigar traps.
AlphaBeta alpha_beta(const EmissionProblem& problem, double theta);

// Closed-form modification factor
//   M_f = P(n_F+1, beta)
//       + sum_{n=0}^{n_F} e^{-beta} beta^n/n! * P(floor((n_F-n)/lambda)+1, alpha/lambda)
// with P the regularized incomplete gamma. The empty trap (n_F = -1)
// evaluates to exactly 1 through the P(0, .) = 1 convention.
double modification_factor(const EmissionProblem& problem, double theta);

/// Golden-rule sum over final states with shell index above the Fermi shell,
/// truncated by per-axis Poisson tail cutoffs at 1e-13. Independent oracle
/// for modification_factor; also exposes the phi dependence (none) directly.
double modification_factor_bruteforce(const EmissionProblem& problem, double theta, double phi);

/// M_f along the tight principal axis: P(floor(n_F/lambda)+1, eta2/lambda).
double tight_axis_factor(const EmissionProblem& problem);

/// Same closed form continued to a real-valued aspect ratio; this is the
/// quantity swept in the sawtooth plots.
double tight_axis_factor_continuous(double lambda, double eta2, int fermi_shell);

/// M_f along the soft principal axis: P(n_F+1, eta2). Independent of lambda.
double soft_axis_factor(const EmissionProblem& problem);

// Two forms of the fixed-tight-excitation decomposition M_f(theta, n_t).
// PoissonConsistent uses (alpha/lambda)^{n_t} in the power term, which makes
// the n_t sum reproduce modification_factor identically. PaperLiteral uses
// (eta2/lambda)^{n_t}; the two coincide on the tight axis only.
enum class PartialWaveForm { PoissonConsistent, PaperLiteral };

double partial_wave_factor(const EmissionProblem& problem, double theta, int tight_level,
                           PartialWaveForm form = PartialWaveForm::PoissonConsistent);

/// Infinite-anisotropy limit: M_f = P(n_F+1, beta). Vanishes on the tight
/// axis for any occupied sea.
double limit_factor(const EmissionProblem& problem, double theta);

/// Uniform solid-angle average of modification_factor.
double angle_averaged_factor(const EmissionProblem& problem, int quad_points = 256);

struct PatternVariant {
  enum class Kind { Full, Limit, PartialWave };
  Kind kind = Kind::Full;
  int tight_level = 0;

  static PatternVariant full() { return {Kind::Full, 0}; }
  static PatternVariant limit() { return {Kind::Limit, 0}; }
  static PatternVariant partial_wave(int tight_level) {
    return {Kind::PartialWave, tight_level};
  }
};

// A sampled M_f(theta) curve on a uniform grid over [0, pi]. Values are
// computed on [0, pi/2] and mirrored, so the grid is symmetric exactly.
struct AngularPattern {
  EmissionProblem problem;
  PatternVariant variant;
  std::vector<double> theta;  // radians
  std::vector<double> value;
};

AngularPattern sample_pattern(const EmissionProblem& problem, int theta_count,
                              PatternVariant variant = PatternVariant::full());

/// Number of strict local maxima of the pattern strictly between theta = 0
/// and theta = pi/2, with plateaus (flat to 1e-12) counted once. Requires a
/// grid of at least 360 points.
int count_interior_maxima(const AngularPattern& pattern);

}  // namespace fermisea

#pragma once

#include <vector>

#include "fermisea/trap.hpp"

namespace fermisea {

// Recoil coupling of the emitting atom to the trap: eta2 is the squared
// Lamb-Dicke parameter E_R / (hbar omega) referred to the soft frequency.
struct RecoilCoupling {
  TrapGeometry geom;
  double eta2;

  RecoilCoupling(TrapGeometry geometry, double eta_squared);
};

// Photon direction; theta is the polar angle from the z axis, phi the
// azimuth. All emission sums are independent of phi by symmetry.
struct PhotonDirection {
  double theta = 0.0;
  double phi = 0.0;

  PhotonDirection() = default;
  PhotonDirection(double polar, double azimuth);
};

struct AxisMeans {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Per-axis Poisson parameters mu_i = eta2 u_i^2 / lambda_i for the recoil
// kick along direction u. For a pancake trap mu_x + mu_y = beta and
// mu_z = alpha / lambda; the cigar assignments are swapped.
AxisMeans axis_poisson_parameters(const RecoilCoupling& coupling, const PhotonDirection& dir);

/// Squared overlap |<n| e^{-i k r} |0>|^2 for one final state: a product of
/// per-axis Poisson factors.
double state_emission_probability(const RecoilCoupling& coupling, const PhotonDirection& dir,
                                  const OscillatorState& state);

/// Full solid-angle average of state_emission_probability.
double state_emission_probability_averaged(const RecoilCoupling& coupling,
                                           const OscillatorState& state, int quad_points = 256);

// Emission probability into shell n for a fixed photon direction. The two
// equal-frequency axes collapse into a single Poisson factor, leaving a
// finite sum over the tight quantum number.
double shell_emission_probability_at(const RecoilCoupling& coupling, const PhotonDirection& dir,
                                     int shell);

/// Uniform solid-angle average of shell_emission_probability_at.
double shell_emission_probability(const RecoilCoupling& coupling, int shell,
                                  int quad_points = 256);

// Angle-averaged emission probabilities for all shells up to a tail cutoff
// chosen so the omitted mass is below coverage_eps at every angle.
struct ShellSpectrum {
  TrapGeometry geom;
  double eta2;
  std::vector<double> probabilities;  // indexed by shell
  double total = 0.0;
};

ShellSpectrum shell_spectrum(const RecoilCoupling& coupling, double coverage_eps = 1e-12,
                             int quad_points = 256);

}  // namespace fermisea

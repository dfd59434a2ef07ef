#include "fermisea/recoil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermisea/quadrature.hpp"
#include "fermisea/special.hpp"

namespace fermisea {

namespace {

constexpr double kPi = std::numbers::pi;

// Collapsed Poisson parameters: the tight direction(s) and the soft
// direction(s) of the trap each contribute one effective mean.
struct CollapsedMeans {
  double tight = 0.0;
  double soft = 0.0;
};

CollapsedMeans collapse(const RecoilCoupling& coupling, const PhotonDirection& dir) {
  const AxisMeans mu = axis_poisson_parameters(coupling, dir);
  if (coupling.geom.shape == Shape::Pancake) {
    return {mu.z, mu.x + mu.y};
  }
  return {mu.x + mu.y, mu.z};
}

}  // namespace

RecoilCoupling::RecoilCoupling(TrapGeometry geometry, double eta_squared)
    : geom(geometry), eta2(eta_squared) {
  if (!(eta2 >= 0.0)) throw std::invalid_argument("RecoilCoupling: eta2 must be >= 0");
}

PhotonDirection::PhotonDirection(double polar, double azimuth) : theta(polar), phi(azimuth) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("PhotonDirection: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::invalid_argument("PhotonDirection: phi must lie in [0, 2 pi)");
  }
}

AxisMeans axis_poisson_parameters(const RecoilCoupling& coupling, const PhotonDirection& dir) {
  const double st = std::sin(dir.theta);
  const double ct = std::cos(dir.theta);
  const double cp = std::cos(dir.phi);
  const double sp = std::sin(dir.phi);
  const double ux2 = st * st * cp * cp;
  const double uy2 = st * st * sp * sp;
  const double uz2 = ct * ct;
  const double lambda = coupling.geom.aspect_ratio;
  if (coupling.geom.shape == Shape::Pancake) {
    return {coupling.eta2 * ux2, coupling.eta2 * uy2, coupling.eta2 * uz2 / lambda};
  }
  return {coupling.eta2 * ux2 / lambda, coupling.eta2 * uy2 / lambda, coupling.eta2 * uz2};
}

double state_emission_probability(const RecoilCoupling& coupling, const PhotonDirection& dir,
                                  const OscillatorState& state) {
  if (state.nx < 0 || state.ny < 0 || state.nz < 0) {
    throw std::invalid_argument("state_emission_probability: quantum numbers must be >= 0");
  }
  const AxisMeans mu = axis_poisson_parameters(coupling, dir);
  return poisson_pmf(state.nx, mu.x) * poisson_pmf(state.ny, mu.y) *
         poisson_pmf(state.nz, mu.z);
}

double state_emission_probability_averaged(const RecoilCoupling& coupling,
                                           const OscillatorState& state, int quad_points) {
  // Average over the azimuth by periodic trapezoid (spectrally accurate for
  // the smooth integrand), then over cos(theta) by Gauss-Legendre.
  const int phi_points = 64;
  return average_over_directions(
      [&](double theta) {
        KahanSum ring;
        for (int j = 0; j < phi_points; ++j) {
          const double phi = (2.0 * kPi * j) / phi_points;
          ring.add(state_emission_probability(coupling, PhotonDirection(theta, phi), state));
        }
        return ring.value() / phi_points;
      },
      quad_points);
}

double shell_emission_probability_at(const RecoilCoupling& coupling, const PhotonDirection& dir,
                                     int shell) {
  if (shell < 0) throw std::invalid_argument("shell_emission_probability_at: shell must be >= 0");
  const CollapsedMeans mu = collapse(coupling, dir);
  const int lambda = coupling.geom.aspect_ratio;
  KahanSum acc;
  for (int t = 0; lambda * t <= shell; ++t) {
    acc.add(poisson_pmf(t, mu.tight) * poisson_pmf(shell - lambda * t, mu.soft));
  }
  const double p = acc.value();
  return p < 1.0 ? (p > 0.0 ? p : 0.0) : 1.0;
}

double shell_emission_probability(const RecoilCoupling& coupling, int shell, int quad_points) {
  return average_over_directions(
      [&](double theta) {
        return shell_emission_probability_at(coupling, PhotonDirection(theta, 0.0), shell);
      },
      quad_points);
}

ShellSpectrum shell_spectrum(const RecoilCoupling& coupling, double coverage_eps,
                             int quad_points) {
  if (!(coverage_eps > 0.0 && coverage_eps < 1.0)) {
    throw std::invalid_argument("shell_spectrum: coverage_eps must be in (0, 1)");
  }
  const int lambda = coupling.geom.aspect_ratio;
  // Worst-case collapsed means over all angles are eta2/lambda (tight) and
  // eta2 (soft); a shell range covering both tails bounds the omitted mass
  // by the union of the two tail masses.
  const int tight_max = poisson_tail_cutoff(coupling.eta2 / lambda, coverage_eps / 2.0);
  const int soft_max = poisson_tail_cutoff(coupling.eta2, coverage_eps / 2.0);
  const int shell_max = lambda * tight_max + soft_max;

  ShellSpectrum spectrum{coupling.geom, coupling.eta2, {}, 0.0};
  spectrum.probabilities.resize(static_cast<std::size_t>(shell_max) + 1);
  KahanSum total;
  for (int n = 0; n <= shell_max; ++n) {
    const double p = shell_emission_probability(coupling, n, quad_points);
    spectrum.probabilities[static_cast<std::size_t>(n)] = p;
    total.add(p);
  }
  spectrum.total = total.value();
  return spectrum;
}

}  // namespace fermisea

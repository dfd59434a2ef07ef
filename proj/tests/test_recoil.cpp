#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "fermisea/quadrature.hpp"
#include "fermisea/recoil.hpp"
#include "fermisea/special.hpp"

using namespace fermisea;

namespace {

constexpr double kPi = std::numbers::pi;

// |<n| e^{i kappa xi} |0>|^2 for a 1D oscillator in natural units, by Simpson
// quadrature over Hermite-function wavefunctions. Independent oracle for the
// Poisson closed form with eta2_1d = kappa^2 / 2.
double overlap_quadrature(int n, double eta2_1d) {
  const double kappa = std::sqrt(2.0 * eta2_1d);
  const double length = 12.0;
  const int intervals = 8000;  // Simpson needs an even count
  const double h = 2.0 * length / intervals;

  const auto hermite_psi = [](int level, double x) {
    double prev = 0.0;
    double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 1; k <= level; ++k) {
      const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };

  KahanSum real_part;
  KahanSum imag_part;
  for (int i = 0; i <= intervals; ++i) {
    const double x = -length + h * i;
    const double weight = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double density = hermite_psi(n, x) * hermite_psi(0, x);
    real_part.add(weight * density * std::cos(kappa * x));
    imag_part.add(weight * density * std::sin(kappa * x));
  }
  const double re = real_part.value() * h / 3.0;
  const double im = imag_part.value() * h / 3.0;
  return re * re + im * im;
}

}  // namespace

TEST_CASE("axis parameters split the recoil by direction") {
  const double eta2 = 25.0;
  SUBCASE("pancake") {
    const RecoilCoupling coupling(TrapGeometry(Shape::Pancake, 11), eta2);
    const AxisMeans along_z = axis_poisson_parameters(coupling, PhotonDirection(0.0, 0.0));
    CHECK(along_z.x == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(along_z.y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(along_z.z == doctest::Approx(eta2 / 11.0).epsilon(1e-14));

    const AxisMeans along_x = axis_poisson_parameters(coupling, PhotonDirection(kPi / 2, 0.0));
    CHECK(along_x.x == doctest::Approx(eta2).epsilon(1e-12));
    CHECK(std::abs(along_x.y) <= 1e-12);
    CHECK(std::abs(along_x.z) <= 1e-12);

    for (double phi : {0.0, 0.4, 1.9, 3.0}) {
      const AxisMeans mu = axis_poisson_parameters(coupling, PhotonDirection(kPi / 4, phi));
      CHECK(mu.x + mu.y == doctest::Approx(12.5).epsilon(1e-12));
      CHECK(mu.z == doctest::Approx(12.5 / 11.0).epsilon(1e-12));
    }
  }
  SUBCASE("cigar") {
    const RecoilCoupling coupling(TrapGeometry(Shape::Cigar, 5), eta2);
    const AxisMeans along_z = axis_poisson_parameters(coupling, PhotonDirection(0.0, 0.0));
    CHECK(along_z.z == doctest::Approx(eta2).epsilon(1e-14));
    const AxisMeans along_x = axis_poisson_parameters(coupling, PhotonDirection(kPi / 2, 0.0));
    CHECK(along_x.x == doctest::Approx(eta2 / 5.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(PhotonDirection(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PhotonDirection(0.1, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(RecoilCoupling(TrapGeometry(Shape::Pancake, 2), -1.0), std::invalid_argument);
}

TEST_CASE("ground-state emission probability") {
  // isotropic trap: exponents sum to eta2 for any direction
  const RecoilCoupling iso(TrapGeometry(Shape::Pancake, 1), 9.0);
  for (double theta : {0.0, 0.7, kPi / 2}) {
    CHECK(state_emission_probability(iso, PhotonDirection(theta, 0.9), {0, 0, 0}) ==
          doctest::Approx(std::exp(-9.0)).epsilon(1e-13));
  }
  // anisotropic trap: exponent is beta + alpha/lambda
  const RecoilCoupling coupling(TrapGeometry(Shape::Pancake, 4), 25.0);
  const PhotonDirection dir(0.6, 1.1);
  const AxisMeans mu = axis_poisson_parameters(coupling, dir);
  CHECK(state_emission_probability(coupling, dir, {0, 0, 0}) ==
        doctest::Approx(std::exp(-(mu.x + mu.y + mu.z))).epsilon(1e-13));
}

TEST_CASE("per-axis closed form matches Hermite quadrature") {
  for (double eta2_1d : {0.25, 1.0, 4.0}) {
    for (int n = 0; n <= 20; ++n) {
      const double closed = poisson_pmf(n, eta2_1d);
      const double quad = overlap_quadrature(n, eta2_1d);
      CHECK(std::abs(closed - quad) <= 1e-8);
    }
  }
}

TEST_CASE("shell sum collapses the equal-frequency pair") {
  // against direct 3D enumeration over the shell
  const RecoilCoupling coupling(TrapGeometry(Shape::Pancake, 3), 9.0);
  const PhotonDirection dir(0.8, 0.3);
  for (int shell = 0; shell <= 8; ++shell) {
    KahanSum brute;
    for (int nz = 0; 3 * nz <= shell; ++nz) {
      for (int nx = 0; nx + 3 * nz <= shell; ++nx) {
        const OscillatorState state{nx, shell - 3 * nz - nx, nz};
        brute.add(state_emission_probability(coupling, dir, state));
      }
    }
    CHECK(shell_emission_probability_at(coupling, dir, shell) ==
          doctest::Approx(brute.value()).epsilon(1e-12));
  }

  const RecoilCoupling cigar(TrapGeometry(Shape::Cigar, 2), 4.0);
  for (int shell = 0; shell <= 8; ++shell) {
    KahanSum brute;
    for (int nx = 0; 2 * nx <= shell; ++nx) {
      for (int ny = 0; 2 * (nx + ny) <= shell; ++ny) {
        const OscillatorState state{nx, ny, shell - 2 * (nx + ny)};
        brute.add(state_emission_probability(cigar, dir, state));
      }
    }
    CHECK(shell_emission_probability_at(cigar, dir, shell) ==
          doctest::Approx(brute.value()).epsilon(1e-12));
  }
}

TEST_CASE("shell distribution is complete and phi independent") {
  const struct {
    Shape shape;
    int lambda;
    double eta2;
    double theta;
  } cases[] = {
      {Shape::Pancake, 10, 36.0, 0.7},
      {Shape::Cigar, 5, 25.0, 1.1},
      {Shape::Pancake, 1, 25.0, 0.3},
  };
  for (const auto& c : cases) {
    const RecoilCoupling coupling(TrapGeometry(c.shape, c.lambda), c.eta2);
    const int tight_max = poisson_tail_cutoff(c.eta2 / c.lambda, 1e-13);
    const int soft_max = poisson_tail_cutoff(c.eta2, 1e-13);
    const int shell_max = c.lambda * tight_max + soft_max;
    KahanSum total;
    for (int n = 0; n <= shell_max; ++n) {
      total.add(shell_emission_probability_at(coupling, PhotonDirection(c.theta, 0.0), n));
    }
    CHECK(std::abs(total.value() - 1.0) <= 1e-10);

    const double reference =
        shell_emission_probability_at(coupling, PhotonDirection(c.theta, 0.0), 7);
    for (double phi : {0.3, 1.2, kPi / 2}) {
      CHECK(std::abs(shell_emission_probability_at(coupling, PhotonDirection(c.theta, phi), 7) -
                     reference) <= 1e-12);
    }
  }
}

TEST_CASE("isotropic trap emits a Poisson shell distribution") {
  const double eta2 = 25.0;
  const RecoilCoupling coupling(TrapGeometry(Shape::Pancake, 1), eta2);
  // no angular dependence: the average equals the fixed-direction value and
  // the plain Poisson weight, whatever the node count
  for (int n : {0, 10, 25, 40}) {
    const double expected = poisson_pmf(n, eta2);
    CHECK(shell_emission_probability(coupling, n, 64) ==
          doctest::Approx(expected).epsilon(1e-13));
    CHECK(shell_emission_probability(coupling, n, 256) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
  // mean of the shell distribution is eta2
  const int max_shell = poisson_tail_cutoff(eta2, 1e-13) + 20;
  KahanSum mean;
  for (int n = 0; n <= max_shell; ++n) {
    mean.add(n * shell_emission_probability_at(coupling, PhotonDirection(0.4, 0.0), n));
  }
  CHECK(std::abs(mean.value() - eta2) <= 1e-8);
}

TEST_CASE("states with ground-state excitations dominate a shell") {
  // isotropic trap, shell 5: ordering of the class probabilities
  const RecoilCoupling iso(TrapGeometry(Shape::Pancake, 1), 25.0);
  const double p500 = state_emission_probability_averaged(iso, {5, 0, 0});
  const double p410 = state_emission_probability_averaged(iso, {4, 1, 0});
  const double p320 = state_emission_probability_averaged(iso, {3, 2, 0});
  const double p311 = state_emission_probability_averaged(iso, {3, 1, 1});
  const double p221 = state_emission_probability_averaged(iso, {2, 2, 1});
  CHECK(p500 > p410);
  CHECK(p410 > p320);
  CHECK(p320 > p311);
  CHECK(p311 > p221);

  // pancake lambda=5, shell 5: the single tight-excited state dominates
  const RecoilCoupling pancake(TrapGeometry(Shape::Pancake, 5), 25.0);
  const double tight_state = state_emission_probability_averaged(pancake, {0, 0, 1});
  for (const OscillatorState state : {OscillatorState{5, 0, 0}, OscillatorState{4, 1, 0},
                                      OscillatorState{3, 2, 0}}) {
    CHECK(tight_state > state_emission_probability_averaged(pancake, state));
  }
}

TEST_CASE("anisotropy kinks the angle-averaged shell spectrum") {
  const RecoilCoupling coupling(TrapGeometry(Shape::Pancake, 10), 36.0);
  const double p19 = shell_emission_probability(coupling, 19);
  const double p20 = shell_emission_probability(coupling, 20);
  CHECK(p20 > p19);
  // node doubling stays put
  CHECK(std::abs(shell_emission_probability(coupling, 20, 512) - p20) <= 1e-10);
}

TEST_CASE("shell_spectrum covers the distribution") {
  for (const auto& [shape, lambda, eta2] :
       {std::tuple{Shape::Pancake, 10, 36.0}, std::tuple{Shape::Cigar, 7, 16.0}}) {
    const RecoilCoupling coupling(TrapGeometry(shape, lambda), eta2);
    const ShellSpectrum spectrum = shell_spectrum(coupling);
    CHECK(spectrum.total >= 1.0 - 1e-10);
    CHECK(spectrum.total <= 1.0 + 1e-10);
    for (double p : spectrum.probabilities) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermisea/emission.hpp"
#include "fermisea/quadrature.hpp"
#include "fermisea/recoil.hpp"
#include "fermisea/special.hpp"
#include "fermisea/trap.hpp"

namespace py = pybind11;
using namespace fermisea;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spontaneous-emission patterns of a trapped excited fermion above a "
            "zero-temperature spin-polarised Fermi sea in an anisotropic harmonic trap.";

  // special functions
  m.def("log_factorial", &log_factorial, py::arg("n"));
  m.def("poisson_pmf", &poisson_pmf, py::arg("k"), py::arg("mu"));
  m.def("regularized_gamma_p", &regularized_gamma_p, py::arg("shape"), py::arg("x"),
        "Regularized lower incomplete gamma P(s, x) for integer shape; P(0, x) = 1.");
  m.def("poisson_tail_cutoff", &poisson_tail_cutoff, py::arg("mu"), py::arg("eps"));

  // trap spectrum
  py::enum_<Shape>(m, "Shape")
      .value("PANCAKE", Shape::Pancake)
      .value("CIGAR", Shape::Cigar);

  py::class_<TrapGeometry>(m, "TrapGeometry")
      .def(py::init<Shape, int>(), py::arg("shape"), py::arg("aspect_ratio"))
      .def_readonly("shape", &TrapGeometry::shape)
      .def_readonly("aspect_ratio", &TrapGeometry::aspect_ratio)
      .def("__repr__", [](const TrapGeometry& g) {
        return "TrapGeometry(" + to_string(g.shape) +
               ", lambda=" + std::to_string(g.aspect_ratio) + ")";
      });

  py::class_<FermiSea>(m, "FermiSea")
      .def(py::init<int>(), py::arg("shell"))
      .def_readonly("shell", &FermiSea::shell);

  py::class_<OscillatorState>(m, "OscillatorState")
      .def(py::init([](int nx, int ny, int nz) { return OscillatorState{nx, ny, nz}; }),
           py::arg("nx"), py::arg("ny"), py::arg("nz"))
      .def_readonly("nx", &OscillatorState::nx)
      .def_readonly("ny", &OscillatorState::ny)
      .def_readonly("nz", &OscillatorState::nz);

  m.def("floored_tilde", &floored_tilde, py::arg("n"), py::arg("lambda_"));
  m.def("shell_index", &shell_index, py::arg("geom"), py::arg("state"));
  m.def("shell_energy", &shell_energy, py::arg("geom"), py::arg("n"));
  m.def("degeneracy", &degeneracy, py::arg("geom"), py::arg("n"));
  m.def("degeneracy_bruteforce", &degeneracy_bruteforce, py::arg("geom"), py::arg("n"));
  m.def("cumulative_states", &cumulative_states, py::arg("geom"), py::arg("fermi_shell"));
  m.def(
      "fermi_shell_for_atoms",
      [](const TrapGeometry& geom, long long atoms) {
        const ShellFill fill = fermi_shell_for_atoms(geom, atoms);
        return py::make_tuple(fill.shell, fill.occupancy);
      },
      py::arg("geom"), py::arg("atoms"),
      "Returns (fermi_shell, top_shell_occupancy) for the given atom number.");

  // recoil matrix elements
  py::class_<PhotonDirection>(m, "PhotonDirection")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi") = 0.0)
      .def_readonly("theta", &PhotonDirection::theta)
      .def_readonly("phi", &PhotonDirection::phi);

  py::class_<RecoilCoupling>(m, "RecoilCoupling")
      .def(py::init<TrapGeometry, double>(), py::arg("geom"), py::arg("eta2"))
      .def_readonly("geom", &RecoilCoupling::geom)
      .def_readonly("eta2", &RecoilCoupling::eta2);

  m.def(
      "axis_poisson_parameters",
      [](const RecoilCoupling& c, const PhotonDirection& d) {
        const AxisMeans mu = axis_poisson_parameters(c, d);
        return py::make_tuple(mu.x, mu.y, mu.z);
      },
      py::arg("coupling"), py::arg("direction"));
  m.def("state_emission_probability", &state_emission_probability, py::arg("coupling"),
        py::arg("direction"), py::arg("state"));
  m.def("state_emission_probability_averaged", &state_emission_probability_averaged,
        py::arg("coupling"), py::arg("state"), py::arg("quad_points") = 256);
  m.def("shell_emission_probability_at", &shell_emission_probability_at, py::arg("coupling"),
        py::arg("direction"), py::arg("shell"));
  m.def("shell_emission_probability", &shell_emission_probability, py::arg("coupling"),
        py::arg("shell"), py::arg("quad_points") = 256);

  py::class_<ShellSpectrum>(m, "ShellSpectrum")
      .def_readonly("eta2", &ShellSpectrum::eta2)
      .def_readonly("probabilities", &ShellSpectrum::probabilities)
      .def_readonly("total", &ShellSpectrum::total);
  m.def("shell_spectrum", &shell_spectrum, py::arg("coupling"),
        py::arg("coverage_eps") = 1e-12, py::arg("quad_points") = 256);

  // emission patterns
  py::class_<EmissionProblem>(m, "EmissionProblem")
      .def(py::init<TrapGeometry, FermiSea, double>(), py::arg("geom"), py::arg("sea"),
           py::arg("eta2"))
      .def_readonly("geom", &EmissionProblem::geom)
      .def_readonly("sea", &EmissionProblem::sea)
      .def_readonly("eta2", &EmissionProblem::eta2);

  py::enum_<PartialWaveForm>(m, "PartialWaveForm")
      .value("POISSON_CONSISTENT", PartialWaveForm::PoissonConsistent)
      .value("PAPER_LITERAL", PartialWaveForm::PaperLiteral);

  py::class_<PatternVariant>(m, "PatternVariant")
      .def_static("full", &PatternVariant::full)
      .def_static("limit", &PatternVariant::limit)
      .def_static("partial_wave", &PatternVariant::partial_wave, py::arg("tight_level"));

  py::class_<AngularPattern>(m, "AngularPattern")
      .def_readonly("theta", &AngularPattern::theta)
      .def_readonly("value", &AngularPattern::value);

  m.def(
      "alpha_beta",
      [](const EmissionProblem& p, double theta) {
        const AlphaBeta ab = alpha_beta(p, theta);
        return py::make_tuple(ab.alpha, ab.beta);
      },
      py::arg("problem"), py::arg("theta"));
  m.def("modification_factor", &modification_factor, py::arg("problem"), py::arg("theta"));
  m.def("modification_factor_bruteforce", &modification_factor_bruteforce, py::arg("problem"),
        py::arg("theta"), py::arg("phi") = 0.0);
  m.def("tight_axis_factor", &tight_axis_factor, py::arg("problem"));
  m.def("tight_axis_factor_continuous", &tight_axis_factor_continuous, py::arg("lambda_"),
        py::arg("eta2"), py::arg("fermi_shell"));
  m.def("soft_axis_factor", &soft_axis_factor, py::arg("problem"));
  m.def("partial_wave_factor", &partial_wave_factor, py::arg("problem"), py::arg("theta"),
        py::arg("tight_level"), py::arg("form") = PartialWaveForm::PoissonConsistent);
  m.def("limit_factor", &limit_factor, py::arg("problem"), py::arg("theta"));
  m.def("angle_averaged_factor", &angle_averaged_factor, py::arg("problem"),
        py::arg("quad_points") = 256);
  m.def("sample_pattern", &sample_pattern, py::arg("problem"), py::arg("theta_count"),
        py::arg("variant") = PatternVariant::full());
  m.def("count_interior_maxima", &count_interior_maxima, py::arg("pattern"));
}

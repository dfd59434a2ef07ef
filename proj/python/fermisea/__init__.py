"""Spontaneous-emission patterns of a trapped excited fermion above a
zero-temperature spin-polarised Fermi sea in an anisotropic harmonic trap."""

from fermisea._core import (
    AngularPattern,
    EmissionProblem,
    FermiSea,
    OscillatorState,
    PartialWaveForm,
    PatternVariant,
    PhotonDirection,
    RecoilCoupling,
    Shape,
    ShellSpectrum,
    TrapGeometry,
    alpha_beta,
    angle_averaged_factor,
    axis_poisson_parameters,
    count_interior_maxima,
    cumulative_states,
    degeneracy,
    degeneracy_bruteforce,
    fermi_shell_for_atoms,
    floored_tilde,
    limit_factor,
    log_factorial,
    modification_factor,
    modification_factor_bruteforce,
    partial_wave_factor,
    poisson_pmf,
    poisson_tail_cutoff,
    regularized_gamma_p,
    sample_pattern,
    shell_emission_probability,
    shell_emission_probability_at,
    shell_energy,
    shell_index,
    shell_spectrum,
    soft_axis_factor,
    state_emission_probability,
    state_emission_probability_averaged,
    tight_axis_factor,
    tight_axis_factor_continuous,
)

__all__ = [
    "AngularPattern",
    "EmissionProblem",
    "FermiSea",
    "OscillatorState",
    "PartialWaveForm",
    "PatternVariant",
    "PhotonDirection",
    "RecoilCoupling",
    "Shape",
    "ShellSpectrum",
    "TrapGeometry",
    "alpha_beta",
    "angle_averaged_factor",
    "axis_poisson_parameters",
    "count_interior_maxima",
    "cumulative_states",
    "degeneracy",
    "degeneracy_bruteforce",
    "fermi_shell_for_atoms",
    "floored_tilde",
    "limit_factor",
    "log_factorial",
    "modification_factor",
    "modification_factor_bruteforce",
    "partial_wave_factor",
    "poisson_pmf",
    "poisson_tail_cutoff",
    "regularized_gamma_p",
    "sample_pattern",
    "shell_emission_probability",
    "shell_emission_probability_at",
    "shell_energy",
    "shell_index",
    "shell_spectrum",
    "soft_axis_factor",
    "state_emission_probability",
    "state_emission_probability_averaged",
    "tight_axis_factor",
    "tight_axis_factor_continuous",
]

__version__ = "0.1.0"

"""Bound states of the Manning-Rosen potential with an improved
screened approximation of the centrifugal term.

Modules
-------
potential     the potential, its minimum, and the effective radial potential
centrifugal   screened approximations of 1/r^2 and their matching conditions
spectrum      closed-form energy levels, bound-state enumeration, reductions
wavefunction  Jacobi-polynomial radial functions and normalization
numerov       independent shooting eigenvalue solver
units         physical constants and the diatomic molecule registry
tables        row layouts of the published benchmark tables
cli           command-line interface (`mrbound`)
"""

from .centrifugal import (
    CASE1,
    CASE2,
    CASE3,
    LEGACY,
    ApproxScheme,
    approx_inverse_r2,
    approximation_error_report,
    solve_coefficients,
)
from .potential import (
    PotentialParams,
    effective_potential,
    mr_potential,
    potential_minimum,
    second_derivative_at_min,
)
from .spectrum import (
    EnergySolution,
    QuantumState,
    UnboundStateError,
    auxiliary_quantities,
    coulomb_energy,
    critical_coupling,
    energy_level,
    enumerate_bound_states,
    epsilon_prime,
    hulthen_energy,
    hulthen_energy_screened,
)
from .wavefunction import (
    RadialFunction,
    hulthen_wavefunction,
    jacobi,
    normalization_closed_form,
    normalization_quadrature,
    radial_wavefunction,
)
from .numerov import SolverConfig, auto_config, solve_eigenvalue, solve_with_hint
from .units import Molecule, UnitSystem, energy_scale_eV, load_molecules, table_energy_eV

__version__ = "0.1.0"

__all__ = [
    "ApproxScheme",
    "CASE1",
    "CASE2",
    "CASE3",
    "LEGACY",
    "EnergySolution",
    "Molecule",
    "PotentialParams",
    "QuantumState",
    "RadialFunction",
    "SolverConfig",
    "UnboundStateError",
    "UnitSystem",
    "approx_inverse_r2",
    "approximation_error_report",
    "auto_config",
    "auxiliary_quantities",
    "coulomb_energy",
    "critical_coupling",
    "effective_potential",
    "energy_level",
    "energy_scale_eV",
    "enumerate_bound_states",
    "epsilon_prime",
    "hulthen_energy",
    "hulthen_energy_screened",
    "hulthen_wavefunction",
    "jacobi",
    "load_molecules",
    "mr_potential",
    "normalization_closed_form",
    "normalization_quadrature",
    "potential_minimum",
    "radial_wavefunction",
    "second_derivative_at_min",
    "solve_coefficients",
    "solve_eigenvalue",
    "solve_with_hint",
    "table_energy_eV",
]

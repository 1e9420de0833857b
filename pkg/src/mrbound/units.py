"""Physical constants, the diatomic molecule registry, and eV conversion.

The dimensionless spectrum carries the overall factor hbar^2/(2 mu b^2).
For a molecule of reduced mass mu (in amu) and screening length b (in pm)
that factor in eV is

    scale = (hbar*c)^2 / (2 * mu*c^2 * b^2)

with hbar*c in eV.pm and mu*c^2 = reduced_mass_amu * amu_eV.  The amu ->
eV/c^2 constant is configurable (default 9.31494e8 eV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .centrifugal import ApproxScheme
from .potential import PotentialParams
from .spectrum import QuantumState, UnboundStateError, critical_coupling, epsilon_prime

#: picometers per supported length unit
LENGTH_UNITS_PM = {"angstrom": 100.0, "picometer": 1.0, "bohr": 52.9177210903}


class UnknownMoleculeError(KeyError):
    """Requested species is not in the registry."""


class RegistryFormatError(ValueError):
    """The molecule data file is malformed."""


@dataclass(frozen=True)
class Molecule:
    name: str
    reduced_mass_amu: float

    def __post_init__(self):
        if not self.name:
            raise ValueError("molecule name must be non-empty")
        if not (math.isfinite(self.reduced_mass_amu) and self.reduced_mass_amu > 0):
            raise ValueError("reduced mass must be a positive finite real (amu)")


@dataclass(frozen=True)
class UnitSystem:
    """Conversion constants; all strictly positive."""

    hbar_c_eV_A: float = 1973.29
    amu_eV: float = 9.31494e8
    length_unit: str = "picometer"

    def __post_init__(self):
        for name in ("hbar_c_eV_A", "amu_eV"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be a positive finite real")
        if self.length_unit not in LENGTH_UNITS_PM:
            raise ValueError(
                f"length_unit must be one of {sorted(LENGTH_UNITS_PM)}, "
                f"got {self.length_unit!r}"
            )

    @property
    def hbar_c_eV_pm(self) -> float:
        return self.hbar_c_eV_A * 100.0

    def length_to_pm(self, value: float) -> float:
        return value * LENGTH_UNITS_PM[self.length_unit]

    def length_from_pm(self, value_pm: float) -> float:
        return value_pm / LENGTH_UNITS_PM[self.length_unit]


def _registry_lines(path: Path | None):
    if path is not None:
        return Path(path).read_text().splitlines()
    return (
        resources.files("mrbound.data").joinpath("molecules.dat").read_text().splitlines()
    )


def load_molecules(path: Path | None = None) -> dict[str, Molecule]:
    """Parse the key/value registry file (default: the bundled one).

    Format: a `format = 1` header, then `name = reduced_mass_amu` records;
    '#' comments and blank lines are ignored.
    """
    entries: dict[str, Molecule] = {}
    saw_format = False
    for lineno, raw in enumerate(_registry_lines(path), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise RegistryFormatError(f"line {lineno}: expected 'name = value'")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key == "format":
            if val != "1":
                raise RegistryFormatError(f"unsupported registry format {val!r}")
            saw_format = True
            continue
        try:
            mass = float(val)
        except ValueError:
            raise RegistryFormatError(f"line {lineno}: bad mass {val!r}") from None
        entries[key] = Molecule(name=key, reduced_mass_amu=mass)
    if not saw_format:
        raise RegistryFormatError("missing 'format = 1' header")
    return entries


MOLECULES = load_molecules()


def get_molecule(name: str, registry: dict[str, Molecule] | None = None) -> Molecule:
    reg = MOLECULES if registry is None else registry
    try:
        return reg[name]
    except KeyError:
        raise UnknownMoleculeError(
            f"unknown molecule {name!r}; known: {sorted(reg)}"
        ) from None


def energy_scale_eV(mol: Molecule, b_pm: float, u: UnitSystem) -> float:
    """(hbar*c)^2 / (2 mu c^2 b^2) in eV, with b in picometers."""
    if not (math.isfinite(b_pm) and b_pm > 0):
        raise ValueError("b must be a positive finite length in pm")
    mu_eV = mol.reduced_mass_amu * u.amu_eV
    return u.hbar_c_eV_pm**2 / (2.0 * mu_eV * b_pm**2)


def binding_dimensionless(st: QuantumState, A: float, alpha: float, scheme: ApproxScheme) -> float:
    """Dimensionless binding energy eps'^2 - l(l+1)*c0 (positive when bound)."""
    p = PotentialParams(A=A, alpha=alpha, b=1.0)
    eps = epsilon_prime(p, st)
    if eps < 0.0:
        raise UnboundStateError(st, A, critical_coupling(st, alpha, scheme))
    return eps * eps - st.l * (st.l + 1) * scheme.c0


def table_energy_eV(
    mol: Molecule,
    st: QuantumState,
    alpha: float,
    inv_b_pm: float,
    scheme: ApproxScheme,
    u: UnitSystem | None = None,
) -> float:
    """Binding energy -E in eV under the A = 2*(b/pm) convention.

    The screening length is b = 1/inv_b_pm picometers, so the dimensionless
    coupling is A = 2/inv_b_pm.  alpha = 0 and alpha = 1 reduce to the
    screened-Coulomb (Hulthen) case through the same formula.
    """
    if not (math.isfinite(inv_b_pm) and inv_b_pm > 0):
        raise ValueError("inv_b_pm must be a positive finite real")
    if u is None:
        u = UnitSystem()
    b_pm = 1.0 / inv_b_pm
    coupling = 2.0 * b_pm
    return energy_scale_eV(mol, b_pm, u) * binding_dimensionless(
        st, coupling, alpha, scheme
    )


def parse_constants_file(path: Path) -> UnitSystem:
    """Build a UnitSystem from a key=value override file.

    Recognized keys: hbar_c_eV_A, amu_eV, length_unit.  Unknown keys are an
    error; missing keys keep their defaults.
    """
    u = UnitSystem()
    fields = {"hbar_c_eV_A", "amu_eV", "length_unit"}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise RegistryFormatError(f"line {lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in fields:
            raise RegistryFormatError(f"line {lineno}: unknown constant {key!r}")
        if key == "length_unit":
            u = replace(u, length_unit=val)
        else:
            try:
                u = replace(u, **{key: float(val)})
            except ValueError:
                raise RegistryFormatError(f"line {lineno}: bad value {val!r}") from None
    return u

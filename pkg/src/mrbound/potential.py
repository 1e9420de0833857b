"""The Manning-Rosen potential and its effective radial form.

    V(r) = -(A*hbar^2 / 2*mu*b^2) * v + (alpha*(alpha-1)*hbar^2 / 2*mu*b^2) * v^2

with v = exp(-r/b)/(1 - exp(-r/b)) = 1/(exp(r/b) - 1).  A and alpha are
dimensionless, b is the screening length.  The potential is invariant under
alpha -> 1 - alpha.  Near r = 0 it behaves like alpha*(alpha-1)*hbar^2/(2*mu*r^2);
it decays to zero exponentially at large r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .centrifugal import ApproxScheme, approx_inverse_r2


class NoInteriorMinimumError(ValueError):
    """The potential has no stationary point at finite positive r."""


@dataclass(frozen=True)
class PotentialParams:
    """One Manning-Rosen problem instance.

    Default mass = hbar = 1 is the atomic-unit mode used throughout; eV
    conversion for physical molecules lives in mrbound.units.
    """

    A: float
    alpha: float
    b: float
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("A", "alpha", "b", "mass", "hbar"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        for name in ("b", "mass", "hbar"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def energy_scale(self) -> float:
        """The prefactor hbar^2 / (2 mu b^2) that carries the energy unit."""
        return self.hbar**2 / (2.0 * self.mass * self.b**2)


@dataclass(frozen=True)
class Minimum:
    r0: float
    V0: float


def _as_positive_r(r):
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise ValueError("r must be positive and finite")
    return arr


def screening_ratio(b: float, r):
    """v(r) = exp(-r/b)/(1-exp(-r/b)), evaluated as 1/expm1(r/b) for stability."""
    with np.errstate(over="ignore"):  # expm1 -> inf for huge r/b; 1/inf = 0 is correct
        return 1.0 / np.expm1(_as_positive_r(r) / b)


def mr_potential(p: PotentialParams, r):
    """Potential energy at r (scalar or array), r > 0."""
    v = screening_ratio(p.b, r)
    out = p.energy_scale * (-p.A * v + p.alpha * (p.alpha - 1.0) * v * v)
    return out if isinstance(r, np.ndarray) else float(out)


def potential_minimum(p: PotentialParams) -> Minimum:
    """Location and value of the interior minimum.

    r0 = b*ln[1 + 2*alpha*(alpha-1)/A]; exists only when the logarithm's
    argument exceeds 1, i.e. alpha*(alpha-1)/A > 0.  V0 is evaluated
    directly from the potential (the closed form -A^2*hbar^2/(8*mu*b^2*
    alpha*(alpha-1)) is checked in the tests, not trusted here).
    """
    arg = 1.0 + 2.0 * p.alpha * (p.alpha - 1.0) / p.A
    if arg <= 1.0:
        raise NoInteriorMinimumError(
            f"no interior minimum: 1 + 2*alpha*(alpha-1)/A = {arg} <= 1"
        )
    r0 = p.b * math.log(arg)
    return Minimum(r0=r0, V0=mr_potential(p, r0))


def second_derivative_at_min(p: PotentialParams) -> float:
    """d^2V/dr^2 at r0, the force-constant curvature.

    Closed form A^2*[A + 2*alpha*(alpha-1)]^2 / (8*b^4*alpha^3*(alpha-1)^3),
    carrying the same hbar^2/(2 mu) prefactor as the potential itself.
    """
    potential_minimum(p)  # validates existence
    aa = p.alpha * (p.alpha - 1.0)
    curv = p.A**2 * (p.A + 2.0 * aa) ** 2 / (8.0 * p.b**4 * aa**3)
    return p.hbar**2 / (2.0 * p.mass) * curv


def effective_potential(p: PotentialParams, l: int, r, scheme: ApproxScheme | None = None):
    """Radial effective potential: V(r) plus the centrifugal barrier.

    scheme=None uses the exact hbar^2*l*(l+1)/(2*mu*r^2); a scheme replaces
    1/r^2 by its screened approximation.  For l = 0 both agree with the bare
    potential.
    """
    if l < 0:
        raise ValueError("l must be a non-negative integer")
    base = mr_potential(p, r)
    if l == 0:
        return base
    pref = p.hbar**2 * l * (l + 1) / (2.0 * p.mass)
    if scheme is None:
        cent = pref / _as_positive_r(r) ** 2
    else:
        cent = pref * approx_inverse_r2(scheme, p.b, np.asarray(r, dtype=float))
    out = base + cent
    return out if isinstance(r, np.ndarray) else float(out)

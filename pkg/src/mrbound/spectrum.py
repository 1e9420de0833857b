"""Closed-form bound-state energies of the Manning-Rosen potential.

With the screened centrifugal approximation the radial equation becomes
hypergeometric in z = exp(-r/b) and the discrete spectrum is

    E_nl = -(hbar^2/2 mu b^2) * eps'^2 + (hbar^2/2 mu b^2) * l(l+1) * c0

where

    eps' = [A - (n+1)^2 - l(l+1) - (2n+1)*Lambda] / (2*(n+1+Lambda))
    Lambda = (a - 1)/2,  a = sqrt((1-2*alpha)^2 + 4*l*(l+1))

eps' is stored as the positive-when-bound branch: it doubles as the decay
exponent of the wavefunction in z, so eps' > 0 is the bound-state
criterion.  Lambda depends on alpha only through (1-2*alpha)^2, hence the
whole spectrum is invariant under alpha -> 1 - alpha.

For alpha in {0, 1} the potential reduces to the Hulthen potential and the
spectrum collapses to the familiar [A - (n+l+1)^2]^2 form; the Coulomb
limit follows for vanishing screening.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .centrifugal import ApproxScheme
from .potential import PotentialParams

# spectroscopic letters in the standard order (j is skipped by convention)
ANGULAR_LETTERS = "spdfghiklmnoqrtuvwxyz"

_LABEL_RE = re.compile(r"^(\d+)([a-z])$")


@dataclass(frozen=True, order=True)
class QuantumState:
    """Radial quantum number n >= 0 and orbital quantum number l >= 0."""

    n: int
    l: int

    def __post_init__(self):
        if self.n < 0 or self.l < 0:
            raise ValueError("n and l must be non-negative integers")

    @property
    def principal(self) -> int:
        """Hydrogen-like principal quantum number N = n + l + 1."""
        return self.n + self.l + 1

    @property
    def label(self) -> str:
        """Spectroscopic label, e.g. (n=0, l=1) -> '2p'."""
        if self.l >= len(ANGULAR_LETTERS):
            raise ValueError(f"no spectroscopic letter for l={self.l}")
        return f"{self.principal}{ANGULAR_LETTERS[self.l]}"

    @classmethod
    def from_label(cls, label: str) -> "QuantumState":
        m = _LABEL_RE.match(label.strip().lower())
        if not m:
            raise ValueError(f"malformed state label {label!r}")
        big_n = int(m.group(1))
        try:
            l = ANGULAR_LETTERS.index(m.group(2))
        except ValueError:
            raise ValueError(f"unknown orbital letter in {label!r}") from None
        n = big_n - l - 1
        if n < 0:
            raise ValueError(f"label {label!r} implies negative radial quantum number")
        return cls(n=n, l=l)


@dataclass(frozen=True)
class EnergySolution:
    """Eigenvalue plus the auxiliary quantities fixing the wavefunction."""

    energy: float
    a: float
    Lambda: float
    epsilon_prime: float
    scheme_c0: float


class UnboundStateError(ValueError):
    """No bound state exists for the requested (n, l) at this coupling."""

    def __init__(self, state: QuantumState, A: float, critical_A: float):
        self.state = state
        self.A = A
        self.critical_A = critical_A
        super().__init__(
            f"state {state.label} is unbound at A={A}; binding requires A > {critical_A:.9g}"
        )


def auxiliary_quantities(alpha: float, l: int) -> tuple[float, float]:
    """Return (a, Lambda): a = sqrt((1-2*alpha)^2 + 4l(l+1)), Lambda = (a-1)/2.

    a = 0 (alpha = 1/2, l = 0) is the degenerate boundary where the
    wavefunction exponent 2*Lambda + 1 hits -1; callers that build
    wavefunctions must reject it.
    """
    a = math.sqrt((1.0 - 2.0 * alpha) ** 2 + 4.0 * l * (l + 1))
    return a, (a - 1.0) / 2.0


def epsilon_prime(p: PotentialParams, st: QuantumState) -> float:
    """Dimensionless bound-state wave number (positive iff the state binds)."""
    _, lam = auxiliary_quantities(p.alpha, st.l)
    denom = 2.0 * (st.n + 1.0 + lam)
    if denom <= 0:
        raise ValueError(f"degenerate denominator for n={st.n}, Lambda={lam}")
    return (p.A - (st.n + 1.0) ** 2 - st.l * (st.l + 1) - (2 * st.n + 1) * lam) / denom


def energy_level(p: PotentialParams, st: QuantumState, scheme: ApproxScheme) -> EnergySolution:
    """Closed-form energy of state (n, l) under the given centrifugal scheme.

    Raises UnboundStateError when eps' < 0 (the zero-binding edge eps' = 0
    is admitted and yields the ceiling energy).
    """
    a, lam = auxiliary_quantities(p.alpha, st.l)
    eps = epsilon_prime(p, st)
    if eps < 0.0:
        raise UnboundStateError(st, p.A, critical_coupling(st, p.alpha, scheme))
    shift = st.l * (st.l + 1) * scheme.c0
    energy = p.energy_scale * (shift - eps * eps)
    return EnergySolution(
        energy=energy, a=a, Lambda=lam, epsilon_prime=eps, scheme_c0=scheme.c0
    )


def energy_ceiling(p: PotentialParams, l: int, scheme: ApproxScheme) -> float:
    """Upper bound (hbar^2/2 mu b^2)*l(l+1)*c0 below which eps' is real."""
    return p.energy_scale * l * (l + 1) * scheme.c0


def critical_coupling(st: QuantumState, alpha: float, scheme: ApproxScheme) -> float:
    """Coupling A_c at which the binding energy of (n, l) vanishes.

    Zero binding means eps'^2 = l(l+1)*c0 on the physical (eps' >= 0)
    branch, i.e.

        A_c = (n + 1 + Lambda + sqrt(l(l+1)*c0))^2 - Lambda*(Lambda+1)
              + l(l+1)*(1 - c0)

    Note the plus sign in front of the square root: the minus-sign variant
    zeroes the unphysical eps' = -sqrt(l(l+1)*c0) branch and does not
    bracket the E(A) = 0 root.  For l = 0 both reduce to
    (n+1)^2 + (2n+1)*Lambda.
    """
    if scheme.c0 < 0:
        raise ValueError("critical coupling requires c0 >= 0")
    _, lam = auxiliary_quantities(alpha, st.l)
    ll1 = st.l * (st.l + 1)
    root = math.sqrt(ll1 * scheme.c0)
    return (st.n + 1.0 + lam + root) ** 2 - lam * (lam + 1.0) + ll1 * (1.0 - scheme.c0)


def enumerate_bound_states(
    p: PotentialParams, scheme: ApproxScheme, l_max: int
) -> list[tuple[QuantumState, EnergySolution]]:
    """All strictly bound states (eps' > 0) with l <= l_max, energy ascending.

    For each l, n is increased until eps' drops to zero or below; the
    spectrum is finite because eps' decreases monotonically with n.
    """
    if l_max < 0:
        raise ValueError("l_max must be non-negative")
    found = []
    for l in range(l_max + 1):
        n = 0
        while True:
            st = QuantumState(n=n, l=l)
            if epsilon_prime(p, st) <= 0.0:
                break
            found.append((st, energy_level(p, st, scheme)))
            n += 1
    found.sort(key=lambda pair: pair[1].energy)
    return found


def hulthen_energy(p: PotentialParams, st: QuantumState, scheme: ApproxScheme) -> float:
    """Energy of the Hulthen reduction (alpha in {0, 1}; Lambda = l).

        E = -hbar^2 [A - (n+l+1)^2]^2 / (8 mu b^2 (n+l+1)^2)
            + hbar^2 l(l+1) c0 / (2 mu b^2)

    Must coincide with energy_level at alpha = 0 and alpha = 1.
    """
    big_n = st.principal
    if p.A < big_n * big_n:
        raise UnboundStateError(st, p.A, critical_coupling(st, 0.0, scheme))
    eps = (p.A - big_n * big_n) / (2.0 * big_n)
    return p.energy_scale * (st.l * (st.l + 1) * scheme.c0 - eps * eps)


def hulthen_energy_screened(
    Z: float, delta: float, st: QuantumState, scheme: ApproxScheme
) -> float:
    """Screened-Coulomb (Hulthen) level in natural units hbar = mu = e = 1.

        E = -(Z^2/2) [1/(n+l+1) - (n+l+1) delta / (2Z)]^2
            + l(l+1) c0 delta^2 / 2

    Bound condition: 1/(n+l+1) > (n+l+1)*delta/(2Z).
    """
    if Z <= 0 or delta <= 0:
        raise ValueError("Z and delta must be positive")
    big_n = st.principal
    inner = 1.0 / big_n - big_n * delta / (2.0 * Z)
    if inner < 0.0:
        raise UnboundStateError(st, 2.0 * Z / delta, critical_coupling(st, 0.0, scheme))
    return -0.5 * (Z * inner) ** 2 + st.l * (st.l + 1) * scheme.c0 * delta**2 / 2.0


def coulomb_energy(Z: float, st: QuantumState, mass: float = 1.0, hbar: float = 1.0) -> float:
    """Hydrogen-like level -Z^2/(2 (n+l+1)^2) in atomic units (e = 1)."""
    big_n = st.principal
    return -(Z * Z) * mass / (2.0 * hbar * hbar * big_n * big_n)

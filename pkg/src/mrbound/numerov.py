"""Shooting eigenvalue solver for the radial equation, independent of the
closed-form spectrum.

The radial equation R'' = [2 mu (V_eff - E)/hbar^2] R is integrated with
the fourth-order Numerov scheme outward from near the origin and inward
from r_max, both branches are matched at the outer classical turning
point, and the energy is bisected on the pair (node count, matching
defect).  The defect is the discrete log-derivative mismatch of the two
branches at the matching point; it increases with E between eigenvalues,
while the node count supplies the coarse Sturm ordering.

Near the origin the effective potential behaves like C2/r^2 + C1/r with
C2 = alpha*(alpha-1) + l*(l+1) (up to the scheme's c2/gamma^2 factor in
approximated mode), so a uniform grid cannot start the recurrence there.
The outward sweep therefore opens with a cascade of step-doubling fine
segments seeded by the regular power law r^s*(1 + C1/(2s)*r),
s*(s-1) = C2, and hands over to the uniform main grid once the step is
safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .centrifugal import ApproxScheme
from .potential import PotentialParams, effective_potential
from .spectrum import QuantumState

#: steps per fine start-up segment (each segment doubles the step)
_SEG_STEPS = 128
#: main-grid index where the fine cascade hands over to the uniform grid;
#: must equal _SEG_STEPS so the hand-over spacing matches the main step
_JOIN_INDEX = 128
_RESCALE = 1e250


class BracketError(ValueError):
    """The energy bracket does not straddle an eigenvalue with the wanted nodes."""


class ConvergenceError(RuntimeError):
    """Bisection failed to converge within the iteration budget."""


@dataclass
class SolverConfig:
    r_min: float
    r_max: float
    steps: int
    energy_bracket: tuple[float, float]
    tolerance: float = 1e-11
    scheme: ApproxScheme | None = None  # None = exact centrifugal term

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise ValueError("need 0 < r_min < r_max")
        if self.steps < 1000:
            raise ValueError("steps must be >= 1000")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        lo, hi = self.energy_bracket
        if not lo < hi:
            raise ValueError("energy bracket must satisfy low < high")


@dataclass(frozen=True)
class EigenResult:
    energy: float
    nodes: int
    residual: float


@njit(cache=True)
def _sweep_segment(w, e2mu, h, ym1, yc):
    """Advance the Numerov recurrence across one uniform segment.

    w holds the potential profile at points x0-h, x0, x0+h, ..., x_end;
    (ym1, yc) are the solution values at x0-h and x0.  Returns the values
    at x_end-2h and x_end (spaced for a step-doubling hand-over) plus the
    number of sign changes encountered.
    """
    hh = h * h / 12.0
    nodes = 0
    y_m2 = 0.0
    for i in range(1, w.size - 1):
        f_m = w[i - 1] - e2mu
        f_c = w[i] - e2mu
        f_p = w[i + 1] - e2mu
        yp1 = (2.0 * yc * (1.0 + 5.0 * hh * f_c) - ym1 * (1.0 - hh * f_m)) / (
            1.0 - hh * f_p
        )
        if yc != 0.0 and yp1 * yc < 0.0:
            nodes += 1
        if abs(yp1) > _RESCALE:
            ym1 /= _RESCALE
            yc /= _RESCALE
            yp1 /= _RESCALE
            y_m2 /= _RESCALE
        ym1 = yc
        yc = yp1
        if i == w.size - 4:
            y_m2 = yc
    return y_m2, yc, nodes


@njit(cache=True)
def _sweep_main(w, e2mu, h, j0, ym1, yc):
    """Outward sweep on the main grid from index j0, then the inward sweep.

    (ym1, yc) are the solution values at indices j0-1 and j0 (spacing h,
    handed over from the fine cascade).  Returns (nodes, defect, ok).
    """
    npts = w.size
    hh = h * h / 12.0

    # outer classical turning point: last grid index still classically allowed
    i_m = -1
    for i in range(npts - 3, 0, -1):
        if w[i] - e2mu < 0.0:
            i_m = i
            break
    if i_m < j0 + 2:
        return 0, 0.0, False

    nodes = 0
    out_m = 0.0
    out_mp = 0.0
    for i in range(j0, i_m + 1):
        f_m = w[i - 1] - e2mu
        f_c = w[i] - e2mu
        f_p = w[i + 1] - e2mu
        yp1 = (2.0 * yc * (1.0 + 5.0 * hh * f_c) - ym1 * (1.0 - hh * f_m)) / (
            1.0 - hh * f_p
        )
        if yc != 0.0 and yp1 * yc < 0.0:
            nodes += 1
        if abs(yp1) > _RESCALE:
            ym1 /= _RESCALE
            yc /= _RESCALE
            yp1 /= _RESCALE
        ym1 = yc
        yc = yp1
        if i + 1 == i_m:
            out_m = yc
        elif i + 1 == i_m + 1:
            out_mp = yc
    if out_m == 0.0:
        return nodes, 0.0, False

    # inward sweep from the decaying tail down to the matching point
    yp1 = 0.0
    yc = 1e-30
    in_m = 0.0
    in_mp = 0.0
    if npts - 2 == i_m + 1:
        in_mp = yc
    for i in range(npts - 2, i_m, -1):
        f_p = w[i + 1] - e2mu
        f_c = w[i] - e2mu
        f_m = w[i - 1] - e2mu
        ym1 = (2.0 * yc * (1.0 + 5.0 * hh * f_c) - yp1 * (1.0 - hh * f_p)) / (
            1.0 - hh * f_m
        )
        if yc != 0.0 and ym1 * yc < 0.0:
            nodes += 1
        if abs(ym1) > _RESCALE:
            yp1 /= _RESCALE
            yc /= _RESCALE
            ym1 /= _RESCALE
        yp1 = yc
        yc = ym1
        if i - 1 == i_m + 1:
            in_mp = yc
        elif i - 1 == i_m:
            in_m = yc
    if in_m == 0.0:
        return nodes, 0.0, False

    defect = in_mp / in_m - out_mp / out_m
    return nodes, defect, True


def _origin_coefficients(
    p: PotentialParams, l: int, scheme: ApproxScheme | None
) -> tuple[float, float]:
    """Leading 1/r^2 and 1/r coefficients of 2 mu V_eff / hbar^2 near r = 0."""
    aa = p.alpha * (p.alpha - 1.0)
    if scheme is None or l == 0:
        c2_cent, c1_cent = float(l * (l + 1)), 0.0
    else:
        g2 = scheme.gamma**2
        c2_cent = l * (l + 1) * scheme.c2 / g2
        c1_cent = l * (l + 1) * (scheme.c1 - scheme.c2) / g2
    C2 = aa + c2_cent
    C1 = (-(aa + p.A) + c1_cent) / p.b
    return C2, C1


class _Shooter:
    """Grid-bound helper evaluating (nodes, defect) as a function of E."""

    def __init__(self, p: PotentialParams, st: QuantumState, cfg: SolverConfig):
        self.p = p
        self.e2mu_factor = 2.0 * p.mass / p.hbar**2

        r = np.linspace(cfg.r_min, cfg.r_max, cfg.steps + 1)
        self.h = float(r[1] - r[0])
        self.w = self.e2mu_factor * np.asarray(
            effective_potential(p, st.l, r, scheme=cfg.scheme), dtype=float
        )
        self.j0 = _JOIN_INDEX

        C2, C1 = _origin_coefficients(p, st.l, cfg.scheme)
        disc = 1.0 + 4.0 * C2
        if disc < 0.0:
            raise BracketError(
                "attractive inverse-square core too strong (fall to the center)"
            )
        self.s_pow = 0.5 * (1.0 + math.sqrt(disc))
        self.c_corr = C1 / (2.0 * self.s_pow)

        # step-doubling cascade: segment k spans [b_k, b_{k+1}] with
        # b_k = r_min + span/2^(K-k); depth K keeps the power-law seed in
        # its validity range |C1|*r << 1
        span = self.j0 * self.h
        depth = 10
        scale_len = max(abs(C1), abs(C2) / span, 1.0 / span)
        while span / 2.0**depth * scale_len > 1e-4 and depth < 48:
            depth += 1
        self.segments = []
        for k in range(depth):
            b_lo = cfg.r_min + span / 2.0 ** (depth - k)
            h_seg = (b_lo - cfg.r_min) / _SEG_STEPS
            x = b_lo + h_seg * np.arange(-1, _SEG_STEPS + 1)
            w_seg = self.e2mu_factor * np.asarray(
                effective_potential(p, st.l, x, scheme=cfg.scheme), dtype=float
            )
            self.segments.append((w_seg, h_seg, float(x[0]), float(x[1])))

        self.tolerance = cfg.tolerance
        self.target_n = st.n

    def probe(self, energy: float) -> tuple[int, float]:
        e2mu = self.e2mu_factor * energy
        w0, _, x_m1, x_0 = self.segments[0]
        ym1 = x_m1**self.s_pow * (1.0 + self.c_corr * x_m1)
        yc = x_0**self.s_pow * (1.0 + self.c_corr * x_0)
        nodes = 0
        for w_seg, h_seg, _, _ in self.segments:
            ym1, yc, seg_nodes = _sweep_segment(w_seg, e2mu, h_seg, ym1, yc)
            nodes += seg_nodes
        main_nodes, defect, ok = _sweep_main(self.w, e2mu, self.h, self.j0, ym1, yc)
        if not ok:
            raise BracketError(
                f"no usable classical turning point inside the grid at E={energy}"
            )
        return nodes + main_nodes, defect

    def orientation(self, energy: float) -> int:
        """-1 if E is below the target eigenvalue, +1 if above."""
        try:
            nodes, defect = self.probe(energy)
        except BracketError:
            # no classically allowed region on the grid: E sits at or below
            # the bottom of the effective potential, hence below the level
            return -1
        if nodes != self.target_n:
            return -1 if nodes < self.target_n else 1
        return -1 if defect < 0.0 else 1


def solve_eigenvalue(p: PotentialParams, st: QuantumState, cfg: SolverConfig) -> EigenResult:
    """Find the eigenvalue with st.n radial nodes inside cfg.energy_bracket."""
    shooter = _Shooter(p, st, cfg)
    lo, hi = cfg.energy_bracket
    if shooter.orientation(lo) >= 0 or shooter.orientation(hi) <= 0:
        raise BracketError(
            f"bracket ({lo}, {hi}) does not straddle the n={st.n} eigenvalue"
        )
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if hi - lo <= cfg.tolerance * max(1.0, abs(mid)):
            nodes, defect = shooter.probe(mid)
            return EigenResult(energy=mid, nodes=nodes, residual=abs(defect))
        if shooter.orientation(mid) < 0:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError("energy bisection did not converge")


def auto_config(
    p: PotentialParams,
    st: QuantumState,
    analytic_hint: float,
    scheme: ApproxScheme | None = None,
    steps: int | None = None,
) -> SolverConfig:
    """Size the grid and the energy bracket from a closed-form energy hint.

    The domain extends to kappa*r_max >= 35 with kappa the asymptotic
    decay rate of the hinted state (and at least 10 screening lengths);
    the bracket [1.5*hint, 0.5*hint] is widened until the node counts at
    its ends straddle st.n.  A degenerate hint (>= 0) falls back to a
    bracket based on the sampled depth of the effective potential.
    """
    r_min = 1e-6 * p.b
    if analytic_hint < 0.0:
        kappa = math.sqrt(2.0 * p.mass * abs(analytic_hint)) / p.hbar
        r_max = max(35.0 / kappa, 10.0 * p.b)
        lo, hi = 1.5 * analytic_hint, 0.5 * analytic_hint
    else:
        r_scan = np.geomspace(1e-3 * p.b, 50.0 * p.b, 2000)
        v_min = float(np.min(effective_potential(p, st.l, r_scan, scheme=scheme)))
        if v_min >= 0.0:
            raise BracketError("effective potential is nowhere negative")
        kappa = math.sqrt(2.0 * p.mass * abs(v_min)) / p.hbar
        r_max = max(35.0 / kappa, 10.0 * p.b)
        lo, hi = v_min, -1e-12 * abs(v_min)

    if steps is None:
        # resolve the stiffest oscillation well below the fourth-order
        # error floor; k_max from the sampled depth of the effective
        # potential
        r_scan = np.geomspace(max(r_min, 1e-3 * p.b), r_max, 2000)
        v_scan = np.asarray(effective_potential(p, st.l, r_scan, scheme=scheme))
        depth = max(1e-30, float(-np.min(v_scan)))
        k_max = math.sqrt(2.0 * p.mass * depth) / p.hbar
        h = min(p.b / 400.0, 0.01 / k_max)
        steps = int(min(max(math.ceil(r_max / h), 4000), 1_000_000))

    cfg = SolverConfig(
        r_min=r_min,
        r_max=r_max,
        steps=steps,
        energy_bracket=(lo, hi),
        scheme=scheme,
    )
    shooter = _Shooter(p, st, cfg)
    for _ in range(60):
        if shooter.orientation(cfg.energy_bracket[0]) < 0:
            break
        lo = cfg.energy_bracket[0] * 1.6 if cfg.energy_bracket[0] < 0 else -1e-8
        cfg.energy_bracket = (lo, cfg.energy_bracket[1])
    else:
        raise BracketError("could not widen the lower bracket end")
    for _ in range(60):
        if shooter.orientation(cfg.energy_bracket[1]) > 0:
            break
        hi = cfg.energy_bracket[1] * 0.5
        cfg.energy_bracket = (cfg.energy_bracket[0], hi)
    else:
        raise BracketError("could not widen the upper bracket end")
    return cfg


def solve_with_hint(
    p: PotentialParams,
    st: QuantumState,
    analytic_hint: float,
    scheme: ApproxScheme | None = None,
    steps: int | None = None,
) -> EigenResult:
    """Convenience wrapper: auto_config followed by solve_eigenvalue."""
    cfg = auto_config(p, st, analytic_hint, scheme=scheme, steps=steps)
    return solve_eigenvalue(p, st, cfg)

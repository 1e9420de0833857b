"""Approximation of the centrifugal term 1/r^2 by a screened-exponential form.

The replacement is

    1/r^2  ~  (1/r0^2) * [c0 + c1*v(r) + c2*v(r)^2],    v(r) = 1/(exp(r/b) - 1)

with the matching radius r0 = gamma*b.  Requiring the Taylor expansion of
both sides around r0 to agree through first order gives two conditions on
(c0, c1, c2):

    c0 + c1*u + c2*u^2 = 1
    gamma * (c1*u + (c1 + 2*c2)*u^2 + 2*c2*u^3) = 2,      u = 1/(exp(gamma) - 1)

The system is underdetermined; closing it by fixing one coefficient yields
the three cases below.  Case 1 fixes c1 = c2 = 1 and can only satisfy the
value condition (the slope condition is then overdetermined and holds only
approximately).  Cases 2 and 3 satisfy both conditions exactly.  The legacy
scheme (0, 1, 1) is the commonly used screened approximation with no
constant shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

CASE1 = "case1"
CASE2 = "case2"
CASE3 = "case3"
LEGACY = "legacy"

CASES = (CASE1, CASE2, CASE3, LEGACY)


class DegenerateSystemError(ValueError):
    """The 2x2 linear system for the coefficients is singular."""


@dataclass(frozen=True)
class ApproxScheme:
    """Coefficients of one centrifugal approximation.

    gamma is the dimensionless matching radius r0/b; the matching radius in
    length units is gamma*b for whichever screening length b the scheme is
    used with.
    """

    c0: float
    c1: float
    c2: float
    gamma: float = 1.0
    name: str = "custom"

    def matching_radius(self, b: float) -> float:
        return self.gamma * b

    def with_gamma(self, gamma: float) -> "ApproxScheme":
        return replace(self, gamma=gamma)


@dataclass(frozen=True)
class ErrorRow:
    """One grid point of an accuracy report for the approximated 1/r^2."""

    r: float
    exact: float
    approx: float
    abs_err: float
    rel_err: float


def solve_coefficients(case: str, gamma: float = 1.0) -> ApproxScheme:
    """Solve the Taylor-matching conditions for the chosen closure.

    case1: c1 = c2 = 1, c0 from the value condition.
    case2: c1 = 1, (c0, c2) from the 2x2 system of both conditions.
    case3: c2 = 1, (c0, c1) from the 2x2 system of both conditions.
    legacy: (0, 1, 1), no matching performed.
    """
    if not (math.isfinite(gamma) and gamma > 0):
        raise ValueError(f"gamma must be a positive finite real, got {gamma!r}")
    if case == LEGACY:
        return ApproxScheme(0.0, 1.0, 1.0, gamma=gamma, name=LEGACY)

    u = 1.0 / math.expm1(gamma)
    if case == CASE1:
        c0 = 1.0 - u - u * u
        return ApproxScheme(c0, 1.0, 1.0, gamma=gamma, name=CASE1)
    if case == CASE2:
        # unknowns (c0, c2); c1 = 1
        mat = np.array([[1.0, u * u], [0.0, gamma * (2 * u * u + 2 * u**3)]])
        rhs = np.array([1.0 - u, 2.0 - gamma * (u + u * u)])
        c0, c2 = _solve_2x2(mat, rhs)
        return ApproxScheme(c0, 1.0, c2, gamma=gamma, name=CASE2)
    if case == CASE3:
        # unknowns (c0, c1); c2 = 1
        mat = np.array([[1.0, u], [0.0, gamma * (u + u * u)]])
        rhs = np.array([1.0 - u * u, 2.0 - gamma * (2 * u * u + 2 * u**3)])
        c0, c1 = _solve_2x2(mat, rhs)
        return ApproxScheme(c0, c1, 1.0, gamma=gamma, name=CASE3)
    raise ValueError(f"unknown case {case!r}; expected one of {CASES}")


def _solve_2x2(mat: np.ndarray, rhs: np.ndarray) -> tuple[float, float]:
    if abs(np.linalg.det(mat)) < 1e-300:
        raise DegenerateSystemError("matching conditions are linearly dependent")
    x = np.linalg.solve(mat, rhs)
    return float(x[0]), float(x[1])


def matching_residuals(s: ApproxScheme) -> tuple[float, float]:
    """Residuals of the value and slope matching conditions at r0."""
    u = 1.0 / math.expm1(s.gamma)
    value = s.c0 + s.c1 * u + s.c2 * u * u - 1.0
    slope = s.gamma * (s.c1 * u + (s.c1 + 2 * s.c2) * u * u + 2 * s.c2 * u**3) - 2.0
    return value, slope


def approx_inverse_r2(s: ApproxScheme, b: float, r):
    """Evaluate the approximated 1/r^2 at r (scalar or array), r > 0."""
    if b <= 0 or not math.isfinite(b):
        raise ValueError(f"b must be a positive finite real, got {b!r}")
    r_arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(r_arr)) or np.any(r_arr <= 0):
        raise ValueError("r must be positive and finite")
    v = 1.0 / np.expm1(r_arr / b)
    r0 = s.matching_radius(b)
    out = (s.c0 + s.c1 * v + s.c2 * v * v) / (r0 * r0)
    return out if isinstance(r, np.ndarray) else float(out)


def approximation_error_report(
    s: ApproxScheme, b: float, l: int, grid: Sequence[float]
) -> list[ErrorRow]:
    """Compare l(l+1)/r^2 against its approximation on a grid.

    The common hbar^2/(2 mu) prefactor cancels in the relative error and is
    omitted.  Returns one row per grid point; empty grid gives an empty
    report.
    """
    grid_arr = np.asarray(list(grid), dtype=float)
    if grid_arr.size == 0:
        return []
    if np.any(grid_arr <= 0) or np.any(np.diff(grid_arr) <= 0):
        raise ValueError("grid must be strictly increasing and positive")
    ll1 = l * (l + 1)
    exact = ll1 / grid_arr**2
    approx = ll1 * approx_inverse_r2(s, b, grid_arr)
    abs_err = np.abs(approx - exact)
    with np.errstate(invalid="ignore", divide="ignore"):
        rel_err = np.where(exact != 0.0, abs_err / np.abs(exact), 0.0)
    return [
        ErrorRow(float(r), float(e), float(a), float(ae), float(re))
        for r, e, a, ae, re in zip(grid_arr, exact, approx, abs_err, rel_err)
    ]

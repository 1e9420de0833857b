"""Tests for the potential, its minimum, and the effective radial form."""

import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from mrbound.centrifugal import CASE1, solve_coefficients
from mrbound.potential import (
    NoInteriorMinimumError,
    PotentialParams,
    effective_potential,
    mr_potential,
    potential_minimum,
    screening_ratio,
    second_derivative_at_min,
)


@pytest.fixture
def deep_well():
    # alpha > 1 makes alpha*(alpha-1) > 0 so an interior minimum exists
    return PotentialParams(A=80.0, alpha=1.5, b=40.0)


class TestParams:
    def test_energy_scale(self):
        p = PotentialParams(A=1.0, alpha=1.5, b=2.0, mass=3.0, hbar=2.0)
        assert p.energy_scale == pytest.approx(4.0 / (2.0 * 3.0 * 4.0))

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(A=1.0, alpha=1.0, b=0.0),
            dict(A=1.0, alpha=1.0, b=-2.0),
            dict(A=1.0, alpha=1.0, b=1.0, mass=0.0),
            dict(A=1.0, alpha=1.0, b=1.0, hbar=-1.0),
            dict(A=math.nan, alpha=1.0, b=1.0),
            dict(A=1.0, alpha=math.inf, b=1.0),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            PotentialParams(**kwargs)

    def test_frozen(self, deep_well):
        with pytest.raises(AttributeError):
            deep_well.A = 2.0


class TestPotentialValues:
    def test_screening_ratio_stable_form(self):
        # v = exp(-r/b)/(1 - exp(-r/b)) evaluated naively, for moderate r
        b, r = 3.0, 2.5
        e = math.exp(-r / b)
        assert screening_ratio(b, r) == pytest.approx(e / (1.0 - e), rel=1e-14)

    def test_large_r_does_not_overflow(self):
        assert screening_ratio(1.0, 2000.0) == 0.0
        assert mr_potential(PotentialParams(A=2.0, alpha=1.5, b=1.0), 2000.0) == 0.0

    def test_alpha_symmetry(self, deep_well):
        # V is invariant under alpha -> 1 - alpha
        r = np.geomspace(0.01, 50.0, 200) * deep_well.b
        p_sym = PotentialParams(A=deep_well.A, alpha=1.0 - deep_well.alpha, b=deep_well.b)
        np.testing.assert_allclose(
            mr_potential(deep_well, r), mr_potential(p_sym, r), rtol=1e-14
        )

    def test_near_origin_inverse_square_core(self):
        p = PotentialParams(A=5.0, alpha=1.5, b=2.0)
        r = 1e-8
        expected = p.alpha * (p.alpha - 1.0) * p.hbar**2 / (2.0 * p.mass * r**2)
        assert mr_potential(p, r) == pytest.approx(expected, rel=1e-6)

    def test_scalar_vs_array(self, deep_well):
        r = np.array([1.0, 10.0, 100.0])
        arr = mr_potential(deep_well, r)
        for ri, vi in zip(r, arr):
            assert mr_potential(deep_well, float(ri)) == pytest.approx(vi, rel=1e-15)

    def test_invalid_r(self, deep_well):
        with pytest.raises(ValueError):
            mr_potential(deep_well, 0.0)
        with pytest.raises(ValueError):
            mr_potential(deep_well, np.array([1.0, -2.0]))


class TestMinimum:
    def test_location_closed_form(self, deep_well):
        m = potential_minimum(deep_well)
        aa = deep_well.alpha * (deep_well.alpha - 1.0)
        assert m.r0 == pytest.approx(
            deep_well.b * math.log(1.0 + 2.0 * aa / deep_well.A), rel=1e-14
        )

    def test_against_numerical_minimizer(self, deep_well):
        m = potential_minimum(deep_well)
        res = minimize_scalar(
            lambda r: mr_potential(deep_well, r),
            bounds=(1e-3, 20.0 * deep_well.b),
            method="bounded",
            options={"xatol": 1e-10},
        )
        assert m.r0 == pytest.approx(res.x, rel=1e-6)
        assert m.V0 == pytest.approx(res.fun, rel=1e-10)

    def test_depth_closed_form(self, deep_well):
        # V0 = -A^2 hbar^2 / (8 mu b^2 alpha (alpha - 1))
        aa = deep_well.alpha * (deep_well.alpha - 1.0)
        expected = -(deep_well.A**2) * deep_well.hbar**2 / (
            8.0 * deep_well.mass * deep_well.b**2 * aa
        )
        assert potential_minimum(deep_well).V0 == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0])
    def test_no_minimum_for_monotone_shapes(self, alpha):
        with pytest.raises(NoInteriorMinimumError):
            potential_minimum(PotentialParams(A=10.0, alpha=alpha, b=1.0))

    def test_curvature_against_finite_differences(self, deep_well):
        r0 = potential_minimum(deep_well).r0
        h = 1e-4 * r0
        num = (
            mr_potential(deep_well, r0 + h)
            - 2.0 * mr_potential(deep_well, r0)
            + mr_potential(deep_well, r0 - h)
        ) / h**2
        assert second_derivative_at_min(deep_well) == pytest.approx(num, rel=1e-5)

    def test_curvature_positive(self, deep_well):
        assert second_derivative_at_min(deep_well) > 0.0


class TestEffectivePotential:
    def test_l_zero_equals_bare(self, deep_well):
        r = np.geomspace(0.1, 100.0, 50)
        np.testing.assert_array_equal(
            effective_potential(deep_well, 0, r), mr_potential(deep_well, r)
        )

    def test_exact_centrifugal_term(self, deep_well):
        r, l = 7.3, 2
        expected = mr_potential(deep_well, r) + deep_well.hbar**2 * l * (l + 1) / (
            2.0 * deep_well.mass * r**2
        )
        assert effective_potential(deep_well, l, r) == pytest.approx(expected, rel=1e-14)

    def test_approximated_close_to_exact_near_r0(self, deep_well):
        scheme = solve_coefficients(CASE1)
        r = scheme.matching_radius(deep_well.b)
        exact = effective_potential(deep_well, 1, r)
        approx = effective_potential(deep_well, 1, r, scheme=scheme)
        assert approx == pytest.approx(exact, rel=1e-10)

    def test_negative_l_rejected(self, deep_well):
        with pytest.raises(ValueError):
            effective_potential(deep_well, -1, 1.0)

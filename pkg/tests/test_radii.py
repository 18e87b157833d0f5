import math

import numpy as np
import pytest

from boothclass import radii
from boothclass.bsclass import TildeF


def bisect_oracle(alpha, gamma):
    """Plain-float bisection on 1 - r/(1 - alpha r^2) = gamma, independent of the package."""
    lo, hi = 0.0, 1.0 - 1e-15
    for _ in range(200):
        mid = (lo + hi) / 2
        if 1 - mid / (1 - alpha * mid * mid) > gamma:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def test_h_examples():
    assert radii.h_function(0.4, 0) == 1
    assert radii.h_function(0.5, 0.5) == pytest.approx(3 / 7)
    for a in (0.2, 0.7):
        assert radii.h_function(a, 1 - 1e-12) == pytest.approx(a / (a - 1), rel=1e-9)


@pytest.mark.parametrize("alpha", np.round(np.arange(0.1, 0.95, 0.1), 2))
def test_h_monotone(alpha):
    r = np.linspace(0, 0.999, 1000)
    assert np.all(np.diff(radii.h_function(alpha, r)) < 0)


def test_radius_examples():
    r = radii.radius_starlike(0.25, 0)
    assert r.r_bisect == pytest.approx(2 * (math.sqrt(2) - 1), abs=1e-13)
    assert r.r_bisect == pytest.approx(bisect_oracle(0.25, 0), abs=1e-14)
    assert radii.radius_starlike(1e-9, 0).r == pytest.approx(1, abs=1e-8)
    assert radii.radius_starlike(1 - 1e-9, 0).r == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-8)
    assert radii.radius_starlike(0.0, 0.3).r == pytest.approx(0.7)


def test_radius_agreement_grid():
    for a in np.round(np.arange(0.05, 0.96, 0.05), 2):
        for g in np.round(np.arange(0, 0.95, 0.1), 1):
            res = radii.radius_starlike(a, g)
            assert res.agreement < 1e-10
            assert abs(res.r_bisect - bisect_oracle(a, g)) < 1e-13


def test_printed_formula_only_matches_at_gamma_zero():
    assert radii.published_formula(0.4, 0) == pytest.approx(radii.radius_starlike(0.4, 0).r)
    res = radii.radius_starlike(0.4, 0.5)
    assert abs(res.published_formula_value - res.r_bisect) > 1e-3


@pytest.mark.parametrize("alpha,gamma", [(0.25, 0), (0.5, 0.5), (0.9, 0)])
def test_sharpness(alpha, gamma):
    assert radii.sharpness_check(alpha, gamma) < 1e-10


def test_alpha_for_radius():
    assert radii.alpha_for_radius(1) == 0
    assert radii.alpha_for_radius(0.5) == 1
    g = (math.sqrt(5) - 1) / 2
    assert (1 - g) / g**2 == pytest.approx(1, abs=1e-15)
    assert radii.alpha_for_radius(0.9) == pytest.approx(0.1 / 0.81)
    with pytest.raises(ValueError):
        radii.alpha_for_radius(0)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_radius_is_boundary_of_alpha_r(alpha):
    r = radii.radius_starlike(alpha, 0).r_bisect
    assert abs(alpha - (1 - r) / r**2) < 1e-12


def test_starlikeness_flips_at_radius():
    a = 0.3
    rs = radii.radius_starlike(a, 0).r
    f = TildeF(a)
    t = np.linspace(0, 2 * np.pi, 4000, endpoint=False)
    inner = f.log_derivative((rs - 1e-3) * np.exp(1j * t))
    outer_z = (rs + 1e-3) * np.exp(1j * t)
    outer = f.log_derivative(outer_z)
    assert inner.real.min() > 0
    assert outer.real.min() < 0
    assert abs(outer_z[np.argmin(outer.real)] + (rs + 1e-3)) < 1e-2

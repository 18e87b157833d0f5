import numpy as np
import pytest

from boothclass import bsclass as bc
from boothclass import subord as sb
from boothclass.booth import CONVEXITY_THRESHOLD, eval_F_alpha
from boothclass.grid import GridSpec

COARSE = GridSpec((0.3, 0.6, 0.9, 0.99), 180)


def winding_by_argument(points, w):
    """Brute force: total argument increment along the closed polyline / 2 pi."""
    p = np.append(points, points[0])[:, None] - np.asarray(w)[None, :]
    return np.round(np.angle(p[1:] / p[:-1]).sum(axis=0) / (2 * np.pi)).astype(int)


def inside_convex(points, w):
    """Point-in-convex-polygon: every edge sees the point on its left."""
    a = points[:, None]
    b = np.roll(points, -1)[:, None]
    w = np.asarray(w)[None, :]
    cross = (b.real - a.real) * (w.imag - a.imag) - (w.real - a.real) * (b.imag - a.imag)
    return np.all(cross > 0, axis=0)


def test_circle_examples():
    c = sb.JordanCurve.circle(256)
    assert sb.winding_number(c, 0) == 1
    assert sb.winding_number(c, 2) == 0
    assert sb.winding_number(c, 1.0) is None


def test_interior_point_of_big_f_curve():
    big = bc.BigF(0.2)
    curve = sb.JordanCurve.from_function(big)
    assert sb.winding_number(curve, big(0.5)) == 1


def test_reversed_and_double_curves():
    t = 2 * np.pi * np.arange(64) / 64
    assert sb.winding_number(sb.JordanCurve(np.exp(-1j * t)), 0.1) == -1
    assert sb.winding_number(sb.JordanCurve(np.exp(2j * t)), 0.1) == 2


@pytest.mark.parametrize("make", [
    lambda: sb.JordanCurve.circle(300, 0.2 + 0.1j, 1.5),
    lambda: sb.JordanCurve.from_function(bc.BigF(0.1), 512),
    lambda: sb.JordanCurve.from_function(bc.BigF(CONVEXITY_THRESHOLD), 512),
])
def test_winding_matches_convex_oracle(make):
    curve = make()
    rng = np.random.default_rng(0)
    p = curve.points
    lo, hi = p.real.min() - 0.5, p.real.max() + 0.5
    w = rng.uniform(lo, hi, 1000) + 1j * rng.uniform(p.imag.min() - 0.5, p.imag.max() + 0.5, 1000)
    wn, ind = sb.winding_numbers(curve, w)
    expect = inside_convex(p, w).astype(int)
    assert np.array_equal(wn[~ind], expect[~ind])
    assert np.array_equal(wn[~ind], winding_by_argument(p, w)[~ind])


def test_winding_matches_argument_sum_nonconvex():
    from boothclass.booth import BoothRegion
    _, b = BoothRegion(0.8).boundary(400)  # concave for alpha > 3 - 2 sqrt 2
    curve = sb.JordanCurve(b)
    rng = np.random.default_rng(2)
    w = rng.uniform(-6, 6, 2000) + 1j * rng.uniform(-1, 1, 2000)
    wn, ind = sb.winding_numbers(curve, w)
    assert not ind.any()
    assert np.array_equal(wn, winding_by_argument(b, w))


def test_vertex_and_edge_points_are_indeterminate():
    c = sb.JordanCurve.circle(16)
    wn, ind = sb.winding_numbers(c, np.array([c.points[3], 0.5 * (c.points[0] + c.points[1]), 0.3]))
    assert list(ind) == [True, True, False]


def test_check_subordination_examples():
    big = bc.BigF(0.1)
    assert sb.check_subordination(big, big).holds
    assert sb.check_subordination(bc.divided_by_z(bc.TildeF(0.1)), big).holds
    g2 = bc.GnForm(2, 0.8)
    v = sb.check_subordination(g2.phi, bc.FAlphaForm(0.0))
    assert not v.holds
    assert bc.gn_nonmembership(2, 0.8, 0.0).not_in_class
    with pytest.raises(sb.BaseMismatch):
        sb.check_subordination(big, bc.FAlphaForm(0.1))


def test_sharpness_contact_is_indeterminate():
    for a in (0.1, 0.17):
        big = bc.BigF(a)
        curve = sb.JordanCurve.from_function(big)
        assert sb.winding_number(curve, big(1.0)) is None
        assert sb.winding_number(curve, big(-1.0)) is None


def test_members_subordinate():
    for a in (0.1, 0.17):
        for g, f in bc.random_members(a, 10, seed=4):
            assert sb.check_subordination(bc.divided_by_z(f), bc.BigF(a), COARSE).holds, g


def test_bounds_examples():
    b = sb.re_f_over_z_bounds(0.1, 0.0)
    assert b.lower == 1.0 and b.upper == 1.0
    b = sb.re_f_over_z_bounds(0.0, 0.5)
    assert b.lower == pytest.approx(np.exp(-0.5)) and b.upper == pytest.approx(np.exp(0.5))
    b = sb.re_f_over_z_bounds(0.1, 0.9)
    s = np.sqrt(0.1)
    assert b.upper == pytest.approx(((1 + 0.9 * s) / (1 - 0.9 * s)) ** (1 / (2 * s)))
    assert b.lower == pytest.approx(((1 - 0.9 * s) / (1 + 0.9 * s)) ** (1 / (2 * s)))
    assert b.published_lower == pytest.approx(((1 - 0.9 * s) / (1 + s)) ** (1 / (2 * s)))
    # the printed lower bound does not reduce to 1 at r = 0
    assert sb.re_f_over_z_bounds(0.1, 0.0).published_lower < 0.9


def test_bounds_hypothesis():
    with pytest.raises(sb.HypothesisOutOfRange):
        sb.re_f_over_z_bounds(0.3, 0.5)
    b = sb.re_f_over_z_bounds(0.3, 0.5, allow_out_of_range=True)
    assert not b.hypothesis_ok
    sb.re_f_over_z_bounds(CONVEXITY_THRESHOLD, 0.5)


def test_bounds_monotone():
    r = np.linspace(0, 0.99, 200)
    b = [sb.re_f_over_z_bounds(0.15, x) for x in r]
    lo = np.array([x.lower for x in b])
    hi = np.array([x.upper for x in b])
    assert np.all(np.diff(lo) < 0) and np.all(np.diff(hi) > 0)
    assert np.all(lo > 0)


def test_big_f_conjugate_symmetry():
    z = 0.9 * np.exp(1j * np.linspace(0, 6, 50))
    big = bc.BigF(0.12)
    assert np.allclose(big(np.conj(z)), np.conj(big(z)), rtol=0, atol=1e-15)


def test_verify_bounds_on_members():
    v = sb.verify_bounds_on_members(0.1, 10, COARSE)
    assert v.holds and v.stats["sharpness_gap"] <= 1e-9


def test_sharp_witness_equals_bounds():
    for r in (0.2, 0.9, 0.99):
        b = sb.re_f_over_z_bounds(0.1, r)
        w = sb.sharp_witness(0.1, r)
        assert abs(w["value_plus"] - b.upper) < 1e-9
        assert abs(w["value_minus"] - b.lower) < 1e-9


def test_convolution_chain():
    a = 0.1
    for g, f in bc.random_members(a, 20, seed=21):
        assert sb.convolution_chain_check(f, a, COARSE).holds, g


def test_hadamard_with_l_matches_closed_form():
    from boothclass import series as ps
    a = 0.4
    lhs = ps.hadamard(ps.f_alpha_series(a, 300), ps.log_one_over_one_minus(300))
    z = 0.95 * np.exp(1j * np.linspace(0, 6, 30))
    assert np.allclose(ps.evaluate(lhs, z), sb.f_alpha_log_integral(a)(z), atol=1e-12)


def test_phi_series_of_member():
    g = bc.SchwarzGenerator("rotation", 1.1)
    f = bc.build_member(0.5, g, 128)
    phi = sb.phi_series(f)
    z = 0.5 * np.exp(1j * np.linspace(0, 6, 12))
    assert np.allclose(phi(z), eval_F_alpha(0.5, g(z)), atol=1e-12)

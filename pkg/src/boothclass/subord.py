"""Numeric subordination against univalent targets, and Re{f(z)/z} bounds.

For univalent ``g`` on the closed disk, ``f`` is subordinate to ``g`` iff
``f(0) = g(0)`` and ``f`` maps into the region enclosed by the Jordan curve
``g(e^{i phi})``.  Region inclusion is decided by winding numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import series as ps
from .booth import CONVEXITY_THRESHOLD
from .bsclass import (
    MEMBER_ORDER,
    SeriesBacked,
    TildeF,
    divided_by_z,
    evaluate_big_f,
    log_big_f,
    random_members,
)
from .grid import HOLDS, GridSpec, Verdict, Witness, verdict_from_mask

CURVE_SAMPLES = 4096
BASE_TOL = 1e-12
BOUNDARY_MARGIN = 1e-9
SHARP_TOL = 1e-9


class BaseMismatch(ValueError):
    """``f(0) != g(0)``, so ``f`` cannot be subordinate to ``g``."""


class HypothesisOutOfRange(ValueError):
    """alpha exceeds 3 - 2 sqrt 2, where the bounds are not guaranteed."""


@dataclass(frozen=True, eq=False)
class JordanCurve:
    """Closed polyline; the edge from the last point back to the first is implicit."""

    points: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=complex).ravel()
        if p.size > 1 and p[0] == p[-1]:
            p = p[:-1]
        if p.size < 3:
            raise ValueError("a Jordan curve needs at least three points")
        object.__setattr__(self, "points", p)

    @classmethod
    def from_function(cls, g: Callable, samples: int = CURVE_SAMPLES, radius: float = 1.0) -> "JordanCurve":
        z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
        return cls(np.asarray(g(z), dtype=complex))

    @classmethod
    def circle(cls, samples: int = 256, center: complex = 0, radius: float = 1.0) -> "JordanCurve":
        return cls(center + radius * np.exp(2j * np.pi * np.arange(samples) / samples))

    @property
    def samples(self) -> int:
        return self.points.size

    @property
    def diameter(self) -> float:
        p = self.points
        return float(max(np.ptp(p.real), np.ptp(p.imag)))

    def max_mesh(self) -> float:
        return float(np.abs(np.diff(np.append(self.points, self.points[0]))).max())


def _edge_slices(ys_sorted, lo_y, hi_y, side_hi="left"):
    lo = np.searchsorted(ys_sorted, lo_y, "left")
    hi = np.searchsorted(ys_sorted, hi_y, side_hi)
    counts = np.maximum(hi - lo, 0)
    total = int(counts.sum())
    edge = np.repeat(np.arange(lo_y.size), counts)
    start = np.repeat(np.cumsum(counts) - counts, counts)
    pos = np.arange(total) - start + np.repeat(lo, counts)
    return edge, pos


def winding_numbers(curve: JordanCurve, w, margin: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Winding numbers of ``curve`` around every point of ``w``.

    Returns ``(winding, indeterminate)`` with the shape of ``w``.  A point
    is indeterminate when it lies within ``margin`` (default ``1e-9`` times
    the curve diameter) of some edge.

    The count is the signed number of upward/downward edge crossings of
    the horizontal ray to the right of each point, which equals the total
    argument increment divided by 2 pi.  Points are sorted by ordinate so
    each edge only meets the few points in its own ordinate range.
    """
    w = np.asarray(w, dtype=complex)
    shape = w.shape
    w = w.ravel()
    if margin is None:
        margin = BOUNDARY_MARGIN * curve.diameter
    a = curve.points
    b = np.roll(a, -1)
    order = np.argsort(w.imag, kind="stable")
    ys = w.imag[order]

    lo_y = np.minimum(a.imag, b.imag)
    hi_y = np.maximum(a.imag, b.imag)
    edge, pos = _edge_slices(ys, lo_y, hi_y)
    pt = order[pos]
    ae, be, pw = a[edge], b[edge], w[pt]
    left = (be.real - ae.real) * (pw.imag - ae.imag) - (pw.real - ae.real) * (be.imag - ae.imag)
    up = ae.imag < be.imag
    contrib = np.where(up & (left > 0), 1, 0) - np.where(~up & (left < 0), 1, 0)
    winding = np.bincount(pt, weights=contrib, minlength=w.size).round().astype(int)

    edge, pos = _edge_slices(ys, lo_y - margin, hi_y + margin, "right")
    pt = order[pos]
    ae, be, pw = a[edge], b[edge], w[pt]
    d = be - ae
    dd = np.abs(d) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.clip(np.where(dd > 0, np.real((pw - ae) * np.conj(d)) / dd, 0.0), 0.0, 1.0)
    dist = np.abs(pw - (ae + t * d))
    indeterminate = np.zeros(w.size, dtype=bool)
    indeterminate[pt[dist <= margin]] = True
    return winding.reshape(shape), indeterminate.reshape(shape)


def winding_number(curve: JordanCurve, w: complex, margin: float | None = None) -> int | None:
    """Winding number around a single point, or ``None`` when indeterminate."""
    wn, ind = winding_numbers(curve, np.array([w]), margin)
    return None if ind[0] else int(wn[0])


def check_subordination(f: Callable, g: Callable, grid: GridSpec | None = None,
                        curve_samples: int = CURVE_SAMPLES) -> Verdict:
    """Grid test of ``f`` subordinate to a univalent ``g``.

    ``g`` must be analytic on the closed disk; its boundary curve is sampled
    at ``|z| = 1``.  Grid values that fall in the indeterminate band around
    the curve are counted in ``stats['indeterminate']`` but are not
    violations.
    """
    grid = grid or GridSpec()
    f0, g0 = complex(f(0.0)), complex(g(0.0))
    if abs(f0 - g0) >= BASE_TOL:
        raise BaseMismatch(f"f(0) = {f0} but g(0) = {g0}")
    curve = JordanCurve.from_function(g, curve_samples)
    z = grid.points()
    fz = np.asarray(f(z), dtype=complex)
    wn, ind = winding_numbers(curve, fz)
    ok = (wn == 1) | ind
    stats = {"indeterminate": int(ind.sum()), "curve_samples": curve.samples,
             "curve_mesh": curve.max_mesh()}
    return verdict_from_mask(ok, z, fz, "f(z) not enclosed by g(boundary)", stats, grid)


@dataclass(frozen=True)
class BoundsPair:
    lower: float
    upper: float
    radius: float
    alpha: float
    published_lower: float
    hypothesis_ok: bool = True

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "r": self.radius,
            "lower": self.lower,
            "upper": self.upper,
            "published_lower": self.published_lower,
            "hypothesis_ok": self.hypothesis_ok,
        }


def _printed_lower(alpha: float, r: float) -> float:
    # ((1 - r sqrt a)/(1 + sqrt a))^(1/(2 sqrt a)), limit exp(-(r+1)/2) at a = 0
    if alpha == 0:
        return float(np.exp(-(r + 1) / 2))
    s = np.sqrt(alpha)
    return float(np.exp((np.log1p(-r * s) - np.log1p(s)) / (2 * s)))


def re_f_over_z_bounds(alpha: float, r: float, allow_out_of_range: bool = False) -> BoundsPair:
    """Sharp bounds ``F(-r) <= Re{f(z)/z} <= F(r)`` on ``|z| = r``.

    Valid for ``0 <= alpha <= 3 - 2 sqrt 2``.  With ``allow_out_of_range``
    larger alpha are computed anyway and flagged ``hypothesis_ok=False``.
    """
    alpha, r = float(alpha), float(r)
    if not 0 <= r < 1:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    ok = alpha <= CONVEXITY_THRESHOLD
    if not ok and not allow_out_of_range:
        raise HypothesisOutOfRange(f"alpha = {alpha} > 3 - 2 sqrt 2")
    if r == 0:
        lower = upper = 1.0
    else:
        lower = float(np.real(evaluate_big_f(alpha, -r)))
        upper = float(np.real(evaluate_big_f(alpha, r)))
    return BoundsPair(lower, upper, r, alpha, _printed_lower(alpha, r), ok)


def sharp_witness(alpha: float, r: float) -> dict:
    """Values of ``Re{tilde_f(z)/z}`` at ``z = +r`` and ``z = -r``."""
    big = divided_by_z(TildeF(alpha))
    return {
        "z_plus": r,
        "value_plus": float(np.real(big(r))),
        "z_minus": -r,
        "value_minus": float(np.real(big(-r))),
    }


def verify_bounds_on_members(alpha: float, trials: int = 50, grid: GridSpec | None = None,
                             seed: int = 0, order: int = MEMBER_ORDER) -> Verdict:
    """Check the Re{f/z} bounds ring by ring on random members, plus sharpness.

    Random members come from :func:`bsclass.random_members`.  The extremal
    function must meet the upper bound at ``z = r`` and the lower bound at
    ``z = -r`` to within 1e-9 on every ring.
    """
    grid = grid or GridSpec()
    alpha = float(alpha)
    if alpha > CONVEXITY_THRESHOLD:
        raise HypothesisOutOfRange(f"alpha = {alpha} > 3 - 2 sqrt 2")
    bounds = [re_f_over_z_bounds(alpha, r) for r in grid.radii]
    lo = np.array([b.lower for b in bounds])[:, None]
    hi = np.array([b.upper for b in bounds])[:, None]
    tol = 1e-12 * hi
    z = grid.points()

    worst_sharp = 0.0
    for b in bounds:
        sw = sharp_witness(alpha, b.radius)
        gap = max(abs(sw["value_plus"] - b.upper), abs(sw["value_minus"] - b.lower))
        worst_sharp = max(worst_sharp, gap)
        if gap > SHARP_TOL:
            return Verdict("ViolatedAt", Witness(complex(b.radius), complex(gap), "extremal function misses the bound"),
                           {"sharpness_gap": gap}, grid)

    fns = [("identity", None)] + [(g.kind, f) for g, f in random_members(alpha, trials, seed, order)]
    min_slack = np.inf
    for label, f in fns:
        vals = np.ones_like(z) if f is None else divided_by_z(f)(z)
        re = np.real(vals)
        ok = (re >= lo - tol) & (re <= hi + tol)
        min_slack = min(min_slack, float(np.min(np.minimum(re - lo, hi - re))))
        if not ok.all():
            return verdict_from_mask(ok, z, vals, f"Re f/z outside bounds ({label})",
                                     {"trials": trials, "sharpness_gap": worst_sharp}, grid)
    return Verdict(HOLDS, None, {"trials": trials, "sharpness_gap": worst_sharp, "min_slack": min_slack}, grid)


def f_alpha_log_integral(alpha: float):
    """Closed form of ``F_alpha * l = int_0^z F_alpha(t)/t dt = artanh(sqrt a z)/sqrt a``."""
    return lambda z: log_big_f(alpha, z)


def phi_series(f: SeriesBacked) -> ps.PowerSeries:
    """Series of ``z f'/f - 1`` for a normalized series-backed ``f``."""
    e = ps.shift_down(f.series)
    z_de = ps.PowerSeries(e.coeffs * np.arange(e.order + 1))
    return ps.div(z_de, e)


def convolution_chain_check(f: SeriesBacked, alpha: float, grid: GridSpec | None = None,
                            curve_samples: int = CURVE_SAMPLES) -> Verdict:
    """``phi * l`` subordinate to ``F_alpha * l`` with ``l(z) = log 1/(1-z)``.

    ``phi = z f'/f - 1``; both Hadamard products are integrals
    ``int_0^z (.)(t)/t dt``.  The left side is built with :func:`series.hadamard`
    and the right side is the closed form, so the two routes are independent.
    """
    phi = phi_series(f)
    lhs = ps.hadamard(phi, ps.log_one_over_one_minus(phi.order))
    return check_subordination(lambda z: ps.evaluate(lhs, z), f_alpha_log_integral(alpha),
                               grid, curve_samples)

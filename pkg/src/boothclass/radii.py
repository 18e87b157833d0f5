"""Radius of starlikeness of order gamma and the inverse radius problem.

Every member satisfies ``Re{z f'/f} >= h(|z|)`` with

    h(r) = 1 - r / (1 - alpha r^2),

so the radius of starlikeness of order gamma is the root of ``h(r) = gamma``.
Clearing denominators gives ``alpha (1-gamma) r^2 + r - (1-gamma) = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

BISECT_TOL = 1e-14
BISECT_MAX_ITER = 200
BRACKET_TOP = 1 - 1e-15


def bisect_decreasing(f: Callable[[float], float], lo: float, hi: float,
                      tol: float = BISECT_TOL, max_iter: int = BISECT_MAX_ITER) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` around the sign change of a decreasing ``f``.

    Requires ``f(lo) > 0 >= f(hi)``; returns the final bracket.
    """
    if not f(lo) > 0:
        raise ValueError(f"f(lo) must be positive, got f({lo}) = {f(lo)}")
    if f(hi) > 0:
        raise ValueError(f"f(hi) must be non-positive, got f({hi}) = {f(hi)}")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def h_function(alpha: float, r):
    """Lower bound ``1 - r/(1 - alpha r^2)`` of ``Re{z f'/f}`` on ``|z| = r``."""
    r = np.asarray(r, dtype=float)
    out = 1 - r / (1 - alpha * r * r)
    return float(out) if out.ndim == 0 else out


def published_formula(alpha: float, gamma: float) -> float:
    """The closed form as printed for the theorem, kept for auditing.

    It equals the root of ``h(r) = gamma`` only at ``gamma = 0``.
    """
    t = alpha * (1 - gamma)
    if t == 0:
        return 1.0
    return (np.sqrt(1 + 4 * t) - 1) / (2 * t)


def closed_form_radius(alpha: float, gamma: float) -> float:
    """Positive root of ``alpha (1-gamma) r^2 + r - (1-gamma) = 0``.

    Written as ``2(1-gamma) / (1 + sqrt(1 + 4 alpha (1-gamma)^2))`` which
    equals the quadratic formula and stays finite at ``alpha = 0``.
    """
    g = 1 - gamma
    return 2 * g / (1 + np.sqrt(1 + 4 * alpha * g * g))


@dataclass(frozen=True)
class RadiusResult:
    r_closed: float
    r_bisect: float
    alpha: float
    gamma: float
    published_formula_value: float

    @property
    def agreement(self) -> float:
        return abs(self.r_closed - self.r_bisect)

    @property
    def r(self) -> float:
        return self.r_bisect

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "gamma": self.gamma,
            "r_closed": self.r_closed,
            "r_bisect": self.r_bisect,
            "agreement": self.agreement,
            "published_formula_value": self.published_formula_value,
        }


def radius_starlike(alpha: float, gamma: float = 0.0) -> RadiusResult:
    """Radius of starlikeness of order ``gamma`` for the class with parameter ``alpha``.

    The bisection root of ``h(r) = gamma`` is the reference value; the
    closed form is carried alongside and should agree to about 1e-15.
    """
    alpha, gamma = float(alpha), float(gamma)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if not 0 <= gamma < 1:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma}")
    closed = float(closed_form_radius(alpha, gamma))
    if alpha == 0:
        r = 1 - gamma
    else:
        lo, hi = bisect_decreasing(lambda r: h_function(alpha, r) - gamma, 0.0, BRACKET_TOP)
        r = 0.5 * (lo + hi)
    return RadiusResult(closed, r, alpha, gamma, float(published_formula(alpha, gamma)))


def sharpness_check(alpha: float, gamma: float) -> float:
    """Residual ``|Re{1 + w/(1 - alpha w^2)} - gamma|`` at ``w = -r_s``.

    ``1 + w/(1 - alpha w^2)`` is ``z f'/f`` for the extremal function, so a
    zero residual means the radius cannot be enlarged.
    """
    w = -radius_starlike(alpha, gamma).r_bisect
    return abs((1 + w / (1 - alpha * w * w)) - gamma)


def alpha_for_radius(r: float) -> float:
    """Supremum of admissible alpha for starlikeness on ``|z| < r``.

    Every alpha in ``[0, (1-r)/r^2)`` works; the class itself needs alpha < 1,
    hence the clamp.
    """
    r = float(r)
    if not 0 < r <= 1:
        raise ValueError(f"r must lie in (0, 1], got {r}")
    return min((1 - r) / (r * r), 1.0)

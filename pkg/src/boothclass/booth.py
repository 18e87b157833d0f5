"""The Booth-lemniscate region ``D(alpha) = F_alpha(unit disk)``.

``F_alpha(z) = z / (1 - alpha z^2)`` maps the unit disk univalently onto the
domain bounded by the quartic

    (x^2 + y^2)^2 - x^2/(1-alpha)^2 - y^2/(1+alpha)^2 = 0,

which crosses the real axis at ``+-1/(1-alpha)`` and the imaginary axis at
``+-i/(1+alpha)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import GridSpec, Verdict, verdict_from_mask
from .radii import bisect_decreasing

CONVEXITY_THRESHOLD = 3 - 2 * np.sqrt(2)
POLE_TOL = 1e-14
BOUNDARY_BAND = 1e-12

INSIDE, BOUNDARY, OUTSIDE = -1, 0, 1


class PoleAtZ(ZeroDivisionError):
    pass


def _check_alpha(alpha: float, allow_one: bool = False) -> float:
    alpha = float(alpha)
    hi_ok = alpha <= 1 if allow_one else alpha < 1
    if not (0 <= alpha and hi_ok):
        raise ValueError(f"alpha must lie in [0, 1{']' if allow_one else ')'}, got {alpha}")
    return alpha


def eval_F_alpha(alpha: float, z):
    """``z / (1 - alpha z^2)``; ``alpha = 1`` is accepted away from ``z = +-1``."""
    alpha = _check_alpha(alpha, allow_one=True)
    z = np.asarray(z, dtype=complex)
    den = 1 - alpha * z * z
    if np.any(np.abs(den) < POLE_TOL):
        raise PoleAtZ(f"1 - alpha z^2 vanishes (alpha={alpha})")
    out = z / den
    return out[()] if out.ndim == 0 else out


def F_alpha_prime(alpha: float, z):
    z = np.asarray(z, dtype=complex)
    den = 1 - alpha * z * z
    return (1 + alpha * z * z) / (den * den)


def F_alpha_second(alpha: float, z):
    z = np.asarray(z, dtype=complex)
    den = 1 - alpha * z * z
    return 2 * alpha * z * (3 + alpha * z * z) / den**3


def convexity_functional(alpha: float, z):
    """``1 + z F''(z)/F'(z)`` in the simplified rational form

    ``1 + 2 alpha z^2/(1 + alpha z^2) + 4 alpha z^2/(1 - alpha z^2)``.

    Both denominators are bounded away from zero on the closed disk for
    ``alpha < 1``, so the unit circle needs no special casing.
    """
    z = np.asarray(z, dtype=complex)
    az2 = alpha * z * z
    return 1 + 2 * az2 / (1 + az2) + 4 * az2 / (1 - az2)


@dataclass(frozen=True)
class BoothRegion:
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @property
    def real_crossing(self) -> float:
        return 1 / (1 - self.alpha)

    @property
    def imag_crossing(self) -> float:
        return 1 / (1 + self.alpha)

    def quartic(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        a = self.alpha
        s = x * x + y * y
        return s * s - x * x / (1 - a) ** 2 - y * y / (1 + a) ** 2

    def _normalized(self, w):
        # quartic(w) = |w|^2 (|w|^2 - lin(w/|w|)); comparing on the unit
        # direction avoids underflow for tiny w
        w = np.asarray(w, dtype=complex)
        m = np.abs(w)
        t = np.arctan2(np.abs(w.imag), np.abs(w.real))  # first quadrant: exact symmetry
        a = self.alpha
        lin = np.cos(t) ** 2 / (1 - a) ** 2 + np.sin(t) ** 2 / (1 + a) ** 2
        return w, m * m, lin

    def classify(self, w):
        """Three-valued membership: INSIDE, BOUNDARY (indeterminate) or OUTSIDE.

        The indeterminate band ``1e-12`` is relative to the size of the terms
        in the quartic, so points near the origin are not swallowed by it.
        """
        w, s, lin = self._normalized(w)
        band = BOUNDARY_BAND * (s + lin)
        q = s - lin
        out = np.where(q < -band, INSIDE, np.where(q > band, OUTSIDE, BOUNDARY))
        out = np.where(w == 0, INSIDE, out)
        return out[()] if out.ndim == 0 else out

    def contains(self, w):
        """Strict membership: ``w == 0`` or the quartic is negative at ``w``."""
        w, s, lin = self._normalized(w)
        out = (s < lin) | (w == 0)
        return bool(out) if out.ndim == 0 else out

    def __contains__(self, w):
        return bool(self.contains(w))

    def boundary_point(self, phi):
        """``F_alpha(exp(i phi))`` written as ``((1-a) cos + i (1+a) sin) / d``."""
        phi = np.asarray(phi, dtype=float)
        a = self.alpha
        u = (1 - a) * np.cos(phi)
        v = (1 + a) * np.sin(phi)
        d = u * u + v * v
        out = (u + 1j * v) / d
        return out[()] if out.ndim == 0 else out

    def boundary(self, samples: int = 512) -> tuple[np.ndarray, np.ndarray]:
        """Angles and boundary points, ``samples`` of them, not closed."""
        phi = 2 * np.pi * np.arange(samples) / samples
        return phi, self.boundary_point(phi)

    def axis_crossings(self) -> dict:
        return {
            "real": [-self.real_crossing, self.real_crossing],
            "imag": [-self.imag_crossing, self.imag_crossing],
        }


def check_re_bounds(alpha: float, grid: GridSpec) -> Verdict:
    """Grid check of ``1/(alpha-1) < Re F_alpha(z) < 1/(1-alpha)``."""
    alpha = _check_alpha(alpha)
    z = grid.points()
    re = np.real(eval_F_alpha(alpha, z))
    lo, hi = 1 / (alpha - 1), 1 / (1 - alpha)
    ok = (re > lo) & (re < hi)
    stats = {"min": float(re.min()), "max": float(re.max()), "lower": lo, "upper": hi}
    return verdict_from_mask(ok, z, re, "Re F_alpha outside (1/(alpha-1), 1/(1-alpha))", stats, grid)


def curvature_min(alpha: float, samples: int = 4096) -> float:
    """Minimum over the unit circle of ``Re{1 + z F''/F'}``.

    A negative value means the boundary curve ``F_alpha(e^{i phi})`` is not
    convex.  ``samples`` divisible by 4 includes ``phi = pi/2`` where the
    minimum is attained.
    """
    alpha = _check_alpha(alpha)
    z = np.exp(2j * np.pi * np.arange(samples) / samples)
    return float(np.real(convexity_functional(alpha, z)).min())


def convexity_threshold(samples: int = 4096, tol: float = 1e-10) -> tuple[float, float]:
    """Bracket ``[lo, hi]`` on alpha where :func:`curvature_min` changes sign."""
    return bisect_decreasing(lambda a: curvature_min(a, samples), 0.0, 0.99, tol=tol)

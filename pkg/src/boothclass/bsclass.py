"""Members of the class BS(alpha) and grid tests for membership.

A normalized ``f`` belongs to BS(alpha) when ``z f'(z)/f(z) - 1`` is
subordinate to ``F_alpha(z) = z/(1 - alpha z^2)``.  ``F_alpha`` is univalent,
so this is the same as ``z f'/f - 1`` taking values in ``D(alpha)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import series as ps
from .booth import BoothRegion, eval_F_alpha
from .grid import GridSpec, Verdict, verdict_from_mask

SMALL_ALPHA = 1e-4
ZERO_TOL = 1e-13
MEMBER_ORDER = 512


class ZeroOfFOnGrid(ValueError):
    """``f`` vanishes at a sampled point other than the origin."""


class DegenerateModulus(ValueError):
    """``|c| == 1`` in the g_n criteria, where the endpoint ``x1`` is undefined."""


def _arr(z):
    return np.asarray(z, dtype=complex)


def _out(x):
    return x[()] if np.ndim(x) == 0 else x


def log_big_f(alpha: float, z):
    """``log F(z) = int_0^z dt/(1 - alpha t^2) = artanh(sqrt(alpha) z)/sqrt(alpha)``.

    Computed as ``(1/(2 sqrt a)) Log((1 + z sqrt a)/(1 - z sqrt a))``.  The
    Moebius factor has positive real part on the closed disk for alpha < 1,
    so the principal logarithm is continuous there.  Below ``SMALL_ALPHA``
    the odd series ``sum alpha^k z^(2k+1)/(2k+1)`` is used instead since the
    prefactor ``1/(2 sqrt a)`` amplifies roundoff.
    """
    alpha = float(alpha)
    z = _arr(z)
    if alpha >= SMALL_ALPHA:
        s = np.sqrt(alpha)
        return _out(np.log((1 + s * z) / (1 - s * z)) / (2 * s))
    z2 = z * z
    term = z.copy()
    acc = z.copy()
    k = 0
    while True:
        k += 1
        term = term * alpha * z2
        nxt = term / (2 * k + 1)
        acc = acc + nxt
        if alpha == 0 or np.max(np.abs(nxt), initial=0.0) < 1e-18:
            break
    return _out(acc)


def evaluate_big_f(alpha: float, z):
    """``F(z) = ((1 + z sqrt a)/(1 - z sqrt a))^(1/(2 sqrt a))``; ``e^z`` at alpha = 0."""
    return _out(np.exp(log_big_f(alpha, z)))


def evaluate_tilde_f(alpha: float, z):
    """The extremal function ``z F(z)``."""
    z = _arr(z)
    return _out(z * np.exp(log_big_f(alpha, z)))


class AnalyticFunction:
    """A function on the unit disk with exact value and derivative."""

    name = "analytic"

    def __call__(self, z):
        raise NotImplementedError

    def derivative(self, z):
        raise NotImplementedError

    def log_derivative(self, z):
        """``z f'(z)/f(z)``."""
        z = _arr(z)
        return _out(z * self.derivative(z) / self(z))

    def describe(self) -> dict:
        return {"kind": self.name}


@dataclass(frozen=True)
class FAlphaForm(AnalyticFunction):
    alpha: float
    name = "f_alpha"

    def __call__(self, z):
        return eval_F_alpha(self.alpha, z)

    def derivative(self, z):
        z = _arr(z)
        den = 1 - self.alpha * z * z
        return _out((1 + self.alpha * z * z) / (den * den))

    def describe(self):
        return {"kind": self.name, "alpha": self.alpha}


@dataclass(frozen=True)
class TildeF(AnalyticFunction):
    """``z ((1 + z sqrt a)/(1 - z sqrt a))^(1/(2 sqrt a))``."""

    alpha: float
    name = "tilde"

    def __call__(self, z):
        return evaluate_tilde_f(self.alpha, z)

    def derivative(self, z):
        # f' = F(z) (1 + F_alpha(z))
        z = _arr(z)
        return _out(evaluate_big_f(self.alpha, z) * (1 + z / (1 - self.alpha * z * z)))

    def describe(self):
        return {"kind": self.name, "alpha": self.alpha}


@dataclass(frozen=True)
class BigF(AnalyticFunction):
    """``F = tilde_f / z``, with ``F(0) = 1``."""

    alpha: float
    name = "bigF"

    def __call__(self, z):
        return evaluate_big_f(self.alpha, z)

    def derivative(self, z):
        z = _arr(z)
        return _out(evaluate_big_f(self.alpha, z) / (1 - self.alpha * z * z))

    def describe(self):
        return {"kind": self.name, "alpha": self.alpha}


@dataclass(frozen=True)
class SmallP(AnalyticFunction):
    """``p = F - 1``; reduces to ``e^z - 1`` at alpha = 0."""

    alpha: float
    name = "p"

    def __call__(self, z):
        return _out(np.expm1(log_big_f(self.alpha, z)))

    def derivative(self, z):
        return BigF(self.alpha).derivative(z)

    def second_derivative(self, z):
        z = _arr(z)
        den = 1 - self.alpha * z * z
        return _out(evaluate_big_f(self.alpha, z) * (1 + 2 * self.alpha * z) / (den * den))

    def describe(self):
        return {"kind": self.name, "alpha": self.alpha}


@dataclass(frozen=True)
class GnForm(AnalyticFunction):
    """``g_n(z) = z + c z^n``."""

    n: int
    c: complex
    name = "gn"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "c", complex(self.c))

    def __call__(self, z):
        z = _arr(z)
        return _out(z + self.c * z**self.n)

    def derivative(self, z):
        z = _arr(z)
        return _out(1 + self.c * self.n * z ** (self.n - 1))

    def phi(self, z):
        """``z g'/g - 1 = (n-1) c z^(n-1) / (1 + c z^(n-1))``."""
        z = _arr(z)
        u = self.c * z ** (self.n - 1)
        return _out((self.n - 1) * u / (1 + u))

    def describe(self):
        return {"kind": self.name, "n": self.n, "c": [self.c.real, self.c.imag]}


@dataclass(frozen=True, eq=False)
class SeriesBacked(AnalyticFunction):
    """Function given by a truncated Taylor series."""

    series: ps.PowerSeries
    label: str = "series"
    name = "series"

    def __post_init__(self):
        object.__setattr__(self, "_dseries", ps.derivative(self.series))

    def __call__(self, z):
        return ps.evaluate(self.series, z)

    def derivative(self, z):
        return ps.evaluate(self._dseries, z)

    def describe(self):
        return {"kind": self.name, "label": self.label, "order": self.series.order}


@dataclass(frozen=True, eq=False)
class ClosedForm(AnalyticFunction):
    """Wrap a vectorized callable and its derivative."""

    func: Callable
    deriv: Callable | None = None
    label: str = "closed"
    name = "closed"

    def __call__(self, z):
        return _out(self.func(_arr(z)))

    def derivative(self, z):
        if self.deriv is None:
            raise NotImplementedError(f"{self.label} has no derivative")
        return _out(self.deriv(_arr(z)))

    def describe(self):
        return {"kind": self.name, "label": self.label}


def divided_by_z(f: AnalyticFunction) -> AnalyticFunction:
    """``f(z)/z`` with the removable singularity at the origin handled."""
    if isinstance(f, TildeF):
        return BigF(f.alpha)
    if isinstance(f, SeriesBacked):
        return SeriesBacked(ps.shift_down(f.series), label=f"{f.label}/z")
    if isinstance(f, GnForm):
        n, c = f.n, f.c
        return ClosedForm(lambda z: 1 + c * z ** (n - 1), lambda z: c * (n - 1) * z ** (n - 2), "gn/z")

    def q(z):
        with np.errstate(divide="ignore", invalid="ignore"):
            out = f(z) / z
        return np.where(z == 0, f.derivative(np.zeros_like(z)), out)

    return ClosedForm(q, None, f"{f.name}/z")


@dataclass(frozen=True)
class SchwarzGenerator:
    """A Schwarz function ``w`` with ``w(0) = 0`` and ``|w(z)| <= |z|``.

    kinds:
      * ``rotation``: ``e^{i theta} z``
      * ``power``: ``e^{i theta} z^k``
      * ``blaschke``: ``e^{i theta} z (z + a)/(1 + conj(a) z) / (1 + |a|)``

    The Blaschke factor has modulus at most one on the disk and the extra
    ``1/(1 + |a|)`` keeps the bound valid uniformly, including ``a -> 0``.
    """

    kind: str = "rotation"
    theta: float = 0.0
    k: int = 1
    a: complex = 0j

    def __post_init__(self):
        if self.kind not in ("rotation", "power", "blaschke"):
            raise ValueError(f"unknown Schwarz generator kind {self.kind!r}")
        if self.kind == "power" and self.k < 1:
            raise ValueError("power generator needs k >= 1")
        if self.kind == "blaschke" and not abs(self.a) < 1:
            raise ValueError("blaschke generator needs |a| < 1")
        object.__setattr__(self, "a", complex(self.a))

    @property
    def unit(self) -> complex:
        return complex(np.exp(1j * self.theta))

    def __call__(self, z):
        z = _arr(z)
        if self.kind == "rotation":
            out = self.unit * z
        elif self.kind == "power":
            out = self.unit * z**self.k
        else:
            a = self.a
            out = self.unit * z * (z + a) / (1 + np.conj(a) * z) / (1 + abs(a))
        return _out(out)

    def series(self, order: int = ps.DEFAULT_ORDER) -> ps.PowerSeries:
        if self.kind == "rotation":
            return ps.PowerSeries.from_coeffs([0, self.unit], order)
        if self.kind == "power":
            c = np.zeros(order + 1, dtype=complex)
            if self.k <= order:
                c[self.k] = self.unit
            return ps.PowerSeries(c)
        a = self.a
        num = ps.PowerSeries.from_coeffs([0, a, 1], order)
        den = ps.PowerSeries.from_coeffs([1, np.conj(a)], order)
        return (num / den) * (self.unit / (1 + abs(a)))

    def compose_f_alpha(self, alpha: float, order: int = ps.DEFAULT_ORDER) -> ps.PowerSeries:
        """Series of ``q = F_alpha(w(z))``, which is subordinate to ``F_alpha``."""
        if self.kind in ("rotation", "power"):
            k = 1 if self.kind == "rotation" else self.k
            return ps.substitute_power(ps.rotate(ps.f_alpha_series(alpha, order), self.unit), k)
        w = self.series(order)
        return w / (1 - alpha * (w * w))

    @classmethod
    def random(cls, rng: np.random.Generator, max_power: int = 3,
               max_modulus: float = 0.8) -> "SchwarzGenerator":
        kind = ("rotation", "power", "blaschke")[int(rng.integers(3))]
        theta = float(rng.uniform(0, 2 * np.pi))
        if kind == "rotation":
            return cls(kind, theta)
        if kind == "power":
            return cls(kind, theta, k=int(rng.integers(1, max_power + 1)))
        a = float(rng.uniform(0, max_modulus)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        return cls(kind, theta, a=complex(a))

    def describe(self) -> dict:
        return {"kind": self.kind, "theta": self.theta, "k": self.k, "a": [self.a.real, self.a.imag]}


def build_member(alpha: float, q, order: int = MEMBER_ORDER) -> SeriesBacked:
    """``f(z) = z exp(int_0^z q(t)/t dt)`` as a series-backed function.

    ``q`` is a power series with ``q(0) = 0`` subordinate to ``F_alpha``
    (not checked), or a :class:`SchwarzGenerator` ``w`` in which case
    ``q = F_alpha(w)``.  Coefficients of ``F_alpha(w)`` decay like
    ``sqrt(alpha)^n``, so the default order keeps evaluation accurate out
    to the 0.99 ring of the default grid.
    """
    if isinstance(q, SchwarzGenerator):
        label = f"member[{q.kind}]"
        q = q.compose_f_alpha(alpha, order)
    else:
        label = "member"
        q = q.truncate(order) if q.order > order else q
    e = ps.exp_series(ps.integrate_over_t(q))
    return SeriesBacked(ps.shift_up(ps.PowerSeries.from_coeffs(e.coeffs, e.order + 1)), label=label)


def random_members(alpha: float, count: int, seed: int = 0,
                   order: int = MEMBER_ORDER) -> list[tuple[SchwarzGenerator, SeriesBacked]]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        g = SchwarzGenerator.random(rng)
        out.append((g, build_member(alpha, g, order)))
    return out


def _phi_on_grid(f: AnalyticFunction, grid: GridSpec):
    z = grid.points()
    fz = _arr(f(z))
    tiny = np.abs(fz) < ZERO_TOL
    if np.any(tiny):
        i = int(np.flatnonzero(tiny.ravel())[0])
        raise ZeroOfFOnGrid(f"|f(z)| < {ZERO_TOL} at z = {z.ravel()[i]!r}")
    w = z * _arr(f.derivative(z)) / fz
    return z, w


def _check_normalized(f: AnalyticFunction, tol: float = 1e-9):
    f0 = complex(f(0.0))
    d0 = complex(f.derivative(0.0))
    if abs(f0) > tol or abs(d0 - 1) > tol:
        raise ValueError(f"f is not normalized: f(0) = {f0}, f'(0) = {d0}")


def membership_test(f: AnalyticFunction, alpha: float, grid: GridSpec | None = None) -> Verdict:
    """Check ``z f'/f - 1 in D(alpha)`` at every grid point.

    A violation is conclusive; ``HoldsOnGrid`` is only evidence.
    """
    grid = grid or GridSpec()
    region = BoothRegion(alpha)
    _check_normalized(f)
    z, w = _phi_on_grid(f, grid)
    phi = w - 1
    ok = region.contains(phi)
    finite = np.isfinite(phi)
    ok &= finite
    q = np.where(finite, region.quartic(phi.real, phi.imag), np.inf)
    stats = {
        "max_quartic": float(q.max()),
        "re_phi_min": float(np.where(finite, phi.real, np.inf).min()),
        "re_phi_max": float(np.where(finite, phi.real, -np.inf).max()),
    }
    return verdict_from_mask(ok, z, phi, "z f'/f - 1 outside D(alpha)", stats, grid)


def starlike_strip_check(f: AnalyticFunction, alpha: float, grid: GridSpec | None = None) -> Verdict:
    """Check ``alpha/(alpha-1) < Re{z f'/f} < (2-alpha)/(1-alpha)`` on the grid.

    Necessary for membership, not sufficient.
    """
    grid = grid or GridSpec()
    alpha = float(alpha)
    _check_normalized(f)
    z, w = _phi_on_grid(f, grid)
    re = np.real(w)
    lo, hi = alpha / (alpha - 1), (2 - alpha) / (1 - alpha)
    ok = np.isfinite(re) & (re > lo) & (re < hi)
    fin = np.isfinite(re)
    stats = {
        "min": float(np.where(fin, re, np.inf).min()),
        "max": float(np.where(fin, re, -np.inf).max()),
        "lower": lo,
        "upper": hi,
    }
    return verdict_from_mask(ok, z, w, "Re{z f'/f} outside the strip", stats, grid)


NOT_IN_CLASS = "NotInClass"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class GnResult:
    status: str
    reasons: tuple[str, ...]
    x1: float
    x2: float

    @property
    def reason(self) -> str | None:
        return self.reasons[0] if self.reasons else None

    @property
    def not_in_class(self) -> bool:
        return self.status == NOT_IN_CLASS

    def to_json(self) -> dict:
        return {"status": self.status, "reason": self.reason, "reasons": list(self.reasons),
                "x1": self.x1, "x2": self.x2}


def gn_disc_endpoints(n: int, c: complex) -> tuple[float, float]:
    """Real endpoints ``x1 = |c|(n-1)/(|c|-1)``, ``x2 = |c|(n-1)/(|c|+1)`` of the image circle."""
    m = abs(complex(c))
    if m == 1:
        raise DegenerateModulus("|c| = 1 puts x1 at infinity")
    return m * (n - 1) / (m - 1), m * (n - 1) / (m + 1)


def gn_nonmembership(n: int, c: complex, alpha: float) -> GnResult:
    """Sufficient conditions (i)-(iv) under which ``z + c z^n`` is not in BS(alpha).

    All matching conditions are reported; ``Inconclusive`` when none holds.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    alpha = float(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    x1, x2 = gn_disc_endpoints(n, c)
    m = abs(complex(c))
    t2 = (2 - alpha) / (1 - alpha)
    reasons = []
    if 1 / (alpha + n * (1 - alpha)) < m < 1:
        reasons.append("i")
    if n > (3 - alpha) / (1 - alpha) and 1 / (alpha - 2 + n * (1 - alpha)) < m < 1:
        reasons.append("ii")
    if n >= t2 and m > 1:
        reasons.append("iii")
    if n < t2 and 1 < m < 1 / (2 - alpha + n * (alpha - 1)):
        reasons.append("iv")
    status = NOT_IN_CLASS if reasons else INCONCLUSIVE
    return GnResult(status, tuple(reasons), float(x1), float(x2))


def convexity_functional_p(alpha: float, z):
    """``1 + z p''/p'`` for ``p = F - 1``, in the three-term form

    ``1 + (1/(2 sqrt a) - 1) 2 sqrt a z/(1 - a z^2) + 2 sqrt a z/(1 - sqrt a z)``.
    At alpha = 0 the limit ``1 + z`` is used.
    """
    z = _arr(z)
    if alpha == 0:
        return _out(1 + z)
    s = np.sqrt(alpha)
    return _out(1 + (1 / (2 * s) - 1) * (2 * s * z / (1 - alpha * z * z)) + 2 * s * z / (1 - s * z))


def k_alpha(alpha: float) -> float:
    """``K(a) = 1 + (1 - 2 sqrt a)/(a - 1) - 2 sqrt a/(1 + sqrt a)``; ``K(0) = 0``."""
    if alpha == 0:
        return 0.0
    s = np.sqrt(alpha)
    return float(1 + (1 - 2 * s) / (alpha - 1) - 2 * s / (1 + s))


def convexity_check_p(alpha: float, samples: int = 1024, n_radii: int = 64,
                      r_max: float = 1 - 1e-6) -> tuple[float, float]:
    """Minimum of ``Re{1 + z p''/p'}`` over a polar grid, and ``K(alpha)``.

    The real part is harmonic, so the minimum sits on the outermost ring;
    ``r_max`` defaults to just inside the unit circle.
    """
    alpha = float(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    radii = np.linspace(r_max / n_radii, r_max, n_radii)[:, None]
    z = radii * np.exp(2j * np.pi * np.arange(samples) / samples)[None, :]
    grid_min = float(np.real(convexity_functional_p(alpha, z)).min())
    return grid_min, k_alpha(alpha)

"""Truncated power series about the origin.

A :class:`PowerSeries` stores ``c_0 .. c_N`` as a complex numpy array and
all arithmetic is carried out modulo ``z**(N+1)``.  Operands of different
orders are padded with zeros up to the larger order, i.e. the shorter one is
treated as a polynomial.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

DEFAULT_ORDER = 64
UNIT_TOL = 1e-14


class DivisionByNonUnit(ZeroDivisionError):
    """Divisor series has a (numerically) vanishing constant term."""


class NonzeroConstantTerm(ValueError):
    """Operation requires a series with zero constant term."""


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a power series needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "PowerSeries":
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is not None:
            out = np.zeros(order + 1, dtype=complex)
            n = min(order + 1, c.size)
            out[:n] = c[:n]
            c = out
        return cls(c)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls.from_coeffs([1.0], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """The series of ``z``."""
        return cls.from_coeffs([0.0, 1.0], order)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs(self.coeffs, order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={self.coeffs[:6]!r}{'...' if self.order > 5 else ''})"

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if np.isscalar(other):
            return PowerSeries(self.coeffs * other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if np.isscalar(other):
            return PowerSeries(self.coeffs / other)
        return div(self, other)

    def __rtruediv__(self, other):
        return div(_coerce(other, self.order), self)

    def __call__(self, z):
        return evaluate(self, z)

    def allclose(self, other: "PowerSeries", atol: float = 1e-12) -> bool:
        a, b = _pad(self, other)
        return bool(np.all(np.abs(a - b) <= atol))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "PowerSeries":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        order = int(data["order"])
        if len(coeffs) != order + 1:
            raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
        return cls(np.array(coeffs, dtype=complex))

    @classmethod
    def load(cls, path) -> "PowerSeries":
        return cls.from_json(Path(path).read_text())


def _coerce(x, order: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    return PowerSeries.from_coeffs([x], order)


def _pad(a: PowerSeries, b: PowerSeries) -> tuple[np.ndarray, np.ndarray]:
    n = max(a.order, b.order) + 1
    ca = np.zeros(n, dtype=complex)
    cb = np.zeros(n, dtype=complex)
    ca[: a.coeffs.size] = a.coeffs
    cb[: b.coeffs.size] = b.coeffs
    return ca, cb


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    ca, cb = _pad(a, b)
    return PowerSeries(ca + cb)


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    ca, cb = _pad(a, b)
    return PowerSeries(np.convolve(ca, cb)[: ca.size])


def div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Quotient ``q`` with ``q*b == a`` modulo ``z**(N+1)``.

    Solved by forward substitution,
    ``q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0``.
    """
    ca, cb = _pad(a, b)
    b0 = cb[0]
    if abs(b0) <= UNIT_TOL:
        raise DivisionByNonUnit(f"constant term of divisor is {b0!r}")
    q = np.zeros_like(ca)
    for k in range(ca.size):
        # cb[k:0:-1] = b_k .. b_1 pairs with q_0 .. q_{k-1}
        q[k] = (ca[k] - np.dot(cb[k:0:-1], q[:k])) / b0
    return PowerSeries(q)


def derivative(a: PowerSeries) -> PowerSeries:
    """Term-by-term derivative.  The result has order ``N-1`` (order 0 stays 0)."""
    if a.order == 0:
        return PowerSeries(np.zeros(1, dtype=complex))
    k = np.arange(1, a.order + 1)
    return PowerSeries(a.coeffs[1:] * k)


def integrate(a: PowerSeries) -> PowerSeries:
    """Antiderivative vanishing at 0; the result has order ``N+1``."""
    k = np.arange(1, a.order + 2)
    return PowerSeries(np.concatenate([[0.0], a.coeffs / k]))


def integrate_over_t(q: PowerSeries) -> PowerSeries:
    """Series of ``int_0^z q(t)/t dt``: coefficient ``k`` becomes ``q_k / k``."""
    if q.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"q(0) = {q.coeffs[0]!r}, the integrand q(t)/t is singular")
    out = np.zeros_like(q.coeffs)
    k = np.arange(1, q.order + 1)
    out[1:] = q.coeffs[1:] / k
    return PowerSeries(out)


def exp_series(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for ``a(0) == 0`` from ``E' = a' E``.

    Coefficientwise this is ``k E_k = sum_{j=1..k} j a_j E_{k-j}``.
    """
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"a(0) = {a.coeffs[0]!r}; exp_series needs a(0) == 0 exactly")
    n = a.coeffs.size
    ja = a.coeffs * np.arange(n)
    e = np.zeros(n, dtype=complex)
    e[0] = 1.0
    for k in range(1, n):
        e[k] = np.dot(ja[k:0:-1], e[:k]) / k
    return PowerSeries(e)


def log_series(e: PowerSeries) -> PowerSeries:
    """Logarithm of a series with ``e(0) == 1``; inverse of :func:`exp_series`."""
    if abs(e.coeffs[0] - 1) > UNIT_TOL:
        raise ValueError(f"log_series needs e(0) == 1, got {e.coeffs[0]!r}")
    n = e.order
    if n == 0:
        return PowerSeries.zero(0)
    # z e'/e, then divide coefficient k by k
    z_de = PowerSeries(e.coeffs * np.arange(n + 1))
    out = integrate_over_t(div(z_de, e)).coeffs.copy()
    out[0] = 0.0
    return PowerSeries(out)


def hadamard(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Coefficientwise (Hadamard) product ``sum a_k b_k z^k``."""
    n = min(a.order, b.order) + 1
    return PowerSeries(a.coeffs[:n] * b.coeffs[:n])


def evaluate(a: PowerSeries, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z) + a.coeffs[-1]
    for c in a.coeffs[-2::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def rotate(a: PowerSeries, omega: complex) -> PowerSeries:
    """Series of ``a(omega z)``: coefficient ``k`` is scaled by ``omega**k``."""
    return PowerSeries(a.coeffs * complex(omega) ** np.arange(a.order + 1))


def substitute_power(a: PowerSeries, k: int) -> PowerSeries:
    """Series of ``a(z**k)``, truncated at the order of ``a``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = np.zeros_like(a.coeffs)
    m = a.order // k
    out[: m * k + 1 : k] = a.coeffs[: m + 1]
    return PowerSeries(out)


def shift_down(a: PowerSeries) -> PowerSeries:
    """Series of ``a(z)/z`` for ``a(0) == 0``; order drops by one."""
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm("a(z)/z needs a(0) == 0")
    return PowerSeries(a.coeffs[1:] if a.order > 0 else np.zeros(1, dtype=complex))


def shift_up(a: PowerSeries) -> PowerSeries:
    """Series of ``z a(z)``, keeping the order."""
    return PowerSeries(np.concatenate([[0.0], a.coeffs[:-1]]))


def geometric(order: int = DEFAULT_ORDER) -> PowerSeries:
    """``1/(1-z)``, the unit of the Hadamard product."""
    return PowerSeries(np.ones(order + 1, dtype=complex))


def log_one_over_one_minus(order: int = DEFAULT_ORDER) -> PowerSeries:
    """``l(z) = log(1/(1-z)) = sum_{n>=1} z^n / n``."""
    c = np.zeros(order + 1, dtype=complex)
    c[1:] = 1.0 / np.arange(1, order + 1)
    return PowerSeries(c)


def f_alpha_series(alpha: float, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series of ``z/(1 - alpha z^2) = sum alpha^(n-1) z^(2n-1)``."""
    c = np.zeros(order + 1, dtype=complex)
    odd = np.arange(1, order + 1, 2)
    c[odd] = float(alpha) ** ((odd - 1) // 2)
    return PowerSeries(c)

"""Sampling grids on the unit disk and grid-test verdicts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

HOLDS = "HoldsOnGrid"
VIOLATED = "ViolatedAt"

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_ANGLES = 720


@dataclass(frozen=True)
class GridSpec:
    """Polar grid ``r_i * exp(2 pi i k / angular_samples)``.

    Points are ordered lexicographically by (radius, angle); every scan in
    this package reports the first violation in that order, so verdicts do
    not depend on how the evaluation was vectorized.
    """

    radii: tuple[float, ...] = DEFAULT_RADII
    angular_samples: int = DEFAULT_ANGLES
    boundary_margin: float = 1e-9

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise ValueError("grid needs at least one radius")
        if any(not 0 < r < 1 for r in radii):
            raise ValueError(f"radii must lie in (0, 1): {radii}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if self.angular_samples < 16:
            raise ValueError("angular_samples must be >= 16")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse ``"r1,r2,...:angles"`` (the angle count is optional)."""
        radii_part, _, angles = text.partition(":")
        radii = tuple(float(r) for r in radii_part.split(",") if r.strip())
        if angles.strip():
            return cls(radii, int(angles))
        return cls(radii)

    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angular_samples) / self.angular_samples

    def points(self) -> np.ndarray:
        """Complex array of shape ``(len(radii), angular_samples)``."""
        r = np.asarray(self.radii)[:, None]
        return r * np.exp(1j * self.angles())[None, :]

    def ring(self, i: int) -> np.ndarray:
        return self.radii[i] * np.exp(1j * self.angles())

    @property
    def size(self) -> int:
        return len(self.radii) * self.angular_samples

    def describe(self) -> dict:
        return {"radii": list(self.radii), "angular_samples": self.angular_samples}


def unit_disk_cover(n_radii: int = 100, angular_samples: int = 100, r_max: float = 0.999) -> GridSpec:
    """Evenly spaced radii in ``(0, r_max]``."""
    return GridSpec(tuple(np.linspace(r_max / n_radii, r_max, n_radii)), angular_samples)


@dataclass(frozen=True)
class Witness:
    z: complex
    value: complex
    reason: str


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Witness | None = None
    stats: dict[str, Any] = field(default_factory=dict)
    grid: GridSpec | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        w = self.witness
        return {
            "status": self.status,
            "witness_z": None if w is None else [w.z.real, w.z.imag],
            "witness_value": None if w is None else [w.value.real, w.value.imag],
            "reason": None if w is None else w.reason,
            "grid": None if self.grid is None else self.grid.describe(),
            "stats": self.stats,
        }


def verdict_from_mask(ok, z, values, reason: str, stats: dict | None = None,
                      grid: GridSpec | None = None) -> Verdict:
    """Build a verdict from a boolean mask over grid points.

    ``ok``, ``z`` and ``values`` share a shape whose C-order flattening is
    the lexicographic scan order.
    """
    ok = np.asarray(ok, dtype=bool).ravel()
    stats = dict(stats or {})
    stats.setdefault("points", int(ok.size))
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return Verdict(HOLDS, None, stats, grid)
    i = int(bad[0])
    stats["violations"] = int(bad.size)
    zi = complex(np.asarray(z).ravel()[i])
    vi = complex(np.asarray(values).ravel()[i])
    return Verdict(VIOLATED, Witness(zi, vi, reason), stats, grid)

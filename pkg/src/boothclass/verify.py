"""Executable checks of the package's headline numeric claims.

Each ``check_*`` function runs one criterion and returns a
:class:`CheckResult`; :func:`run_suite` groups them by topic.  The CLI
``verify`` command and the acceptance tests both go through here.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import series as ps
from .booth import CONVEXITY_THRESHOLD, BoothRegion, check_re_bounds, convexity_threshold, eval_F_alpha
from .bsclass import (
    NOT_IN_CLASS,
    BigF,
    GnForm,
    TildeF,
    build_member,
    convexity_check_p,
    divided_by_z,
    gn_nonmembership,
    k_alpha,
    membership_test,
    random_members,
)
from .grid import GridSpec, unit_disk_cover
from .radii import radius_starlike, sharpness_check
from .subord import JordanCurve, check_subordination, re_f_over_z_bounds, verify_bounds_on_members, winding_number

GOLDEN = (math.sqrt(5) - 1) / 2
GN_GRID = GridSpec(GridSpec().radii + (0.999,), 1024)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name} ({self.seconds:.3f} s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "seconds": self.seconds, "detail": self.detail}


def _timed(number: int, name: str, body: Callable[[], tuple[bool, dict]]) -> CheckResult:
    t0 = time.perf_counter()
    passed, detail = body()
    return CheckResult(number, name, bool(passed), detail, time.perf_counter() - t0)


def check_golden_ratio_limit(seed: int = 0) -> CheckResult:
    def body():
        t0 = time.perf_counter()
        r_hi = radius_starlike(1 - 1e-8, 0.0).r_bisect
        r_lo = radius_starlike(1e-8, 0.0).r_bisect
        elapsed = time.perf_counter() - t0
        ok = abs(r_hi - 0.6180339887) <= 1e-6 and abs(r_lo - 1) <= 1e-6 and elapsed < 0.010
        return ok, {"r_alpha_to_1": r_hi, "r_alpha_to_0": r_lo, "golden": GOLDEN, "elapsed": elapsed}
    return _timed(1, "golden-ratio limit of the radius of starlikeness", body)


def check_radius_oracle(seed: int = 0) -> CheckResult:
    def body():
        t0 = time.perf_counter()
        worst_agree = worst_sharp = 0.0
        alphas = np.round(np.arange(0.05, 0.951, 0.05), 10)
        gammas = np.round(np.arange(0.0, 0.91, 0.1), 10)
        for a in alphas:
            for g in gammas:
                worst_agree = max(worst_agree, radius_starlike(a, g).agreement)
                worst_sharp = max(worst_sharp, sharpness_check(a, g))
        elapsed = time.perf_counter() - t0
        ok = worst_agree < 1e-10 and worst_sharp < 1e-10 and elapsed < 1.0
        return ok, {"max_agreement": worst_agree, "max_sharpness_residual": worst_sharp,
                    "pairs": int(alphas.size * gammas.size), "elapsed": elapsed}
    return _timed(2, "closed-form radius vs bisection oracle", body)


def check_extremal_coefficients(seed: int = 0) -> CheckResult:
    def body():
        worst = 0.0
        coeffs = {}
        for a in (0.0, 0.1, 0.5, 0.9):
            f = build_member(a, ps.f_alpha_series(a, 8), order=8)
            c = f.series.coeffs[1:5]  # coefficients of f(z)/z
            expect = np.array([1, 1, 0.5, (a + 0.5) / 3])
            worst = max(worst, float(np.abs(c - expect).max()))
            coeffs[str(a)] = [float(v.real) for v in c]
        return worst <= 1e-12, {"max_error": worst, "coeffs": coeffs}
    return _timed(3, "Taylor coefficients of F = tilde_f / z", body)


def check_membership_soundness(seed: int = 0) -> CheckResult:
    def body():
        t0 = time.perf_counter()
        failures = []
        for j, a in enumerate((0.05, 0.1, 0.3, 0.7)):
            for i, (g, f) in enumerate(random_members(a, 25, seed + j)):
                v = membership_test(f, a)
                if not v.holds:
                    failures.append({"alpha": a, "index": i, "generator": g.describe()})
            if not membership_test(TildeF(a), a).holds:
                failures.append({"alpha": a, "generator": "tilde"})
        elapsed = time.perf_counter() - t0
        return not failures and elapsed < 20, {"members": 100, "failures": failures, "elapsed": elapsed}
    return _timed(4, "built members pass the membership test", body)


def draw_gn(condition: str, rng: np.random.Generator) -> tuple[int, complex, float]:
    """Random ``(n, c, alpha)`` satisfying one of conditions (i)-(iv).

    ``|c|`` is drawn from the central 80% of the admissible interval so the
    escape from D(alpha) is large enough for a finite grid to see.
    """
    t = float(rng.uniform(0.1, 0.9))
    arg = np.exp(1j * rng.uniform(0, 2 * np.pi))
    if condition == "i":
        alpha = float(rng.uniform(0, 0.9))
        n = int(rng.integers(2, 9))
        lo = 1 / (alpha + n * (1 - alpha))
        m = lo + t * (1 - lo)
    elif condition == "ii":
        alpha = float(rng.uniform(0, 0.6))
        n_min = math.floor((3 - alpha) / (1 - alpha)) + 1
        n = int(rng.integers(n_min, n_min + 5))
        lo = 1 / (alpha - 2 + n * (1 - alpha))
        m = lo + t * (1 - lo)
    elif condition == "iii":
        alpha = float(rng.uniform(0, 0.8))
        n_min = math.ceil((2 - alpha) / (1 - alpha))
        n = int(rng.integers(n_min, n_min + 5))
        m = 1 + 4 * t
    elif condition == "iv":
        alpha = float(rng.uniform(0.1, 0.95))
        t2 = (2 - alpha) / (1 - alpha)
        n_max = math.ceil(t2) - 1
        n = int(rng.integers(2, n_max + 1))
        hi = 1 / (2 - alpha + n * (alpha - 1))
        m = 1 + t * (hi - 1)
    else:
        raise ValueError(condition)
    return n, complex(m * arg), alpha


def check_gn_theorem(seed: int = 0) -> CheckResult:
    def body():
        rng = np.random.default_rng(seed)
        failures = []
        counts = {}
        for cond in ("i", "ii", "iii", "iv"):
            hits = 0
            for _ in range(50):
                n, c, alpha = draw_gn(cond, rng)
                res = gn_nonmembership(n, c, alpha)
                v = membership_test(GnForm(n, c), alpha, GN_GRID)
                if res.status == NOT_IN_CLASS and cond in res.reasons and not v.holds:
                    hits += 1
                else:
                    failures.append({"condition": cond, "n": n, "c": [c.real, c.imag], "alpha": alpha,
                                     "status": res.status, "reasons": list(res.reasons), "grid": v.status})
            counts[cond] = hits
        return not failures, {"detected": counts, "failures": failures[:10]}
    return _timed(5, "z + c z^n non-membership conditions (i)-(iv)", body)


CONVEXITY_ALPHAS = (0.01, 0.1, 0.1715, 0.5, 0.9)


def check_convexity_p(seed: int = 0) -> CheckResult:
    def body():
        rows = {}
        ok = k_alpha(0.0) == 0.0
        for a in CONVEXITY_ALPHAS:
            gmin, k = convexity_check_p(a)
            row_ok = gmin > 0 and gmin >= k - 1e-9
            rows[str(a)] = {"grid_min": gmin, "K": k, "ok": row_ok}
            ok = ok and row_ok
        return ok, {"K0": k_alpha(0.0), "rows": rows}
    return _timed(6, "convexity of F - 1 against K(alpha)", body)


def check_curvature_threshold(seed: int = 0) -> CheckResult:
    def body():
        lo, hi = convexity_threshold(4096)
        mid = 0.5 * (lo + hi)
        ok = lo - 1e-6 <= CONVEXITY_THRESHOLD <= hi + 1e-6 and abs(mid - CONVEXITY_THRESHOLD) < 1e-6
        return ok, {"bracket": [lo, hi], "target": CONVEXITY_THRESHOLD, "error": abs(mid - CONVEXITY_THRESHOLD)}
    return _timed(7, "boundary convexity switches at 3 - 2 sqrt 2", body)


def check_f_over_z_subordination(seed: int = 0) -> CheckResult:
    def body():
        failures = []
        indeterminate = {}
        for j, a in enumerate((0.1, 0.17)):
            big = BigF(a)
            for i, (g, f) in enumerate(random_members(a, 50, seed + 100 + j)):
                if not check_subordination(divided_by_z(f), big).holds:
                    failures.append({"alpha": a, "index": i, "generator": g.describe()})
            curve = JordanCurve.from_function(big)
            ends = [winding_number(curve, complex(big(z))) for z in (1.0, -1.0)]
            indeterminate[str(a)] = ends
            if any(e is not None for e in ends):
                failures.append({"alpha": a, "sharpness": ends})
        return not failures, {"members": 100, "failures": failures, "endpoint_winding": indeterminate}
    return _timed(8, "f(z)/z subordinate to F(z)", body)


def check_re_f_over_z_bounds(seed: int = 0) -> CheckResult:
    def body():
        v = verify_bounds_on_members(0.1, 50, seed=seed + 200)
        b0 = re_f_over_z_bounds(0.1, 0.0)
        ok = v.holds and b0.lower == 1.0 and b0.upper == 1.0 and v.stats["sharpness_gap"] <= 1e-9
        return ok, {"status": v.status, "stats": v.stats, "r0": [b0.lower, b0.upper]}
    return _timed(9, "sharp bounds for Re f(z)/z", body)


def check_booth_region(seed: int = 0) -> CheckResult:
    def body():
        rng = np.random.default_rng(seed)
        detail = {}
        ok = True
        for a in (0.0, 1 / 3, 0.5, 0.9):
            reg = BoothRegion(a)
            xs = np.linspace(-1.2 * reg.real_crossing, 1.2 * reg.real_crossing, 200)
            x, y = np.meshgrid(xs, xs)
            inside = reg.contains(x + 1j * y)
            sym = bool(np.array_equal(inside, reg.contains(-x + 1j * y))
                       and np.array_equal(inside, reg.contains(x - 1j * y)))
            _, b = reg.boundary(256)
            s = b.real**2 + b.imag**2
            gx = 4 * s * b.real - 2 * b.real / (1 - a) ** 2
            gy = 4 * s * b.imag - 2 * b.imag / (1 + a) ** 2
            resid = float(np.max(np.abs(reg.quartic(b.real, b.imag)) / np.hypot(gx, gy)))
            z = np.sqrt(rng.uniform(0, 1, 10_000)) * np.exp(2j * np.pi * rng.uniform(0, 1, 10_000))
            img = bool(np.all(reg.contains(eval_F_alpha(a, z))))
            row_ok = sym and resid < 1e-9 and img
            ok = ok and row_ok
            detail[f"{a:.4f}"] = {"symmetric": sym, "boundary_residual": resid, "images_inside": img}
        return ok, detail
    return _timed(10, "Booth region symmetry, boundary and image", body)


def check_re_f_alpha_bounds(seed: int = 0) -> CheckResult:
    def body():
        grid = unit_disk_cover(100, 100, 0.999)
        detail = {}
        ok = True
        for a in (0.1, 0.5, 0.9):
            v = check_re_bounds(a, grid)
            detail[str(a)] = {"status": v.status, "min": v.stats["min"], "max": v.stats["max"]}
            ok = ok and v.holds
        near = {}
        for a in (0.1, 0.5):
            val = float(np.real(eval_F_alpha(a, 0.999)))
            rel = abs(val - 1 / (1 - a)) * (1 - a)
            near[str(a)] = rel
            ok = ok and rel < 0.01
        detail["relative_gap_at_0.999"] = near
        return ok, detail
    return _timed(11, "real-part bounds of F_alpha", body)


SUITES: dict[str, tuple[Callable[[int], CheckResult], ...]] = {
    "radii": (check_golden_ratio_limit, check_radius_oracle),
    "class": (check_extremal_coefficients, check_membership_soundness, check_gn_theorem, check_convexity_p),
    "booth": (check_curvature_threshold, check_booth_region, check_re_f_alpha_bounds),
    "bounds": (check_f_over_z_subordination, check_re_f_over_z_bounds),
}
SUITES["all"] = tuple(sorted((c for k in ("radii", "class", "booth", "bounds") for c in SUITES[k]),
                             key=lambda c: c.__code__.co_firstlineno))


def run_suite(name: str = "all", seed: int = 0) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [check(seed) for check in SUITES[name]]

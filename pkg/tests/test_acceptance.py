"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line."""
import subprocess
import sys
import time

import pytest

from boothclass import verify
from boothclass.bsclass import convexity_check_p, k_alpha

from conftest import ACCEPTANCE_LINES


def record(result: verify.CheckResult):
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail


def test_01_golden_ratio_limit():
    record(verify.check_golden_ratio_limit())


def test_02_radius_oracle_agreement():
    record(verify.check_radius_oracle())


def test_03_extremal_coefficients():
    record(verify.check_extremal_coefficients())


def test_04_membership_soundness():
    record(verify.check_membership_soundness())


def test_05_gn_theorem():
    record(verify.check_gn_theorem())


@pytest.mark.parametrize("alpha", verify.CONVEXITY_ALPHAS)
def test_06_convexity_of_p(alpha):
    gmin, k = convexity_check_p(alpha)
    ok = gmin > 0 and gmin >= k - 1e-9
    line = f"[{'PASS' if ok else 'FAIL'}]  6 alpha={alpha}: grid_min={gmin:.6g} K={k:.6g}"
    ACCEPTANCE_LINES.append(line)
    assert gmin > 0
    assert gmin >= k - 1e-9, f"grid minimum {gmin} below K(alpha) = {k}"


def test_06_k_zero():
    assert k_alpha(0.0) == 0.0


def test_07_curvature_threshold():
    record(verify.check_curvature_threshold())


def test_08_f_over_z_subordination():
    record(verify.check_f_over_z_subordination())


def test_09_re_f_over_z_bounds():
    record(verify.check_re_f_over_z_bounds())


def test_10_booth_region():
    record(verify.check_booth_region())


def test_11_re_f_alpha_bounds():
    record(verify.check_re_f_alpha_bounds())


@pytest.fixture(scope="module")
def suite_run():
    t0 = time.perf_counter()
    p = subprocess.run([sys.executable, "-m", "boothclass", "verify", "--suite", "all"],
                       capture_output=True, text=True)
    return p, time.perf_counter() - t0


def test_12_verify_suite_runtime(suite_run):
    p, elapsed = suite_run
    ACCEPTANCE_LINES.append(f"[{'PASS' if elapsed < 60 else 'FAIL'}] 12 verify --suite all runtime {elapsed:.1f} s (< 60 s)")
    assert elapsed < 60


def test_12_verify_suite_exit_code(suite_run):
    p, _ = suite_run
    ACCEPTANCE_LINES.append(f"[{'PASS' if p.returncode == 0 else 'FAIL'}] 12 verify --suite all exit code {p.returncode}")
    assert p.returncode == 0, p.stderr

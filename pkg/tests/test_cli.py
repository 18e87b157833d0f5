import io
import json
import subprocess
import sys

import numpy as np
import pytest

from boothclass import cli
from boothclass.series import PowerSeries


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def test_parse_complex():
    assert cli.parse_complex("0.8") == 0.8
    assert cli.parse_complex("0.5-0.25i") == 0.5 - 0.25j
    assert cli.parse_complex("2i") == 2j
    assert cli.parse_complex("-i") == -1j
    with pytest.raises(cli.UsageError):
        cli.parse_complex("abc")


def test_region_csv_fig1():
    code, out = run("region", "--alpha", "0.3333", "--format", "csv", "--samples", "64")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "phi,x,y" and len(lines) == 65
    phi, x, y = map(float, lines[1].split(","))
    assert phi == 0 and x == pytest.approx(1.5, abs=1e-3) and y == 0


def test_region_json_and_svg():
    code, out = run("region", "--alpha", "0.5", "--format", "json", "--samples", "16")
    data = json.loads(out)
    assert data["axis_crossings"]["real"] == [-2, 2]
    assert data["axis_crossings"]["imag"][1] == pytest.approx(2 / 3)
    code, out = run("region", "--alpha", "0.5", "--format", "svg")
    assert out.startswith("<svg") and out.count("<path") == 1


def test_radius():
    code, out = run("radius", "--alpha", "0.25")
    data = json.loads(out)
    assert code == 0
    assert data["r_bisect"] == pytest.approx(0.828427, abs=1e-6)
    assert set(data) >= {"r_closed", "r_bisect", "agreement", "published_formula_value"}
    data = json.loads(run("radius", "--alpha", "0.5", "--order", "0.5")[1])
    assert data["agreement"] < 1e-10 and abs(data["published_formula_value"] - data["r_bisect"]) > 1e-3


def test_gn_exit_codes():
    code, out = run("gn", "--n", "2", "--c", "0.8", "--alpha", "0")
    assert code == 1 and json.loads(out)["reason"] == "i"
    code, out = run("gn", "--n", "2", "--c", "0.3", "--alpha", "0")
    assert code == 0 and json.loads(out)["status"] == "Inconclusive"
    assert run("gn", "--n", "2", "--c", "1", "--alpha", "0")[0] == 2


def test_member_specs(tmp_path):
    assert run("member", "id", "--alpha", "0.3", "--grid", "0.5,0.9:32")[0] == 0
    assert run("member", "tilde:alpha=0.2", "--alpha", "0.2", "--grid", "0.5,0.99:64")[0] == 0
    code, out = run("member", "gn:n=2,c=0.8", "--alpha", "0")
    data = json.loads(out)
    assert code == 1 and data["status"] == "ViolatedAt" and data["witness_z"] is not None
    assert set(data) >= {"status", "witness_z", "witness_value", "reason", "grid"}
    code, out = run("member", "built:alpha=0.1,omega=0.7071067811865476+0.7071067811865476i", "--alpha", "0.1")
    assert code == 0
    s = PowerSeries.from_coeffs([0, 1, 0.5], 2)
    path = tmp_path / "s.json"
    path.write_text(json.dumps(s.to_json()))
    assert run("member", f"series:@{path}", "--alpha", "0.5", "--grid", "0.5:32")[0] in (0, 1)
    assert run("member", "nope", "--alpha", "0.5")[0] == 2
    assert run("member", "gn:n=2", "--alpha", "0.5")[0] == 2


def test_grid_env(monkeypatch):
    monkeypatch.setenv(cli.GRID_ENV, "0.2,0.4:20")
    data = json.loads(run("member", "id", "--alpha", "0.3")[1])
    assert data["grid"] == {"radii": [0.2, 0.4], "angular_samples": 20}


def test_build_roundtrip(tmp_path):
    code, out = run("build", "--alpha", "0.3", "--terms", "6")
    s = PowerSeries.from_json(out)
    assert np.allclose(s.coeffs[1:5], [1, 1, 0.5, 0.8 / 3])
    assert run("build", "--alpha", "0.3", "--omega", "2")[0] == 2


def test_bounds_output():
    data = json.loads(run("bounds", "--alpha", "0.1", "--r", "0.5")[1])
    assert data["sharp_witness"]["value_plus"] == pytest.approx(data["upper"])
    assert data["sharp_witness"]["value_minus"] == pytest.approx(data["lower"])
    assert "published_lower" in data


def test_alpha_for_radius_and_curvature():
    assert json.loads(run("alpha-for-radius", "--r", "0.5")[1])["alpha_sup"] == 1
    assert run("curvature", "--alpha", "0.1")[0] == 0
    assert run("curvature", "--alpha", "0.3")[0] == 1
    data = json.loads(run("convexity", "--alpha", "0.25")[1])
    assert data["K_alpha"] == pytest.approx(1 / 3) and data["grid_min"] >= 1 / 3 - 1e-9


def test_usage_errors():
    assert run()[0] == 2
    assert run("radius")[0] == 2
    assert run("radius", "--alpha", "1.5")[0] == 2
    assert run("verify", "--suite", "nope")[0] == 2


def test_floats_have_17_digits():
    out = run("radius", "--alpha", "0.1")[1]
    assert '"alpha": 0.10000000000000001' in out


def test_deterministic_verify_suite():
    a = run("verify", "--suite", "radii", "--seed", "3")[1]
    b = run("verify", "--suite", "radii", "--seed", "3")[1]
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "results"}
    assert strip(a) == strip(b)
    ra = [{k: v for k, v in r.items() if k != "seconds" and k != "detail"} for r in json.loads(a)["results"]]
    rb = [{k: v for k, v in r.items() if k != "seconds" and k != "detail"} for r in json.loads(b)["results"]]
    assert ra == rb


def test_deterministic_member_output():
    a = run("member", "gn:n=3,c=0.7+0.1i", "--alpha", "0.2")[1]
    b = run("member", "gn:n=3,c=0.7+0.1i", "--alpha", "0.2")[1]
    assert a == b


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "boothclass", "radius", "--alpha", "0.25"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "r_bisect" in p.stdout

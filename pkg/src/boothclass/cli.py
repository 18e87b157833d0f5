"""Command-line interface: ``boothclass <subcommand> ...``.

Exit codes: 0 when the check holds, 1 when a violation is found, 2 on usage
errors.  JSON floats are printed with 17 significant digits.
"""
from __future__ import annotations

import argparse
import math
import os
import re
import sys
from typing import Sequence

import numpy as np

from . import booth, bsclass, radii, series as ps, subord
from .grid import GridSpec
from .verify import SUITES, run_suite

GRID_ENV = "GFT_DEFAULT_GRID"


class UsageError(Exception):
    pass


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written as ``%.17g``; non-finite floats become null."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return format(x, ".17g") if math.isfinite(x) else "null"
    if isinstance(obj, complex):
        return dumps([obj.real, obj.imag], indent, _level)
    if isinstance(obj, str):
        import json
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        parts = [dumps(v, indent, _level + 1) for v in obj]
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(parts) + "]"
        return "[\n" + ",\n".join(pad + p for p in parts) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_complex(text: str) -> complex:
    """Parse ``RE+IMi`` style numbers: ``0.8``, ``0.5-0.2i``, ``2i``, ``-i``."""
    s = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
    if s.endswith("i"):
        body = s[:-1]
        if body == "" or body[-1] in "+-":
            body += "1"
        s = body + "j"
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _kv(text: str) -> dict[str, str]:
    out = {}
    for part in re.split(r",(?=[A-Za-z_]+=)", text):
        if not part:
            continue
        k, sep, v = part.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {part!r}")
        out[k.strip()] = v.strip()
    return out


def parse_function(spec: str) -> bsclass.AnalyticFunction:
    """Function-spec mini-language.

    ``id`` | ``tilde:alpha=A`` | ``gn:n=N,c=RE+IMi`` | ``series:@file.json`` |
    ``built:alpha=A,omega=RE+IMi``
    """
    kind, _, rest = spec.partition(":")
    try:
        if kind == "id":
            return bsclass.SeriesBacked(ps.PowerSeries.identity(1), label="id")
        if kind == "tilde":
            return bsclass.TildeF(float(_kv(rest)["alpha"]))
        if kind == "gn":
            kv = _kv(rest)
            return bsclass.GnForm(int(kv["n"]), parse_complex(kv["c"]))
        if kind == "series":
            path = rest[1:] if rest.startswith("@") else rest
            return bsclass.SeriesBacked(ps.PowerSeries.load(path), label=path)
        if kind == "built":
            kv = _kv(rest)
            return build_rotated(float(kv["alpha"]), parse_complex(kv.get("omega", "1")))
    except KeyError as exc:
        raise UsageError(f"function spec {spec!r} is missing {exc.args[0]!r}") from None
    except (OSError, ValueError) as exc:
        raise UsageError(f"bad function spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown function kind {kind!r}")


def build_rotated(alpha: float, omega: complex, order: int = bsclass.MEMBER_ORDER) -> bsclass.SeriesBacked:
    """Member with ``q(z) = F_alpha(omega z)``; needs ``|omega| <= 1``."""
    if abs(omega) > 1 + 1e-15:
        raise UsageError(f"|omega| must be <= 1 for F_alpha(omega z) to be subordinate, got {abs(omega)}")
    q = ps.rotate(ps.f_alpha_series(alpha, order), omega)
    f = bsclass.build_member(alpha, q, order)
    return bsclass.SeriesBacked(f.series, label=f"built[omega={omega}]")


def resolve_grid(arg: str | None) -> GridSpec:
    text = arg or os.environ.get(GRID_ENV)
    if not text:
        return GridSpec()
    try:
        return GridSpec.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None


def _emit(obj, out):
    out.write(dumps(obj) + "\n")


def cmd_region(args, out) -> int:
    reg = booth.BoothRegion(args.alpha)
    phi, pts = reg.boundary(args.samples)
    if args.format == "csv":
        out.write("phi,x,y\n")
        for p, w in zip(phi, pts):
            out.write(f"{p:.17g},{w.real:.17g},{w.imag:.17g}\n")
    elif args.format == "svg":
        out.write(region_svg(reg, pts))
    else:
        _emit({"alpha": reg.alpha, "axis_crossings": reg.axis_crossings(),
               "phi": phi, "x": pts.real, "y": pts.imag}, out)
    return 0


def region_svg(reg: booth.BoothRegion, pts: np.ndarray, size: int = 400) -> str:
    half = 1.1 * reg.real_crossing
    scale = size / (2 * half)
    xs = (pts.real + half) * scale
    ys = (half - pts.imag) * scale
    d = "M " + " L ".join(f"{x:.6f} {y:.6f}" for x, y in zip(xs, ys)) + " Z"
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n'
            f'  <path d="{d}" fill="none" stroke="black" stroke-width="1"/>\n</svg>\n')


def cmd_member(args, out) -> int:
    f = parse_function(args.function)
    grid = resolve_grid(args.grid)
    try:
        v = bsclass.membership_test(f, args.alpha, grid)
    except bsclass.ZeroOfFOnGrid as exc:
        raise UsageError(str(exc)) from None
    _emit({"function": f.describe(), "alpha": args.alpha, **v.to_json()}, out)
    return 0 if v.holds else 1


def cmd_radius(args, out) -> int:
    _emit(radii.radius_starlike(args.alpha, args.order).to_json(), out)
    return 0


def cmd_alpha_for_radius(args, out) -> int:
    _emit({"r": args.r, "alpha_sup": radii.alpha_for_radius(args.r)}, out)
    return 0


def cmd_gn(args, out) -> int:
    try:
        res = bsclass.gn_nonmembership(args.n, parse_complex(args.c), args.alpha)
    except bsclass.DegenerateModulus as exc:
        raise UsageError(str(exc)) from None
    _emit({"n": args.n, "c": parse_complex(args.c), "alpha": args.alpha, **res.to_json()}, out)
    return 1 if res.not_in_class else 0


def cmd_bounds(args, out) -> int:
    b = subord.re_f_over_z_bounds(args.alpha, args.r, allow_out_of_range=True)
    _emit({**b.to_json(), "sharp_witness": subord.sharp_witness(args.alpha, args.r)}, out)
    return 0


def cmd_build(args, out) -> int:
    f = build_rotated(args.alpha, parse_complex(args.omega), args.terms)
    _emit(f.series.to_json(), out)
    return 0


def cmd_convexity(args, out) -> int:
    gmin, k = bsclass.convexity_check_p(args.alpha, args.samples)
    _emit({"alpha": args.alpha, "grid_min": gmin, "K_alpha": k,
           "convex": gmin > 0, "bound_holds": gmin >= k - 1e-9}, out)
    return 0 if gmin > 0 else 1


def cmd_curvature(args, out) -> int:
    m = booth.curvature_min(args.alpha, args.samples)
    _emit({"alpha": args.alpha, "curvature_min": m, "convex": m >= 0,
           "threshold": booth.CONVEXITY_THRESHOLD}, out)
    return 0 if m >= 0 else 1


def cmd_verify(args, out) -> int:
    results = run_suite(args.suite, args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit({"suite": args.suite, "seed": args.seed, "passed": all(r.passed for r in results),
           "results": [r.to_json() for r in results]}, out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boothclass", description="Numerics for the Booth-lemniscate starlike class BS(alpha).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("region", help="boundary of D(alpha)")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--samples", type=int, default=512)
    s.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    s.set_defaults(func=cmd_region)

    s = sub.add_parser("member", help="grid membership test")
    s.add_argument("function", help="id | tilde:alpha=A | gn:n=N,c=RE+IMi | series:@file.json | built:alpha=A,omega=W")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--grid", help="r1,r2,...:angles")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("radius", help="radius of starlikeness of order gamma")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--order", type=float, default=0.0, help="order gamma in [0, 1)")
    s.set_defaults(func=cmd_radius)

    s = sub.add_parser("alpha-for-radius", help="largest admissible alpha for a radius")
    s.add_argument("--r", type=float, required=True)
    s.set_defaults(func=cmd_alpha_for_radius)

    s = sub.add_parser("gn", help="non-membership of z + c z^n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.set_defaults(func=cmd_gn)

    s = sub.add_parser("bounds", help="sharp bounds of Re f(z)/z")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--r", type=float, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("build", help="series of the member with q(z) = F_alpha(omega z)")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--omega", default="1")
    s.add_argument("--terms", type=int, default=ps.DEFAULT_ORDER, help="truncation order")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("convexity", help="Re{1 + z p''/p'} against K(alpha)")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--samples", type=int, default=1024)
    s.set_defaults(func=cmd_convexity)

    s = sub.add_parser("curvature", help="convexity of the boundary curve")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--samples", type=int, default=4096)
    s.set_defaults(func=cmd_curvature)

    s = sub.add_parser("verify", help="run the verification suite")
    s.add_argument("--suite", choices=sorted(SUITES), default="all")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"boothclass {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

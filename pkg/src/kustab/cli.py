"""Command-line front end.

Every subcommand wraps one library call.  Rationals are printed as ``p/q``;
``--json`` switches to a JSON document carrying ``"schema": "1"``.  Exit
codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import charge as chg
from . import figures, kulattice, orbit, tiltplane
from .chern import NumChern, PlanePoint, euler, shift
from .errors import DomainError, UnknownObject
from .exact import QuadraticSurd, as_rational, fmt
from .variety import VarietyParams, load_config, make_variety

SCHEMA = "1"


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# Argument parsing helpers


def rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def parse_class(text: str, var: VarietyParams) -> NumChern:
    """``@name``, a JSON object ``{"rk": .., "c1": .., "ch2": .., "ch3": ..}``
    or a comma list ``rk,c1,ch2[,ch3]``."""
    text = text.strip()
    try:
        if text.startswith("@"):
            return kulattice.named_class(text[1:], var)
        if text.startswith("{"):
            return NumChern.from_json(json.loads(text))
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (3, 4):
            raise UsageError(f"class needs 3 or 4 components: {text!r}")
        return NumChern(*parts)
    except UnknownObject as exc:
        raise UsageError(str(exc)) from exc
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse class {text!r}: {exc}") from exc


def parse_param(text: str) -> tiltplane.StabilityParam:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3):
        raise UsageError(f"expected s,q[,mu], got {text!r}")
    try:
        return tiltplane.StabilityParam.at(*parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse point {text!r}") from exc


def enc(x):
    """JSON-ready encoding of exact values."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return fmt(x)
    if isinstance(x, float):
        return "inf" if x == float("inf") else repr(x)
    if isinstance(x, QuadraticSurd):
        return {**x.to_json(), "approx": f"{float(x):.12g}"}
    if isinstance(x, (list, tuple)):
        return [enc(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def show(x) -> str:
    if isinstance(x, float):
        return "inf"
    if isinstance(x, (int, Fraction)):
        return fmt(x)
    return str(x)


# --------------------------------------------------------------------------
# Commands: each returns (payload dict, human text, exit code)


def cmd_chi(args, var):
    v, w = parse_class(args.left, var), parse_class(args.right, var)
    val = euler(v, w, var)
    return {"chi": enc(val)}, fmt(val), 0


def cmd_class(args, var):
    v = parse_class(args.name, var)
    return {"class": v.to_json()}, json.dumps(v.to_json()), 0


def _point(args) -> PlanePoint:
    return PlanePoint(args.s, args.q)


def cmd_slope(args, var):
    v = shift(parse_class(args.cls, var), args.shift)
    val = tiltplane.slope(_point(args), v)
    return {"slope": enc(val)}, show(val), 0


def cmd_region(args, var):
    p = _point(args)
    why = tiltplane.region_failure(p, args.region, var)
    if why is not None:
        return {"in_region": False, "reason": why}, f"not in region: {why}", 1
    lo, hi = tiltplane.mu_window(p, args.region, var)
    text = f"in region {args.region}; mu window [{show(lo)}, {show(hi)})"
    return {"in_region": True, "window": [enc(lo), enc(hi)]}, text, 0


def cmd_window(args, var):
    lo, hi = tiltplane.mu_window(_point(args), args.region, var)
    return {"window": [enc(lo), enc(hi)]}, f"[{show(lo)}, {show(hi)})", 0


def cmd_wall(args, var):
    w = tiltplane.wall_endpoints(_point(args), parse_class(args.cls, var))
    payload = {"gradient": enc(w.gradient), "b_minus": enc(w.b_minus), "b_plus": enc(w.b_plus)}
    text = f"B- = {w.b_minus} (~{float(w.b_minus):.9g})\nB+ = {w.b_plus} (~{float(w.b_plus):.9g})"
    return payload, text, 0


def _charge_spec(args) -> chg.ChargeSpec:
    if args.beta is not None or args.alpha_sq is not None:
        if args.beta is None or args.alpha_sq is None:
            raise UsageError("--beta and --alpha-sq go together")
        return chg.ChargeSpec.ab(args.beta, args.alpha_sq, args.mu)
    if args.s is None or args.q is None:
        raise UsageError("give --s/--q or --beta/--alpha-sq")
    return chg.ChargeSpec.sq(args.s, args.q, args.mu)


def cmd_charge(args, var):
    z = chg.central_charge(_charge_spec(args), parse_class(args.cls, var), var)
    return {"re": fmt(z.re), "im": fmt(z.im)}, f"{fmt(z.re)} + ({fmt(z.im)})i", 0


_FUNCTORS = {
    "LO": kulattice.mutate_O,
    "LU": kulattice.mutate_U,
    "Sinv": kulattice.serre_inverse_numeric,
}


def cmd_mutate(args, var):
    out = _FUNCTORS[args.functor](parse_class(args.cls, var), var)
    return {"class": out.to_json()}, str(out), 0


def cmd_coords(args, var):
    L = kulattice.KuLattice(args.lattice, kulattice.basis_classes(args.lattice, var))
    a, b = kulattice.lattice_coords(parse_class(args.cls, var), L)
    integral = kulattice.is_integral((a, b))
    return {"coords": [fmt(a), fmt(b)], "integral": integral}, f"({fmt(a)}, {fmt(b)})", 0


def cmd_ell(args, var):
    scan = kulattice.ell_scan(kulattice.ku_basis(args.lattice, var), args.radius)
    payload = {"ell": fmt(scan.value), "witnesses": [list(w) for w in scan.witnesses]}
    return payload, fmt(scan.value), 0


def cmd_serre_check(args, var):
    cert = orbit.serre_certificate(
        parse_param(args.p3), parse_param(args.p2), parse_param(args.p1), var
    )
    lines = [f"{name}: det = {fmt(t.det)}" for name, t in cert.steps]
    lines.append(f"lattice fixed: {cert.lattice_fixed}")
    lines.append(f"passes: {cert.passes}")
    lines.append(f"note: {cert.note}")
    return {"certificate": cert.to_json()}, "\n".join(lines), 0 if cert.passes else 1


def cmd_orbit_solve(args, var):
    t = orbit.same_orbit_check(parse_param(args.pa), parse_param(args.pb), args.region, var)
    text = f"M = {t.m.to_json()}, det = {fmt(t.det)}"
    return {"transform": t.to_json()}, text, 0


def cmd_figure(args, var):
    overrides = {"width_px": args.width, "height_px": args.height}
    if args.window:
        parts = [p.strip() for p in args.window.split(",")]
        if len(parts) != 4:
            raise UsageError("--window needs s0,s1,q0,q1")
        overrides["window"] = figures.Window.of(*parts)
    if args.point:
        overrides["point"] = parse_param(args.point).point
    if args.cls:
        overrides["target"] = parse_class(args.cls, var)
    spec = figures.default_spec(args.kind, **overrides)
    svg = figures.render(spec, var)
    Path(args.out).write_text(svg)
    return {"out": str(args.out), "bytes": len(svg.encode())}, f"wrote {args.out}", 0


# --------------------------------------------------------------------------


def _add_global(p: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--genus", type=int, default=argparse.SUPPRESS if suppress else 6)
    p.add_argument("--config", default=default, help="JSON variety config")
    p.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS if suppress else False
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kustab", description="Exact numerics for stability conditions on Kuznetsov components."
    )
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _add_global(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    def point(p, required=True):
        p.add_argument("--s", type=rational, required=required)
        p.add_argument("--q", type=rational, required=required)

    p = add("chi", cmd_chi, "Euler pairing chi(left, right)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("class", cmd_class, "resolve a class")
    p.add_argument("name")

    p = add("slope", cmd_slope, "slope mu_{s,q}")
    point(p)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--shift", type=int, default=0)

    p = add("region", cmd_region, "region test and mu window")
    point(p)
    p.add_argument("--region", type=int, choices=(1, 2, 3), required=True)

    p = add("window", cmd_window, "mu window of a region point")
    point(p)
    p.add_argument("--region", type=int, choices=(1, 2, 3), required=True)

    p = add("wall", cmd_wall, "wall endpoints B-, B+")
    point(p)
    p.add_argument("--class", dest="cls", required=True)

    p = add("charge", cmd_charge, "central charge of a class")
    point(p, required=False)
    p.add_argument("--beta", type=rational)
    p.add_argument("--alpha-sq", dest="alpha_sq", type=rational)
    p.add_argument("--mu", type=rational)
    p.add_argument("--class", dest="cls", required=True)

    p = add("mutate", cmd_mutate, "numerical mutation / inverse Serre action")
    p.add_argument("--functor", choices=sorted(_FUNCTORS), required=True)
    p.add_argument("--class", dest="cls", required=True)

    p = add("coords", cmd_coords, "coordinates in a Ku lattice basis")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--lattice", type=int, choices=(1, 2, 3), default=1)

    p = add("ell", cmd_ell, "max chi(v,v) over a coordinate box")
    p.add_argument("--radius", type=int, default=50)
    p.add_argument("--lattice", type=int, choices=(1, 2, 3), default=1)

    p = add("serre-check", cmd_serre_check, "Serre-invariance certificate")
    p.add_argument("--p3", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--p1", required=True)

    p = add("orbit-solve", cmd_orbit_solve, "GL+ transform between two region points")
    p.add_argument("--pa", required=True)
    p.add_argument("--pb", required=True)
    p.add_argument("--region", type=int, choices=(1, 2, 3), required=True)

    p = add("figure", cmd_figure, "render an SVG figure")
    p.add_argument("--kind", choices=figures.KINDS, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--window", help="s0,s1,q0,q1")
    p.add_argument("--point", help="s,q for wall / slope_compare")
    p.add_argument("--class", dest="cls", help="target class for wall")
    return parser


def _variety(args) -> VarietyParams:
    if args.config:
        return load_config(args.config)
    return make_variety(args.genus)


_NEGATIVE = re.compile(r"^-\d")


def _glue_negative_values(argv: List[str]) -> List[str]:
    # argparse reads "--s -1/2" as two options; rewrite it as "--s=-1/2"
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok.startswith("--")
            and "=" not in tok
            and i + 1 < len(argv)
            and _NEGATIVE.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    want_json = args.json
    try:
        var = _variety(args)
        payload, text, code = args.func(args, var)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kustab: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        if want_json:
            print(json.dumps({"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"kustab: error: {exc}", file=sys.stderr)
        return 2
    if want_json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

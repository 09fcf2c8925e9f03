"""Command-line front end.

Exit codes: 0 success, 1 verification failure or flow halt, 2 usage or
domain error.
"""

import argparse
import math
import sys

import numpy as np

from . import abel, elliptic, ising, spherical, su2, verify
from .errors import EllipticIsingError, FlowHalt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x):
    return f"{float(x) + 0.0:.17g}"


def _floats(text, name):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{name}: expected comma-separated numbers, got {text!r}") from None


def _range(text, name):
    """'a' or 'start:step:stop' (stop inclusive) into a list of floats."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"grid {name}: bad number in {text!r}") from None
    if len(nums) == 1:
        return nums
    if len(nums) != 3 or nums[1] <= 0.0 or nums[2] < nums[0]:
        raise UsageError(f"grid {name}: expected start:step:stop with step > 0, got {text!r}")
    start, step, stop = nums
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def parse_grid(spec):
    """'u=0:0.1:4,k=0.7' into (u values, k values)."""
    fields = {}
    for item in spec.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in ("u", "k") or key in fields:
            raise UsageError(f"grid: expected 'u=...,k=...', got {spec!r}")
        fields[key] = _range(val.strip(), key)
    if set(fields) != {"u", "k"}:
        raise UsageError("grid: both u and k are required")
    return fields["u"], fields["k"]


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- commands


def cmd_ell(args):
    if args.grid:
        us, ks = parse_grid(args.grid)
        rows = ["u,k,sn,cn,dn" if len(ks) > 1 else "u,sn,cn,dn"]
        for k in ks:
            for u in us:
                t = elliptic.jacobi(u, k)
                cols = [u, k] if len(ks) > 1 else [u]
                rows.append(",".join(_fmt(v) for v in (*cols, t.sn, t.cn, t.dn)))
        _write("\n".join(rows), args.out)
        return EXIT_OK
    t = elliptic.jacobi(args.u, args.k)
    am = elliptic.amplitude(args.u, args.k)
    K = elliptic.complete_quarter_period(args.k)
    _write(f"sn={_fmt(t.sn)} cn={_fmt(t.cn)} dn={_fmt(t.dn)} am={_fmt(am)} K={_fmt(K)}", args.out)
    return EXIT_OK


def _vectors(text):
    rows = [r for r in text.split(";") if r.strip()]
    if len(rows) != 3:
        raise UsageError("--vectors needs three ';'-separated 3-vectors")
    vs = [_floats(r, "--vectors") for r in rows]
    if any(len(v) != 3 for v in vs):
        raise UsageError("--vectors entries must have three components")
    return spherical.TriangleVectors.from_raw(*vs)


def cmd_sphere(args):
    lines = []
    if args.vectors:
        tri, _ = spherical.triangle_from_vectors(_vectors(args.vectors))
    else:
        if None in (args.u1, args.u3, args.k):
            raise UsageError("sphere: give --vectors or all of --u1 --u3 --k")
        tri = spherical.triangle_from_spectral(args.u1, args.u3, args.k)
    lines.append("arcs=" + ",".join(_fmt(a) for a in tri.arcs))
    lines.append("angles=" + ",".join(_fmt(a) for a in tri.angles))
    lines.append(f"k_ratio={_fmt(tri.k_ratio)} law_residual={_fmt(tri.max_law_residual())}")
    try:
        c = spherical.spectral_coordinates(tri)
        lines.append(f"u=({_fmt(c.u1)},{_fmt(c.u2)},{_fmt(c.u3)}) sum_rule_residual={_fmt(c.residual)} "
                     f"regime={c.regime}")
    except EllipticIsingError as exc:
        lines.append(f"spectral coordinates unavailable: {exc}")
    _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_ybe(args):
    reps = su2.REPRESENTATIONS if args.rep == "both" else (args.rep,)
    lines = [f"{rep} residual={_fmt(su2.verify_ybe_spectral(args.u1, args.u3, args.k, rep))}" for rep in reps]
    _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_ising(args):
    if args.reading:
        c = ising.couplings_crossing(args.v1, args.v3, args.k, reading=args.reading)
    else:
        c = ising.couplings_from_v(args.v1, args.v3, args.k)
    res, lam = ising.star_triangle_residual(c)
    lines = [
        "K=" + ",".join(_fmt(v) for v in c.K),
        "L=" + ",".join(_fmt(v) for v in c.L),
        f"star_triangle_residual={_fmt(res)} lambda_real={_fmt(lam.real)} lambda_imag={_fmt(lam.imag)}",
    ]
    if not args.reading:
        lines.append(f"difference_residual={_fmt(ising.verify_difference_property(args.v1, args.v3, args.k))}")
    _write("\n".join(lines), args.out)
    return EXIT_OK


def _system(args):
    coeffs = _floats(args.coeffs, "--coeffs")
    x0 = _floats(args.x0, "--x0")
    n = args.n if args.n is not None else len(x0)
    if len(coeffs) != 2 * n - 1:
        raise UsageError(f"--coeffs needs 2n-1 = {2 * n - 1} values for n = {n}, got {len(coeffs)}")
    if len(x0) != n:
        raise UsageError(f"--x0 needs n = {n} values, got {len(x0)}")
    signs = _floats(args.signs, "--signs") if args.signs else [1.0] * n
    if len(signs) != n:
        raise UsageError(f"--signs needs n = {n} values, got {len(signs)}")
    return abel.HyperPoly(coeffs), abel.Divisor(x0, signs)


def cmd_abel(args):
    lines = []
    if args.coeffs:
        f, d = _system(args)
        a, b = abel.double_pole_coefficients(f, d)
        lines.append("Q1=" + _fmt(abel.conserved_Q1(f, d)))
        lines.append("Q2=" + (_fmt(abel.conserved_Q2(f, d)) if np.all(d.points != 0.0) else "undefined"))
        lines.append("velocity=" + ",".join(_fmt(v) for v in abel.flow_rhs(f, d)))
        lines.append("double_pole=" + ",".join(_fmt(v) for v in a))
        lines.append("simple_pole=" + ",".join(_fmt(v) for v in b))
    else:
        if None in (args.u1, args.u2, args.k):
            raise UsageError("abel: give --coeffs/--x0 or all of --u1 --u2 --k")
        r34, r35 = abel.elliptic_identity_check(args.u1, args.u2, args.k)
        lines.append(f"sum_identity_as_stated={_fmt(r34)} reciprocal_identity_as_stated={_fmt(r35)}")
        lines.append(f"interpolant_residual={_fmt(abel.elliptic_interpolant_residual(args.u1, args.u2, args.k))}")
    _write("\n".join(lines), args.out)
    return EXIT_OK


def cmd_verify(args):
    config = verify.RunConfig(seed=args.seed, samples=args.samples, tol=args.tol, format=args.format)
    reports = verify.run(args.suite, config)
    render = {"json": verify.to_json, "csv": verify.to_csv, "text": verify.to_text}[args.format]
    _write(render(reports, config), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _flow_summary(tr, recip, f):
    scale = f.scale
    lines = [
        f"steps={len(tr.times) - 1} flips={len(tr.flips)}",
        f"Q1_drift={_fmt(tr.q1_drift / scale)} (x-flow, relative to max|A|)",
    ]
    if recip is not None:
        lines.append(f"Q2_drift={_fmt(recip.q2_drift / scale)} (reciprocal flow, relative to max|A|)")
    else:
        lines.append("Q2_drift=undefined (a point sits at x = 0)")
    lines.append(f"abel_max={_fmt(tr.abel_max)} fd_max={_fmt(tr.fd_max / scale)}")
    return lines


def cmd_flow(args):
    if args.preset:
        f, d0 = abel.flow_presets()[args.preset]
    else:
        if not (args.coeffs and args.x0):
            raise UsageError("flow: give --preset or --coeffs and --x0")
        f, d0 = _system(args)
    try:
        tr = abel.integrate_flow(f, d0, args.t_end, args.dt)
    except FlowHalt as halt:
        if halt.trajectory is not None and args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                halt.trajectory.to_csv(fh)
        print(f"halt: {halt}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            tr.to_csv(fh)
    recip = None
    if np.all(np.abs(d0.points) > abel.ZERO_POINT):
        try:
            recip = abel.integrate_reciprocal_flow(f, d0, args.t_end, args.dt)
        except FlowHalt as halt:
            print(f"halt (reciprocal flow): {halt}", file=sys.stderr)
            return EXIT_FAIL
    print("\n".join(_flow_summary(tr, recip, f)))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    p = _Parser(prog="elliptic-ising", description="Elliptic functions, spherical triangles and Ising integrability.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ell", parents=[common], help="Jacobi functions at a point or on a grid")
    s.add_argument("--u", type=float, default=0.0)
    s.add_argument("--k", type=float, default=0.5)
    s.add_argument("--grid", help="e.g. 'u=0:0.1:4,k=0.7' (stop inclusive)")
    s.set_defaults(func=cmd_ell)

    s = sub.add_parser("sphere", parents=[common], help="spherical triangle from vectors or spectral parameters")
    s.add_argument("--vectors", help="'x,y,z;x,y,z;x,y,z'")
    s.add_argument("--u1", type=float)
    s.add_argument("--u3", type=float)
    s.add_argument("--k", type=float)
    s.set_defaults(func=cmd_sphere)

    s = sub.add_parser("ybe", parents=[common], help="spectral Yang-Baxter residual")
    s.add_argument("--u1", type=float, required=True)
    s.add_argument("--u3", type=float, required=True)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--rep", choices=(*su2.REPRESENTATIONS, "both"), default="both")
    s.set_defaults(func=cmd_ybe)

    s = sub.add_parser("ising", parents=[common], help="couplings and star-triangle residual")
    s.add_argument("--v1", type=float, required=True)
    s.add_argument("--v3", type=float, required=True)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--reading", choices=ising.CROSSING_READINGS,
                   help="use the crossed parameterization at this modulus reading")
    s.set_defaults(func=cmd_ising)

    s = sub.add_parser("abel", parents=[common], help="divisor quantities or the n = 3 elliptic identities")
    s.add_argument("--n", type=int)
    s.add_argument("--coeffs", help="A_0,...,A_{2n-2} ascending")
    s.add_argument("--x0")
    s.add_argument("--signs")
    s.add_argument("--u1", type=float)
    s.add_argument("--u2", type=float)
    s.add_argument("--k", type=float)
    s.set_defaults(func=cmd_abel)

    s = sub.add_parser("verify", parents=[common], help="seeded randomized verification suites")
    s.add_argument("suite", choices=(*verify.SUITES, "all"))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("flow", parents=[common], help="integrate the divisor flow and write a CSV trajectory")
    s.add_argument("--n", type=int)
    s.add_argument("--coeffs", help="A_0,...,A_{2n-2} ascending")
    s.add_argument("--x0")
    s.add_argument("--signs")
    s.add_argument("--t-end", type=float, default=1.0)
    s.add_argument("--dt", type=float, default=1e-3)
    s.add_argument("--preset", choices=sorted(abel.flow_presets()))
    s.set_defaults(func=cmd_flow)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except FlowHalt as exc:
        print(f"halt: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except EllipticIsingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""``trimap`` command line.

Exit status: 0 on success, 1 on a domain error or a failed verification,
2 on a usage error.  Output is byte-for-byte deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from trimap import __version__
from trimap.errors import DomainError
from trimap.inverse import psi_series
from trimap.tiling import MAX_DEPTH, render_svg, tiling
from trimap.triangle import TriangleSignature, derive_params, nu_value, vertex_frame
from trimap.verify import VerifyConfig, run_checks

TOOL = "trimap"

_FRACTION = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_SIGNATURE = {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 3, "maxItems": 3}

COEFF_REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "CoeffReport",
    "type": "object",
    "required": [
        "tool", "version", "signature", "vertex", "cycled_signature",
        "branch_order", "order", "coefficients", "frame",
    ],
    "additionalProperties": False,
    "properties": {
        "tool": {"const": TOOL},
        "version": {"type": "string"},
        "signature": _SIGNATURE,
        "vertex": {"enum": ["A", "B", "C"]},
        "cycled_signature": _SIGNATURE,
        "branch_order": {"type": "integer", "minimum": 2},
        "order": {"type": "integer", "minimum": 1},
        "coefficients": {"type": "array", "items": _FRACTION, "minItems": 1},
        "frame": {
            "type": "object",
            "required": ["d_re", "d_im", "t", "nu", "nu_cycled"],
            "additionalProperties": False,
            "properties": {k: {"type": "number"} for k in ("d_re", "d_im", "t", "nu", "nu_cycled")},
        },
    },
}

PARAMS_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "AngleParams",
    "type": "object",
    "required": ["tool", "version", "signature", "alpha", "beta", "gamma", "a", "b", "c", "a_prime", "b_prime", "c_prime"],
    "additionalProperties": False,
    "properties": {
        "tool": {"const": TOOL},
        "version": {"type": "string"},
        "signature": _SIGNATURE,
        **{k: _FRACTION for k in ("alpha", "beta", "gamma", "a", "b", "c", "a_prime", "b_prime", "c_prime")},
    },
}


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x} in report")
    return format(x + 0.0, ".17g")


def fmt_fraction(q: Fraction) -> str:
    return str(Fraction(q))


def dump_json(obj) -> str:
    """JSON with insertion-ordered keys and floats at 17 significant digits."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {dump_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dump_json(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def params_report(sig: TriangleSignature) -> dict:
    ap = derive_params(sig)
    den, num = ap.denom_params, ap.numer_params
    return {
        "tool": TOOL,
        "version": __version__,
        "signature": list(sig.as_tuple()),
        "alpha": fmt_fraction(ap.alpha),
        "beta": fmt_fraction(ap.beta),
        "gamma": fmt_fraction(ap.gamma),
        "a": fmt_fraction(den.a),
        "b": fmt_fraction(den.b),
        "c": fmt_fraction(den.c),
        "a_prime": fmt_fraction(num.a),
        "b_prime": fmt_fraction(num.b),
        "c_prime": fmt_fraction(num.c),
    }


def coeff_report(sig: TriangleSignature, vertex: str, order: int) -> dict:
    ps = psi_series(sig, vertex, order)
    frame = vertex_frame(sig, vertex)
    return {
        "tool": TOOL,
        "version": __version__,
        "signature": list(sig.as_tuple()),
        "vertex": vertex,
        "cycled_signature": list(ps.cycled_signature.as_tuple()),
        "branch_order": ps.branch_order,
        "order": ps.order,
        "coefficients": [fmt_fraction(c) for c in ps.coefficients],
        "frame": {
            "d_re": frame.d.real,
            "d_im": frame.d.imag,
            "t": frame.t,
            "nu": frame.nu,
            "nu_cycled": nu_value(ps.cycled_signature),
        },
    }


def _signature_arg(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    try:
        values = tuple(int(s) for s in parts)
    except ValueError:
        values = ()
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected M,N,P (three integers), got {text!r}")
    return values


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _depth_arg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"depth must be nonnegative, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL, description="Exact Taylor coefficients of inverse Schwarz triangle functions."
    )
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_sig(p):
        p.add_argument("-s", "--signature", type=_signature_arg, required=True, metavar="M,N,P")
        return p

    p = with_sig(sub.add_parser("params", help="hypergeometric parameters of the signature"))
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = with_sig(sub.add_parser("coeffs", help="exact coefficients c_1..c_n of psi about a vertex"))
    p.add_argument("-v", "--vertex", choices=("A", "B", "C"), default="A")
    p.add_argument("-n", "--order", type=_positive_int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    with_sig(sub.add_parser("nu", help="disc normalisation factor"))

    p = with_sig(sub.add_parser("verify", help="run the numerical checks"))
    p.add_argument("--order", type=_positive_int, default=None, help="series order for all checks")
    p.add_argument("--tolerance-scale", type=float, default=1.0)

    p = with_sig(sub.add_parser("tile", help="write an SVG of the reflection tiling"))
    p.add_argument("-d", "--depth", type=_depth_arg, required=True, help=f"word length, at most {MAX_DEPTH}")
    p.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    return parser


def _cmd_params(sig, args, out):
    rep = params_report(sig)
    if args.format == "json":
        out.write(dump_json(rep) + "\n")
        return 0
    out.write(f"signature = {sig}\n")
    for key in ("alpha", "beta", "gamma", "a", "b", "c", "a_prime", "b_prime", "c_prime"):
        out.write(f"{key} = {rep[key]}\n")
    return 0


def _cmd_coeffs(sig, args, out):
    rep = coeff_report(sig, args.vertex, args.order)
    if args.format == "json":
        out.write(dump_json(rep) + "\n")
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "exponent", "coefficient"])
    for k, c in enumerate(rep["coefficients"], start=1):
        writer.writerow([k, k * rep["branch_order"], c])
    out.write(buf.getvalue())
    return 0


def _cmd_nu(sig, args, out):
    out.write(fmt_float(nu_value(sig)) + "\n")
    return 0


def _cmd_verify(sig, args, out):
    cfg = VerifyConfig(tolerance_scale=args.tolerance_scale)
    if args.order is not None:
        cfg.roundtrip_order = cfg.consistency_order = args.order
    results = run_checks(sig, cfg)
    out.write(f"verification for {sig}\n")
    out.write(f"{'check':<22}{'value':>12}{'tolerance':>12}  result\n")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{r.name:<22}{r.value:>12.3e}{r.tolerance:>12.3e}  {status}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def _cmd_tile(sig, args, out):
    tiles = tiling(sig, args.depth)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(sig, tiles))
    out.write(f"wrote {len(tiles)} tiles to {args.output}\n")
    return 0


COMMANDS = {
    "params": _cmd_params,
    "coeffs": _cmd_coeffs,
    "nu": _cmd_nu,
    "verify": _cmd_verify,
    "tile": _cmd_tile,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        sig = TriangleSignature(*args.signature)
        return COMMANDS[args.command](sig, args, out)
    except DomainError as exc:
        err.write(f"{TOOL}: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

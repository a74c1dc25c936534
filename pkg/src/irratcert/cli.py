"""Command-line front end.

Subcommands: `cert` builds a certificate table for one of the named
families, `pigeonhole` runs the bin-collision construction for a single
index, `reduce` reduces an integer coefficient vector modulo a monic
polynomial, `classify` gives an exact rational-or-irrational verdict per
real root, and `fracpart` evaluates the fractional-part product criterion.

Exit codes: 0 for a nice certificate or any successful query, 2 for a
violated certificate, 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebraic import classify_roots, reduce_power_form
from .constants import (CosInv, CosOf, E, EPow, ERational, InvE, Root,
                        SinInv, Sqrt, canonical_text, parse_constant)
from .errors import IrratCertError
from .intpoly import IntPolynomial
from .pigeonhole import fractional_residual, pigeonhole_approximant
from .verify import FAMILIES, FAMILY_DOC, _decimal, _frac_str, certify


class _UsageError(Exception):
    """Raised instead of argparse's SystemExit so exit codes stay ours."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="irratcert",
                     description="exact-arithmetic irrationality certificates")
    sub = parser.add_subparsers(dest="command", metavar="command")

    cert = sub.add_parser("cert", help="certificate table for one family")
    cert.add_argument("--family", required=True, choices=sorted(FAMILIES),
                      help="generator family")
    cert.add_argument("--n-max", dest="n_max", type=int, default=10,
                      help="last row index (default 10)")
    cert.add_argument("--m", type=int, help="radicand (sqrt), root degree (root), "
                                            "or argument denominator (sin-inv, cos-inv)")
    cert.add_argument("--a", type=int, help="radicand for the root family")
    cert.add_argument("--k", type=int, help="integer exponent for e-pow")
    cert.add_argument("--r", help="rational exponent for e-rat, e.g. -1/2")
    cert.add_argument("--angle", help="rational angle for trig-angle, e.g. 1/3")
    cert.add_argument("--format", choices=("json", "csv", "table"),
                      default="table", help="report format (default table)")
    cert.add_argument("--output", help="write the report to this path")
    cert.add_argument("--width", help="per-row verification width override")
    cert.add_argument("--seed-doc", dest="seed_doc", action="store_true",
                      help="print the construction behind the family and exit")

    pig = sub.add_parser("pigeonhole", help="bin-collision approximant for one n")
    pig.add_argument("--constant", required=True, help="constant text, e.g. sqrt:2")
    pig.add_argument("--n", type=int, required=True)
    pig.add_argument("--format", choices=("json", "table"), default="table")

    red = sub.add_parser("reduce", help="reduce coefficients modulo a monic polynomial")
    red.add_argument("--modulus", required=True,
                     help="monic modulus, ascending comma-separated, e.g. -2,0,1")
    red.add_argument("--coeffs", required=True,
                     help="coefficient vector to reduce, ascending comma-separated")

    cls = sub.add_parser("classify", help="rational-or-irrational verdict per real root")
    cls.add_argument("--poly", required=True,
                     help="integer polynomial, ascending comma-separated, e.g. 1,1,-5,2")

    fp = sub.add_parser("fracpart", help="fractional-part product {qx}({qx}-1)")
    fp.add_argument("--constant", required=True)
    fp.add_argument("--q", type=int, required=True)
    fp.add_argument("--width", help="enclosure width (default 1/10^9)")
    return parser


def _require(value, flag: str, family: str):
    if value is None:
        raise _UsageError(f"family {family!r} requires {flag}")
    return value


def _parse_fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"{flag} must be a rational like 3/5, got {text!r}") from None


def _constant_for(family: str, args):
    if family == "sqrt":
        return Sqrt(_require(args.m, "--m", family))
    if family == "root":
        return Root(_require(args.a, "--a", family), _require(args.m, "--m", family))
    if family == "e":
        return E()
    if family == "inv-e":
        return InvE()
    if family in ("e-squared", "e-squared-naive"):
        return EPow(2)
    if family == "e-pow":
        return EPow(_require(args.k, "--k", family))
    if family == "e-rat":
        return ERational(_parse_fraction(_require(args.r, "--r", family), "--r"))
    if family == "sin-inv":
        return SinInv(_require(args.m, "--m", family))
    if family == "cos-inv":
        return CosInv(_require(args.m, "--m", family))
    if family == "trig-angle":
        return CosOf(_parse_fraction(_require(args.angle, "--angle", family), "--angle"))
    raise _UsageError(f"unknown family {family!r}")


def _emit(text: str, output) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_cert(args) -> int:
    if args.seed_doc:
        print(f"{args.family}: {FAMILY_DOC[args.family]}")
        return 0
    c = _constant_for(args.family, args)
    width = _parse_fraction(args.width, "--width") if args.width is not None else None
    cert = certify(args.family, c, args.n_max, max_width=width)
    if args.format == "json":
        text = cert.to_json()
    elif args.format == "csv":
        text = cert.to_csv()
    else:
        text = cert.to_table()
    _emit(text, args.output)
    return 0 if cert.is_nice else 2


def _cmd_pigeonhole(args) -> int:
    c = parse_constant(args.constant)
    result = pigeonhole_approximant(c, args.n)
    if args.format == "json":
        import json
        text = json.dumps({
            "constant": canonical_text(c),
            "n": result.n,
            "p": str(result.p),
            "q": str(result.q),
            "residual_lo": _frac_str(result.residual.lo),
            "residual_hi": _frac_str(result.residual.hi),
        }, indent=2)
    else:
        mid = (result.residual.lo + result.residual.hi) / 2
        text = "\n".join([
            f"constant: {canonical_text(c)}",
            f"n: {result.n}",
            f"q: {result.q}",
            f"p: {result.p}",
            f"residual: [{_frac_str(result.residual.lo)}, {_frac_str(result.residual.hi)}]",
            f"residual ~ {_decimal(mid)}  (|residual| < 1/{result.n})",
        ])
    _emit(text, None)
    return 0


def _cmd_reduce(args) -> int:
    modulus = IntPolynomial.from_csv(args.modulus)
    coeffs = IntPolynomial.from_csv(args.coeffs)
    form = reduce_power_form(modulus, coeffs.coeffs)
    print(",".join(str(x) for x in form.coeffs))
    return 0


def _cmd_classify(args) -> int:
    poly = IntPolynomial.from_csv(args.poly)
    for verdict in classify_roots(poly):
        lo, hi = verdict.bracket.lo, verdict.bracket.hi
        if verdict.is_irrational:
            print(f"bracket ({lo}, {hi}): irrational")
        else:
            print(f"bracket ({lo}, {hi}): rational {verdict.rational_value}")
    return 0


def _cmd_fracpart(args) -> int:
    c = parse_constant(args.constant)
    if args.width is not None:
        enc = fractional_residual(args.q, c, _parse_fraction(args.width, "--width"))
    else:
        enc = fractional_residual(args.q, c)
    mid = (enc.lo + enc.hi) / 2
    print(f"{{q*x}}({{q*x}} - 1) in [{_frac_str(enc.lo)}, {_frac_str(enc.hi)}]")
    print(f"value ~ {_decimal(mid)}")
    return 0


_HANDLERS = {
    "cert": _cmd_cert,
    "pigeonhole": _cmd_pigeonhole,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
    "fracpart": _cmd_fracpart,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return 1
    if args.command is None:
        print("error[usage]: pick a subcommand: cert, pigeonhole, reduce, "
              "classify, fracpart", file=sys.stderr)
        return 1
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return 1
    except IrratCertError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

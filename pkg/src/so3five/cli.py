"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
All reports are JSON with sorted keys written to stdout or ``--out``.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .curvature import RangeError
from .identities import FAULTS, run_suite
from .report import TOOL, analyze_input, decompose_doc, dumps
from .schema import BUILTINS, InputError, builtin, load
from .scalars import EXACT, FLOAT

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_SYMMETRIC_NOTE = (
    "The 'symmetric' example is a surrogate: K = t P with P the projection onto the "
    "3-dimensional summand, which has the curvature decomposition of the Einstein "
    "symmetric spaces (no 4-form, skew Ricci or traceless Ricci part)."
)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _tolerance(args) -> float | None:
    if args.tolerance is None:
        return None
    if args.tolerance <= 0:
        raise InputError("tolerance must be positive", "--tolerance")
    return args.tolerance


def cmd_verify_identities(args) -> int:
    tol = 1e-9 if args.tolerance is None else args.tolerance
    results = run_suite(args.mode, tol=tol, fault=args.inject_fault)
    failed = [r for r in results if not r.passed]
    doc = {
        "tool": TOOL,
        "version": __version__,
        "scalar_mode": args.mode,
        "tolerance": 0.0 if args.mode == EXACT else tol,
        "checks": [
            {"name": r.name, "description": r.description, "status": "PASS" if r.passed else "FAIL", "residual": r.residual}
            for r in results
        ],
        "summary": ["%s: %s" % (r.description, "PASS" if r.passed else "FAIL") for r in results],
        "max_residual": max(r.residual for r in results),
        "passed": not failed,
        "first_failure": failed[0].name if failed else None,
    }
    _emit(dumps(doc), args.out)
    if failed:
        print("identity failed: %s (%s)" % (failed[0].name, failed[0].description), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_example(args) -> int:
    inp = builtin(args.name, args.t, args.mode)
    if args.emit_input:
        _emit(inp.to_json(), args.out)
        return EXIT_OK
    _emit(dumps(analyze_input(inp, _tolerance(args))), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    inp = load(args.file, args.mode)
    _emit(dumps(analyze_input(inp, _tolerance(args))), args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    inp = load(args.file, args.mode)
    doc = decompose_doc(inp)
    _emit(dumps(doc), args.out)
    limit = 0.0 if inp.mode == EXACT else 1e-12
    return EXIT_OK if doc["reconstruction_residual"] <= limit else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="so3five", description="Exact checks for irreducible SO(3)-structures in dimension five.")
    parser.add_argument("--version", action="version", version="%s %s" % (TOOL, __version__))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mode_default):
        p.add_argument("--mode", choices=(EXACT, FLOAT), default=mode_default, help="scalar arithmetic")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--tolerance", type=float, default=None, help="zero threshold in float mode (default 1e-9)")

    p = sub.add_parser("verify-identities", help="run the invariant suite")
    common(p, EXACT)
    p.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("example", help="analyze a built-in example", epilog=_SYMMETRIC_NOTE)
    p.add_argument("name", choices=BUILTINS)
    p.add_argument("--t", default="1", help="parameter: scale t of the so12 example, factor of P for 'symmetric'")
    p.add_argument("--emit-input", action="store_true", help="print the example as a structure file instead of analyzing it")
    common(p, EXACT)
    p.set_defaults(func=cmd_example)

    for name, func, helptext in (
        ("analyze", cmd_analyze, "analyze a structure file"),
        ("decompose", cmd_decompose, "decompose the curvature of a structure file"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        common(p, None)
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance is not None and args.mode == EXACT:
        print("error: --tolerance applies to float mode only", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, RangeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

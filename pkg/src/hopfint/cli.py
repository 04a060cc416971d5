"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 axiom or chain failure,
3 unsupported operation.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .errors import (
    DimMismatch,
    FieldMismatch,
    HopfError,
    IncompatibleExtension,
    InputError,
    InvalidParams,
    RootUnavailable,
    TruncationUndeclared,
    UnsupportedCharacteristic,
    UnsupportedOperation,
)
from .family import PresentedHopfFamily, verify_chain
from .hopf import base_change, tensor_hopf, verify_axioms
from .presets import build_preset
from .report import build_report, tensor_report, to_json, to_text, truncation_block
from .scalars import DEFAULT_ORDER_CAP, parse_field
from .serialization import load_hopf_json

EXIT_OK, EXIT_INPUT, EXIT_AXIOM, EXIT_UNSUPPORTED = 0, 1, 2, 3

_INPUT_ERRORS = (InputError, InvalidParams, FieldMismatch, TruncationUndeclared,
                 IncompatibleExtension, RootUnavailable, DimMismatch)


def exit_code_for(exc: HopfError) -> int:
    if isinstance(exc, _INPUT_ERRORS):
        return EXIT_INPUT
    if isinstance(exc, (UnsupportedOperation, UnsupportedCharacteristic)):
        return EXIT_UNSUPPORTED
    return EXIT_AXIOM


def load_input(text, field=None):
    """A ``preset:...`` string or a path to a JSON structure-constant file."""
    if field is not None and not hasattr(field, "spec"):
        try:
            field = parse_field(field)
        except HopfError as exc:
            raise InputError(f"--field: {exc}") from exc
    if text.startswith("preset:"):
        return build_preset(text, field=field)
    if not Path(text).exists():
        raise InputError(f"{text}: no such file (presets are written preset:NAME(...))")
    h = load_hopf_json(text)
    h.preset = None
    return base_change(h, field) if field is not None else h


def _emit(doc, as_json):
    sys.stdout.write(to_json(doc) if as_json else to_text(doc))


def _doc_status(doc):
    if doc.get("kind") == "family":
        return EXIT_OK if doc["chain"]["passed"] else EXIT_AXIOM
    return EXIT_AXIOM if doc["axioms"]["passed"] is False else EXIT_OK


# --- commands -----------------------------------------------------------------


def cmd_verify(args):
    obj = load_input(args.input, args.field)
    if isinstance(obj, PresentedHopfFamily):
        rep = verify_chain(obj)
        for step, name, ok, detail in rep.checks:
            mark = "pass" if ok else "FAIL"
            print(f"{mark} step {step} {name}" + (f": {detail}" if detail and not ok else ""))
    else:
        rep = verify_axioms(obj)
        for line in rep.lines():
            print(line)
    print("OK" if rep.passed else "FAILED")
    return EXIT_OK if rep.passed else EXIT_AXIOM


def _report_one(text, field, cap):
    """Worker: returns (exit code, document or None, error message)."""
    try:
        obj = load_input(text, field)
        doc = build_report(obj, cap, source=text)
        return _doc_status(doc), doc, None
    except HopfError as exc:
        return exit_code_for(exc), None, f"{text}: [{exc.code}] {exc}"


def cmd_report(args):
    jobs = [(t, args.field, args.order_cap) for t in args.inputs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_report_one, *zip(*jobs)))
    else:
        results = [_report_one(*j) for j in jobs]
    docs = []
    for code, doc, err in results:
        if err:
            print(f"hopfint: error {err}", file=sys.stderr)
        if doc is not None:
            docs.append(doc)
    if args.json and len(args.inputs) > 1:
        sys.stdout.write(to_json(docs))
    else:
        for doc in docs:
            _emit(doc, args.json)
    return max(code for code, _, _ in results)


def cmd_tensor(args):
    a = load_input(args.left, args.field)
    b = load_input(args.right, args.field)
    for name, obj in ((args.left, a), (args.right, b)):
        if isinstance(obj, PresentedHopfFamily):
            raise UnsupportedOperation(f"{name}: tensor products are only formed for finite-dimensional inputs")
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field.spec()} vs {b.field.spec()}; pass --field to read both over one field")
    t = tensor_hopf(a, b, name=f"{a.name} ⊗ {b.name}")
    doc = tensor_report(a, b, t, args.order_cap, check_axioms=args.check_axioms)
    _emit(doc, args.json)
    if not doc["axioms"]["passed"]:
        return EXIT_AXIOM
    return EXIT_OK


def cmd_truncate(args):
    fam = load_input(args.family)
    if not isinstance(fam, PresentedHopfFamily):
        raise UnsupportedOperation(f"{args.family}: truncation needs a family input")
    rep = verify_chain(fam)
    doc = {"input": args.family, "kind": "truncation", "name": fam.name, "field": fam.field.spec(),
           "chain_passed": rep.passed}
    if not rep.passed:
        _emit(doc, args.json)
        return EXIT_AXIOM
    doc.update(truncation_block(fam, args.s, args.order_cap))
    _emit(doc, args.json)
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfint",
        description="Exact integrals, integral orders and integral quotients of Hopf algebras.",
        epilog="INPUT is a JSON structure-constant file or preset:NAME(key=value,...).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--order-cap", type=_positive_int, default=DEFAULT_ORDER_CAP, metavar="N",
                        help="give up on orders above N (default %(default)s)")

    p = sub.add_parser("verify", help="check the Hopf axioms or the reduction chain")
    p.add_argument("input")
    p.add_argument("--field", metavar="SPEC", help="read the input over this field")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="run the full invariant pipeline")
    p.add_argument("inputs", nargs="+", metavar="input")
    p.add_argument("--field", metavar="SPEC", help="field override: q, fp:P, cyc:N or cyc:N:fp:P")
    p.add_argument("--jobs", type=_positive_int, default=1, metavar="J",
                   help="report several inputs in parallel; output keeps input order")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("tensor", parents=[common], help="report on the tensor product of two inputs")
    p.add_argument("left", metavar="a")
    p.add_argument("right", metavar="b")
    p.add_argument("--field", metavar="SPEC", help="read both inputs over this field")
    p.add_argument("--check-axioms", action="store_true",
                   help="also verify the axioms on the product itself (slow for large products)")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("truncate", parents=[common], help="analyse the finite truncation H/J^s of a family")
    p.add_argument("family")
    p.add_argument("s", type=_positive_int)
    p.set_defaults(func=cmd_truncate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except HopfError as exc:
        print(f"hopfint: error [{exc.code}] {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())

"""
Command line interface.

    seifertbook normalize --input '{"genus": 0, "euler": -1, "coefficients": [[-1, 2], [-1, 3]]}'
    seifertbook check --seed 7 --cases 100

Exit status 0 on success, 1 when the input does not match its schema (or a
format is not available for the document), 2 when the library rejects
well-formed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .errors import SchemaError, TopologyError
from .homology import determinant, first_homology
from .openbook import classify_boundary_word, construct_horizontal_open_book, surgery_presentation
from .plumbing import PlumbingGraph, linking_matrix, normalize_to_standard, rational_euler_from_graph, star_from_seifert
from .render import FORMATS, FormatError, emit
from .seifert import SeifertInvariants, rational_euler, validate_eligible
from .twistword import TwistWord

COMMANDS = ("normalize", "invariants", "openbook", "classify", "present", "check")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def read_input(source: str | None):
    """Parse ``source`` as inline JSON when it looks like JSON, otherwise as
    a path; read stdin when it is None or ``-``."""
    if source is None or source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise SchemaError("--input", f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("<root>", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def _eligible(inv: SeifertInvariants) -> SeifertInvariants:
    report = validate_eligible(inv)
    if not report:
        raise TopologyError(f"not in eligible class: {report.describe()}")
    return inv


def cmd_normalize(doc, args):
    return normalize_to_standard(_eligible(SeifertInvariants.from_json(doc)))


def cmd_invariants(doc, args):
    if isinstance(doc, dict) and "vertices" in doc:
        graph = PlumbingGraph.from_json(doc)
        try:
            euler = rational_euler_from_graph(graph)
        except TopologyError:
            euler = None
    else:
        inv = _eligible(SeifertInvariants.from_json(doc))
        graph = star_from_seifert(inv)
        euler = rational_euler(inv)
    h1 = first_homology(graph)
    return {
        "rational_euler": euler,
        "determinant": determinant(linking_matrix(graph)),
        "first_homology": h1,
        "first_homology_text": str(h1),
    }


def cmd_openbook(doc, args):
    return construct_horizontal_open_book(SeifertInvariants.from_json(doc))


def _genus(doc):
    if not isinstance(doc, dict):
        raise SchemaError("<root>", "expected a JSON object")
    if "genus" not in doc:
        raise SchemaError("genus", "missing")
    if not _is_int(doc["genus"]) or doc["genus"] < 0:
        raise SchemaError("genus", "expected a non-negative integer")
    return doc["genus"]


def cmd_classify(doc, args):
    genus = _genus(doc)
    exps = doc.get("exponents")
    if not isinstance(exps, list) or not all(_is_int(m) for m in exps):
        raise SchemaError("exponents", "expected a list of integers")
    return classify_boundary_word(genus, exps)


def cmd_present(doc, args):
    genus = _genus(doc)
    r = doc.get("boundaries")
    if not _is_int(r) or r < 1:
        raise SchemaError("boundaries", "expected a positive integer")
    word = TwistWord.context_from_json(doc)
    symbols = doc.get("boundary_symbols")
    if symbols is not None and not (isinstance(symbols, list) and all(isinstance(s, str) for s in symbols)):
        raise SchemaError("boundary_symbols", "expected a list of curve names")
    return surgery_presentation(genus, r, word, symbols)


def cmd_check(doc, args):
    if doc is not None:
        inv = _eligible(SeifertInvariants.from_json(doc))
        return checks.run_suite([inv])
    return checks.run_suite(checks.random_batch(args.seed, args.cases), seed=args.seed)


HANDLERS = {
    "normalize": cmd_normalize,
    "invariants": cmd_invariants,
    "openbook": cmd_openbook,
    "classify": cmd_classify,
    "present": cmd_present,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifertbook",
        description="Horizontal open books and plumbing normalization for Seifert fibered 3-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "normalize": "Seifert invariants -> standard plumbing graph and move transcript",
        "invariants": "graph or invariants -> rational Euler number, determinant, H_1",
        "openbook": "Seifert invariants -> horizontal open book",
        "classify": "{genus, exponents} -> boundary-twist classification",
        "present": "{genus, boundaries, word} -> contact (+-1)-surgery presentation",
        "check": "run the invariance suite on one input or a seeded random batch",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--input", "-i", help="path, inline JSON, or - for stdin")
        p.add_argument("--format", "-f", choices=FORMATS, default="json")
        p.add_argument("--output", "-o", help="write here instead of stdout")
        if name == "check":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--cases", type=int, default=100)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check" and args.input is None:
            doc = None
        else:
            doc = read_input(args.input)
        result = HANDLERS[args.command](doc, args)
        text = emit(result, args.format)
    except SchemaError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TopologyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.command == "check" and not result.ok:
        return 3
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

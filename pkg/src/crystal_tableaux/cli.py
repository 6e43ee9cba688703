"""Command line interface.

Exit codes: 0 success, 1 input or validation error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from .binfty import bfs_binfty, binfty_lower, binfty_raise
from .cliff import CliffError, cliff_step, cliff_to_tableau, tableau_to_cliff
from .lie_types import FAMILIES, LOWERING, Weight, make_type_spec
from .serialization import (
    DocumentError,
    deserialize,
    graph_to_json,
    parse_word,
    serialize,
    to_dot,
)
from .tableau import apply_plain, bfs_highest_weight
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _lambda(text: str) -> Weight:
    try:
        return Weight(tuple(int(v) for v in text.split(",")))
    except ValueError:
        raise UsageError(f"--lambda: expected comma separated integers, got {text!r}") from None


def _emit_graph(graph, model: str, fmt: str) -> None:
    sys.stdout.write(to_dot(graph) if fmt == "dot" else graph_to_json(graph, model) + "\n")


def cmd_gen_hw(args) -> int:
    spec = make_type_spec(args.family, args.rank)
    graph = bfs_highest_weight(spec, _lambda(args.lam), args.depth)
    _emit_graph(graph, "hw", args.format)
    return 0


def cmd_gen_binfty(args) -> int:
    spec = make_type_spec(args.family, args.rank)
    _emit_graph(bfs_binfty(spec, args.depth), "binfty", args.format)
    return 0


def cmd_act(args) -> int:
    element, model, lam = deserialize(_read(args.infile))
    if model != args.model:
        raise UsageError(f"--model {args.model} but the document holds a {model} element")
    spec = element.spec
    for direction, i in parse_word(args.word):
        if i not in spec.index_set:
            raise UsageError(f"word: index {i} is outside 1..{spec.rank}")
        if model == "hw":
            element = apply_plain(spec, i, element, direction)
        elif model == "binfty":
            step = binfty_lower if direction == LOWERING else binfty_raise
            element = step(spec, i, element)
        else:
            element = cliff_step(spec, i, element, direction)
        if element is None:
            print("none")
            return 0
    print(serialize(element, model, lam))
    return 0


def cmd_cliff(args) -> int:
    element, model, _ = deserialize(_read(args.infile))
    spec = element.spec
    if args.dir == "to":
        if model != "binfty":
            raise UsageError("--dir to expects a binfty document")
        print(serialize(tableau_to_cliff(spec, element), "cliff"))
    else:
        if model != "cliff":
            raise UsageError("--dir from expects a cliff document")
        print(serialize(cliff_to_tableau(spec, element), "binfty"))
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.family, args.rank, args.depth)
    print(report.to_json())
    for line in report.failures[:20]:
        print(f"FAIL {line}", file=sys.stderr)
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystal-tableaux",
        description="Crystals B(lambda) and B(infinity) realized by Young tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_rank(p, required=True):
        p.add_argument("--family", choices=FAMILIES, required=required)
        p.add_argument("--rank", type=int, required=required,
                       help="number of tableau rows n (type D: the algebra D_(n+1))")

    p = sub.add_parser("gen-hw", help="generate B(lambda)")
    family_rank(p)
    p.add_argument("--lambda", dest="lam", required=True, help="c1,c2,... values on h_i")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_gen_hw)

    p = sub.add_parser("gen-binfty", help="generate the top of B(infinity)")
    family_rank(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_gen_binfty)

    p = sub.add_parser("act", help="apply an operator word such as f1,e2")
    p.add_argument("--model", choices=("hw", "binfty", "cliff"), required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--in", dest="infile", required=True, help="element document, '-' for stdin")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("cliff", help="convert between binfty and cliff documents")
    p.add_argument("--dir", choices=("to", "from"), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_cliff)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    family_rank(p, required=False)
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; that code is reserved for failed verification
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (UsageError, DocumentError, CliffError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run_cli(argv) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())

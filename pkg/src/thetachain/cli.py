"""Command-line interface.

Exit status: 0 when the input is valid and every property holds, 1 when the
input cannot be parsed or violates the structural invariants of its type,
2 when a well-formed input fails the property being tested.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .adc import check_loop_free, check_strongly_loop_free, check_unital, morphism_defect
from .cells import enumerate_cells, format_cell
from .discs import dualize_object
from .errors import ThetaError
from .properties import SuiteConfig, compare_results, run_all
from .simple import CONVENTIONS, enumerate_hom, morphism_sequences, recognize_simple, validate_simple_morphism
from .textio import (
    convert,
    format_adc,
    format_cochain,
    format_morphism,
    load_morphism,
    load_object,
    load_wreath,
    read_text,
)
from .wreath import V_object, fully_faithful_report

OK, INVALID, FAILED = 0, 1, 2


def _status(flag: bool) -> str:
    return "pass" if flag else "fail"


def cmd_convert(args) -> int:
    print(convert(args.input, args.src, args.dst))
    return OK


def cmd_check(args) -> int:
    try:
        K = load_object(args.object, args.convention)
    except ThetaError as exc:
        print(f"structure: fail ({type(exc).__name__}: {exc})")
        return INVALID
    results = {
        "structure": True,
        "unital": check_unital(K),
        "loop-free": check_loop_free(K),
        "strongly-loop-free": check_strongly_loop_free(K),
        "simple": recognize_simple(K) is not None,
    }
    for name, flag in results.items():
        print(f"{name}: {_status(flag)}")
    return OK if all(results.values()) else FAILED


def cmd_hom(args) -> int:
    K = load_object(args.source, args.convention)
    L = load_object(args.target, args.convention)
    homs = enumerate_hom(K, L)
    if args.list:
        src, dst = _label(args.source), _label(args.target)
        print("\n".join(format_morphism(f, src, dst) for f in homs), end="")
    else:
        print(len(homs))
    return OK


def _label(ref: str) -> str:
    return ref if Path(ref).is_file() else read_text(ref).strip().splitlines()[0]


def cmd_validate_morphism(args) -> int:
    path = Path(args.morphism)
    text = read_text(args.morphism)
    f = load_morphism(text, args.convention, path.parent if path.is_file() else None)
    defect = morphism_defect(f)
    if defect:
        print(f"invalid: {defect[0].__name__}: {defect[1]}")
        return FAILED
    K, L = recognize_simple(f.source), recognize_simple(f.target)
    if K is not None and L is not None:
        # cross-check against the combinatorial criterion
        try:
            validate_simple_morphism(K, L, morphism_sequences(f))
        except ThetaError as exc:
            print(f"invalid: {type(exc).__name__}: {exc}")
            return FAILED
    print("valid")
    return OK


def cmd_cells(args) -> int:
    K = load_object(args.object, args.convention)
    for x in enumerate_cells(K, args.cap):
        print(format_cell(x))
    return OK


def cmd_dual(args) -> int:
    print(format_cochain(dualize_object(load_object(args.object, args.convention))), end="")
    return OK


def cmd_wreath_v(args) -> int:
    print(format_adc(V_object(load_wreath(args.wreath, args.convention))), end="")
    return OK


def cmd_wreath_check(args) -> int:
    w1 = load_wreath(args.source, args.convention)
    w2 = load_wreath(args.target, args.convention)
    rep = fully_faithful_report(w1, w2)
    print(f"wreath: {rep.wreath_count}")
    print(f"theta: {rep.target_count}")
    print(f"fully-faithful: {_status(rep.ok)}")
    return OK if rep.ok else FAILED


def cmd_suite(args) -> int:
    cfg = SuiteConfig(convention=args.convention, cell_cap=args.cap)
    runs = {cfg.convention: run_all(cfg)}
    if args.both_conventions:
        other = "swapped" if cfg.convention == "std" else "std"
        runs[other] = run_all(replace(cfg, convention=other))
    lines = [f"[{conv}] {r.line()}" for conv, results in runs.items() for r in results]
    ok = all(r.ok for results in runs.values() for r in results)
    if args.both_conventions:
        cmp = compare_results(runs["std"], runs["swapped"])
        lines.append(cmp.line())
        ok &= cmp.ok
    print("\n".join(lines))
    return OK if ok else FAILED


class _Parser(argparse.ArgumentParser):
    # usage errors count as invalid input, not as property failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--convention", choices=CONVENTIONS, default=argparse.SUPPRESS,
                        help="labeling of the boundary parts (default: std)")

    p = _Parser(prog="thetachain", parents=[common],
                                description="Chain-complex computations for the category Θ.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("convert", cmd_convert, "convert between sequences, up-and-down vectors and trees")
    sp.add_argument("--from", dest="src", choices=("seq", "updown", "tree"), required=True)
    sp.add_argument("--to", dest="dst", choices=("seq", "updown", "tree"), required=True)
    sp.add_argument("input")

    sp = add("check", cmd_check, "check the basis predicates of a complex")
    sp.add_argument("object", help="object file or inline sequence")

    sp = add("hom", cmd_hom, "enumerate the morphisms between two simple complexes")
    sp.add_argument("source")
    sp.add_argument("target")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the cardinality (default)")
    mode.add_argument("--list", action="store_true", help="print every morphism")

    sp = add("validate-morphism", cmd_validate_morphism, "check a morphism file")
    sp.add_argument("morphism")

    sp = add("cells", cmd_cells, "list the cells of νK")
    sp.add_argument("object")
    sp.add_argument("--cap", type=int, default=1, help="largest coefficient allowed in a cell")

    sp = add("dual", cmd_dual, "print the dual cochain complex")
    sp.add_argument("object")

    sp = add("wreath-v", cmd_wreath_v, "print V of a wreath object")
    sp.add_argument("wreath")

    sp = add("wreath-check", cmd_wreath_check, "compare wreath and Θ hom-sets through V")
    sp.add_argument("source")
    sp.add_argument("target")

    sp = add("suite", cmd_suite, "run every property check over the catalog")
    sp.add_argument("--cap", type=int, default=1, help="cell coefficient cap")
    sp.add_argument("--both-conventions", action="store_true",
                    help="also rerun under the other convention and compare counts")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "convention"):
        args.convention = "std"
    try:
        return args.func(args)
    except (ThetaError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())

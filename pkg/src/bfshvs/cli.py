"""Command-line entry point.

Exit codes: 0 success / check passed, 1 check failed (witnesses printed),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .algebra import MODES, MalformedInput, check_axioms
from .harness import (
    PROPERTIES,
    STRATEGIES,
    InstanceSpec,
    run_suite,
    search_counterexamples,
    suite_report,
)
from .hvsops import scalar_product, soft_extended_sum, soft_negate, soft_sum
from .soft import (
    and_product,
    extended_intersection,
    intersection,
    is_subset,
    or_product,
    restricted_union,
    union,
)
from .structure import is_bfs_hypervector_space, is_subhyperspace
from .textio import Document, dump_json, format_bfss, load, print_document
from .transforms import classify_map, image, preimage

BINARY = {
    "meet": intersection,
    "emeet": extended_intersection,
    "join": union,
    "rjoin": restricted_union,
    "and": and_product,
    "or": or_product,
}
OPS = ("subset", "meet", "emeet", "join", "rjoin", "and", "or", "sum", "esum", "scale", "neg", "image", "preimage")


class UsageError(Exception):
    pass


def _paint(text: str, ok: bool, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _verdict(ok: bool, out) -> str:
    return _paint("PASS" if ok else "FAIL", ok, out)


def _load_one(path: str, kind: str, name: Optional[str] = None):
    doc = load(path)
    if name is None:
        return doc.only(kind)
    table = doc._table(kind)
    if name not in table:
        raise UsageError(f"{path}: no {kind} section named {name!r}")
    value = table[name]
    return value.space if kind == "hvs" else value


def _emit(text: str, out_path: Optional[str], out) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


# -- subcommands --------------------------------------------------------------

def cmd_check_axioms(args, out) -> int:
    hvs = _load_one(args.hvs, "hvs")
    report = check_axioms(hvs, MODES[args.mode])
    if args.json:
        out.write(dump_json(report.as_dict()))
        return 0 if report.ok else 1
    for ax, ok in report.verdicts.items():
        out.write(f"{ax}: {_verdict(ok, out)}\n")
    out.write(f"strongly right distributive: {report.strongly_right}\n")
    out.write(f"strongly left distributive: {report.strongly_left}\n")
    for w in report.witnesses:
        args_ = " ".join(str(v) for v in w.args)
        out.write(f"  {w.axiom} at ({args_}): left={{{' '.join(map(str, w.left))}}} "
                  f"right={{{' '.join(map(str, w.right))}}}\n")
    return 0 if report.ok else 1


def _print_witnesses(witnesses, out) -> None:
    for w in witnesses:
        where = f" param {w.param}" if w.param is not None else ""
        out.write(f"  {w.condition}{where} at {w.args}: lhs={w.lhs} rhs={w.rhs}\n")


def cmd_check_subhyperspace(args, out) -> int:
    hvs = _load_one(args.hvs, "hvs")
    F = _load_one(args.bfss, "bfss")
    params = [args.param] if args.param else list(F.params)
    ok_all = True
    payload = {}
    for e in params:
        if e not in F:
            raise UsageError(f"no parameter {e!r} in {args.bfss}")
        report = is_subhyperspace(F[e], hvs)
        ok_all = ok_all and report.verdict
        payload[e] = report.as_dict()
        if not args.json:
            out.write(f"{e}: {_verdict(report.verdict, out)}\n")
            _print_witnesses(report.witnesses, out)
    if args.json:
        out.write(dump_json({"verdict": ok_all, "params": payload}))
    return 0 if ok_all else 1


def cmd_check_bfshvs(args, out) -> int:
    hvs = _load_one(args.hvs, "hvs")
    F = _load_one(args.bfss, "bfss")
    report = is_bfs_hypervector_space(F, hvs)
    if args.json:
        out.write(dump_json(report.as_dict()))
    else:
        for e, r in report.per_param.items():
            out.write(f"{e}: {_verdict(r.verdict, out)}\n")
            _print_witnesses(r.witnesses, out)
        out.write(f"overall: {_verdict(report.verdict, out)}\n")
    return 0 if report.verdict else 1


def cmd_op(args, out) -> int:
    name = args.operation
    inputs = [_load_one(p, "bfss") for p in args.inputs]
    arity = 1 if name in ("scale", "neg", "image", "preimage") else 2
    if len(inputs) != arity:
        raise UsageError(f"op {name} takes {arity} soft set file(s), got {len(inputs)}")
    hvs = _load_one(args.hvs, "hvs") if args.hvs else None
    if name in ("sum", "esum", "scale", "neg") and hvs is None:
        raise UsageError(f"op {name} needs --hvs")
    if name == "subset":
        ok, w = is_subset(*inputs)
        if args.json:
            out.write(dump_json({"subset": ok, "witness": None if w is None else w.__dict__}))
        else:
            out.write(f"subset: {ok}\n")
            if w is not None:
                out.write(f"  param {w.param} element {w.element} component {w.component}\n")
        return 0 if ok else 1
    if name in BINARY:
        result = BINARY[name](*inputs)
    elif name == "sum":
        result = soft_sum(inputs[0], inputs[1], hvs)
    elif name == "esum":
        result = soft_extended_sum(inputs[0], inputs[1], hvs)
    elif name == "scale":
        if args.scalar is None:
            raise UsageError("op scale needs --scalar")
        result = scalar_product(args.scalar, inputs[0], hvs)
    elif name == "neg":
        result = soft_negate(inputs[0], hvs)
    else:
        if not args.map:
            raise UsageError(f"op {name} needs --map")
        ff = _load_one(args.map, "map")
        result = image(ff, inputs[0]) if name == "image" else preimage(ff, inputs[0])
    _emit("\n".join(format_bfss(args.name, result)) + "\n", args.output, out)
    return 0


def cmd_classify_map(args, out) -> int:
    V = _load_one(args.hvs, "hvs")
    W = _load_one(args.target, "hvs") if args.target else V
    ff = _load_one(args.map, "map")
    report = classify_map(ff.phi, V, W)
    if args.json:
        out.write(dump_json(report.as_dict()))
    else:
        for key in ("additive", "linear", "good"):
            value = getattr(report, key)
            witness = getattr(report, f"{key}_witness")
            out.write(f"{key}: {value}")
            out.write(f"  witness {witness}\n" if witness is not None and not value else "\n")
    if args.require:
        return 0 if getattr(report, args.require) else 1
    return 0


def cmd_fuzz(args, out) -> int:
    if args.property not in PROPERTIES:
        raise UsageError(f"unknown property {args.property!r}; known: {', '.join(PROPERTIES)}")
    spec = InstanceSpec(max_size=args.max_size, field=args.field, strategy=args.strategy,
                        mode=MODES[args.mode], seed=args.seed)
    result = search_counterexamples(args.property, spec, args.budget)
    if args.emit and result.counterexample:
        Path(args.emit).write_text(result.counterexample["instance"]["document"], encoding="utf-8")
    if args.json:
        out.write(dump_json(result.as_dict(timings=args.timings)))
    else:
        found = result.counterexample is not None
        out.write(f"{args.property}: {'counterexample found' if found else 'no counterexample'} "
                  f"({result.tried} instances, {result.rejected} rejected)\n")
        if found:
            for f in result.counterexample["failures"]:
                out.write(f"  {f}\n")
            out.write(result.counterexample["instance"]["document"])
    return 1 if result.counterexample else 0


def cmd_report(args, out) -> int:
    results = run_suite(args.seed)
    report = suite_report(results, args.seed, timings=args.timings)
    if args.json or args.output:
        _emit(dump_json(report), args.output, out)
    if not args.json:
        for r in results:
            expect = {True: "probe", None: "explore", False: "claim"}[r.expect_counterexample]
            status = "counterexample" if r.counterexample else "no counterexample"
            good = r.label not in report["unexpected"]
            out.write(f"{_verdict(good, out)} {r.label:32s} [{expect}] {status} "
                      f"(tried {r.tried}, rejected {r.rejected})\n")
    return 0 if report["ok"] else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bfshvs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-axioms", help="test H1-H5 exhaustively")
    p.add_argument("hvs")
    p.add_argument("--mode", choices=sorted(MODES), default="strict")
    p.add_argument("--axiom-compat", dest="mode", action="store_const", const="compat",
                   help="shorthand for --mode compat")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("check-subhyperspace", help="check each parameter slice as a subhyperspace")
    p.add_argument("hvs")
    p.add_argument("bfss")
    p.add_argument("--param")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_subhyperspace)

    p = sub.add_parser("check-bfshvs", help="check a soft set is a bipolar fuzzy soft hypervector space")
    p.add_argument("hvs")
    p.add_argument("bfss")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_bfshvs)

    p = sub.add_parser("op", help="apply an operation to soft set files")
    p.add_argument("operation", choices=OPS)
    p.add_argument("inputs", nargs="+")
    p.add_argument("--hvs")
    p.add_argument("--scalar", type=int)
    p.add_argument("--map")
    p.add_argument("--name", default="result", help="section name of the output soft set")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("classify-map", help="additive / linear / good classification of a carrier map")
    p.add_argument("hvs")
    p.add_argument("map")
    p.add_argument("--target", help="codomain space (defaults to the domain)")
    p.add_argument("--require", choices=("additive", "linear", "good"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify_map)

    p = sub.add_parser("fuzz", help="seeded counterexample search for one property")
    p.add_argument("property")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--strategy", choices=STRATEGIES, default="constructive")
    p.add_argument("--field", type=int, choices=(2, 3), default=2)
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--mode", choices=sorted(MODES), default="strict")
    p.add_argument("--emit", help="write the minimised counterexample document here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("report", help="run the standard property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte-stability)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (MalformedInput, UsageError, ValueError, KeyError, OSError) as exc:
        err.write(f"bfshvs: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

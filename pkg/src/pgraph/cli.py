"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a check failure, 2 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import laws as law_suite
from .formats import ParseError, format_graph, namer, parse_graph, resolve
from .heap_model import Fault, HeapError, layout
from .oracles import GenConfig, gen_graph
from .partial_graph import BINARY, KINDS, UNIT, GraphError, Mark, filter_marks
from .schorr_waite import (
    InvariantViolation,
    NonTermination,
    PreconditionError,
    postcondition_failures,
    sw_run,
)
from .union_find import ScriptError, parse_script, run_script

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_mark(args, out) -> int:
    g0, names = parse_graph(_read(args.file))
    if g0.kind != BINARY:
        raise UsageError(f"mark needs a binary graph, got {g0.kind}")
    name = namer(names)
    root = resolve(args.root, names)
    try:
        res = sw_run(g0, root, check_each_iteration=args.check_invariants, trace=args.trace,
                     debug=args.debug, connected=args.connected)
    except PreconditionError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_FAIL
    except InvariantViolation as exc:
        if args.trace:
            for ev in exc.trace:
                print(ev.format(name), file=out)
        print(f"error: {exc}", file=out)
        return EXIT_FAIL
    except (NonTermination, Fault) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_FAIL
    if args.trace:
        for ev in res.trace:
            print(ev.format(name), file=out)
    out.write(format_graph(res.graph, names))
    problems = postcondition_failures(g0, res.graph, root, args.connected)
    restored = "ok" if not any(p.startswith("edges") for p in problems) else "FAIL"
    print(f"marked={len(filter_marks(res.graph, (Mark.X,)))} restored={restored}", file=out)
    for p in problems:
        print(f"postcondition: {p}", file=out)
    return EXIT_FAIL if problems else EXIT_OK


def cmd_laws(args, out) -> int:
    try:
        results = law_suite.run_laws(args.cases, args.seed, args.exhaustive_tiny, args.law, args.workers)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    bad = 0
    for r in results:
        status = "ok" if r.ok else "FAIL"
        print(f"law={r.name} passed={r.passed} failed={r.failed} {status} ({r.seconds:.2f}s)", file=out)
        if not r.ok:
            bad += 1
            for k, part in enumerate(r.counterexample or ()):
                text = format_graph(part) if hasattr(part, "kind") else f"{part!r}\n"
                out.write(f"  arg{k}:\n" + "".join(f"    {line}\n" for line in text.splitlines()))
    print(f"laws={len(results)} failing={bad}", file=out)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_uf(args, out) -> int:
    script = parse_script(_read(args.script))
    run = run_script(script, check=True, check_all=args.full)
    for step in run.steps:
        line = f"{step.op} -> {step.result}"
        print(line + (" ok" if step.ok else f" FAIL: {step.problem}"), file=out)
    print(f"ops={len(run.steps)} failing={sum(not s.ok for s in run.steps)}", file=out)
    return EXIT_OK if run.ok else EXIT_FAIL


def cmd_gen(args, out) -> int:
    marks = tuple(UNIT if m == "-" else Mark(m) for m in args.marks)
    cfg = GenConfig(args.nodes, args.density, args.seed, args.kind, not args.open, args.forest, marks)
    text = format_graph(gen_graph(cfg))
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_layout(args, out) -> int:
    g, _ = parse_graph(_read(args.file))
    out.write(layout(g).dump())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pgraph", description="Partial graphs, pointer-reversal marking and union-find, checked at runtime.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("mark", help="mark a binary graph by pointer reversal")
    m.add_argument("file")
    m.add_argument("root", help="root node id or declared name")
    m.add_argument("--check-invariants", action="store_true", help="check the invariant at every loop head")
    m.add_argument("--trace", action="store_true", help="print one line per iteration")
    m.add_argument("--connected", action="store_true", help="also require every node to be reachable from the root")
    m.add_argument("--debug", action="store_true", help="also check each operation's pre/post implication")
    m.set_defaults(func=cmd_mark)

    lw = sub.add_parser("laws", help="run the law suite")
    lw.add_argument("--seed", type=int, default=0)
    lw.add_argument("--cases", type=int, default=500)
    lw.add_argument("--exhaustive-tiny", action="store_true", help="add every case over a 3-node universe")
    lw.add_argument("--law", action="append", help="law name or group prefix (repeatable)")
    lw.add_argument("--workers", type=int, default=1)
    lw.set_defaults(func=cmd_laws)

    u = sub.add_parser("uf", help="replay a union-find script with checks")
    u.add_argument("script")
    u.add_argument("--full", action="store_true", help="re-check every set after every step")
    u.set_defaults(func=cmd_uf)

    gn = sub.add_parser("gen", help="write a random graph file")
    gn.add_argument("--nodes", type=int, required=True)
    gn.add_argument("--density", type=float, default=0.5)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--kind", choices=KINDS, default=BINARY)
    gn.add_argument("--open", action="store_true", help="allow dangling edges")
    gn.add_argument("--forest", action="store_true", help="unary: generate an inverted forest")
    gn.add_argument("--marks", nargs="+", default=["O"], choices=["O", "L", "R", "X", "-"])
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    ly = sub.add_parser("layout", help="print the heap layout of a graph file")
    ly.add_argument("file")
    ly.set_defaults(func=cmd_layout)
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "nodes", 0) < 0:
            raise UsageError("--nodes must be non-negative")
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ScriptError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HeapError, GraphError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

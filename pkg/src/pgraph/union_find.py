"""Union-find as pointer chasing over unary graphs laid out in the heap."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .heap_model import (
    AbstractionError,
    Fault,
    Heap,
    abstract_unary,
    h_alloc,
    h_restrict,
    h_write,
    read_ptr,
)
from .partial_graph import NULL, NodeSet, PartialGraph, nodes, reach, remove, sinks


def summit(g: PartialGraph, x: int) -> NodeSet:
    """Ends of the paths from ``x``: dangling targets, or the node where a path closes a cycle."""
    out: set = set()
    _summit_into(g, set(), x, out)
    return frozenset(out)


def _summit_into(g: PartialGraph, removed: set, x: int, out: set) -> None:
    # ``removed`` holds the ancestors, so each call sees the graph with them deleted
    if x not in g or x in removed:
        out.add(x)
        return
    removed.add(x)
    for y in g.adj(x):
        _summit_into(g, removed, y, out)
    removed.discard(x)


def summit_literal(g: PartialGraph, x: int) -> NodeSet:
    """The recursion with explicit node removal at every step."""
    if x not in g:
        return frozenset({x})
    rest = remove(g, x)
    out: set = set()
    for y in g.adj(x):
        out |= summit_literal(rest, y)
    return frozenset(out)


def summits(g: PartialGraph) -> NodeSet:
    out: set = set()
    for x in g:
        out |= summit(g, x)
    return frozenset(out)


def loops(g: PartialGraph) -> NodeSet:
    return frozenset(x for x in g if x in g.adj(x))


def cycles(g: PartialGraph) -> NodeSet:
    out = set()
    for x in g:
        if any(x in reach(g, y) for y in g.adj(x)):
            out.add(x)
    return frozenset(out)


def dangls(g: PartialGraph) -> NodeSet:
    return sinks(g) - nodes(g)


def preacyclic(g: PartialGraph) -> bool:
    return cycles(g) <= loops(g)


# -- the set predicate -----------------------------------------------------------

@dataclass(frozen=True)
class SetWitness:
    members: NodeSet
    representative: int


def set_diagnosis(h: Heap, w: SetWitness) -> Optional[str]:
    """None when the heap restricted to ``w.members`` lays out that set; otherwise the reason."""
    frag = h_restrict(h, w.members)
    try:
        g = abstract_unary(frag, w.members)
    except AbstractionError as exc:
        return f"no unary graph over the members: {exc}"
    top = frozenset({w.representative})
    if nodes(g) != frozenset(w.members):
        return f"nodes {sorted(nodes(g))} differ from members {sorted(w.members)}"
    s = summits(g)
    if s != top:
        return f"summits {sorted(s)} are not {{{w.representative}}}"
    lp = loops(g)
    if lp != top:
        return f"loops {sorted(lp)} are not {{{w.representative}}}"
    return None


def check_set(h: Heap, w: SetWitness) -> bool:
    return set_diagnosis(h, w) is None


# -- operations --------------------------------------------------------------------

def uf_new(h: Heap) -> Tuple[Heap, int]:
    h, p = h_alloc(h, [NULL])
    h = h_write(h, p, p)
    return h, p


def uf_find(h: Heap, x: int) -> int:
    p = read_ptr(h, x)
    steps = 0
    while p != x:
        steps += 1
        if steps > len(h):
            raise Fault(f"find from {x} does not reach a root")
        x = p
        p = read_ptr(h, x)
    return x


def uf_union(h: Heap, x1: int, x2: int) -> Tuple[Heap, int]:
    return h_write(h, x1, x2), x2


# -- scripts --------------------------------------------------------------------

class ScriptError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class Op:
    kind: str
    args: Tuple[str, ...]
    line: Optional[int] = None

    def __str__(self) -> str:
        return " ".join((self.kind, *self.args))


UfScript = List[Op]

_ARGS = {"new": 1, "find": 1, "union": 2}
_HANDLE = re.compile(r"[A-Za-z0-9_.-]+\Z")


def parse_script(text: str) -> UfScript:
    ops: UfScript = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        if kind not in _ARGS:
            raise ScriptError(f"unknown operation {kind!r}", n)
        if len(args) != _ARGS[kind]:
            raise ScriptError(f"{kind} takes {_ARGS[kind]} handle(s), got {len(args)}", n)
        for a in args:
            if not _HANDLE.match(a):
                raise ScriptError(f"bad handle {a!r}", n)
        ops.append(Op(kind, tuple(args), n))
    return ops


def format_script(script: Iterable[Op]) -> str:
    return "".join(f"{op}\n" for op in script)


@dataclass
class StepRecord:
    op: Op
    result: Optional[str]
    ok: bool
    problem: Optional[str] = None


@dataclass
class ScriptRun:
    heap: Heap
    handles: Dict[str, int]
    steps: List[StepRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)


def run_script(script: UfScript, check: bool = True, check_all: bool = False) -> ScriptRun:
    """Replay ``script`` on a fresh heap.

    ``union`` first finds both representatives; merging a set with itself is
    a no-op.  With ``check``, every step compares against the explicit
    partition oracle, re-checks the set predicate on the sets the step
    touched, and confirms that every other set's cells are unchanged.
    ``check_all`` re-checks the set predicate on every set instead.
    """
    from .oracles import PartitionOracle

    h = Heap()
    handles: Dict[str, int] = {}
    names: Dict[int, str] = {}
    run = ScriptRun(h, handles)
    oracle = PartitionOracle()

    def addr(op: Op, name: str) -> int:
        if name not in handles:
            raise ScriptError(f"unbound handle {name!r}", op.line)
        return handles[name]

    for op in script:
        before = h
        problems: List[str] = []
        result = None
        if op.kind == "new":
            (name,) = op.args
            if name in handles:
                raise ScriptError(f"handle {name!r} already bound", op.line)
            h, x = uf_new(h)
            handles[name] = x
            names[x] = name
            result = name
        elif op.kind == "find":
            x = addr(op, op.args[0])
            result = names[uf_find(h, x)]
        else:
            x1, x2 = (addr(op, a) for a in op.args)
            r1, r2 = uf_find(h, x1), uf_find(h, x2)
            if r1 != r2:
                h, r = uf_union(h, r1, r2)
            else:
                r = r1
            result = names[r]
        if check:
            expected = oracle.apply(op)
            if op.kind != "new" and expected != result:
                problems.append(f"oracle representative {expected}, heap gave {result}")
            touched = oracle.block_of(op.args[-1]) if op.kind != "find" else None
            for members, rep in oracle.blocks():
                addrs = frozenset(handles[m] for m in members)
                if check_all or members == touched:
                    why = set_diagnosis(h, SetWitness(addrs, handles[rep]))
                elif h_restrict(h, addrs) != h_restrict(before, addrs):
                    why = "cells changed by an operation on another set"
                else:
                    continue
                if why:
                    problems.append(f"set {sorted(members)} rep {rep}: {why}")
        run.steps.append(StepRecord(op, result, not problems, "; ".join(problems) or None))
    run.heap = h
    return run


def to_script(ops: Iterable[Tuple[str, Tuple[str, ...]]]) -> UfScript:
    return [Op(kind, tuple(args), n) for n, (kind, args) in enumerate(ops, 1)]

"""Reference implementations and seeded generators.

Nothing here imports the modules it is used to check.  Graph entries are
read through the public mapping interface only.  Randomness comes from
``random.Random`` (Mersenne Twister) seeded explicitly.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .partial_graph import BINARY, GENERAL, NULL, UNARY, UNIT, Mark, PartialGraph

BINARY_SPACING = 3
GENERAL_SPACING = 8
GENERAL_MAX_DEGREE = 3


def dfs_mark(g0: PartialGraph, r: int) -> frozenset:
    """Nodes reachable from ``r``, by recursive depth-first search with a visited set."""
    visited: set = set()

    def visit(x):
        if x == NULL or x in visited or x not in g0:
            return
        visited.add(x)
        for y in g0[x][1]:
            visit(y)

    visit(r)
    return frozenset(visited)


def reach_oracle(g: PartialGraph, x: int) -> frozenset:
    if x not in g:
        return frozenset()
    seen = {x}
    queue = deque([x])
    while queue:
        for y in g[queue.popleft()][1]:
            if y in g and y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _path_ends(g: PartialGraph, x: int) -> set:
    out = set()
    stack: List[Tuple[int, Tuple[int, ...]]] = [(x, (x,))]
    while stack:
        y, path = stack.pop()
        for z in g[y][1]:
            if z not in g or z in path:
                out.add(z)
            else:
                stack.append((z, path + (z,)))
    return out


def summit_oracle(g: PartialGraph, x: int) -> frozenset:
    """Children ``z`` of the end ``y`` of some simple path from ``x``, where ``z`` dangles or is on the path."""
    if x not in g:
        return frozenset({x})
    return frozenset(_path_ends(g, x))


def summits_oracle(g: PartialGraph) -> frozenset:
    out: set = set()
    for x in g:
        out |= _path_ends(g, x)
    return frozenset(out)


def list_walk(h, head: int, end: int = NULL, limit: int = 10_000) -> List[int]:
    """Values of a (value, next) cell list, read straight out of a heap mapping."""
    out = []
    a = head
    while a != end:
        if len(out) > limit:
            raise ValueError("list too long or cyclic")
        out.append(h[a])
        a = h[a + 1]
    return out


# -- union-find partition -------------------------------------------------------

@dataclass
class Partition:
    blocks: List[frozenset]
    reps: Dict[frozenset, str]

    def rep_of(self, item: str) -> str:
        for b in self.blocks:
            if item in b:
                return self.reps[b]
        raise KeyError(item)


class OracleScriptError(ValueError):
    pass


class PartitionOracle:
    """Explicit set-of-sets with a stored representative per set."""

    def __init__(self):
        self._block: Dict[str, int] = {}
        self._members: Dict[int, set] = {}
        self._rep: Dict[int, str] = {}
        self._next = 0

    def _find_block(self, h: str) -> int:
        try:
            return self._block[h]
        except KeyError:
            raise OracleScriptError(f"unbound handle {h!r}") from None

    def new(self, h: str) -> str:
        if h in self._block:
            raise OracleScriptError(f"handle {h!r} already bound")
        k = self._next
        self._next += 1
        self._block[h] = k
        self._members[k] = {h}
        self._rep[k] = h
        return h

    def find(self, h: str) -> str:
        return self._rep[self._find_block(h)]

    def union(self, h1: str, h2: str) -> str:
        b1, b2 = self._find_block(h1), self._find_block(h2)
        if b1 == b2:
            return self._rep[b1]
        for m in self._members[b1]:
            self._block[m] = b2
        self._members[b2] |= self._members.pop(b1)
        del self._rep[b1]
        return self._rep[b2]

    def apply(self, op) -> str:
        return getattr(self, op.kind)(*op.args)

    def blocks(self) -> List[Tuple[frozenset, str]]:
        return [(frozenset(m), self._rep[k]) for k, m in sorted(self._members.items())]

    def block_of(self, h: str) -> frozenset:
        return frozenset(self._members[self._find_block(h)])


def partition_oracle(script) -> Partition:
    o = PartitionOracle()
    for op in script:
        o.apply(op)
    bl = o.blocks()
    return Partition([b for b, _ in bl], {b: r for b, r in bl})


# -- generators -----------------------------------------------------------------

@dataclass(frozen=True)
class GenConfig:
    node_count: int
    edge_density: float = 0.5
    seed: int = 0
    kind: str = BINARY
    closed_only: bool = True
    # unary only: every node's chain ends at a root that loops or dangles
    forest: bool = False
    marks: Tuple[Optional[Mark], ...] = (Mark.O,)
    dangling_rate: float = 0.2


def node_ids(n: int, kind: str) -> List[int]:
    step = {BINARY: BINARY_SPACING, GENERAL: GENERAL_SPACING}.get(kind, 1)
    return [step * (i + 1) for i in range(n)]


def gen_graph(cfg: GenConfig) -> PartialGraph:
    rng = random.Random(cfg.seed)
    ids = node_ids(cfg.node_count, cfg.kind)
    spacing = ids[1] - ids[0] if len(ids) > 1 else (ids[0] if ids else 1)
    outside = [(cfg.node_count + 1 + k) * spacing for k in range(3)]

    def child(allow_null: bool) -> int:
        if not cfg.closed_only and rng.random() < cfg.dangling_rate:
            return rng.choice(outside)
        if allow_null and (not ids or rng.random() >= cfg.edge_density):
            return NULL
        return rng.choice(ids) if ids else NULL

    def mark():
        return rng.choice(cfg.marks)

    table = {}
    if cfg.kind == BINARY:
        for x in ids:
            table[x] = (mark(), (child(True), child(True)))
    elif cfg.kind == UNARY:
        if cfg.forest:
            order = ids[:]
            rng.shuffle(order)
            for i, x in enumerate(order):
                if i == 0 or rng.random() < 1 - cfg.edge_density:
                    succ = x
                    if not cfg.closed_only and rng.random() < cfg.dangling_rate:
                        succ = rng.choice(outside)
                else:
                    succ = rng.choice(order[:i])
                table[x] = (UNIT, (succ,))
        else:
            for x in ids:
                table[x] = (UNIT, (child(False),))
    else:
        for x in ids:
            deg = rng.randint(0, GENERAL_MAX_DEGREE)
            table[x] = (mark(), tuple(child(True) for _ in range(deg)))
    g = PartialGraph(table, cfg.kind)
    if cfg.closed_only:
        assert all(y == NULL or y in g for x in g for y in g[x][1])
    return g


def gen_script(seed: int, max_ops: int = 100) -> list:
    """Random union-find script of at most ``max_ops`` operations, as (kind, args) tuples."""
    rng = random.Random(seed)
    n_ops = rng.randint(1, max_ops)
    bound: List[str] = []
    ops: List[Tuple[str, Tuple[str, ...]]] = []
    for _ in range(n_ops):
        roll = rng.random()
        if not bound or roll < 0.3:
            h = f"h{len(bound)}"
            bound.append(h)
            ops.append(("new", (h,)))
        elif roll < 0.6:
            ops.append(("find", (rng.choice(bound),)))
        else:
            ops.append(("union", (rng.choice(bound), rng.choice(bound))))
    return ops

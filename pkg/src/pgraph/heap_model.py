"""Simulated pointer heap and the layouts of graphs and lists in it.

A :class:`Heap` maps positive addresses to cell values.  A cell holds either a
:class:`~pgraph.partial_graph.Mark` (or the unit ``None``) or an address.
Node ids double as base addresses: a binary node ``x`` occupies ``x, x+1,
x+2``; a unary node occupies ``x``; a general node occupies ``x, x+1`` plus
the cells of its adjacency list.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .partial_graph import (
    BINARY,
    GENERAL,
    NULL,
    UNARY,
    UNIT,
    Mark,
    PartialGraph,
)


class HeapError(Exception):
    pass


class Fault(HeapError):
    """Access to an unallocated address (or through null)."""


class TagError(Fault):
    """Cell read with the wrong expectation (mark vs pointer)."""


class HeapOverlap(HeapError, ValueError):
    pass


class LayoutError(HeapError, ValueError):
    pass


class AbstractionError(HeapError):
    pass


def _is_ptr(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _is_mark(v) -> bool:
    return v is UNIT or isinstance(v, Mark)


class Heap:
    __slots__ = ("_cells",)

    def __init__(self, cells: Mapping[int, object] | Iterable = ()):
        table = dict(cells)
        for a, v in table.items():
            if not _is_ptr(a) or a <= 0:
                raise Fault(f"invalid address {a!r}")
            if not (_is_ptr(v) or _is_mark(v)):
                raise TagError(f"cell {a} holds untagged value {v!r}")
        self._cells = table

    @classmethod
    def _raw(cls, table: dict) -> "Heap":
        h = object.__new__(cls)
        h._cells = table
        return h

    def __getitem__(self, a: int):
        return self._cells[a]

    def __contains__(self, a) -> bool:
        return a in self._cells

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._cells))

    def __len__(self) -> int:
        return len(self._cells)

    def items(self):
        return sorted(self._cells.items())

    def domain(self) -> frozenset:
        return frozenset(self._cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Heap):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return hash(frozenset(self._cells.items()))

    def __repr__(self) -> str:
        return "Heap({" + ", ".join(f"{a}: {v!r}" for a, v in self.items()) + "})"

    def dump(self) -> str:
        return "".join(f"{a}: {_show(v)}\n" for a, v in self.items())


def _show(v) -> str:
    if v is UNIT:
        return "-"
    return v.value if isinstance(v, Mark) else str(v)


emp = Heap()


def h_read(h: Heap, a: int):
    try:
        return h._cells[a]
    except (KeyError, TypeError):
        raise Fault(f"read of unallocated address {a}") from None


def h_write(h: Heap, a: int, v) -> Heap:
    if a not in h._cells:
        raise Fault(f"write to unallocated address {a}")
    if not (_is_ptr(v) or _is_mark(v)):
        raise TagError(f"untagged value {v!r}")
    table = dict(h._cells)
    table[a] = v
    return Heap._raw(table)


def read_mark(h: Heap, a: int):
    v = h_read(h, a)
    if not _is_mark(v):
        raise TagError(f"cell {a} holds pointer {v}, expected a mark")
    return v


def read_ptr(h: Heap, a: int) -> int:
    v = h_read(h, a)
    if not _is_ptr(v):
        raise TagError(f"cell {a} holds mark {v!r}, expected a pointer")
    return v


def first_fit(h: Heap, n: int, avoid: Iterable[int] = ()) -> int:
    """Lowest address ``a >= 1`` with ``a .. a+n-1`` free in ``h`` and not in ``avoid``."""
    taken = set(h._cells) | set(avoid)
    a = 1
    while any(a + k in taken for k in range(n)):
        a += 1
    return a


def h_alloc(h: Heap, vs: Sequence) -> Tuple[Heap, int]:
    a = first_fit(h, len(vs))
    table = dict(h._cells)
    for k, v in enumerate(vs):
        if not (_is_ptr(v) or _is_mark(v)):
            raise TagError(f"untagged value {v!r}")
        table[a + k] = v
    return Heap._raw(table), a


def h_join(h1: Heap, h2: Heap) -> Heap:
    common = h1._cells.keys() & h2._cells.keys()
    if common:
        raise HeapOverlap(f"heaps overlap at {sorted(common)}")
    return Heap._raw({**h1._cells, **h2._cells})


def h_restrict(h: Heap, addrs: Iterable[int]) -> Heap:
    keep = set(addrs)
    return Heap._raw({a: v for a, v in h._cells.items() if a in keep})


# -- layouts -----------------------------------------------------------------

def _place(table: dict, a: int, v, owner: int) -> None:
    if a <= 0:
        raise LayoutError(f"node {owner} would occupy address {a}")
    if a in table:
        raise LayoutError(f"address {a} claimed twice (node {owner})")
    table[a] = v


def layout_binary(g: PartialGraph) -> Heap:
    table: dict = {}
    for x, (v, adj) in g.items():
        if len(adj) != 2:
            raise LayoutError(f"node {x} is not binary")
        _place(table, x, v, x)
        _place(table, x + 1, adj[0], x)
        _place(table, x + 2, adj[1], x)
    return Heap._raw(table)


def abstract_binary(h: Heap, ns: Iterable[int]) -> PartialGraph:
    table = {}
    seen: set = set()
    for x in sorted(ns):
        cells = (x, x + 1, x + 2)
        if seen.intersection(cells):
            raise AbstractionError(f"node {x} overlaps another node's cells")
        seen.update(cells)
        try:
            table[x] = (read_mark(h, x), (read_ptr(h, x + 1), read_ptr(h, x + 2)))
        except Fault as exc:
            raise AbstractionError(f"node {x}: {exc}") from None
    return PartialGraph(table, BINARY)


def layout_unary(g: PartialGraph) -> Heap:
    table: dict = {}
    for x, (_, adj) in g.items():
        if len(adj) != 1:
            raise LayoutError(f"node {x} is not unary")
        _place(table, x, adj[0], x)
    return Heap._raw(table)


def abstract_unary(h: Heap, ns: Iterable[int]) -> PartialGraph:
    table = {}
    for x in sorted(ns):
        try:
            table[x] = (UNIT, (read_ptr(h, x),))
        except Fault as exc:
            raise AbstractionError(f"node {x}: {exc}") from None
    return PartialGraph(table, UNARY)


def layout_list(values: Sequence[int], base: int, end: int = NULL) -> Tuple[Heap, int]:
    """Lay ``values`` out as (value, next) cell pairs from ``base``; return (heap, head).

    The empty list is the empty heap with head ``end``.
    """
    table: dict = {}
    n = len(values)
    for k, v in enumerate(values):
        a = base + 2 * k
        _place(table, a, v, base)
        _place(table, a + 1, a + 2 if k + 1 < n else end, base)
    return Heap._raw(table), (base if n else end)


def alloc_list(h: Heap, values: Sequence[int], end: int = NULL) -> Tuple[Heap, int]:
    """Allocate a list first-fit in ``h``; return the extended heap and its head."""
    if not values:
        return h, end
    frag, head = layout_list(values, first_fit(h, 2 * len(values)), end)
    return h_join(h, frag), head


def walk_list(h: Heap, head: int, end: int = NULL) -> Tuple[list, set]:
    values, cells = [], set()
    a = head
    while a != end:
        if a in cells:
            raise AbstractionError(f"list from {head} is cyclic at {a}")
        try:
            values.append(read_ptr(h, a))
            nxt = read_ptr(h, a + 1)
        except Fault as exc:
            raise AbstractionError(f"list from {head}: {exc}") from None
        cells.update((a, a + 1))
        a = nxt
    return values, cells


def layout_general(g: PartialGraph) -> Heap:
    """Node ``x``: mark at ``x``, list head at ``x+1``, list cells from ``x+2``."""
    table: dict = {}
    for x, (v, adj) in g.items():
        frag, head = layout_list(adj, x + 2)
        _place(table, x, v, x)
        _place(table, x + 1, head, x)
        for a, c in frag._cells.items():
            _place(table, a, c, x)
    return Heap._raw(table)


def abstract_general(h: Heap, ns: Iterable[int]) -> PartialGraph:
    graph, _ = _abstract_general(h, ns)
    return graph


def _abstract_general(h: Heap, ns: Iterable[int]):
    table = {}
    seen: set = set()
    for x in sorted(ns):
        try:
            v = read_mark(h, x)
            head = read_ptr(h, x + 1)
        except Fault as exc:
            raise AbstractionError(f"node {x}: {exc}") from None
        adj, cells = walk_list(h, head)
        cells |= {x, x + 1}
        if seen & cells:
            raise AbstractionError(f"node {x} shares cells {sorted(seen & cells)}")
        seen |= cells
        table[x] = (v, tuple(adj))
    return PartialGraph(table, GENERAL), seen


def footprint(g: PartialGraph) -> frozenset:
    if g.kind == BINARY:
        return frozenset(a for x in g for a in (x, x + 1, x + 2))
    if g.kind == UNARY:
        return frozenset(g)
    return frozenset(a for x in g for a in range(x, x + 2 + 2 * len(g.adj(x))))


LAYOUTS = {BINARY: layout_binary, UNARY: layout_unary, GENERAL: layout_general}
ABSTRACTIONS = {BINARY: abstract_binary, UNARY: abstract_unary, GENERAL: abstract_general}


def layout(g: PartialGraph) -> Heap:
    return LAYOUTS[g.kind](g)


def abstract(h: Heap, ns: Iterable[int], kind: str) -> PartialGraph:
    return ABSTRACTIONS[kind](h, ns)


@dataclass(frozen=True)
class LayoutReport:
    matched: bool
    footprint: frozenset
    residual: frozenset
    failure: Optional[str] = None
    graph: Optional[PartialGraph] = None


def layout_report(h: Heap, ns: Iterable[int], kind: str) -> LayoutReport:
    """Try to read a ``kind`` graph on ``ns`` out of ``h`` and split ``h`` accordingly."""
    try:
        g = abstract(h, ns, kind)
    except AbstractionError as exc:
        return LayoutReport(False, frozenset(), h.domain(), str(exc))
    fp = footprint(g)
    return LayoutReport(True, fp, h.domain() - fp, None, g)

"""Partial graphs: finite maps from nodes to (mark, adjacency) with dangling edges.

Graphs form a partial commutative monoid under disjoint union (:func:`join`),
with the empty graph as unit.  Every combinator here is a pure function over
immutable :class:`PartialGraph` values.
"""
from __future__ import annotations

from enum import Enum
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence, Tuple

NULL = 0

GENERAL = "general"
BINARY = "binary"
UNARY = "unary"
KINDS = (GENERAL, BINARY, UNARY)
_ARITY = {BINARY: 2, UNARY: 1}


class Mark(Enum):
    O = "O"  # unmarked
    L = "L"  # traversing left subgraph
    R = "R"  # traversing right subgraph
    X = "X"  # fully marked

    def __repr__(self) -> str:
        return self.value


# Erased and unary graphs carry the unit value as their contents.
UNIT = None

Content = Hashable
Entry = Tuple[Content, Tuple[int, ...]]
NodeSet = frozenset


class GraphError(Exception):
    pass


class InvalidNode(GraphError, ValueError):
    pass


class KindMismatch(GraphError, TypeError):
    pass


class ArityError(GraphError, ValueError):
    pass


class OverlapError(GraphError, ValueError):
    pass


class _Undefined:
    """Result of joining graphs whose domains overlap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Undefined"

    def __bool__(self) -> bool:
        return False


UNDEFINED = _Undefined()


def _check_node(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise InvalidNode(f"not a node: {x!r}")
    return x


class PartialGraph:
    """Immutable partial graph.

    Entries are stored in ascending node order, so iteration, ``repr`` and
    every derived sequence are deterministic.  Equality compares entries
    only; ``kind`` constrains adjacency arity but is not part of identity.
    """

    __slots__ = ("_entries", "kind", "_hash")

    def __init__(self, entries: Mapping[int, Tuple[Content, Sequence[int]]] | Iterable = (), kind: str = GENERAL):
        if kind not in KINDS:
            raise ValueError(f"unknown graph kind {kind!r}")
        items = entries.items() if isinstance(entries, Mapping) else entries
        table = {}
        arity = _ARITY.get(kind)
        for x, (v, adj) in items:
            _check_node(x)
            if x == NULL:
                raise InvalidNode("graphs are undefined on null")
            if x in table:
                raise OverlapError(f"duplicate node {x}")
            adj = tuple(_check_node(y) for y in adj)
            if arity is not None and len(adj) != arity:
                raise ArityError(f"{kind} node {x} needs {arity} children, got {len(adj)}")
            table[x] = (v, adj)
        self._entries = dict(sorted(table.items()))
        self.kind = kind
        self._hash = None

    @classmethod
    def _raw(cls, table: dict, kind: str, ordered: bool = False) -> "PartialGraph":
        # ``ordered``: the caller guarantees ascending keys already
        g = object.__new__(cls)
        g._entries = table if ordered else dict(sorted(table.items()))
        g.kind = kind
        g._hash = None
        return g

    def __getitem__(self, x: int) -> Entry:
        return self._entries[x]

    def get(self, x: int, default=None):
        return self._entries.get(x, default)

    def __contains__(self, x) -> bool:
        return x in self._entries

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def val(self, x: int) -> Content:
        return self._entries[x][0]

    def adj(self, x: int) -> Tuple[int, ...]:
        return self._entries[x][1]

    def left(self, x: int) -> int:
        return self._entries[x][1][0]

    def right(self, x: int) -> int:
        return self._entries[x][1][1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialGraph):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._entries:
            return "e"
        parts = []
        for x, (v, adj) in self._entries.items():
            kids = "[" + ",".join(map(str, adj)) + "]"
            parts.append(f"{x}↦{kids}" if v is UNIT else f"{x}↦({v!r},{kids})")
        return " ⊎ ".join(parts)


_EMPTY = {k: PartialGraph._raw({}, k, True) for k in KINDS}


def empty(kind: str = GENERAL) -> PartialGraph:
    return _EMPTY[kind]


def singleton(x: int, v: Content, adj: Sequence[int], kind: str = GENERAL) -> PartialGraph:
    _check_node(x)
    if x == NULL:
        raise InvalidNode("singleton on null")
    return PartialGraph({x: (v, adj)}, kind)


def join(g1, g2):
    """Disjoint union; :data:`UNDEFINED` when the domains overlap."""
    if g1 is UNDEFINED or g2 is UNDEFINED:
        return UNDEFINED
    if g1.kind != g2.kind and len(g1) and len(g2):
        raise KindMismatch(f"cannot join {g1.kind} with {g2.kind}")
    if g1._entries.keys() & g2._entries.keys():
        return UNDEFINED
    if not g2._entries:
        return g1
    if not g1._entries:
        return g2
    return PartialGraph._raw({**g1._entries, **g2._entries}, g1.kind)


def join_all(graphs: Iterable, kind: str = GENERAL):
    out = empty(kind)
    for g in graphs:
        out = join(out, g)
    return out


def remove(g: PartialGraph, x: int) -> PartialGraph:
    if x not in g:
        return g
    table = dict(g._entries)
    del table[x]
    return PartialGraph._raw(table, g.kind, True)


def nodes(g: PartialGraph) -> NodeSet:
    return frozenset(g._entries)


def nodes0(g: PartialGraph) -> NodeSet:
    return frozenset(g._entries) | {NULL}


def sinks(g: PartialGraph) -> NodeSet:
    out = set()
    for _, adj in g._entries.values():
        out.update(adj)
    return frozenset(out)


def filter_nodes(g: PartialGraph, s: Iterable[int]) -> PartialGraph:
    keep = s if isinstance(s, (set, frozenset)) else set(s)
    return PartialGraph._raw({x: e for x, e in g._entries.items() if x in keep}, g.kind, True)


def filter_marks(g: PartialGraph, marks: Iterable[Content]) -> PartialGraph:
    wanted = set(marks)
    return PartialGraph._raw({x: e for x, e in g._entries.items() if e[0] in wanted}, g.kind, True)


def erase(g: PartialGraph) -> PartialGraph:
    return PartialGraph._raw({x: (UNIT, adj) for x, (_, adj) in g._entries.items()}, g.kind, True)


def map_graph(f: Callable[[int, Entry], Tuple[Content, Sequence[int]]], g: PartialGraph) -> PartialGraph:
    """Replace each entry ``g x`` with ``f(x, g x)``; arity is re-checked for the graph's kind."""
    arity = _ARITY.get(g.kind)
    table = {}
    for x, e in g._entries.items():
        v, adj = f(x, e)
        adj = tuple(adj)
        if arity is not None and len(adj) != arity:
            raise ArityError(f"{g.kind} node {x} needs {arity} children, got {len(adj)}")
        for y in adj:
            if type(y) is not int or y < 0:
                _check_node(y)
        table[x] = (v, adj)
    return PartialGraph._raw(table, g.kind, True)


def closed(g: PartialGraph) -> bool:
    return sinks(g) <= nodes0(g)


def reach(g: PartialGraph, x: int) -> NodeSet:
    """Nodes reachable from ``x``: ``{x}`` plus what each child reaches in ``g \\ x``.

    Sibling calls run on the graph with earlier siblings' results already
    removed.  Those results are closed under successors in ``g \\ x``, so the
    union is unchanged and each node is expanded once.
    """
    alive = set(g._entries)
    out: set = set()
    _reach_into(g._entries, alive, x, out)
    return frozenset(out)


def _reach_into(entries: dict, alive: set, x: int, out: set) -> None:
    if x not in alive:
        return
    alive.discard(x)
    out.add(x)
    for y in entries[x][1]:
        _reach_into(entries, alive, y, out)


def reach_many(g: PartialGraph, xs: Iterable[int]) -> NodeSet:
    """Union of ``reach(g, x)`` over ``xs``, sharing the removal threading across sources."""
    alive = set(g._entries)
    out: set = set()
    for x in xs:
        _reach_into(g._entries, alive, x, out)
    return frozenset(out)


def reach_literal(g: PartialGraph, x: int) -> NodeSet:
    """The unshared recursion, exponential in the worst case; for small graphs."""
    if x not in g:
        return frozenset()
    rest = remove(g, x)
    out = {x}
    for y in g.adj(x):
        out |= reach_literal(rest, y)
    return frozenset(out)


def disjoint_union(a: Iterable[int], b: Iterable[int]) -> NodeSet:
    a, b = frozenset(a), frozenset(b)
    if a & b:
        raise OverlapError(f"sets overlap on {sorted(a & b)}")
    return a | b


def redirect(g: PartialGraph, x: int, index: int, y: int) -> PartialGraph:
    """Set the ``index``-th child of ``x`` to ``y``."""
    v, adj = g[x]
    adj = adj[:index] + (y,) + adj[index + 1:]
    table = dict(g._entries)
    table[x] = (v, adj)
    return PartialGraph._raw(table, g.kind, True)

"""Text format for graphs.

::

    # names a=3 b=6
    kind binary
    3 O 6 0
    6 X 0 3

Binary lines are ``<id> <mark> <left> <right>``, unary lines ``<id> <succ>``,
general lines ``<id> <mark>: <succ>*``.  ``0`` is null and ``-`` is the unit
mark.  Names declared in the header may stand for ids in the body.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from .partial_graph import BINARY, GENERAL, KINDS, NULL, UNARY, UNIT, GraphError, Mark, PartialGraph


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _mark(tok: str, line: int):
    if tok == "-":
        return UNIT
    try:
        return Mark(tok)
    except ValueError:
        raise ParseError(f"bad mark {tok!r}", line) from None


def _mark_text(v) -> str:
    return "-" if v is UNIT else v.value


def parse_names(text: str) -> Dict[str, int]:
    names: Dict[str, int] = {}
    for n, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s.startswith("#"):
            continue
        words = s[1:].split()
        if not words or words[0] != "names":
            continue
        for w in words[1:]:
            k, sep, v = w.partition("=")
            if not sep or not v.isdigit() or not k:
                raise ParseError(f"bad name binding {w!r}", n)
            names[k] = int(v)
    return names


def resolve(tok: str, names: Dict[str, int], line: Optional[int] = None) -> int:
    if tok in names:
        return names[tok]
    if tok.isdigit():
        return int(tok)
    raise ParseError(f"bad node {tok!r}", line)


def parse_graph(text: str) -> Tuple[PartialGraph, Dict[str, int]]:
    """Parse a graph file; return the graph and its name table."""
    names = parse_names(text)
    kind = None
    table: Dict[int, tuple] = {}
    first_line: Dict[int, int] = {}
    for n, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        if kind is None:
            words = s.split()
            if len(words) != 2 or words[0] != "kind" or words[1] not in KINDS:
                raise ParseError("expected 'kind <binary|unary|general>'", n)
            kind = words[1]
            continue
        if kind == GENERAL:
            head, sep, tail = s.partition(":")
            if not sep:
                raise ParseError("general node line needs ':'", n)
            words = head.split()
            if len(words) != 2:
                raise ParseError("expected '<id> <mark>: <succ>*'", n)
            x = resolve(words[0], names, n)
            entry = (_mark(words[1], n), tuple(resolve(w, names, n) for w in tail.split()))
        else:
            words = s.split()
            if kind == BINARY:
                if len(words) != 4:
                    raise ParseError("expected '<id> <mark> <left> <right>'", n)
                x = resolve(words[0], names, n)
                entry = (_mark(words[1], n), (resolve(words[2], names, n), resolve(words[3], names, n)))
            else:
                if len(words) != 2:
                    raise ParseError("expected '<id> <succ>'", n)
                x = resolve(words[0], names, n)
                entry = (UNIT, (resolve(words[1], names, n),))
        if x == NULL:
            raise ParseError("node id 0 is reserved for null", n)
        if x in table:
            raise ParseError(f"duplicate node {x} (first on line {first_line[x]})", n)
        table[x] = entry
        first_line[x] = n
    if kind is None:
        raise ParseError("missing 'kind' header")
    if kind == BINARY:
        ids = sorted(table)
        for a, b in zip(ids, ids[1:]):
            if b - a < 3:
                raise ParseError(f"binary nodes {a} and {b} are closer than 3 apart", first_line[b])
    try:
        return PartialGraph(table, kind), names
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: PartialGraph, names: Optional[Dict[str, int]] = None) -> str:
    lines = []
    if names:
        lines.append("# names " + " ".join(f"{k}={v}" for k, v in sorted(names.items(), key=lambda kv: kv[1])))
    lines.append(f"kind {g.kind}")
    for x, (v, adj) in g.items():
        if g.kind == BINARY:
            lines.append(f"{x} {_mark_text(v)} {adj[0]} {adj[1]}")
        elif g.kind == UNARY:
            lines.append(f"{x} {adj[0]}")
        else:
            lines.append(f"{x} {_mark_text(v)}:" + "".join(f" {y}" for y in adj))
    return "\n".join(lines) + "\n"


def namer(names: Optional[Dict[str, int]]):
    """Id-to-text function that prefers declared names."""
    back = {v: k for k, v in (names or {}).items()}
    return lambda x: back.get(x, str(x))

"""Small named graphs used by the examples, tests and CLI demos."""
from __future__ import annotations

from .partial_graph import BINARY, GENERAL, UNARY, UNIT, Mark, PartialGraph, join

O, L, R, X = Mark.O, Mark.L, Mark.R, Mark.X

# four-node general graph, split into a marked part and an unmarked part
A, B, C, D = 1, 2, 3, 4
SPLIT_NAMES = {"a": A, "b": B, "c": C, "d": D}

split_left = PartialGraph({A: (X, (A, B, C))}, GENERAL)
split_right = PartialGraph({B: (O, ()), C: (O, (B, D)), D: (O, (A,))}, GENERAL)
split_whole = join(split_left, split_right)


def flip(m):
    return {O: X, X: O}.get(m, m)


def flip_tail(x, entry):
    v, adj = entry
    return (flip(v), adj[1:])


# nine-node binary graph, ids spaced by 3 so node triples stay disjoint
N = {k: 3 * k for k in range(1, 10)}
n1, n2, n3, n4, n5, n6, n7, n8, n9 = (N[k] for k in range(1, 10))
NINE_NAMES = {f"n{k}": v for k, v in N.items()}

nine_initial = PartialGraph({
    n1: (O, (n2, n9)),
    n2: (O, (n3, n5)),
    n3: (O, (n4, n1)),
    n4: (O, (0, n2)),
    n5: (O, (n6, n8)),
    n6: (O, (n7, 0)),
    n7: (O, (n5, 0)),
    n8: (O, (n7, n4)),
    n9: (O, (n8, n9)),
}, BINARY)

# mid-traversal state: stack n1, n2, n5; tip n6
nine_midway = PartialGraph({
    n1: (L, (0, n9)),
    n2: (R, (n3, n1)),
    n3: (X, (n4, n1)),
    n4: (X, (0, n2)),
    n5: (L, (n2, n8)),
    n6: (O, (n7, 0)),
    n7: (O, (n5, 0)),
    n8: (O, (n7, n4)),
    n9: (O, (n8, n9)),
}, BINARY)
nine_midway_t, nine_midway_p = n6, n5
nine_midway_stack = [n1, n2, n5]

# union-find forest: {a,b,c} rooted at a, {d,e,f,g} rooted at d
UA, UB, UC, UD, UE, UF, UG = range(1, 8)
FOREST_NAMES = {k: v for k, v in zip("abcdefg", range(1, 8))}

forest_before = PartialGraph({
    UA: (UNIT, (UA,)), UB: (UNIT, (UA,)), UC: (UNIT, (UB,)),
    UD: (UNIT, (UD,)), UE: (UNIT, (UD,)), UF: (UNIT, (UD,)), UG: (UNIT, (UE,)),
}, UNARY)
forest_after = PartialGraph({**dict(forest_before.items()), UA: (UNIT, (UD,))}, UNARY)

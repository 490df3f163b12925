"""Registry of algebraic laws, runnable on random cases and on a tiny exhaustive universe."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .oracles import GenConfig, gen_graph, reach_oracle, summit_oracle
from .partial_graph import (
    BINARY,
    NULL,
    UNARY,
    UNDEFINED,
    UNIT,
    Mark,
    PartialGraph,
    closed,
    empty,
    erase,
    filter_marks,
    filter_nodes,
    join,
    join_all,
    map_graph,
    nodes,
    nodes0,
    reach,
    reach_literal,
    redirect,
    remove,
    singleton,
    sinks,
)
from .schorr_waite import inset, map_if_mark, restore
from .union_find import cycles, dangls, loops, preacyclic, summit, summits

O, L, R, X = Mark.O, Mark.L, Mark.R, Mark.X
ALL_MARKS = (O, L, R, X)

# exhaustive universes
TINY_BINARY = (3, 6, 9)
TINY_BINARY_CHILDREN = (NULL, 3, 6, 9)
TINY_UNARY = (1, 2, 3)
TINY_UNARY_CHILDREN = (NULL, 1, 2, 3, 4)


@dataclass(frozen=True)
class Law:
    name: str
    check: Callable[..., bool]
    sample: Callable[[random.Random], tuple]
    exhaustive: Callable[[], Iterable[tuple]]


@dataclass
class LawResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[tuple] = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


LAWS: List[Law] = []


def law(name: str, sample, exhaustive):
    def deco(fn):
        LAWS.append(Law(name, fn, sample, exhaustive))
        return fn
    return deco


# -- random samplers --------------------------------------------------------------

def rand_graph(rng: random.Random, kind: str = BINARY, marks=ALL_MARKS, max_nodes: int = 8,
               closed_only: Optional[bool] = None, forest: bool = False) -> PartialGraph:
    cfg = GenConfig(
        node_count=rng.randint(0, max_nodes),
        edge_density=rng.random(),
        seed=rng.getrandbits(32),
        kind=kind,
        closed_only=rng.random() < 0.5 if closed_only is None else closed_only,
        forest=forest,
        marks=tuple(marks),
        dangling_rate=rng.choice((0.1, 0.3)),
    )
    return gen_graph(cfg)


def rand_split(rng: random.Random, g: PartialGraph) -> Tuple[PartialGraph, PartialGraph]:
    left = {x for x in g if rng.random() < 0.5}
    return filter_nodes(g, left), filter_nodes(g, nodes(g) - left)


def rand_subset(rng: random.Random, xs: Iterable[int]) -> frozenset:
    return frozenset(x for x in xs if rng.random() < 0.5)


def _ids(g: PartialGraph, extra: int = 2) -> List[int]:
    top = max(list(g) + [0])
    return sorted(set(g) | {NULL} | {top + 3 * k for k in range(1, extra + 1)})


def rand_node(rng: random.Random, g: PartialGraph) -> int:
    return rng.choice(_ids(g))


def rand_marks(rng: random.Random) -> frozenset:
    return frozenset(m for m in ALL_MARKS if rng.random() < 0.5)


def rand_binary_fn(rng: random.Random, universe: Sequence[int]):
    """A node-indexed table turned into a map function that keeps binary arity."""
    pool = list(universe) + [NULL]
    table = {x: (rng.choice(ALL_MARKS), rng.choice(pool), rng.randint(0, 2)) for x in universe}
    return FnTable(table)


@dataclass(frozen=True)
class FnTable:
    table: dict

    def __call__(self, x, entry):
        v, (l, r) = entry
        m, y, mode = self.table.get(x, (O, NULL, 0))
        if mode == 0:
            return (m, (l, r))
        if mode == 1:
            return (m, (y, r))
        return (v, (r, y))

    def perturb(self, rng: random.Random, universe: Sequence[int]) -> "FnTable":
        t = dict(self.table)
        for x in universe:
            if rng.random() < 0.3:
                t[x] = (rng.choice(ALL_MARKS), rng.choice(list(universe) + [NULL]), rng.randint(0, 2))
        return FnTable(t)


def _eq(a, b) -> bool:
    if a is UNDEFINED or b is UNDEFINED:
        return a is b
    return a == b


# -- exhaustive enumerators --------------------------------------------------------

def binary_universe(marks: Sequence = (O, X)) -> Iterator[PartialGraph]:
    contents = [(m, (l, r)) for m in marks for l in TINY_BINARY_CHILDREN for r in TINY_BINARY_CHILDREN]
    for k in range(len(TINY_BINARY) + 1):
        for ns in itertools.combinations(TINY_BINARY, k):
            for es in itertools.product(contents, repeat=k):
                yield PartialGraph._raw(dict(zip(ns, es)), BINARY, True)


def unary_universe() -> Iterator[PartialGraph]:
    for k in range(len(TINY_UNARY) + 1):
        for ns in itertools.combinations(TINY_UNARY, k):
            for ss in itertools.product(TINY_UNARY_CHILDREN, repeat=k):
                yield PartialGraph._raw({x: (UNIT, (s,)) for x, s in zip(ns, ss)}, UNARY, True)


def splits(g: PartialGraph) -> Iterator[Tuple[PartialGraph, PartialGraph]]:
    xs = list(g)
    for bits in itertools.product((0, 1), repeat=len(xs)):
        left = {x for x, b in zip(xs, bits) if b}
        yield filter_nodes(g, left), filter_nodes(g, set(xs) - left)


def _subsets(xs: Sequence[int]) -> List[frozenset]:
    return [frozenset(c) for k in range(len(xs) + 1) for c in itertools.combinations(xs, k)]


SETS3 = _subsets(TINY_BINARY)
MARKSETS = [frozenset(c) for k in range(5) for c in itertools.combinations(ALL_MARKS, k)]


def _cycle(options: Sequence, i: int):
    return options[i % len(options)]


def each_graph(marks=(O, X)):
    return lambda: ((g,) for g in binary_universe(marks))


def pair_universe(marks: Sequence = (O, X)) -> Iterator[Tuple[PartialGraph, PartialGraph]]:
    """Every disjoint pair over the universe: each node is absent, on the left, or on the right."""
    contents = [(m, (l, r)) for m in marks for l in TINY_BINARY_CHILDREN for r in TINY_BINARY_CHILDREN]
    opts = [None] + [(0, c) for c in contents] + [(1, c) for c in contents]
    for combo in itertools.product(opts, repeat=len(TINY_BINARY)):
        sides: Tuple[dict, dict] = ({}, {})
        for x, o in zip(TINY_BINARY, combo):
            if o is not None:
                sides[o[0]][x] = o[1]
        yield PartialGraph._raw(sides[0], BINARY, True), PartialGraph._raw(sides[1], BINARY, True)


def each_split(marks=(O, X)):
    return lambda: pair_universe(marks)


def each_graph_with(param: Callable[[PartialGraph, int], tuple], marks=(O, X)):
    def gen():
        for i, g in enumerate(binary_universe(marks)):
            yield (g, *param(g, i))
    return gen


def each_split_with(param: Callable[[int], tuple], marks=(O, X)):
    def gen():
        for i, (g1, g2) in enumerate(pair_universe(marks)):
            yield (g1, g2, *param(i))
    return gen


# -- samplers as functions of rng ---------------------------------------------------

def s_graph(rng):
    return (rand_graph(rng),)


def s_split(rng):
    return rand_split(rng, rand_graph(rng))


def s_triple(rng):
    g = rand_graph(rng)
    return tuple(filter_nodes(g, rand_subset(rng, g)) for _ in range(3))


# -- PCM ---------------------------------------------------------------------------

def _overlapping_pairs():
    # pairs drawn from the same graph with arbitrary node subsets, so overlaps occur
    for i, g in enumerate(binary_universe((O, X))):
        s1, s2 = _cycle(SETS3, i), _cycle(SETS3, i // len(SETS3) + 3)
        yield filter_nodes(g, s1), filter_nodes(g, s2)


def _overlapping_triples():
    for i, g in enumerate(binary_universe((O, X))):
        a, b, c = _cycle(SETS3, i), _cycle(SETS3, i // 8 + 1), _cycle(SETS3, i // 64 + 5)
        yield filter_nodes(g, a), filter_nodes(g, b), filter_nodes(g, c)


@law("pcm.commutative", lambda rng: s_triple(rng)[:2], _overlapping_pairs)
def _pcm_comm(g1, g2):
    return _eq(join(g1, g2), join(g2, g1))


@law("pcm.associative", s_triple, _overlapping_triples)
def _pcm_assoc(g1, g2, g3):
    return _eq(join(join(g1, g2), g3), join(g1, join(g2, g3)))


@law("pcm.unit", s_graph, each_graph())
def _pcm_unit(g):
    return join(g, empty(g.kind)) == g and join(empty(g.kind), g) == g


# -- morphisms -----------------------------------------------------------------------

@law("morphism.nodes", s_split, each_split())
def _m_nodes(g1, g2):
    return nodes(join(g1, g2)) == nodes(g1) | nodes(g2) and not (nodes(g1) & nodes(g2)) \
        and nodes(empty()) == frozenset()


@law("morphism.filter_nodes", lambda rng: (*s_split(rng), rand_subset(rng, range(0, 40))),
     each_split_with(lambda i: (_cycle(SETS3, i),)))
def _m_filter_nodes(g1, g2, s):
    return filter_nodes(join(g1, g2), s) == join(filter_nodes(g1, s), filter_nodes(g2, s)) \
        and filter_nodes(empty(), s) == empty()


@law("morphism.filter_marks", lambda rng: (*s_split(rng), rand_marks(rng)),
     each_split_with(lambda i: (_cycle(MARKSETS, i),)))
def _m_filter_marks(g1, g2, vs):
    return filter_marks(join(g1, g2), vs) == join(filter_marks(g1, vs), filter_marks(g2, vs)) \
        and filter_marks(empty(), vs) == empty()


@law("morphism.erase", s_split, each_split())
def _m_erase(g1, g2):
    return erase(join(g1, g2)) == join(erase(g1), erase(g2)) and erase(empty()) == empty()


_FN_POOL = [rand_binary_fn(random.Random(k), TINY_BINARY) for k in range(61)]


def _fn_for(i):
    return (_cycle(_FN_POOL, i),)


@law("morphism.map", lambda rng: (*s_split(rng), rand_binary_fn(rng, range(3, 40, 3))),
     each_split_with(_fn_for))
def _m_map(g1, g2, f):
    return map_graph(f, join(g1, g2)) == join(map_graph(f, g1), map_graph(f, g2)) \
        and map_graph(f, empty(BINARY)) == empty(BINARY)


@law("morphism.sinks", s_split, each_split())
def _m_sinks(g1, g2):
    return sinks(join(g1, g2)) == sinks(g1) | sinks(g2) and sinks(empty()) == frozenset()


# -- filtering -------------------------------------------------------------------------

def _two_disjoint_sets(rng, g):
    a, b = set(), set()
    for x in _ids(g):
        r = rng.random()
        (a if r < 0.4 else b if r < 0.8 else set()).add(x)
    return frozenset(a), frozenset(b)


def _disjoint_sets_for(g, i):
    # every assignment of the 3 universe nodes to {first, second, neither}
    assign = list(itertools.product((0, 1, 2), repeat=3))[i % 27]
    a = frozenset(x for x, k in zip(TINY_BINARY, assign) if k == 0)
    b = frozenset(x for x, k in zip(TINY_BINARY, assign) if k == 1)
    return a, b


def _disjoint_marks(rng):
    a, b = set(), set()
    for m in ALL_MARKS:
        r = rng.random()
        (a if r < 0.4 else b if r < 0.8 else set()).add(m)
    return frozenset(a), frozenset(b)


def _disjoint_marks_for(g, i):
    assign = list(itertools.product((0, 1, 2), repeat=4))[i % 81]
    a = frozenset(m for m, k in zip(ALL_MARKS, assign) if k == 0)
    b = frozenset(m for m, k in zip(ALL_MARKS, assign) if k == 1)
    return a, b


def _s_graph_then(param):
    def s(rng):
        g = rand_graph(rng)
        return (g, *param(rng, g))
    return s


@law("filter.disjoint_sets", _s_graph_then(_two_disjoint_sets), each_graph_with(_disjoint_sets_for))
def _f_sets(g, s1, s2):
    return filter_nodes(g, s1 | s2) == join(filter_nodes(g, s1), filter_nodes(g, s2)) \
        and filter_nodes(g, ()) == empty()


@law("filter.disjoint_marks", _s_graph_then(lambda rng, g: _disjoint_marks(rng)),
     each_graph_with(_disjoint_marks_for))
def _f_marks(g, v, w):
    return filter_marks(g, v | w) == join(filter_marks(g, v), filter_marks(g, w))


@law("filter.intersection", _s_graph_then(lambda rng, g: (rand_subset(rng, _ids(g)), rand_subset(rng, _ids(g)))),
     each_graph_with(lambda g, i: (_cycle(SETS3, i), _cycle(SETS3, i // 8))))
def _f_inter(g, s1, s2):
    return filter_nodes(g, s1 & s2) == filter_nodes(filter_nodes(g, s1), s2)


@law("filter.disjoint_marks_empty", _s_graph_then(lambda rng, g: _disjoint_marks(rng)),
     each_graph_with(_disjoint_marks_for))
def _f_marks_empty(g, v, w):
    return filter_marks(filter_marks(g, v), w) == empty()


# -- mapping ---------------------------------------------------------------------------

def _fn_pair(rng, universe):
    f1 = rand_binary_fn(rng, universe)
    return f1, f1.perturb(rng, universe)


@law("map.extensional", _s_graph_then(lambda rng, g: _fn_pair(rng, range(3, 40, 3))),
     each_graph_with(lambda g, i: _fn_pair(random.Random(i), TINY_BINARY)))
def _map_ext(g, f1, f2):
    agree = all(f1(x, g[x]) == f2(x, g[x]) for x in g)
    return (map_graph(f1, g) == map_graph(f2, g)) == agree


# -- reachability -------------------------------------------------------------------------

def _node_param(rng, g):
    return (rand_node(rng, g),)


def _node_for(g, i):
    return (_cycle(TINY_BINARY_CHILDREN + (12,), i),)


def _two_nodes_for(g, i):
    opts = TINY_BINARY_CHILDREN + (12,)
    return (_cycle(opts, i), _cycle(opts, i // 5))


@law("reach.erase", _s_graph_then(_node_param), each_graph_with(_node_for))
def _r_erase(g, x):
    return reach(g, x) == reach(erase(g), x)


@law("reach.remove_unreachable", _s_graph_then(lambda rng, g: (rand_node(rng, g), rand_node(rng, g))),
     each_graph_with(_two_nodes_for))
def _r_unreach(g, x, y):
    r = reach(g, x)
    return y in r or r == reach(remove(g, y), x)


@law("reach.remove_reachable", _s_graph_then(lambda rng, g: (rand_node(rng, g), rand_node(rng, g))),
     each_graph_with(_two_nodes_for))
def _r_reach(g, x, y):
    r = reach(g, x)
    return y not in r or r == reach(remove(g, y), x) | reach(g, y)


@law("reach.oracle", _s_graph_then(_node_param), each_graph_with(_node_for))
def _r_oracle(g, x):
    return reach(g, x) == reach_oracle(g, x)


@law("reach.literal", _s_graph_then(_node_param), each_graph_with(_node_for))
def _r_literal(g, x):
    return reach(g, x) == reach_literal(g, x)


# -- closure ---------------------------------------------------------------------------------

@law("closed.reach_subgraph", _s_graph_then(_node_param), each_graph_with(_node_for))
def _c_sub(g, x):
    return not closed(g) or closed(filter_nodes(g, reach(g, x)))


@law("closed.reach_component", _s_graph_then(_node_param), each_graph_with(_node_for))
def _c_component(g, x):
    # split g into the part reachable from x and the rest
    if not closed(g) or x not in g:
        return True
    g1 = filter_nodes(g, reach(g, x))
    return closed(g1) and x in g1 and nodes(g1) == reach(g1, x)


def _redirect_param(rng, g):
    xs = list(g)
    if not xs:
        return (NULL, 0, NULL)
    return (rng.choice(xs), rng.randint(0, 1), rng.choice(sorted(nodes0(g))))


def _redirect_for(g, i):
    xs = list(g)
    if not xs:
        return (NULL, 0, NULL)
    ys = sorted(nodes0(g))
    return (_cycle(xs, i), (i // 3) % 2, _cycle(ys, i // 6))


@law("closed.redirect", _s_graph_then(_redirect_param), each_graph_with(_redirect_for))
def _c_redirect(g, x, k, y):
    if x not in g or not closed(g):
        return True
    return closed(redirect(g, x, k, y))


# -- expansion ----------------------------------------------------------------------------------

@law("expand.node", _s_graph_then(_node_param), each_graph_with(_node_for))
def _e_node(g, x):
    if x not in g:
        return True
    v, adj = g[x]
    return join(singleton(x, v, adj, g.kind), remove(g, x)) == g


@law("expand.all", s_graph, each_graph())
def _e_all(g):
    return join_all((singleton(x, *g[x], kind=g.kind) for x in g), g.kind) == g


# -- if-mark lemmas --------------------------------------------------------------------------------

def _rand_alpha(rng, g):
    pool = _ids(g)
    return [rng.choice(pool) for _ in range(rng.randint(0, 4))]


def _alpha_for(g, i):
    pool = TINY_BINARY_CHILDREN
    alphas = [list(p) for k in range(3) for p in itertools.product(pool, repeat=k)]
    return (_cycle(alphas, i), _cycle(pool, i // 7))


@law("ifmark.no_partial",
     lambda rng: (rand_graph(rng, marks=(O, X)), *_rand_alpha_t(rng)),
     each_graph_with(_alpha_for))
def _im_none(g, alpha, t):
    if filter_marks(g, (L, R)):
        return True
    eg = erase(g)
    return inset(alpha, g) == eg and restore(t, alpha, g) == eg


def _rand_alpha_t(rng):
    pool = list(range(0, 40, 3))
    return [rng.choice(pool) for _ in range(rng.randint(0, 4))], rng.choice(pool)


def _agreeing_fns(rng, g, universe):
    part = nodes(filter_marks(g, (L, R)))
    pool = list(universe) + [NULL]
    t1 = {x: rng.choice(pool) for x in universe}
    t2 = {x: (t1[x] if x in part or rng.random() < 0.5 else rng.choice(pool)) for x in universe}
    return (lambda x: t1.get(x, NULL)), (lambda x: t2.get(x, NULL))


@law("ifmark.agree", _s_graph_then(lambda rng, g: _agreeing_fns(rng, g, _ids(g))),
     each_graph_with(lambda g, i: _agreeing_fns(random.Random(i), g, TINY_BINARY_CHILDREN), marks=(L, R, X)))
def _im_agree(g, f1, f2):
    return map_if_mark(f1, g) == map_if_mark(f2, g)


def _covering_alpha(rng, g):
    part = list(nodes(filter_marks(g, (L, R))))
    rng.shuffle(part)
    pool = _ids(g)
    alpha = part + [rng.choice(pool) for _ in range(rng.randint(0, 2))]
    rng.shuffle(alpha)
    return alpha, rng.choice(pool), rng.choice(pool)


@law("ifmark.stack_extend", _s_graph_then(_covering_alpha),
     each_graph_with(lambda g, i: _covering_alpha(random.Random(i), g), marks=(L, R, X)))
def _im_extend(g, alpha, p, t):
    if not nodes(filter_marks(g, (L, R))) <= set(alpha):
        return True
    return inset(alpha + [p], g) == inset(alpha, g) and restore(t, alpha + [p], g) == restore(p, alpha, g)


# -- union-find abstractions --------------------------------------------------------------------

def rand_unary(rng, forest=False, closed_only=None):
    return rand_graph(rng, kind=UNARY, marks=(UNIT,), forest=forest, closed_only=closed_only)


def each_unary():
    return ((g,) for g in unary_universe())


def each_unary_split():
    for g in unary_universe():
        yield from splits(g)


def each_unary_node():
    for g in unary_universe():
        for x in g:
            yield g, x


@law("uf.dangls_join", lambda rng: rand_split(rng, rand_unary(rng)), each_unary_split)
def _u_dangls(g1, g2):
    return dangls(join(g1, g2)) == (dangls(g1) - nodes(g2)) | (dangls(g2) - nodes(g1))


@law("uf.loops_cycles_nodes", lambda rng: (rand_unary(rng),), each_unary)
def _u_lcn(g):
    return loops(g) <= cycles(g) <= nodes(g)


@law("uf.dangls_outside", lambda rng: (rand_unary(rng),), each_unary)
def _u_dn(g):
    return not (dangls(g) & nodes(g))


@law("uf.summit_paths", lambda rng: (lambda g: (g, rng.choice(list(g) or [1])))(rand_unary(rng)), each_unary_node)
def _u_paths(g, x):
    return summit(g, x) == summit_oracle(g, x)


@law("uf.summits_split", lambda rng: (rand_unary(rng),), each_unary)
def _u_split(g):
    c, d = cycles(g), dangls(g)
    return not (c & d) and summits(g) == c | d


def _equal_summit_pair(rng):
    # force equal summits often: both halves are forests over the same dangling root
    if rng.random() < 0.5:
        return rand_split(rng, rand_unary(rng))
    g = rand_unary(rng, forest=True, closed_only=True)
    root = max(list(g) + [0]) + 1
    g1 = PartialGraph({x: (UNIT, (root if g.adj(x)[0] == x else g.adj(x)[0],)) for x in g}, UNARY)
    return rand_split(rng, g1)


@law("uf.summits_equal_join", _equal_summit_pair, each_unary_split)
def _u_eq_join(g1, g2):
    return summits(g1) != summits(g2) or summits(join(g1, g2)) == summits(g1)


@law("uf.summits_remove_loop", lambda rng: (lambda g: (g, rng.choice(list(g) or [1])))(rand_unary(rng, forest=True)),
     each_unary_node)
def _u_remove_loop(g, x):
    return x not in loops(g) or summits(remove(g, x)) <= summits(g)


@law("uf.inverted_forest", lambda rng: rand_split(rng, rand_unary(rng, forest=True, closed_only=True)),
     each_unary_split)
def _u_forest(g1, g2):
    g = join(g1, g2)
    if not summits(g) <= loops(g):
        return True
    subtractive = summits(g) == (summits(g1) - nodes(g2)) | (summits(g2) - nodes(g1))
    succ_ok = all(summit(g, x) == summit(g, g.adj(x)[0]) for x in g)
    return closed(g) and preacyclic(g) and subtractive and succ_ok


@law("uf.subtractive_preacyclic", lambda rng: rand_split(rng, rand_unary(rng, forest=True)), each_unary_split)
def _u_subtractive(g1, g2):
    g = join(g1, g2)
    if not preacyclic(g):
        return True
    return summits(g) == (summits(g1) - nodes(g2)) | (summits(g2) - nodes(g1))


def _mutation_param(rng, g):
    xs = list(g)
    top = max(xs + [0])
    return (rng.choice(xs) if xs else 1, rng.choice((NULL, top + 1, top + 2)))


@law("uf.preacyclic_mutation", lambda rng: (lambda g: (g, *_mutation_param(rng, g)))(rand_unary(rng, forest=True)),
     lambda: ((g, x, y) for g in unary_universe() for x in g for y in TINY_UNARY_CHILDREN + (4, 5)))
def _u_mutation(g, x, y):
    if not preacyclic(g) or x not in g or y in g:
        return True
    return preacyclic(redirect(g, x, 0, y))


# -- runner -----------------------------------------------------------------------------------------

def law_names() -> List[str]:
    return [l.name for l in LAWS]


def select(names: Optional[Iterable[str]] = None) -> List[Law]:
    if not names:
        return list(LAWS)
    wanted = set(names)
    out = [l for l in LAWS if l.name in wanted or l.name.split(".")[0] in wanted]
    if not out:
        raise KeyError(f"no law matches {sorted(wanted)}")
    return out


def run_law(l: Law, cases: int, seed: int, exhaustive: bool = False) -> LawResult:
    res = LawResult(l.name)
    start = time.perf_counter()
    rng = random.Random(f"{seed}:{l.name}")

    def feed(case):
        if l.check(*case):
            res.passed += 1
        else:
            res.failed += 1
            if res.counterexample is None:
                res.counterexample = case

    for _ in range(cases):
        feed(l.sample(rng))
    if exhaustive:
        for case in l.exhaustive():
            feed(case)
    res.seconds = time.perf_counter() - start
    return res


def run_laws(cases: int = 500, seed: int = 0, exhaustive: bool = False,
             names: Optional[Iterable[str]] = None, workers: int = 1) -> List[LawResult]:
    chosen = select(names)
    if workers <= 1:
        return [run_law(l, cases, seed, exhaustive) for l in chosen]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(workers) as pool:
        futs = [pool.submit(_run_named, l.name, cases, seed, exhaustive) for l in chosen]
        return [f.result() for f in futs]


def _run_named(name: str, cases: int, seed: int, exhaustive: bool) -> LawResult:
    (l,) = [l for l in LAWS if l.name == name]
    res = run_law(l, cases, seed, exhaustive)
    if res.counterexample is not None:
        res.counterexample = tuple(repr(c) for c in res.counterexample)
    return res

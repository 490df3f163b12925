"""Schorr-Waite marking over the simulated heap, with runtime invariant checking.

The runner executes pointer-level commands against a :class:`Heap`.  When
checking is requested, the heap is abstracted back to a binary graph at each
loop head and the six invariant conjuncts are evaluated.  In debug mode the
pre/post implications of each PUSH, SWING and POP are checked as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .heap_model import (
    Fault,
    Heap,
    LayoutError,
    abstract_binary,
    footprint,
    h_restrict,
    h_write,
    layout_binary,
    read_mark,
    read_ptr,
)
from .partial_graph import (
    BINARY,
    NULL,
    UNIT,
    Mark,
    PartialGraph,
    closed,
    erase,
    filter_marks,
    filter_nodes,
    join,
    map_graph,
    nodes,
    nodes0,
    reach,
    reach_many,
    remove,
    singleton,
)

O, L, R, X = Mark.O, Mark.L, Mark.R, Mark.X
PARTIAL = (L, R)

PUSH, SWING, POP = "PUSH", "SWING", "POP"
CONJUNCTS = "abcdef"


class PreconditionError(ValueError):
    def __init__(self, conjunct: str, message: str):
        super().__init__(f"precondition violated ({conjunct}): {message}")
        self.conjunct = conjunct


class StackReconstructionFailure(Exception):
    def __init__(self, message: str, partial: Sequence[int]):
        super().__init__(message)
        self.partial = list(partial)


class InvariantViolation(AssertionError):
    def __init__(self, message: str, iteration: int, report=None, trace=()):
        super().__init__(message)
        self.iteration = iteration
        self.report = report
        self.trace = list(trace)


class NonTermination(RuntimeError):
    pass


# -- pure helpers over graphs --------------------------------------------------

def if_mark(f: Callable[[int], int], x: int, entry) -> Tuple[int, int]:
    m, (l, r) = entry
    if m == L:
        return (f(x), r)
    if m == R:
        return (l, f(x))
    return (l, r)


def _first_index(seq: Sequence[int]) -> Dict[int, int]:
    idx: Dict[int, int] = {}
    for i, x in enumerate(seq):
        idx.setdefault(x, i)
    return idx


def prev_in(alpha: Sequence[int], x: int) -> int:
    """Predecessor of ``x`` in ``null ⊎ alpha``; null when ``x`` is not in ``alpha``."""
    i = _first_index(alpha).get(x)
    if i is None or i == 0:
        return NULL
    return alpha[i - 1]


def next_in(alpha: Sequence[int], t: int, x: int) -> int:
    """Successor of ``x`` in ``alpha ⊎ t``; ``t`` when ``x`` is not in ``alpha``."""
    i = _first_index(alpha).get(x)
    if i is None or i + 1 == len(alpha):
        return t
    return alpha[i + 1]


def _prev_fn(alpha: Sequence[int]) -> Callable[[int], int]:
    idx = _first_index(alpha)
    chain = [NULL, *alpha]
    return lambda x: chain[idx[x]] if x in idx else NULL


def _next_fn(alpha: Sequence[int], t: int) -> Callable[[int], int]:
    idx = _first_index(alpha)
    chain = [*alpha, t]
    return lambda x: chain[idx[x] + 1] if x in idx else t


def map_if_mark(f: Callable[[int], int], g: PartialGraph) -> PartialGraph:
    return map_graph(lambda x, e: (UNIT, if_mark(f, x, e)), g)


def inset(alpha: Sequence[int], g: PartialGraph) -> PartialGraph:
    return map_if_mark(_prev_fn(alpha), g)


def restore(t: int, alpha: Sequence[int], g: PartialGraph) -> PartialGraph:
    return map_if_mark(_next_fn(alpha, t), g)


def marked0(g: PartialGraph) -> frozenset:
    return nodes0(filter_marks(g, (L, R, X)))


def reconstruct_stack(g: PartialGraph, p: int) -> List[int]:
    """Chase the reversed pointers from ``p`` down to null; return the stack bottom first."""
    chain: List[int] = []
    seen = set()
    x = p
    while x != NULL:
        if x in seen:
            raise StackReconstructionFailure(f"stack chain revisits {x}", chain[::-1])
        if x not in g:
            raise StackReconstructionFailure(f"stack chain leaves the graph at {x}", chain[::-1])
        m = g.val(x)
        if m not in PARTIAL:
            raise StackReconstructionFailure(f"stack chain reaches {x} marked {m!r}", chain[::-1])
        seen.add(x)
        chain.append(x)
        x = g.left(x) if m == L else g.right(x)
    return chain[::-1]


# -- invariant ------------------------------------------------------------------

@dataclass(frozen=True)
class Conjunct:
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class InvariantReport:
    conjuncts: Dict[str, Conjunct]
    stack: Tuple[int, ...]
    stack_error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conjuncts.values())

    @property
    def failed(self) -> List[str]:
        return [k for k in CONJUNCTS if not self.conjuncts[k].ok]

    def summary(self) -> str:
        return "ok" if self.ok else f"FAIL({','.join(self.failed)})"

    def describe(self) -> str:
        lines = [f"stack={list(self.stack)}"]
        if self.stack_error:
            lines.append(f"stack reconstruction: {self.stack_error}")
        for k in CONJUNCTS:
            c = self.conjuncts[k]
            lines.append(f"({k}) {'ok' if c.ok else 'FAIL'}" + ("" if c.ok else f": {c.witness}"))
        return "\n".join(lines)


def _diff(g1: PartialGraph, g2: PartialGraph):
    """First node where two graphs disagree, with both entries."""
    for x in sorted(nodes(g1) | nodes(g2)):
        if g1.get(x) != g2.get(x):
            return (x, g1.get(x), g2.get(x))
    return None


def inv_with_stack(g0: PartialGraph, g: PartialGraph, alpha: Sequence[int], t: int, p: int,
                   stack_error: Optional[str] = None) -> InvariantReport:
    """Evaluate the invariant conjuncts (a)-(f) for an explicit stack ``alpha``."""
    alpha = tuple(alpha)
    res: Dict[str, Conjunct] = {}

    chain = (NULL, *alpha)
    problems = []
    if stack_error:
        problems.append(stack_error)
    if len(set(chain)) != len(chain):
        problems.append(f"stack not unique: {list(alpha)}")
    if chain[-1] != p:
        problems.append(f"p={p} is not the stack top {chain[-1]}")
    if t not in nodes0(g):
        problems.append(f"t={t} is not in nodes0")
    res["a"] = Conjunct(not problems, "; ".join(problems) or None)

    dangling = sorted(y for x in g for y in g.adj(x) if y != NULL and y not in g)
    res["b"] = Conjunct(closed(g), dangling or None)

    partial = nodes(filter_marks(g, PARTIAL))
    res["c"] = Conjunct(
        partial == set(alpha) and stack_error is None,
        None if partial == set(alpha) and stack_error is None
        else {"partially marked": sorted(partial), "stack": list(alpha)},
    )

    eg = erase(g)
    d = _diff(inset(alpha, g), eg)
    res["d"] = Conjunct(d is None, d)

    e = _diff(restore(t, alpha, g), erase(g0))
    res["e"] = Conjunct(e is None, e)

    go = filter_marks(g, (O,))
    sources = [g.right(y) for y in alpha if y in g] + [t]
    covered = reach_many(go, sources)
    stray = sorted(nodes(go) - covered)
    res["f"] = Conjunct(not stray, stray or None)

    return InvariantReport(res, alpha, stack_error)


def check_inv(g0: PartialGraph, g: PartialGraph, t: int, p: int) -> InvariantReport:
    try:
        alpha = reconstruct_stack(g, p)
        err = None
    except StackReconstructionFailure as exc:
        alpha, err = exc.partial, str(exc)
    return inv_with_stack(g0, g, alpha, t, p, err)


# -- machine --------------------------------------------------------------------

@dataclass(frozen=True)
class MachineState:
    heap: Heap
    t: int
    p: int
    tm: bool = False
    pm: Optional[Mark] = None
    tmp: object = NULL
    tmp1: int = NULL
    tmp2: int = NULL


def _addr(x: int, offset: int) -> int:
    if x == NULL:
        raise Fault("null dereference")
    return x + offset


def compute_tm(s: MachineState) -> MachineState:
    if s.t == NULL:
        return replace(s, tm=True)
    tmp = read_mark(s.heap, _addr(s.t, 0))
    return replace(s, tmp=tmp, tm=tmp != O)


def op_push(s: MachineState) -> MachineState:
    h = s.heap
    tmp = read_ptr(h, _addr(s.t, 1))
    h = h_write(h, _addr(s.t, 1), s.p)
    h = h_write(h, _addr(s.t, 0), L)
    return replace(s, heap=h, tmp=tmp, p=s.t, t=tmp)


def op_swing(s: MachineState) -> MachineState:
    h = s.heap
    tmp1 = read_ptr(h, _addr(s.p, 2))
    tmp2 = read_ptr(h, _addr(s.p, 1))
    h = h_write(h, _addr(s.p, 2), tmp2)
    h = h_write(h, _addr(s.p, 1), s.t)
    h = h_write(h, _addr(s.p, 0), R)
    return replace(s, heap=h, tmp1=tmp1, tmp2=tmp2, t=tmp1)


def op_pop(s: MachineState) -> MachineState:
    h = s.heap
    tmp = read_ptr(h, _addr(s.p, 2))
    h = h_write(h, _addr(s.p, 2), s.t)
    h = h_write(h, _addr(s.p, 0), X)
    return replace(s, heap=h, tmp=tmp, t=s.p, p=tmp)


OPS = {PUSH: op_push, SWING: op_swing, POP: op_pop}


def select_op(s: MachineState) -> Tuple[str, MachineState]:
    """Loop body dispatch; reads ``p.m`` into ``pm`` when ``tm`` holds."""
    if not s.tm:
        return PUSH, s
    pm = read_mark(s.heap, _addr(s.p, 0))
    s = replace(s, pm=pm)
    return (POP if pm == R else SWING), s


# -- per-operation implications ---------------------------------------------------

@dataclass(frozen=True)
class ImplicationReport:
    op: str
    premise_ok: bool
    conclusion_ok: bool
    problems: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.premise_ok and self.conclusion_ok


def _expect_entry(g: PartialGraph, x: int, mark: Mark, problems: List[str]):
    e = g.get(x)
    if e is None or e[0] != mark:
        problems.append(f"node {x} should be marked {mark.value}, found {e}")
        return None
    return e[1]


def check_implication(op: str, g0: PartialGraph, g: PartialGraph, alpha: Sequence[int],
                      t0: int, p0: int, g_after: PartialGraph, t1: int, p1: int) -> ImplicationReport:
    """Premises on the loop-head state and conclusions on the state after ``op``."""
    alpha = list(alpha)
    pre: List[str] = []
    post: List[str] = []

    def need_inv(where, gg, a, t, p):
        rep = inv_with_stack(g0, gg, a, t, p)
        if not rep.ok:
            where.append(f"invariant {rep.summary()} for stack {a}, t={t}, p={p}")

    if op == POP:
        kids = _expect_entry(g, p0, R, pre)
        if not alpha or alpha[-1] != p0:
            pre.append(f"stack {alpha} does not end in p={p0}")
        need_inv(pre, g, alpha, t0, p0)
        if t0 not in marked0(g):
            pre.append(f"t={t0} is not marked or null")
        if kids is not None:
            pl, pr = kids
            want = join(singleton(p0, X, (pl, t0), BINARY), remove(g, p0))
            if g_after != want:
                post.append(f"graph after POP differs at {_diff(g_after, want)}")
            if (t1, p1) != (p0, pr):
                post.append(f"registers after POP are t={t1}, p={p1}; expected t={p0}, p={pr}")
            need_inv(post, g_after, alpha[:-1], p0, pr)
    elif op == SWING:
        kids = _expect_entry(g, p0, L, pre)
        need_inv(pre, g, alpha, t0, p0)
        if t0 not in marked0(g):
            pre.append(f"t={t0} is not marked or null")
        if kids is not None:
            pl, pr = kids
            want = join(singleton(p0, R, (t0, pl), BINARY), remove(g, p0))
            if g_after != want:
                post.append(f"graph after SWING differs at {_diff(g_after, want)}")
            if (t1, p1) != (pr, p0):
                post.append(f"registers after SWING are t={t1}, p={p1}; expected t={pr}, p={p0}")
            need_inv(post, g_after, alpha, pr, p0)
    elif op == PUSH:
        kids = _expect_entry(g, t0, O, pre)
        need_inv(pre, g, alpha, t0, p0)
        if kids is not None:
            tl, tr = kids
            want = join(singleton(t0, L, (p0, tr), BINARY), remove(g, t0))
            if g_after != want:
                post.append(f"graph after PUSH differs at {_diff(g_after, want)}")
            if (t1, p1) != (tl, t0):
                post.append(f"registers after PUSH are t={t1}, p={p1}; expected t={tl}, p={t0}")
            need_inv(post, g_after, alpha + [t0], tl, t0)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return ImplicationReport(op, not pre, not post, tuple(pre + post))


# -- runner ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TraceEvent:
    iteration: int
    op: str
    t: int
    p: int
    t_after: int
    p_after: int
    report: Optional[InvariantReport] = None
    implication: Optional[ImplicationReport] = None

    def format(self, name: Callable[[int], str] = str) -> str:
        inv = "-" if self.report is None else self.report.summary()
        return f"iter={self.iteration} op={self.op} t={name(self.t)} p={name(self.p)} inv={inv}"


@dataclass
class MarkResult:
    graph: PartialGraph
    iterations: int
    trace: List[TraceEvent] = field(default_factory=list)
    final_report: Optional[InvariantReport] = None
    checks: int = 0


def check_preconditions(g0: PartialGraph, r: int, connected: bool = False) -> None:
    if g0.kind != BINARY:
        raise PreconditionError("kind", f"graph is {g0.kind}, expected binary")
    if not closed(g0):
        raise PreconditionError("closed", "graph has dangling edges")
    if r not in g0:
        raise PreconditionError("root", f"root {r} is not a node of the graph")
    marked = [x for x in g0 if g0.val(x) != O]
    if marked:
        raise PreconditionError("unmarked", f"nodes {marked} are not marked O")
    if connected:
        missed = nodes(g0) - reach(filter_marks(g0, (O,)), r)
        if missed:
            raise PreconditionError("connected", f"nodes {sorted(missed)} are not reachable from {r}")


def iteration_cap(g0: PartialGraph) -> int:
    return 3 * len(g0) + 8


def sw_run(g0: PartialGraph, r: int, check_each_iteration: bool = False, trace: bool = False,
           debug: bool = False, connected: bool = False) -> MarkResult:
    """Mark everything reachable from ``r`` in ``g0`` by pointer reversal.

    Checks run against the subgraph reachable from ``r``; the remaining
    nodes form a frame whose heap cells must never change.

    Raises :class:`PreconditionError` before running, and
    :class:`InvariantViolation` or :class:`NonTermination` during the run.
    Heap faults propagate unchanged.
    """
    check_preconditions(g0, r, connected)
    try:
        heap = layout_binary(g0)
    except LayoutError as exc:
        raise PreconditionError("layout", str(exc)) from None
    ns = nodes(g0)
    cap = iteration_cap(g0)
    checking = check_each_iteration or debug

    live = reach(g0, r)
    g0_live = filter_nodes(g0, live)
    frame_cells = h_restrict(heap, footprint(filter_nodes(g0, ns - live)))

    s = compute_tm(MachineState(heap, t=r, p=NULL))
    events: List[TraceEvent] = []
    checks = 0
    k = 0

    def head_check():
        g = abstract_binary(s.heap, live)
        rep = check_inv(g0_live, g, s.t, s.p)
        if h_restrict(s.heap, frame_cells.domain()) != frame_cells:
            raise InvariantViolation(f"iteration {k}: cells outside the reachable part changed", k, rep, events)
        if s.tm != (s.t in marked0(g)):
            raise InvariantViolation(f"iteration {k}: tm={s.tm} disagrees with t={s.t}", k, rep, events)
        if not rep.ok:
            raise InvariantViolation(f"iteration {k}: invariant {rep.summary()}\n{rep.describe()}", k, rep, events)
        return g, rep

    while s.p != NULL or not s.tm:
        if k >= cap:
            raise NonTermination(f"no termination within {cap} iterations")
        k += 1
        g = rep = None
        if checking:
            g, rep = head_check()
            checks += 1
        t0, p0 = s.t, s.p
        op, s = select_op(s)
        s = OPS[op](s)
        imp = None
        if debug:
            g_after = abstract_binary(s.heap, live)
            imp = check_implication(op, g0_live, g, rep.stack, t0, p0, g_after, s.t, s.p)
            if not imp.ok:
                raise InvariantViolation(f"iteration {k}: {op} implication failed: {'; '.join(imp.problems)}",
                                         k, rep, events)
        s = compute_tm(s)
        if trace or checking:
            events.append(TraceEvent(k, op, t0, p0, s.t, s.p, rep, imp))

    final = abstract_binary(s.heap, ns)
    final_rep = None
    if checking:
        _, final_rep = head_check()
        checks += 1
    return MarkResult(final, k, events if trace or checking else [], final_rep, checks)


def loop_heads(g0: PartialGraph, r: int) -> Iterator[MachineState]:
    """Every loop-head state of an unchecked run, starting with the initial one."""
    check_preconditions(g0, r)
    s = compute_tm(MachineState(layout_binary(g0), t=r, p=NULL))
    cap = iteration_cap(g0)
    yield s
    for _ in range(cap):
        if s.p == NULL and s.tm:
            return
        op, s = select_op(s)
        s = compute_tm(OPS[op](s))
        yield s
    raise NonTermination(f"no termination within {cap} iterations")


# -- postconditions ---------------------------------------------------------------------

def postcondition_failures(g0: PartialGraph, g: PartialGraph, r: int, connected: bool = False) -> List[str]:
    out = []
    if erase(g) != erase(g0):
        out.append(f"edges not restored: {_diff(erase(g), erase(g0))}")
    xs, os_ = filter_marks(g, (X,)), filter_marks(g, (O,))
    if join(xs, os_) != g:
        out.append("graph is not split into X and O parts")
    want = reach(filter_marks(g0, (O,)), r)
    if nodes(xs) != want:
        out.append(f"marked {sorted(nodes(xs))}, reachable {sorted(want)}")
    if connected and nodes(g0) != want:
        out.append("graph is not connected from the root")
    return out

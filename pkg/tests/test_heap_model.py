import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgraph.heap_model import (
    AbstractionError,
    Fault,
    Heap,
    HeapOverlap,
    LayoutError,
    TagError,
    abstract,
    alloc_list,
    emp,
    first_fit,
    footprint,
    h_alloc,
    h_join,
    h_read,
    h_restrict,
    h_write,
    layout,
    layout_list,
    layout_report,
    read_mark,
    read_ptr,
    walk_list,
)
from pgraph.oracles import list_walk
from pgraph.partial_graph import BINARY, GENERAL, UNARY, UNIT, Mark, PartialGraph, join
from pgraph.samples import nine_initial
from strategies import binary_graphs, general_graphs, splits_of, unary_graphs

O, L, R, X = Mark.O, Mark.L, Mark.R, Mark.X


def test_alloc_on_empty_heap_starts_at_one():
    h, a = h_alloc(emp, [O, 0, 0])
    assert a == 1
    assert h.domain() == {1, 2, 3}
    assert (h[1], h[2], h[3]) == (O, 0, 0)


def test_alloc_is_first_fit():
    h = Heap({1: 0, 2: 0, 5: 0})
    assert first_fit(h, 2) == 3
    assert first_fit(h, 3) == 6
    assert first_fit(h, 2, avoid=[3]) == 6
    _, a = h_alloc(h, [O, 0])
    assert a == 3


def test_faults():
    h = Heap({1: O, 2: 7})
    with pytest.raises(Fault):
        h_read(h, 3)
    with pytest.raises(Fault):
        h_write(h, 3, 0)
    with pytest.raises(TagError):
        read_ptr(h, 1)
    with pytest.raises(TagError):
        read_mark(h, 2)
    with pytest.raises(TagError):
        h_write(h, 1, "junk")
    with pytest.raises(Fault):
        Heap({0: O})
    with pytest.raises(TagError):
        Heap({1: 2.5})


def test_write_is_persistent():
    h = Heap({1: O})
    h2 = h_write(h, 1, X)
    assert h[1] is O and h2[1] is X


def test_join_and_restrict():
    h1, h2 = Heap({1: O}), Heap({2: 5})
    assert h_join(h1, h2) == Heap({1: O, 2: 5})
    with pytest.raises(HeapOverlap):
        h_join(h1, h1)
    assert h_restrict(h_join(h1, h2), {2, 9}) == h2


def test_dump_format():
    assert Heap({2: 0, 1: X, 3: UNIT}).dump() == "1: X\n2: 0\n3: -\n"


def test_binary_layout_by_address():
    h = layout(nine_initial)
    for x, (v, (l, r)) in nine_initial.items():
        assert (h[x], h[x + 1], h[x + 2]) == (v, l, r)
    assert len(h) == 3 * len(nine_initial)


def test_layout_rejects_overlapping_nodes():
    with pytest.raises(LayoutError):
        layout(PartialGraph({1: (O, (0, 0)), 2: (O, (0, 0))}, BINARY))
    with pytest.raises(LayoutError):
        layout(PartialGraph({1: (O, (1, 2)), 3: (O, ())}, GENERAL))


def test_abstraction_failures():
    with pytest.raises(AbstractionError):
        abstract(Heap({1: O, 2: 0}), [1], BINARY)
    with pytest.raises(AbstractionError):
        abstract(Heap({1: O, 2: 0, 3: 0, 4: 0}), [1, 2], BINARY)
    with pytest.raises(AbstractionError):
        abstract(Heap({1: O}), [1], UNARY)
    cyclic = Heap({1: O, 2: 3, 3: 9, 4: 3})
    with pytest.raises(AbstractionError):
        abstract(cyclic, [1], GENERAL)


@given(st.lists(st.integers(0, 50), max_size=6), st.integers(1, 40))
def test_list_layout_matches_plain_walk(values, base):
    h, head = layout_list(values, base)
    assert list_walk(h, head) == values
    got, cells = walk_list(h, head)
    assert got == values and cells == h.domain()


def test_alloc_list_extends_heap():
    h, head = alloc_list(Heap({1: O, 2: 0}), [7, 8])
    assert head == 3
    assert list_walk(h, head) == [7, 8]
    assert alloc_list(emp, []) == (emp, 0)


@pytest.mark.parametrize("strategy,kind", [
    (binary_graphs(closed=False), BINARY),
    (unary_graphs(), UNARY),
    (general_graphs(closed=False), GENERAL),
])
def test_round_trip(strategy, kind):
    @given(strategy)
    def check(g):
        h = layout(g)
        assert abstract(h, g, kind) == g
        assert h.domain() == footprint(g)

    check()


@pytest.mark.parametrize("strategy", [
    binary_graphs(closed=False), unary_graphs(), general_graphs(closed=False),
])
def test_layout_distributes_over_join(strategy):
    @given(splits_of(strategy))
    def check(split):
        g1, g2 = split
        assert layout(join(g1, g2)) == h_join(layout(g1), layout(g2))

    check()


def test_layout_report_splits_heap():
    g = PartialGraph({3: (O, (6, 0)), 6: (X, (3, 3))}, BINARY)
    h = h_join(layout(g), Heap({20: 1}))
    rep = layout_report(h, [3, 6], BINARY)
    assert rep.matched and rep.graph == g
    assert rep.footprint == set(range(3, 9)) and rep.residual == {20}
    bad = layout_report(h, [20], BINARY)
    assert not bad.matched and bad.residual == h.domain() and bad.failure

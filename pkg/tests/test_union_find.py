import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgraph.heap_model import Fault, Heap, h_write, layout, layout_unary
from pgraph.oracles import PartitionOracle, gen_script, summit_oracle, summits_oracle
from pgraph.partial_graph import NULL, UNARY, UNIT, PartialGraph, join, nodes, redirect, remove
from pgraph.samples import UA, UB, UC, UD, UE, UF, UG, forest_after, forest_before
from pgraph.union_find import (
    Op,
    ScriptError,
    SetWitness,
    check_set,
    cycles,
    dangls,
    format_script,
    loops,
    parse_script,
    preacyclic,
    run_script,
    set_diagnosis,
    summit,
    summit_literal,
    summits,
    to_script,
    uf_find,
    uf_new,
    uf_union,
)
from strategies import forests, splits_of, unary_graphs


def U(table):
    return PartialGraph({x: (UNIT, (y,)) for x, y in table.items()}, UNARY)


# -- summits against simple-path enumeration ---------------------------------------

@given(unary_graphs(closed=False))
def test_summit_matches_path_enumeration(g):
    for x in g:
        assert summit(g, x) == summit_oracle(g, x)
    assert summits(g) == summits_oracle(g)


@given(unary_graphs(max_nodes=6, closed=False))
def test_summit_matches_literal_recursion(g):
    for x in list(g) + [NULL, 99]:
        assert summit(g, x) == summit_literal(g, x)


def test_summit_of_non_node_is_itself():
    assert summit(U({1: 1}), 5) == {5}


# -- the two-tree forest -------------------------------------------------------------------

def test_forest_summits_and_loops():
    assert summit(forest_before, UC) == {UA}
    assert summits(forest_before) == {UA, UD}
    assert loops(forest_before) == {UA, UD}


def test_forest_find_in_heap():
    h = layout(forest_before)
    assert uf_find(h, UC) == UA
    assert uf_find(h, UG) == UD


def test_forest_union_moves_representative():
    h = layout(forest_before)
    h, rep = uf_union(h, UA, UD)
    assert rep == UD
    assert h == layout_unary(forest_after)
    assert uf_find(h, UB) == UD
    assert summit(forest_after, UE) == {UD}
    assert check_set(h, SetWitness(frozenset(range(UA, UG + 1)), UD))


def test_set_predicate_on_forest_halves():
    h = layout(forest_before)
    assert check_set(h, SetWitness(frozenset({UA, UB, UC}), UA))
    assert check_set(h, SetWitness(frozenset({UD, UE, UF, UG}), UD))
    assert not check_set(h, SetWitness(frozenset({UA, UB, UC}), UB))
    assert set_diagnosis(h, SetWitness(frozenset({UA, UB, UC, UD}), UA)).startswith("summits")
    assert "no unary graph" in set_diagnosis(h, SetWitness(frozenset({UA, 40}), UA))


def test_set_predicate_rejects_two_cycle():
    h = layout(U({1: 2, 2: 1}))
    why = set_diagnosis(h, SetWitness(frozenset({1, 2}), 1))
    assert why == "summits [1, 2] are not {1}"


# -- abstractions ------------------------------------------------------------------------------

def test_cycles_loops_dangls():
    g = U({1: 1, 2: 3, 3: 2, 4: 9, 5: 4})
    assert loops(g) == {1}
    assert cycles(g) == {1, 2, 3}
    assert dangls(g) == {9}
    assert not preacyclic(g)
    assert preacyclic(remove(remove(g, 2), 3))


@given(unary_graphs(closed=False))
def test_summits_are_cycles_plus_dangling(g):
    assert summits(g) == cycles(g) | dangls(g)
    assert loops(g) <= cycles(g) <= nodes(g)


@given(splits_of(forests()))
def test_summits_subtract_on_preacyclic_joins(split):
    g1, g2 = split
    g = join(g1, g2)
    assert preacyclic(g)
    assert summits(g) == (summits(g1) - nodes(g2)) | (summits(g2) - nodes(g1))


def test_subtractive_summits_need_the_join_preacyclic():
    g1, g2 = U({1: 2}), U({2: 1})
    assert preacyclic(g1) and preacyclic(g2)
    g = join(g1, g2)
    assert not preacyclic(g)
    assert summits(g) != (summits(g1) - nodes(g2)) | (summits(g2) - nodes(g1))


@given(forests(), st.data())
def test_redirecting_to_outside_keeps_preacyclic(g, data):
    if not len(g):
        return
    x = data.draw(st.sampled_from(list(g)))
    assert preacyclic(redirect(g, x, 0, NULL))
    assert preacyclic(redirect(g, x, 0, 100))


# -- heap operations -----------------------------------------------------------------------------

def test_new_allocates_self_loop():
    h, a = uf_new(Heap())
    assert a == 1 and h[1] == 1
    h, b = uf_new(h)
    assert b == 2 and h[2] == 2


def test_find_faults_on_a_cycle_without_root():
    h = Heap({1: 2, 2: 1})
    with pytest.raises(Fault):
        uf_find(h, 1)
    with pytest.raises(Fault):
        uf_find(h_write(Heap({1: 1}), 1, 5), 1)


# -- scripts ---------------------------------------------------------------------------------------

def test_parse_and_format_round_trip():
    text = "new a  # first\n\nnew b\nunion a b\nfind a\n"
    script = parse_script(text)
    assert [str(op) for op in script] == ["new a", "new b", "union a b", "find a"]
    assert [op.line for op in script] == [1, 3, 4, 5]
    assert parse_script(format_script(script)) == [Op(o.kind, o.args, i) for i, o in enumerate(script, 1)]


@pytest.mark.parametrize("text,line", [
    ("new a\njump a\n", 2),
    ("new a b\n", 1),
    ("new a\nunion a\n", 2),
    ("new a/b\n", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ScriptError) as exc:
        parse_script(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


@pytest.mark.parametrize("text", ["find a\n", "new a\nnew a\n", "new a\nunion a b\n"])
def test_run_rejects_bad_bindings(text):
    with pytest.raises(ScriptError):
        run_script(parse_script(text))


def test_forest_script_reproduces_union():
    text = """
    new a
    new b
    new c
    new d
    new e
    new f
    new g
    union b a
    union c b
    union e d
    union f d
    union g e
    union a d
    find b
    find c
    """
    run = run_script(parse_script(text), check_all=True)
    assert run.ok, [s.problem for s in run.steps if not s.ok]
    assert [s.result for s in run.steps[-3:]] == ["d", "d", "d"]


def test_union_with_self_is_noop():
    run = run_script(parse_script("new a\nnew b\nunion a b\nunion b a\nfind a\n"))
    assert run.ok
    assert [s.result for s in run.steps[2:]] == ["b", "b", "b"]


@given(st.integers(0, 10_000))
def test_random_scripts_match_partition(seed):
    script = to_script(gen_script(seed, 40))
    run = run_script(script)
    assert run.ok, [s.problem for s in run.steps if not s.ok]
    oracle = PartitionOracle()
    for op, step in zip(script, run.steps):
        assert oracle.apply(op) == step.result


def test_check_catches_corrupted_heap(monkeypatch):
    import pgraph.union_find as uf

    real = uf.uf_union
    monkeypatch.setattr(uf, "uf_union", lambda h, x1, x2: (real(h, x1, x2)[0], x1))
    run = run_script(parse_script("new a\nnew b\nunion a b\n"))
    assert not run.ok
    assert "oracle" in run.steps[-1].problem

import random

import pytest

from pgraph import laws
from pgraph.partial_graph import filter_marks, join, nodes
from pgraph.schorr_waite import L, R
from pgraph.union_find import loops, preacyclic, summits


def by_name(name):
    (l,) = laws.select([name])
    return l


def test_registry_covers_every_group():
    groups = {n.split(".")[0] for n in laws.law_names()}
    assert groups == {"pcm", "morphism", "filter", "map", "reach", "closed", "expand", "ifmark", "uf"}
    assert len(set(laws.law_names())) == len(laws.law_names())


def test_select_by_prefix_and_name():
    assert {l.name for l in laws.select(["pcm"])} == {"pcm.commutative", "pcm.associative", "pcm.unit"}
    assert [l.name for l in laws.select(["reach.oracle"])] == ["reach.oracle"]
    assert len(laws.select(None)) == len(laws.LAWS)
    with pytest.raises(KeyError):
        laws.select(["no.such.law"])


@pytest.mark.parametrize("name", laws.law_names())
def test_each_law_holds_on_random_cases(name):
    res = laws.run_law(by_name(name), 60, seed=11)
    assert res.ok, res.counterexample
    assert res.passed == 60


def test_runner_reports_counterexample():
    bogus = laws.Law("bogus", lambda g: len(g) < 3, lambda rng: (laws.rand_graph(rng),), lambda: iter(()))
    res = laws.run_law(bogus, 200, seed=0)
    assert not res.ok and res.failed > 0
    assert len(res.counterexample[0]) >= 3


def test_runs_are_reproducible():
    a = laws.run_laws(25, seed=4, names=["uf"])
    b = laws.run_laws(25, seed=4, names=["uf"])
    assert [(r.name, r.passed) for r in a] == [(r.name, r.passed) for r in b]


# Conditional laws pass trivially when their premise is false; make sure the
# samplers hit the premise often enough to mean something.

def premise_rate(name, premise, n=300):
    rng = random.Random(f"premise:{name}")
    sample = by_name(name).sample
    return sum(bool(premise(*sample(rng))) for _ in range(n)) / n


def test_stack_extension_premise_is_hit():
    rate = premise_rate("ifmark.stack_extend", lambda g, alpha, p, t: nodes(filter_marks(g, (L, R))) <= set(alpha))
    assert rate > 0.5


def test_subtractive_premise_is_hit():
    assert premise_rate("uf.subtractive_preacyclic", lambda g1, g2: preacyclic(join(g1, g2))) > 0.5


def test_inverted_forest_premise_is_hit():
    assert premise_rate("uf.inverted_forest", lambda g1, g2: summits(join(g1, g2)) <= loops(join(g1, g2))) > 0.5


def test_equal_summits_premise_is_hit():
    assert premise_rate("uf.summits_equal_join", lambda g1, g2: summits(g1) == summits(g2)) > 0.1


def test_remove_loop_premise_is_hit():
    assert premise_rate("uf.summits_remove_loop", lambda g, x: x in loops(g)) > 0.1

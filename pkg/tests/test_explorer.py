import pytest

from virtmorse.analysis import analyze
from virtmorse.explorer import (build_formal_graph, census, component_graph, component_of, query,
                                real_nonreal_nonzero, real_real_nonzero, sparse_and_negative,
                                virtual_component)
from virtmorse.lattice_core import normalize_orientations
from virtmorse.seeds import seed
from virtmorse.surgery_kernel import COLLISIONS


@pytest.mark.parametrize("name, card", [
    ("XI1_630_A", 630), ("XI1_630_B", 630), ("XI1_112", 112), ("XI1_28", 28),
    ("XI1_60", 60), ("XI1_365", 365), ("XI2_665", 665), ("XI2_952", 952),
])
def test_seed_components(name, card):
    c = virtual_component(seed(name))
    assert c.card == card
    assert c.r == seed(name).r


def test_the_two_630_seeds_lie_in_different_components(xi1):
    where = component_of(xi1.components)
    a = normalize_orientations(seed("XI1_630_A")).key()
    b = normalize_orientations(seed("XI1_630_B")).key()
    assert where[a] != where[b]
    assert xi1.components[where[a]].card == xi1.components[where[b]].card == 630


def test_threaded_exploration_is_deterministic():
    one = component_graph(seed("XI1_365"))
    two = component_graph(seed("XI1_365"), threads=2)
    assert list(one.states) == list(two.states)
    assert one.edges == two.edges


def test_components_partition_the_graph(both):
    for a in both.values():
        keys = [k for c in a.components for k in c.members]
        assert len(keys) == len(set(keys)) == len(a.graph)
        assert [c.index for c in a.components] == list(range(len(a.components)))
        assert all(a.graph.states[k].r == c.r for c in a.components for k in c.members)


def test_non_collision_edges_stay_inside_components(xi2):
    where = component_of(xi2.components)
    for u, move, v in xi2.graph.edges:
        if move.kind not in COLLISIONS:
            assert where[u] == where[v]


def test_census_matches_graph(xi1):
    assert sum(census(xi1.graph).values()) == len(xi1.graph)


def test_formal_graph_from_another_seed_is_the_same(xi1):
    g = build_formal_graph(seed("XI1_28"))
    assert set(g.states) == set(xi1.graph.states)


def test_query_finds_sparse_negative_states():
    g = component_graph(seed("XI1_630_A"))
    hits = query(g, sparse_and_negative)
    assert len(hits) == 6
    for v, where in hits:
        assert where == -1
        assert real_real_nonzero(v) <= 5 and real_nonreal_nonzero(v) <= 5 and v.neg_count <= 4


def test_query_on_explicit_keys():
    g = component_graph(seed("XI1_28"))
    some = sorted(g.states)[:5]
    assert [v.key() for v, _ in query(g, lambda v: True, keys=some)] == some

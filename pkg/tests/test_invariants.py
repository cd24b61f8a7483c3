import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from virtmorse import invariants as inv
from virtmorse.analysis import analyze, figure_dgraphs
from virtmorse.lattice_core import ODD

EVEN = -ODD


# Independent oracle: linear extensions counted by dynamic programming over
# down-closed subsets, automorphisms by matching adjacency matrices.  The
# group acts freely on linear extensions, so the orbit count is a quotient.

def _dp_extensions(d):
    preds = [0] * d.n
    for a, b, _ in d.edges:
        preds[b] |= 1 << a
    count = {0: 1}
    for mask in range(1 << d.n):
        c = count.get(mask)
        if not c:
            continue
        for v in range(d.n):
            if not mask >> v & 1 and preds[v] & mask == preds[v]:
                count[mask | 1 << v] = count.get(mask | 1 << v, 0) + c
    return count[(1 << d.n) - 1]


def _aut_order(d):
    W = d.weight()
    n = 0
    for p in itertools.permutations(range(d.n)):
        P = np.eye(d.n, dtype=np.int64)[list(p)]
        if tuple(d.colors[i] for i in p) == d.colors and (P @ W @ P.T == W).all():
            n += 1
    return n


# frozen from the oracle above
ORACLE = {"XI1-54": (36, 6), "XI1-72": (48, 6), "XI1-432": (288, 6), "XI1-783": (174, 2),
          "XI1-1233": (137, 1), "XI2-324": (72, 2), "XI2-504": (336, 6), "XI2-945": (630, 6),
          "XI2-1413": (314, 2)}


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_extension_classes_against_oracle(name):
    d = figure_dgraphs(name[:3])[name]
    exts, auts = ORACLE[name]
    assert _dp_extensions(d) == exts
    assert _aut_order(d) == auts
    assert len(inv.linear_extensions(d)) == exts
    assert len(inv.automorphisms(d)) == auts
    assert inv.linear_extension_classes(d) == exts // auts


def test_oracle_on_small_posets():
    chain = inv.DGraph((ODD, ODD, ODD), frozenset({(0, 1, 1), (1, 2, 1)}))
    anti = inv.DGraph((ODD, ODD, ODD), frozenset())
    assert inv.linear_extension_classes(chain) == 1
    assert len(inv.linear_extensions(anti)) == 6
    assert inv.linear_extension_classes(anti) == 1
    mixed = inv.DGraph((ODD, EVEN, ODD), frozenset())
    assert inv.linear_extension_classes(mixed) == 3


_FIGS = sorted({**figure_dgraphs("XI1"), **figure_dgraphs("XI2")}.items())


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_FIGS), st.permutations(range(8)))
def test_canonical_form_ignores_labels(fig, perm):
    _, d = fig
    e = d.relabel(perm)
    assert inv.canonical_dgraph(e) == inv.canonical_dgraph(d)
    assert inv.dgraph_iso(d, e)
    assert inv.linear_extension_classes(e) == inv.linear_extension_classes(d)


def test_canonical_form_separates_figures():
    forms = {inv.canonical_dgraph(d) for _, d in _FIGS}
    assert len(forms) == len({n.rstrip("^") for n, _ in _FIGS}) + sum(
        1 for n, d in _FIGS if n.endswith("^") and inv.canonical_dgraph(d) !=
        inv.canonical_dgraph(dict(_FIGS)[n[:-1]]))


def test_up_down_is_an_involution():
    for _, d in _FIGS:
        assert inv.up_down_dgraph(inv.up_down_dgraph(d)) == d


def test_dgraph_is_constant_on_components(both):
    for a in both.values():
        for c in a.with_r(8):
            forms = {inv.canonical_dgraph(inv.extract_dgraph(a.graph.states[k])) for k in c.members}
            assert forms == {inv.canonical_dgraph(a.dgraph(c))}
            assert a.dgraph(c).is_acyclic()


def test_strict_count_needs_divisibility():
    assert inv.strict_class_count(783) == 174
    with pytest.raises(inv.StructuralError):
        inv.strict_class_count(100)


def test_gf2_rank():
    assert inv.gf2_rank(np.eye(3, dtype=np.uint8)) == 3
    assert inv.gf2_rank(np.array([[1, 1], [1, 1]])) == 1
    assert inv.gf2_rank(np.array([[2, 0], [0, 3]])) == 1
    assert inv.gf2_rank(np.zeros((2, 4))) == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), min_size=1, max_size=6))
def test_gf2_rank_against_determinant_rule(rows):
    A = np.array(rows, dtype=np.uint8)
    r = inv.gf2_rank(A)
    assert r == inv.gf2_rank(A.T)
    assert r <= min(A.shape)
    assert inv.gf2_rank(np.vstack([A, A[0]])) == r


def test_morse_complex_homology():
    square = inv.DGraph((EVEN, ODD, ODD, EVEN), frozenset({(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)}))
    assert inv.morse_complex(square, (0, 1, 1, 2)).homology() == (0, 0, 0, 0)
    # an even multiplicity vanishes modulo two
    double = inv.DGraph((EVEN, ODD), frozenset({(0, 1, 2)}))
    assert inv.morse_complex(double, (0, 1)).homology() == (1, 1, 0, 0)
    single = inv.DGraph((EVEN, ODD), frozenset({(0, 1, -1)}))
    assert inv.morse_complex(single, (0, 1)).homology() == (0, 0, 0, 0)


def test_passport_helpers():
    p = inv.passport_from_indices([0, 1, 1, 2, 2, 3])
    assert p.as_tuple() == (1, 2, 2, 1)
    assert p.dual().as_tuple() == (1, 2, 2, 1)
    assert inv.passport_from_indices([1, 2, 1, 2, 3, 2]).dual().as_tuple() == (1, 3, 2, 0)
    with pytest.raises(inv.StructuralError):
        inv.passport_from_indices([0, 1, 2, 2])
    with pytest.raises(inv.StructuralError):
        inv.passport_from_indices([0, 0, 1, 1])
    with pytest.raises(inv.PartialPassport):
        inv.passport_from_indices([0, None, 1])


def test_templates():
    assert inv.template("A4").edges == ((0, 1, 0), (1, 2, 0), (2, 3, 0))
    assert inv.template("D4").n == 4 and len(inv.template("D4").edges) == 3
    assert inv.template("D4+").n == 4 and len(inv.template("D4+").edges) == 5
    assert inv.template("E6~").n == 7
    t = inv.template("A3:eoe")
    assert t.colors == (EVEN, ODD, EVEN) and str(t) == "A3:eoe"
    with pytest.raises(ValueError):
        inv.template("A3:eo")
    with pytest.raises(KeyError):
        inv.template("X3")


def test_colored_template_matching():
    path = inv.DGraph((EVEN, ODD, EVEN), frozenset({(1, 0, 1), (1, 2, -1)}))
    assert inv.matches_template(path, (0, 1, 2), inv.template("A3"))
    assert inv.matches_template(path, (0, 1, 2), inv.template("A3:eoe"))
    assert not inv.matches_template(path, (0, 1, 2), inv.template("A3:oeo"))
    assert inv.matches_template(path, (0, 1, 2), inv.template("A3:..."))
    doubled = inv.DGraph((EVEN, ODD, EVEN), frozenset({(1, 0, 2), (1, 2, -1)}))
    assert not inv.matches_template(doubled, (0, 1, 2), inv.template("A3"))


def test_bidecomposition_edges_point_one_way():
    d = inv.DGraph((ODD, ODD, EVEN, EVEN), frozenset({(0, 1, 1), (2, 3, 1), (0, 2, 1)}))
    assert inv.bidecompositions(d, inv.template("A2"), inv.template("A2")) == [((0, 1), (2, 3))]
    assert inv.bidecompositions(d, inv.template("A3"), inv.template("A1")) == [((0, 1, 2), (3,)),
                                                                                ((0, 2, 3), (1,))]
    # the reverse split would need the edge 0 -> 2 to enter the source part
    assert not inv.admits_bidecomposition(d, inv.template("A1"), inv.template("A3"))
    assert inv.admits_bidecomposition(d, inv.template("A1"), inv.template("A3"), either_way=True)
    with pytest.raises(ValueError):
        inv.bidecompositions(d, inv.template("A2"), inv.template("A3"))


def test_normalization_keeps_only_normal_edges():
    d = inv.DGraph((EVEN, ODD, EVEN), frozenset({(0, 1, 1), (0, 2, -1), (1, 2, 1)}))
    nd = inv.normalize_dgraph(d, (0, 1, 2))
    assert nd.edges == frozenset({(0, 1, 1), (0, 2, -1), (1, 2, 1)}) or nd.edges <= d.edges
    for e in nd.edges:
        assert inv.is_normal_edge(d.colors, (0, 1, 2), *e)


def test_transported_indices_respect_parity(both):
    for a in both.values():
        for c in a.with_r(8):
            idx = a.vertex_indices(c)
            v = c.representative
            assert all((i % 2 == 1) == (p == ODD) for i, p in zip(idx, v.parities))
            assert idx.count(0) <= 1 and idx.count(3) <= 1


def test_component_passports_follow_euler_characteristic(both):
    # a cubic surface with r real points: m0 - m1 + m2 - m3 is fixed by the type
    for a in both.values():
        chis = {a.kind: set()}
        for c in a.components:
            p = a.passports[c.index]
            assert sum(p.as_tuple()) == c.r
            chis[a.kind].add(p.m0 - p.m1 + p.m2 - p.m3)
        assert chis[a.kind] == {0}

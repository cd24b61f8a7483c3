import random

import pytest
from hypothesis import given, settings, strategies as st

from virtmorse.analysis import analyze
from virtmorse.lattice_core import normalize_orientations, validate
from virtmorse.seeds import seed
from virtmorse.surgery_kernel import (COLLISIONS, Failure, Kind, Side, SurgeryMove, apply,
                                      candidate_moves, enumerate_moves, try_s1, try_s2, try_s3,
                                      try_s4, try_s5, try_s6, try_s7)

_KEYS = sorted(analyze("XI1").graph.states) + sorted(analyze("XI2").graph.states)


def _state(n):
    k = _KEYS[n]
    for kind in ("XI1", "XI2"):
        g = analyze(kind).graph
        if k in g.states:
            return g.states[k]


states = st.integers(0, len(_KEYS) - 1).map(_state)


def test_failure_reasons():
    v = normalize_orientations(seed("XI1_SIX"))
    assert try_s1(v, 0).failure_reason is Failure.NO_SUCH_SITE
    assert try_s1(v, 6).failure_reason is Failure.NO_SUCH_SITE
    # values 4 and 5 lie on opposite sides of zero
    assert try_s2(v, 4).failure_reason is Failure.ZERO_BETWEEN_VALUES
    assert try_s7(v, 1).failure_reason is Failure.NO_SUCH_SITE
    assert not try_s1(v, 1).ok and try_s1(v, 1).failure_reason is Failure.INTERSECTION_INDEX_OUT_OF_RANGE


def test_no_pairs_means_no_births():
    v = normalize_orientations(seed("XI1_630_A"))
    assert v.r == 6
    w = [m for m in candidate_moves(v) if m.kind in (Kind.S3, Kind.S4)]
    assert len(w) == 4
    eight = next(x for x in analyze("XI1").graph.states.values() if x.r == 8)
    assert try_s3(eight, Side.NEG).failure_reason is Failure.NO_SUCH_SITE


def test_candidate_order_is_fixed():
    v = normalize_orientations(seed("XI1_SIX"))
    kinds = [m.kind for m in candidate_moves(v)]
    assert kinds[:2] == [Kind.S1, Kind.S2]
    assert kinds[-2:] == [Kind.S5, Kind.S6]


def test_apply_dispatches():
    v = normalize_orientations(seed("XI1_SIX"))
    for move, w in enumerate_moves(v):
        assert apply(v, move).result == w


def test_collision_kinds():
    assert COLLISIONS == {Kind.S1, Kind.S3}
    assert str(Kind.S5) == "s5"


@settings(max_examples=80, deadline=None)
@given(states)
def test_results_validate_and_are_normalized(v):
    for move, w in enumerate_moves(v):
        assert validate(w).ok, move
        assert normalize_orientations(w) is w
        if move.kind in COLLISIONS:
            assert abs(w.r - v.r) == 2
        else:
            assert w.r == v.r and w.parity_word() in (v.parity_word(), _swapped(v, move))


def _swapped(v, move):
    if move.kind is not Kind.S2:
        return v.parity_word()
    p = list(v.parity_word())
    a = move.site - 1
    p[a], p[a + 1] = p[a + 1], p[a]
    return "".join(p)


@settings(max_examples=80, deadline=None)
@given(states, st.data())
def test_s2_is_an_involution(v, data):
    if v.r < 2:
        return
    i = data.draw(st.integers(1, v.r - 1))
    o = try_s2(v, i)
    if o.ok:
        assert try_s2(o.result, i).result == v


@settings(max_examples=80, deadline=None)
@given(states)
def test_s5_and_s6_undo_each_other(v):
    o = try_s5(v)
    if o.ok:
        assert try_s6(o.result).result == v
    o = try_s6(v)
    if o.ok:
        assert try_s5(o.result).result == v


@settings(max_examples=80, deadline=None)
@given(states, st.data())
def test_braid_move_and_its_inverse(v, data):
    if v.s < 2:
        return
    j = data.draw(st.integers(1, v.s - 1))
    o = try_s7(v, j)
    if o.ok:
        assert try_s7(o.result, j, inverse=True).result == v


@settings(max_examples=80, deadline=None)
@given(states, st.sampled_from(list(Side)))
def test_s4_twice_is_identity(v, side):
    o = try_s4(v, side)
    if o.ok:
        assert try_s4(o.result, side).result == v


@settings(max_examples=80, deadline=None)
@given(states, st.sampled_from(list(Side)))
def test_birth_then_collision_next_to_zero(v, side):
    o = try_s3(v, side)
    if not o.ok:
        return
    w = o.result
    site = w.neg_count - 1 if side is Side.NEG else w.neg_count + 1
    assert try_s1(w, site).result == v


@settings(max_examples=80, deadline=None)
@given(states)
def test_collision_next_to_zero_then_birth(v):
    for i in range(1, v.r):
        o = try_s1(v, i)
        if not o.ok:
            continue
        if i - 1 == v.neg_count - 2:
            assert try_s3(o.result, Side.NEG).result == v
        if i - 1 == v.neg_count:
            assert try_s3(o.result, Side.POS).result == v


def test_move_repr_is_hashable():
    m = SurgeryMove(Kind.S3, Side.POS)
    assert {m: 1}[SurgeryMove(Kind.S3, Side.POS)] == 1

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from virtmorse import poly_lab as pl
from virtmorse.poly_lab import CubicPolynomial, CubicType

P = CubicPolynomial.parse


def test_parser_collects_terms():
    f = P("x^3 - 2*x*y*z + (y - z)^2 + a*z", a="1/3")
    assert f.terms() == {(3, 0, 0): 1, (1, 1, 1): -2, (0, 2, 0): 1, (0, 1, 1): -2,
                         (0, 0, 2): 1, (0, 0, 1): Fraction(1, 3)}
    assert P("2**3*x").terms() == {(1, 0, 0): 8}
    assert str(P("y + x^3")) == "x**3 + y"
    assert P(str(P("x*y*z/3 - 2*z + 7"))) == P("x*y*z/3 - 2*z + 7")


@pytest.mark.parametrize("bad", ["x^4", "x*y*z*x", "x/y", "sin(x)", "x^y", "q*x"])
def test_parser_rejects(bad):
    with pytest.raises(pl.PolynomialError):
        P(bad)


def test_arithmetic():
    f = P("x^3 + y")
    assert (f + (-f)).terms() == {}
    assert f.scaled(2).terms() == {(3, 0, 0): 1, (0, 1, 0): 4}
    assert f.principal_part().terms() == {(3, 0, 0): 1}
    with pytest.raises(pl.PolynomialError):
        CubicPolynomial((1, 2))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=20, max_size=20),
       st.lists(st.floats(-2, 2), min_size=3, max_size=3))
def test_derivatives_match_finite_differences(coeffs, x):
    f = CubicPolynomial(tuple(coeffs))
    x = np.array(x)
    h = 1e-5
    for k in range(3):
        e = np.zeros(3)
        e[k] = h
        fd = (f(x + e) - f(x - e)) / (2 * h)
        assert abs(fd - f.gradient(x)[k]) < 1e-6 * (1 + abs(fd))
        fd2 = (f.gradient(x + e) - f.gradient(x - e)) / (2 * h)
        assert np.allclose(fd2, f.hessian(x)[:, k], atol=1e-6, rtol=1e-6)
    exact = f.exact_gradient([Fraction(v) for v in x])
    assert np.allclose([float(v) for v in exact], f.gradient(x))


def test_closed_form_types():
    assert pl.classify_type(P("x^3 + y^3 + z^3")) is CubicType.XI_1
    assert pl.classify_type(P("x^3 + y^3 + z^3 - 6*x*y*z")) is CubicType.XI_2
    assert pl.classify_type(P("x^3 + y^3 + z^3 - 3*x*y*z")) is CubicType.DISCRIMINANT
    r = pl.classify_report(P("x^3 - 4*x*z^2 + 80/27*z^3 - y^2*z"))
    assert r.kind is CubicType.XI_2 and r.method == "weierstrass form"
    assert pl.classify_type(P("x^3 + x*z^2 + z^3 - y^2*z")) is CubicType.XI_1


def _substitute(f: str, m) -> CubicPolynomial:
    lin = ["(" + " + ".join(f"({m[i][j]})*{v}" for j, v in enumerate("xyz")) + ")" for i in range(3)]
    return P(f.replace("x", "X").replace("y", "Y").replace("z", "Z")
             .replace("X", lin[0]).replace("Y", lin[1]).replace("Z", lin[2]))


CLOSED = [("x^3 + y^3 + z^3", CubicType.XI_1),
          ("x^3 + y^3 + z^3 - 6*x*y*z", CubicType.XI_2),
          ("x^3 + y^3 + z^3 + 3*x*y*z", CubicType.XI_1),
          ("x^3 - 4*x*z^2 + z^3 - y^2*z", CubicType.XI_2),
          ("2*x^3 + x*z^2 - z^3 + 3*y^2*z", CubicType.XI_1)]


@pytest.mark.parametrize("trial", range(8))
def test_flex_route_agrees_with_closed_forms(trial):
    rng = random.Random(trial)
    text, kind = CLOSED[trial % len(CLOSED)]
    while True:
        m = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)] for _ in range(3)]
        if np.linalg.det(np.array(m, dtype=float)) != 0:
            break
    g = _substitute(text, m)
    r = pl.classify_report(g)
    assert r.method == "flex transform"
    assert r.kind is kind
    assert pl.classify_type(-g) is kind


def test_positive_scaling_keeps_critical_structure():
    f = pl.load_catalog()[3].polynomial()
    base = pl.critical_points(f)
    g = f.scaled(3)
    moved = pl.critical_points(g)
    assert len(base) == len(moved)
    for a in base:
        b = min(moved, key=lambda c: np.linalg.norm(np.array(c.location) - 3 * np.array(a.location)))
        assert np.allclose(np.array(b.location), 3 * np.array(a.location), atol=1e-8)
        assert a.signature == b.signature


def test_singular_principal_part_is_refused():
    with pytest.raises(pl.PolynomialError):
        pl.solve(P("x^3 + y^3 + z^3 - 3*x*y*z + x"))


def test_perturbed_fermat_cubic():
    pts = pl.critical_points(P("x^3 + y^3 + z^3 - x - y - z"))
    assert len(pts) == 8
    idx = sorted(c.morse_index for c in pts)
    assert idx == [0, 1, 1, 1, 2, 2, 2, 3]
    assert pl.passport_of(P("x^3 + y^3 + z^3 + x + y + z")).as_tuple() == (0, 0, 0, 0)


def test_negation_reverses_indices():
    f = P("x^3 + y^3 + z^3 - x - 2*y + z/2")
    a = pl.passport_of(f).as_tuple()
    b = pl.passport_of(-f).as_tuple()
    assert b == a[::-1]


_ENTRIES = {e.name: e for e in pl.load_catalog()}


def test_catalog_shape():
    assert len(_ENTRIES) == 27
    for e in _ENTRIES.values():
        if e.passport is not None:
            m0, m1, m2, m3 = e.passport
            assert m0 + m2 == m1 + m3 and m0 <= 1 and m3 <= 1


@pytest.mark.parametrize("name", ["twop", "reali77", "sxone", "eee14", "d5a3def"])
def test_second_route_agrees(name):
    f = _ENTRIES[name].polynomial()
    homotopy = [np.array(c.location) for c in pl.critical_points(f)]
    newton = pl.newton_multistart(f)
    assert len(newton) == len(homotopy)
    for r in newton:
        assert min(np.linalg.norm(r - h) for h in homotopy) < 1e-7


def test_degenerate_point_of_a4a4():
    e = _ENTRIES["a4a4"]
    f = e.polynomial()
    target = [Fraction(1, 64), Fraction(-1, 128), Fraction(-7, 192)]
    assert [[Fraction(v) for v in p] for p in e.points] == [[0, 0, 0], target]
    assert f.exact_gradient(target) == (0, 0, 0)
    pts = pl.critical_points(f)
    near = min(pts, key=lambda c: np.linalg.norm(np.array(c.location) - [float(v) for v in target]))
    assert np.linalg.norm(np.array(near.location) - [float(v) for v in target]) < 1e-8
    assert near.degenerate
    with pytest.raises(pl.PolynomialError):
        pl.passport_of(f)


@settings(max_examples=12, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4))
def test_passport_parity_rule(lin):
    # m0 + m2 = m1 + m3 for every Morse polynomial with the Fermat principal part
    a, b, c, k = lin
    f = P(f"x^3 + y^3 + z^3 + {k}*x*y*z/4 + {a}*x + {b}*y + {c}*z + x*y")
    try:
        p = pl.passport_of(f)
    except pl.PolynomialError:
        return
    m0, m1, m2, m3 = p.as_tuple()
    assert m0 + m2 == m1 + m3
    assert sum(p.as_tuple()) % 2 == 0

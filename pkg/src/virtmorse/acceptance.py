"""The twelve end-to-end checks, as plain functions returning a verdict.

Used by ``virtmorse report --check`` and by the acceptance test module.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import invariants as inv
from . import poly_lab
from .analysis import TYPES, analyze
from .explorer import component_graph, query, real_nonreal_nonzero, real_real_nonzero, sparse_and_negative
from .lattice_core import normalize_orientations
from .reference_dgraphs import SELF_DUAL
from .seeds import seed


@dataclass
class Verdict:
    number: int
    title: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"criterion {self.number:2d} {'PASS' if self.ok else 'FAIL'}  {self.title}" + (
            f"  [{self.detail}]" if self.detail else "")


CENSUS = {"XI1": {0: 297, 2: 390, 4: 515, 6: 1512, 8: 3789},
          "XI2": {0: 0, 2: 255, 4: 650, 6: 1897, 8: 6372}}
CARDS = {"XI1": {8: [54, 72, 432, 432, 783, 783, 1233], 6: [28, 112, 112, 630, 630],
                 4: [30, 60, 60, 365], 2: [102, 102, 186], 0: [297]},
         "XI2": {8: [324, 324, 504, 504, 945, 945, 1413, 1413], 6: [140, 140, 665, 952],
                 4: [90, 90, 470], 2: [255], 0: []}}
EXTENSION_CLASSES = {54: 6, 72: 8, 432: 48, 783: 87, 1233: 137, 324: 36, 504: 56, 945: 105, 1413: 157}
PASSPORTS = {
    "XI1": [(54, (0, 4, 4, 0)), (72, (1, 3, 3, 1)), (432, (0, 3, 4, 1)), (432, (1, 4, 3, 0)),
            (783, (0, 4, 4, 0)), (783, (0, 4, 4, 0)), (1233, (0, 4, 4, 0)),
            (630, (0, 3, 3, 0)), (630, (0, 3, 3, 0)), (112, (1, 3, 2, 0)), (112, (0, 2, 3, 1)),
            (28, (1, 2, 2, 1)), (30, (1, 1, 1, 1)), (60, (1, 2, 1, 0)), (60, (0, 1, 2, 1)),
            (365, (0, 2, 2, 0)), (102, (1, 1, 0, 0)), (102, (0, 0, 1, 1)), (186, (0, 1, 1, 0)),
            (297, (0, 0, 0, 0))],
    "XI2": [(324, (0, 4, 4, 0)), (324, (0, 4, 4, 0)), (504, (1, 4, 3, 0)), (504, (0, 3, 4, 1)),
            (945, (0, 4, 4, 0)), (945, (0, 4, 4, 0)), (1413, (0, 4, 4, 0)), (1413, (0, 4, 4, 0)),
            (140, (1, 3, 2, 0)), (140, (0, 2, 3, 1)), (665, (0, 3, 3, 0)), (952, (0, 3, 3, 0)),
            (90, (1, 2, 1, 0)), (90, (0, 1, 2, 1)), (470, (0, 2, 2, 0)), (255, (0, 1, 1, 0))],
}
HOMOLOGY = {"XI1": (0, 0, 0, 0), "XI2": (0, 1, 1, 0)}
STRICT = {"XI1": 842, "XI2": 1416}

# Template pairs (source part, sink part).  The A3/A5 split is checked with
# the vertex parities of its morsification: indices 2,1,2 on the A3 path and
# 1,2,1,2,1 on the A5 path.
UNIQUE_SPLITS = [("XI2", "D5", "A3", "XI2-324"), ("XI2", "A3:eoe", "A5:oeoeo", "XI2-1413"),
                 ("XI1", "A4", "A4", "XI1-1233")]
ABSENT_SPLITS = [("XI1", "A6", "A2"), ("XI1", "A5", "A3"), ("XI1", "A4", "D4"), ("XI1", "A4", "D4+"),
                 ("XI1", "A2", "D6"), ("XI1", "A2", "D6+"),
                 ("XI2", "D4", "D4"), ("XI2", "D4+", "D4"), ("XI2", "D4+", "D4+")]


def check_census() -> Verdict:
    got = {k: analyze(k).census() for k in TYPES}
    bad = [f"{k}: {got[k]}" for k in TYPES if got[k] != CENSUS[k]]
    totals = ", ".join(f"{k} {sum(got[k].values())}" for k in TYPES)
    return Verdict(1, "census totals", not bad, "; ".join(bad) or totals)


def check_spectra() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        for r, cards in CARDS[k].items():
            have = sorted(c.card for c in a.with_r(r))
            if have != sorted(cards):
                bad.append(f"{k} r={r}: {have}")
    return Verdict(2, "component spectra", not bad, "; ".join(bad))


def check_extension_classes() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        for c in a.with_r(8):
            n = inv.linear_extension_classes(a.dgraph(c))
            if 9 * n != c.card or EXTENSION_CLASSES.get(c.card) != n:
                bad.append(f"{k} card {c.card}: {n} classes")
    return Verdict(3, "card = 9 x linear extension classes", not bad, "; ".join(bad))


def _toggle(name: str) -> str:
    return name[:-1] if name.endswith("^") else name + "^"


def check_figures() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        expected = set()
        for fig, self_dual in SELF_DUAL.items():
            if fig.startswith(k + "-"):
                expected.add(fig)
                if not self_dual:
                    expected.add(fig + "^")
        names = [a.figures.get(c.index) for c in a.with_r(8)]
        if None in names or sorted(names) != sorted(expected):
            bad.append(f"{k}: matched {names}")
            continue
        for c in a.with_r(8):
            fig = a.figures[c.index]
            mate = a.partner(c)
            base = fig.rstrip("^")
            want = fig if SELF_DUAL[base] else _toggle(fig)
            if a.figures[mate.index] != want:
                bad.append(f"{fig} pairs with {a.figures[mate.index]}")
    return Verdict(4, "D-graphs match the figures and up-down pairings", not bad, "; ".join(bad))


def check_passports() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        have = Counter((c.card, a.passports[c.index].as_tuple()) for c in a.components)
        if have != Counter(PASSPORTS[k]):
            bad.append(f"{k}: extra {dict(have - Counter(PASSPORTS[k]))}, "
                       f"missing {dict(Counter(PASSPORTS[k]) - have)}")
    return Verdict(5, "component passports", not bad, "; ".join(bad))


def check_homology() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        for c in a.with_r(8):
            h = inv.morse_complex(a.dgraph(c), a.vertex_indices(c)).homology()
            if h != HOMOLOGY[k]:
                bad.append(f"{a.figures.get(c.index)}: {h}")
    return Verdict(6, "Morse complex homology over Z2", not bad, "; ".join(bad))


def normal_form_shape(d: inv.DGraph) -> tuple[list[int], list[int]]:
    """Isolated vertices and the rest."""
    touched = {v for a, b, _ in d.edges for v in (a, b)}
    return [v for v in range(d.n) if v not in touched], sorted(touched)


def check_normalization() -> Verdict:
    bad = []
    a = analyze("XI2")
    for c in a.with_r(8):
        fig = a.figures.get(c.index, "")
        if fig.rstrip("^") != "XI2-945":
            continue
        nd = inv.normalize_dgraph(a.dgraph(c), a.vertex_indices(c))
        lone, rest = normal_form_shape(nd)
        if len(lone) != 1 or not inv.matches_template(nd, rest, inv.template("E6~")):
            bad.append(f"{fig} normalizes to {sorted(nd.edges)}")
    for k in TYPES:
        a = analyze(k)
        for c in a.with_r(8):
            p = a.passports[c.index]
            if p.m0 == 1 or p.m3 == 1:
                d = a.dgraph(c)
                if inv.normalize_dgraph(d, a.vertex_indices(c)) != d:
                    bad.append(f"{a.figures.get(c.index)} with extrema is not normal")
    return Verdict(7, "normalization", not bad, "; ".join(bad))


def check_bidecompositions() -> Verdict:
    bad = []
    for k, x, y, fig in UNIQUE_SPLITS:
        a = analyze(k)
        hits = [a.figures.get(c.index) for c in a.with_r(8)
                if inv.admits_bidecomposition(a.dgraph(c), inv.template(x), inv.template(y))]
        if hits != [fig]:
            bad.append(f"{x}->{y}: {hits}")
    for k, x, y in ABSENT_SPLITS:
        a = analyze(k)
        hits = [a.figures.get(c.index) for c in a.with_r(8)
                if inv.admits_bidecomposition(a.dgraph(c), inv.template(x), inv.template(y), either_way=True)]
        if hits:
            bad.append(f"{x}+{y}: {hits}")
    return Verdict(8, "bidecomposition uniqueness and non-existence", not bad, "; ".join(bad))


def check_strict_counts() -> Verdict:
    got = {k: sum(inv.strict_class_count(c.card) for c in analyze(k).with_r(8)) for k in TYPES}
    return Verdict(9, "strictly Morse class counts", got == STRICT, f"{got}")


def check_query() -> Verdict:
    g = component_graph(seed("XI1_630_A"))
    hits = query(g, sparse_and_negative)
    b = normalize_orientations(seed("XI1_630_B"))
    where = {k: c.index for c in analyze("XI1").components for k in c.members}
    ok = (len(g) == 630 and len(hits) == 6 and all(st.neg_count == 4 for st, _ in hits)
          and real_real_nonzero(b) <= 5 and real_nonreal_nonzero(b) <= 5 and b.neg_count == 0
          and b.key() not in g.states and where[g.seed] != where[b.key()])
    return Verdict(10, "query in the 630 component", ok,
                   f"{len(hits)} matches, neg counts {sorted(st.neg_count for st, _ in hits)}")


def check_divisibility() -> Verdict:
    bad = []
    for k in TYPES:
        a = analyze(k)
        for r, n in a.census().items():
            if n % (r + 1):
                bad.append(f"{k}: {n} states with {r} real points")
        for c in a.components:
            if c.card % (c.r + 1):
                bad.append(f"{k}: card {c.card} with r={c.r}")
    return Verdict(11, "divisibility", not bad, "; ".join(bad))


def check_catalog() -> Verdict:
    results = poly_lab.verify_catalog()
    bad = [f"{r.entry.name}: {'; '.join(r.problems)}" for r in results if not r.ok]
    return Verdict(12, "realization polynomials", not bad, "; ".join(bad) or f"{len(results)} entries")


CRITERIA: list[Callable[[], Verdict]] = [
    check_census, check_spectra, check_extension_classes, check_figures, check_passports,
    check_homology, check_normalization, check_bidecompositions, check_strict_counts,
    check_query, check_divisibility, check_catalog,
]


def run_all() -> list[Verdict]:
    return [f() for f in CRITERIA]

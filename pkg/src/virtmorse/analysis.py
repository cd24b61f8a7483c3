"""Per-type analysis shared by the CLI, the example scripts and the tests.

``analyze("XI1")`` explores the formal graph from the default seed, splits
it into components, transports Morse indices and attaches D-graphs, figure
names and chirality flags to the eight-point components.  Results are
cached per process.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import invariants as inv
from .explorer import Component, FormalGraph, build_formal_graph, census, component_decomposition
from .reference_dgraphs import REFERENCE
from .seeds import DEFAULT_SEED, seed

TYPES = ("XI1", "XI2")


@dataclass
class TypeAnalysis:
    kind: str
    graph: FormalGraph
    components: list[Component]
    indices: dict[bytes, tuple[int | None, ...]]
    passports: dict[int, inv.Passport]
    figures: dict[int, str] = field(default_factory=dict)

    def census(self) -> dict[int, int]:
        return census(self.graph)

    def with_r(self, r: int) -> list[Component]:
        return [c for c in self.components if c.r == r]

    def dgraph(self, comp: Component) -> inv.DGraph:
        if comp.dgraph is None:
            comp.dgraph = inv.extract_dgraph(comp.representative)
        return comp.dgraph

    def vertex_indices(self, comp: Component) -> tuple[int, ...]:
        idx = self.indices[comp.members[0]]
        if inv.UNKNOWN in idx:
            raise inv.StructuralError(f"component {comp.index} has undetermined indices")
        return idx

    def partner(self, comp: Component) -> Component:
        """The eight-point component whose D-graph is the up-down image of this one."""
        target = inv.canonical_dgraph(inv.up_down_dgraph(self.dgraph(comp)))
        hits = [c for c in self.with_r(8) if inv.canonical_dgraph(self.dgraph(c)) == target]
        if len(hits) != 1:
            raise inv.StructuralError(f"component {comp.index} has {len(hits)} up-down partners")
        return hits[0]

    def chiral(self, comp: Component) -> bool:
        return is_chiral(self.kind, comp.r, self.figures.get(comp.index))

    def isotopy_classes(self) -> dict[int, int]:
        """Isotopy classes per real count: each component, doubled when chiral."""
        out = {}
        for r in (0, 2, 4, 6, 8):
            out[r] = sum(2 if self.chiral(c) else 1 for c in self.with_r(r))
        return out


def figure_dgraphs(kind: str) -> dict[str, inv.DGraph]:
    """Reference D-graphs of one type and their up-down images (suffix ``^``)."""
    out = {}
    for name, ref in REFERENCE.items():
        if name.startswith(kind + "-"):
            d = inv.DGraph.from_named(*ref)
            out[name] = d
            out[name + "^"] = inv.up_down_dgraph(d)
    return out


def name_figures(a: TypeAnalysis) -> dict[int, str]:
    """Figure name of every eight-point component; self-dual graphs keep the plain name."""
    canon: dict[bytes, str] = {}
    for name, d in figure_dgraphs(a.kind).items():
        canon.setdefault(inv.canonical_dgraph(d), name)
    out = {}
    for c in a.with_r(8):
        name = canon.get(inv.canonical_dgraph(a.dgraph(c)))
        if name is not None:
            out[c.index] = name
    return out


@lru_cache(maxsize=None)
def _chirality_table() -> dict:
    return json.loads(resources.files("virtmorse").joinpath("data/chirality.json").read_text())


def is_chiral(kind: str, r: int, figure: str | None) -> bool:
    table = _chirality_table()
    for row in table["chiral"]:
        if row["type"] == kind and row["r"] == r and row.get("figure") in (None, figure):
            return True
    return False


@lru_cache(maxsize=None)
def analyze(kind: str, threads: int = 1) -> TypeAnalysis:
    if kind not in TYPES:
        raise ValueError(f"type must be one of {TYPES}, got {kind!r}")
    g = build_formal_graph(seed(DEFAULT_SEED[kind]), threads=threads)
    comps = component_decomposition(g)
    idx = inv.transport_indices(g)
    passports = inv.component_passports(g, comps)
    a = TypeAnalysis(kind, g, comps, idx, passports)
    a.figures = name_figures(a)
    return a

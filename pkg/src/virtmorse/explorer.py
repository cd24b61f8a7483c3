"""Formal graph construction, census and virtual components."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .lattice_core import VirtualMorseFunction, normalize_orientations
from .surgery_kernel import COLLISIONS, Kind, SurgeryMove, enumerate_moves

Edge = tuple[bytes, SurgeryMove, bytes]
NON_COLLISION = frozenset(Kind) - COLLISIONS
REAL_COUNTS = (0, 2, 4, 6, 8)


class KeyCollision(RuntimeError):
    pass


@dataclass
class FormalGraph:
    states: dict[bytes, VirtualMorseFunction]
    edges: list[Edge]
    seed: bytes
    kinds: frozenset[Kind] = frozenset(Kind)

    def __len__(self) -> int:
        return len(self.states)


@dataclass
class Component:
    members: list[bytes]
    representative: VirtualMorseFunction
    index: int = -1
    dgraph: object = field(default=None, repr=False)

    @property
    def card(self) -> int:
        return len(self.members)

    @property
    def r(self) -> int:
        return self.representative.r

    def __repr__(self) -> str:
        return f"Component(#{self.index}, r={self.r}, card={self.card})"


def _closure(seed: VirtualMorseFunction, kinds: frozenset[Kind], threads: int
             ) -> FormalGraph:
    start = normalize_orientations(seed)
    states = {start.key(): start}
    edges: list[Edge] = []
    frontier = [start.key()]
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while frontier:
            batch = [states[k] for k in frontier]
            if pool is None:
                results = [enumerate_moves(st, kinds) for st in batch]
            else:
                results = list(pool.map(lambda st: enumerate_moves(st, kinds), batch))
            fresh = {}
            for src, moves in zip(frontier, results):
                for move, nxt in moves:
                    k = nxt.key()
                    edges.append((src, move, k))
                    old = states.get(k) or fresh.get(k)
                    if old is None:
                        fresh[k] = nxt
                    elif not _same(old, nxt):
                        raise KeyCollision(f"distinct states share key {k.hex()}")
            states.update(fresh)
            frontier = sorted(fresh)
    finally:
        if pool is not None:
            pool.shutdown()
    return FormalGraph(states, edges, start.key(), kinds)


def _same(a: VirtualMorseFunction, b: VirtualMorseFunction) -> bool:
    return (a.parities == b.parities and a.neg_count == b.neg_count
            and (a.matrix == b.matrix).all() and (a.even_string == b.even_string).all())


def build_formal_graph(seed: VirtualMorseFunction, threads: int = 1) -> FormalGraph:
    return _closure(seed, frozenset(Kind), threads)


def census(g: FormalGraph) -> dict[int, int]:
    c = Counter(st.r for st in g.states.values())
    return {r: c.get(r, 0) for r in REAL_COUNTS}


def component_graph(seed: VirtualMorseFunction, threads: int = 1) -> FormalGraph:
    """Closure of one state under the surgeries that keep critical values apart."""
    return _closure(seed, NON_COLLISION, threads)


def virtual_component(seed: VirtualMorseFunction, threads: int = 1) -> Component:
    g = component_graph(seed, threads)
    return Component(sorted(g.states), g.states[g.seed])


def component_decomposition(g: FormalGraph) -> list[Component]:
    """Split the states by the edges that do not collide critical values.

    Components are ordered by (real count descending, card, smallest key).
    """
    parent = {k: k for k in g.states}

    def find(k: bytes) -> bytes:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a, move, b in g.edges:
        if move.kind in COLLISIONS:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[bytes, list[bytes]] = {}
    for k in g.states:
        groups.setdefault(find(k), []).append(k)
    comps = [Component(sorted(ms), g.states[min(ms)]) for ms in groups.values()]
    comps.sort(key=lambda c: (-c.r, c.card, c.members[0]))
    for i, c in enumerate(comps):
        c.index = i
    return comps


def component_of(comps: Iterable[Component]) -> dict[bytes, int]:
    return {k: c.index for c in comps for k in c.members}


def query(g: FormalGraph, predicate: Callable[[VirtualMorseFunction], bool],
          comps: list[Component] | None = None,
          keys: Iterable[bytes] | None = None) -> list[tuple[VirtualMorseFunction, int]]:
    """States satisfying ``predicate`` with their component index (-1 without ``comps``)."""
    where = component_of(comps) if comps is not None else {}
    pool = sorted(g.states) if keys is None else sorted(keys)
    return [(g.states[k], where.get(k, -1)) for k in pool if predicate(g.states[k])]


# Predicates used to locate distinguished states inside a component.

def real_real_nonzero(v: VirtualMorseFunction, upto: int = 6) -> int:
    n = min(upto, v.r)
    M = v.matrix
    return sum(1 for i in range(n) for j in range(i + 1, n) if M[i, j] != 0)


def real_nonreal_nonzero(v: VirtualMorseFunction) -> int:
    M = v.matrix
    return int((M[:v.r, v.r:] != 0).sum())


def sparse_and_negative(v: VirtualMorseFunction) -> bool:
    return real_real_nonzero(v) <= 5 and real_nonreal_nonzero(v) <= 5 and v.neg_count <= 4

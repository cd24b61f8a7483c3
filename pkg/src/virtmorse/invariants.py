"""Invariants of virtual Morse functions and of their components.

D-graphs are colored, oriented graphs on the eight real critical points with
signed edge multiplicities.  Isomorphism is decided exactly: color refinement
splits the vertices into invariant cells and every ordering inside the cells
is tried.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .lattice_core import ODD, VirtualMorseFunction

UNKNOWN = None


class StructuralError(RuntimeError):
    """Data that the surrounding theory rules out, pointing at an upstream bug."""


@dataclass(frozen=True)
class DGraph:
    colors: tuple[int, ...]
    edges: frozenset[tuple[int, int, int]]   # (tail, head, signed multiplicity)

    @property
    def n(self) -> int:
        return len(self.colors)

    def weight(self) -> np.ndarray:
        """W[i, j] = signed multiplicity of the edge i -> j (0 if none)."""
        W = np.zeros((self.n, self.n), dtype=np.int64)
        for a, b, w in self.edges:
            W[a, b] = w
        return W

    def relabel(self, perm: Sequence[int]) -> "DGraph":
        """Vertex ``i`` becomes ``perm[i]``."""
        colors = [0] * self.n
        for i, c in enumerate(self.colors):
            colors[perm[i]] = c
        return DGraph(tuple(colors), frozenset((perm[a], perm[b], w) for a, b, w in self.edges))

    @classmethod
    def from_named(cls, colors: Mapping[str, int], edges: Iterable[tuple[str, str, int]]) -> "DGraph":
        names = list(colors)
        at = {v: i for i, v in enumerate(names)}
        return cls(tuple(colors[v] for v in names),
                   frozenset((at[a], at[b], w) for a, b, w in edges))

    def is_acyclic(self) -> bool:
        indeg = Counter(b for _, b, _ in self.edges)
        out: dict[int, list[int]] = {}
        for a, b, _ in self.edges:
            out.setdefault(a, []).append(b)
        q = deque(v for v in range(self.n) if indeg[v] == 0)
        seen = 0
        while q:
            v = q.popleft()
            seen += 1
            for w in out.get(v, ()):
                indeg[w] -= 1
                if indeg[w] == 0:
                    q.append(w)
        return seen == self.n


def extract_dgraph(v: VirtualMorseFunction) -> DGraph:
    if v.r != 8:
        raise ValueError(f"D-graphs are defined for eight real critical points, got {v.r}")
    M = v.matrix
    edges = frozenset((i, j, int(M[i, j])) for i in range(8) for j in range(i + 1, 8) if M[i, j])
    return DGraph(v.parities, edges)


def up_down_dgraph(d: DGraph) -> DGraph:
    return DGraph(tuple(-c for c in d.colors), frozenset((b, a, w) for a, b, w in d.edges))


# Canonical form

def _refine(d: DGraph) -> list[int]:
    """Stable invariant cell label of every vertex."""
    W = d.weight()
    label = list(d.colors)
    while True:
        sig = [(label[v],
                tuple(sorted((W[v, u], label[u]) for u in range(d.n) if W[v, u])),
                tuple(sorted((W[u, v], label[u]) for u in range(d.n) if W[u, v])))
               for v in range(d.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(set(new)) == len(set(label)):
            return new
        label = new


def _labelings(d: DGraph) -> Iterable[list[int]]:
    """All vertex -> position maps respecting the refined cells."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(_refine(d)):
        cells.setdefault(c, []).append(v)
    blocks = [cells[c] for c in sorted(cells)]
    for orders in itertools.product(*(itertools.permutations(b) for b in blocks)):
        pos = [0] * d.n
        k = 0
        for order in orders:
            for v in order:
                pos[v] = k
                k += 1
        yield pos


def _code(d: DGraph, pos: Sequence[int]) -> tuple:
    colors = [0] * d.n
    for v, c in enumerate(d.colors):
        colors[pos[v]] = c
    return tuple(colors), tuple(sorted((pos[a], pos[b], w) for a, b, w in d.edges))


def canonical_dgraph(d: DGraph) -> bytes:
    best = min(_code(d, pos) for pos in _labelings(d))
    colors, edges = best
    body = [len(colors)] + [c & 0xFF for c in colors]
    for a, b, w in edges:
        body += [a, b, w & 0xFF]
    return bytes(body)


def dgraph_iso(a: DGraph, b: DGraph) -> bool:
    return a.n == b.n and canonical_dgraph(a) == canonical_dgraph(b)


# Linear extensions, counted by brute force over all vertex orders.

def automorphisms(d: DGraph) -> list[tuple[int, ...]]:
    """Every permutation preserving colors and signed oriented edges."""
    W = d.weight()
    out = []
    for p in itertools.permutations(range(d.n)):
        if any(d.colors[p[i]] != d.colors[i] for i in range(d.n)):
            continue
        if all(W[p[a], p[b]] == w for a, b, w in d.edges):
            out.append(p)
    return out


def linear_extensions(d: DGraph) -> list[tuple[int, ...]]:
    """Orders of the vertices (lowest first) in which every edge points upward."""
    out = []
    for order in itertools.permutations(range(d.n)):
        rank = [0] * d.n
        for k, v in enumerate(order):
            rank[v] = k
        if all(rank[a] < rank[b] for a, b, _ in d.edges):
            out.append(order)
    return out


def linear_extension_classes(d: DGraph) -> int:
    """Number of orbits of the automorphism group on linear extensions."""
    exts = set(linear_extensions(d))
    auts = automorphisms(d)
    seen: set[tuple[int, ...]] = set()
    orbits = 0
    for order in sorted(exts):
        if order in seen:
            continue
        orbits += 1
        for p in auts:
            seen.add(tuple(p[v] for v in order))
    return orbits


def strict_class_count(card: int) -> int:
    if card % 9:
        raise StructuralError(f"card {card} of an eight-point component is not divisible by 9")
    return 2 * card // 9


# Morse indices

def _chained(M: np.ndarray, r: int) -> np.ndarray:
    """reach[i, j] for i < j: an increasing chain with nonzero consecutive pairings."""
    reach = np.zeros((r, r), dtype=bool)
    for i in range(r - 1, -1, -1):
        for j in range(i + 1, r):
            if M[i, j]:
                reach[i, j] = True
                reach[i] |= reach[j]
    return reach


def index_constraints(v: VirtualMorseFunction) -> list[tuple[int, int]]:
    """Pairs (i, j) whose Morse indices differ by exactly one, index(j) = index(i) + 1."""
    r, M = v.r, v.matrix
    reach = _chained(M, r)
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            if M[i, j] != 1 or (i < v.neg_count) != (j < v.neg_count):
                continue
            if any(reach[i, k] and reach[k, j] for k in range(i + 1, j)):
                continue
            out.append((i, j))
    return out


def reconstruct_indices(v: VirtualMorseFunction) -> list[int | None]:
    """Indices forced inside one state; ``UNKNOWN`` where several values remain."""
    return _joint_closure(v.parities, index_constraints(v), {})


@dataclass(frozen=True)
class Passport:
    m0: int
    m1: int
    m2: int
    m3: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m0, self.m1, self.m2, self.m3)

    def dual(self) -> "Passport":
        return Passport(self.m3, self.m2, self.m1, self.m0)

    def __str__(self) -> str:
        return str(self.as_tuple())


class PartialPassport(ValueError):
    pass


def passport_from_indices(indices: Sequence[int | None]) -> Passport:
    if any(i is UNKNOWN for i in indices):
        raise PartialPassport(f"undetermined indices at points "
                              f"{[k + 1 for k, i in enumerate(indices) if i is UNKNOWN]}")
    c = Counter(indices)
    p = Passport(c[0], c[1], c[2], c[3])
    if p.m0 > 1 or p.m3 > 1 or p.m0 + p.m2 != p.m1 + p.m3:
        raise StructuralError(f"impossible passport {p}")
    return p


def passport(v: VirtualMorseFunction) -> Passport:
    return passport_from_indices(reconstruct_indices(v))


def component_passport(states: Iterable[VirtualMorseFunction]) -> Passport:
    """Passport shared by every member whose indices are fully determined."""
    found: set[Passport] = set()
    for st in states:
        try:
            found.add(passport(st))
        except PartialPassport:
            continue
    if len(found) != 1:
        raise StructuralError(f"component passports {sorted(map(str, found))}")
    return found.pop()


# Morse complex over the field with two elements

def gf2_rank(A: np.ndarray) -> int:
    A = (np.array(A, dtype=np.uint8) & 1).copy()
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r, c]), None)
        if piv is None:
            continue
        A[[rank, piv]] = A[[piv, rank]]
        for r in range(rows):
            if r != rank and A[r, c]:
                A[r] ^= A[rank]
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass
class ChainComplexZ2:
    dims: tuple[int, int, int, int]        # C0..C3
    boundary: dict[int, np.ndarray]        # k -> matrix C_k -> C_{k-1}, shape (dim k-1, dim k)

    def homology(self) -> tuple[int, int, int, int]:
        ranks = {k: gf2_rank(B) if B.size else 0 for k, B in self.boundary.items()}
        return tuple(self.dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(4))


def morse_complex(d: DGraph, indices: Sequence[int]) -> ChainComplexZ2:
    W = d.weight()
    groups = {k: [v for v in range(d.n) if indices[v] == k] for k in range(4)}
    boundary = {}
    for k in (1, 2, 3):
        B = np.zeros((len(groups[k - 1]), len(groups[k])), dtype=np.uint8)
        for a, lo in enumerate(groups[k - 1]):
            for b, hi in enumerate(groups[k]):
                B[a, b] = (abs(W[lo, hi]) + abs(W[hi, lo])) % 2
        boundary[k] = B
    for k in (2, 3):
        if ((boundary[k - 1].astype(np.int64) @ boundary[k]) % 2).any():
            raise StructuralError("boundary of a boundary is nonzero")
    return ChainComplexZ2(tuple(len(groups[k]) for k in range(4)), boundary)


# Normalization

def is_normal_edge(colors: Sequence[int], indices: Sequence[int], a: int, b: int, w: int) -> bool:
    same = (indices[a] - indices[b]) % 2 == 0
    return indices[a] < indices[b] and ((w < 0) == same)


def normalize_dgraph(d: DGraph, indices: Sequence[int]) -> DGraph:
    keep = frozenset(e for e in d.edges if is_normal_edge(d.colors, indices, *e))
    return DGraph(d.colors, keep)


# Coxeter-Dynkin templates, as undirected graphs with signed multiplicities.
# A weight of 0 in a template edge means "either sign".  Optional vertex
# colors pin the parities of a particular morsification; 0 means "any".

@dataclass(frozen=True)
class DynkinTemplate:
    name: str
    n: int
    edges: tuple[tuple[int, int, int], ...]
    colors: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.colors:
            return self.name
        return self.name + ":" + "".join({ODD: "o", 0: "."}.get(c, "e") for c in self.colors)

    def colored(self, pattern: str) -> "DynkinTemplate":
        """Same graph with parities given as a string over ``o``, ``e``, ``.``."""
        code = {"o": ODD, "e": -ODD, ".": 0}
        if len(pattern) != self.n:
            raise ValueError(f"pattern {pattern!r} does not fit {self.name}")
        return DynkinTemplate(self.name, self.n, self.edges, tuple(code[c] for c in pattern))


def template_a(k: int) -> DynkinTemplate:
    return DynkinTemplate(f"A{k}", k, tuple((i, i + 1, 0) for i in range(k - 1)))


def template_d(k: int) -> DynkinTemplate:
    path = tuple((i, i + 1, 0) for i in range(k - 2))
    return DynkinTemplate(f"D{k}", k, path + ((k - 3, k - 1, 0),))


def template_d_plus(k: int) -> DynkinTemplate:
    """Square with a dashed diagonal, preceded by a tail of ``k - 4`` vertices."""
    t = k - 4
    tail = tuple((i, i + 1, 0) for i in range(t))
    a, u, w, b = t, t + 1, t + 2, t + 3
    square = ((a, u, 0), (a, w, 0), (u, b, 0), (w, b, 0), (a, b, -1))
    return DynkinTemplate(f"D{k}+", k, tail + square)


E6 = DynkinTemplate("E6", 6, ((0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 4, 0), (2, 5, 0)))
E6_EXT = DynkinTemplate("E6~", 7, ((0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 4, 0),
                                   (2, 5, 0), (5, 6, 0)))


def template(name: str) -> DynkinTemplate:
    """Look up ``A4``, ``D5``, ``D4+``, ``E6``, ``E6~``; ``A3:eoe`` adds vertex parities."""
    if ":" in name:
        base, pattern = name.split(":")
        return template(base).colored(pattern)
    if name == "E6":
        return E6
    if name in ("E6~", "~E6", "E6ext"):
        return E6_EXT
    k = int(name[1:].rstrip("+"))
    if name[0] == "A":
        return template_a(k)
    if name[0] == "D":
        return template_d_plus(k) if name.endswith("+") else template_d(k)
    raise KeyError(name)


def _undirected(d: DGraph, part: Sequence[int]) -> dict[frozenset, int]:
    inside = set(part)
    return {frozenset((a, b)): w for a, b, w in d.edges if a in inside and b in inside}


def matches_template(d: DGraph, part: Sequence[int], t: DynkinTemplate) -> bool:
    """Does the subgraph induced on ``part`` equal the template under some bijection?"""
    if len(part) != t.n:
        return False
    have = _undirected(d, part)
    if len(have) != len(t.edges):
        return False
    for perm in itertools.permutations(part):
        if t.colors and any(c and d.colors[perm[i]] != c for i, c in enumerate(t.colors)):
            continue
        ok = True
        for a, b, w in t.edges:
            got = have.get(frozenset((perm[a], perm[b])))
            if got is None or abs(got) != 1 or (w and got != w):
                ok = False
                break
        if ok:
            return True
    return False


def bidecompositions(d: DGraph, a: DynkinTemplate, b: DynkinTemplate
                     ) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Splits (source part, sink part) with the given inner graphs and one-way cross edges."""
    if a.n + b.n != d.n:
        raise ValueError("template sizes must add up to the vertex count")
    out = []
    for src in itertools.combinations(range(d.n), a.n):
        srcset = set(src)
        if any((x in srcset) != (y in srcset) and y in srcset for x, y, _ in d.edges):
            continue
        dst = tuple(v for v in range(d.n) if v not in srcset)
        if matches_template(d, src, a) and matches_template(d, dst, b):
            out.append((src, dst))
    return out


def admits_bidecomposition(d: DGraph, a: DynkinTemplate, b: DynkinTemplate,
                           either_way: bool = False) -> bool:
    if bidecompositions(d, a, b):
        return True
    return either_way and bool(bidecompositions(d, b, a))


# Index transport across the formal graph.
#
# Every surgery moves the real critical points it does not collide without
# changing their Morse indices, so indices known in one state carry over
# along edges.  Collisions (s1) and births (s3) only add or remove a pair.

def _joint_closure(parities: Sequence[int], constraints: Sequence[tuple[int, int]],
                   fixed: Mapping[int, int]) -> list[int | None]:
    """Values common to every index vector allowed by the local rules.

    Local rules: the difference constraints, parities, range 0..3, at most
    one minimum and at most one maximum, and the values already ``fixed``.
    """
    choices = []
    for k, p in enumerate(parities):
        if k in fixed:
            choices.append((fixed[k],))
        else:
            choices.append((1, 3) if p == ODD else (0, 2))
    common: list | None = None
    for idx in itertools.product(*choices):
        if any(idx[j] != idx[i] + 1 for i, j in constraints):
            continue
        if idx.count(0) > 1 or idx.count(3) > 1:
            continue
        if common is None:
            common = list(idx)
        else:
            common = [a if a == b else UNKNOWN for a, b in zip(common, idx)]
    if common is None:
        raise StructuralError("no index vector satisfies the local rules")
    return common


def position_map(src: VirtualMorseFunction, move) -> dict[int, int]:
    """Real positions of ``src`` carried by ``move`` to positions of the result."""
    from .surgery_kernel import Kind
    r, kind = src.r, move.kind
    if kind is Kind.S1:
        a = move.site - 1
        return {p: (p if p < a else p - 2) for p in range(r) if p not in (a, a + 1)}
    if kind is Kind.S2:
        a = move.site - 1
        m = {p: p for p in range(r)}
        m[a], m[a + 1] = a + 1, a
        return m
    if kind is Kind.S3:
        neg = src.neg_count
        return {p: (p if p < neg else p + 2) for p in range(r)}
    return {p: p for p in range(r)}


def transport_indices(g) -> dict[bytes, tuple[int | None, ...]]:
    """Morse indices of every state in a formal graph, as far as they are forced."""
    node: dict[tuple[bytes, int], int] = {}
    for k, st in g.states.items():
        for p in range(st.r):
            node[(k, p)] = len(node)
    parent = list(range(len(node)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, move, b in g.edges:
        for p, q in position_map(g.states[a], move).items():
            x, y = find(node[(a, p)]), find(node[(b, q)])
            if x != y:
                parent[max(x, y)] = min(x, y)
    cons = {k: index_constraints(st) for k, st in g.states.items()}
    value: dict[int, int] = {}
    out: dict[bytes, list[int | None]] = {}
    changed = True
    while changed:
        changed = False
        for k, st in g.states.items():
            roots = [find(node[(k, p)]) for p in range(st.r)]
            fixed = {p: value[x] for p, x in enumerate(roots) if x in value}
            if len(fixed) == st.r:
                out[k] = [fixed[p] for p in range(st.r)]
                continue
            got = _joint_closure(st.parities, cons[k], fixed)
            out[k] = got
            for x, val in zip(roots, got):
                if val is UNKNOWN:
                    continue
                old = value.get(x)
                if old is None:
                    value[x] = val
                    changed = True
                elif old != val:
                    raise StructuralError("transported indices disagree")
    return {k: tuple(v) for k, v in out.items()}


def component_passports(g, comps) -> dict[int, Passport]:
    """Passport of each component from transported indices (all members must agree)."""
    idx = transport_indices(g)
    out = {}
    for c in comps:
        seen = {passport_from_indices(idx[k]) for k in c.members if UNKNOWN not in idx[k]}
        if len(seen) != 1:
            raise StructuralError(f"component {c.index}: passports {sorted(map(str, seen))}")
        out[c.index] = seen.pop()
    return out

"""Elementary virtual surgeries s1-s7 as partial transforms of states.

Every surgery is a change of basis of the vanishing lattice.  The new basis
vectors are written as the rows of an integer matrix ``B`` in old
coordinates; the intersection matrix becomes ``B M B^T`` and the even string
(the pairing with the oriented real point set) becomes ``B e``.  Each result
is checked against the conjugation identities before it is returned, so a
wrong sign shows up as a ``KernelError`` rather than a silently bad state.

Sites are 1-based for s1, s2 and s7, as in the text layout of intersection matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .lattice_core import (I8, N, VirtualMorseFunction, conjugation, normalize_orientations,
                           real_even_entries)


class Kind(enum.Enum):
    S1 = 1
    S2 = 2
    S3 = 3
    S4 = 4
    S5 = 5
    S6 = 6
    S7 = 7

    def __str__(self) -> str:
        return f"s{self.value}"


class Side(enum.Enum):
    NEG = "neg"
    POS = "pos"


class Failure(enum.Enum):
    INTERSECTION_INDEX_OUT_OF_RANGE = "intersection index out of range"
    ZERO_BETWEEN_VALUES = "zero lies between the values"
    NO_SUCH_SITE = "no such site"


COLLISIONS = frozenset({Kind.S1, Kind.S3})


class KernelError(RuntimeError):
    """A surgery produced data violating the conjugation identities."""


@dataclass(frozen=True)
class SurgeryMove:
    kind: Kind
    site: int | Side | None = None
    inverse: bool = False

    def __str__(self) -> str:
        if self.site is None:
            return str(self.kind)
        site = self.site.value if isinstance(self.site, Side) else str(self.site)
        return f"{self.kind}({site}{'^-1' if self.inverse else ''})"


@dataclass(frozen=True)
class SurgeryOutcome:
    result: VirtualMorseFunction | None = None
    failure_reason: Failure | None = None

    @property
    def ok(self) -> bool:
        return self.result is not None


def _fail(reason: Failure) -> SurgeryOutcome:
    return SurgeryOutcome(failure_reason=reason)


def _unit(k: int) -> np.ndarray:
    return I8[k]


def _reflect(M: np.ndarray, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Picard-Lefschetz reflection of ``x`` in the cycle ``v`` (both in coordinates)."""
    return x + (x @ M @ v) * v


def _rebase(v: VirtualMorseFunction, rows: Sequence[np.ndarray], parities: Sequence[int],
            neg_count: int, even: np.ndarray | None = None, label: str = "") -> VirtualMorseFunction:
    B = np.array(rows, dtype=np.int64)
    M = B @ v.matrix @ B.T
    e = B @ v.even_string if even is None else even
    r = len(parities)
    S = conjugation(M, parities, neg_count)
    if not (S @ S == I8).all():
        raise KernelError(f"{label}: conjugation is not an involution")
    if not (S @ M @ S.T == M).all():
        raise KernelError(f"{label}: conjugation breaks the intersection form")
    if not (real_even_entries(M, parities, neg_count, S) == e[:r]).all():
        raise KernelError(f"{label}: even string disagrees with the conjugation")
    out = VirtualMorseFunction(M, e, tuple(parities), neg_count, _conj=S)
    return normalize_orientations(out)


def _basis(v: VirtualMorseFunction):
    r, s = v.r, v.s
    reals = [_unit(i) for i in range(r)]
    ups = [_unit(r + j) for j in range(s)]
    lows = [_unit(r + s + j) for j in range(s)]
    return reals, ups, lows


def _check_real_site(v: VirtualMorseFunction, i: int) -> Failure | None:
    if not 1 <= i < v.r:
        return Failure.NO_SUCH_SITE
    if (i - 1 < v.neg_count) != (i < v.neg_count):
        return Failure.ZERO_BETWEEN_VALUES
    return None


def try_s1(v: VirtualMorseFunction, i: int) -> SurgeryOutcome:
    """Values ``i`` and ``i+1`` collide and leave the real line as a conjugate pair."""
    bad = _check_real_site(v, i)
    if bad:
        return _fail(bad)
    a = i - 1
    M = v.matrix
    if M[a, a + 1] != 1:
        return _fail(Failure.INTERSECTION_INDEX_OUT_OF_RANGE)
    reals, ups, lows = _basis(v)
    S = v.conj
    u = reals[a] + reals[a + 1]
    low = u @ S
    on_neg = a < v.neg_count
    # Paths of real values beyond the collision now pass around the new pair.
    farther = range(0, a) if on_neg else range(a + 2, v.r)
    for k in farther:
        reals[k] = _reflect(M, reals[k], u)
    rest = reals[:a] + reals[a + 2:]
    par = v.parities[:a] + v.parities[a + 2:]
    if on_neg:
        rows = rest + [u] + ups + [low] + lows
        neg = v.neg_count - 2
    else:
        rows = rest + ups + [u] + lows + [low]
        neg = v.neg_count
    return SurgeryOutcome(_rebase(v, rows, par, neg, label="s1"))


def try_s2(v: VirtualMorseFunction, i: int) -> SurgeryOutcome:
    """Values ``i`` and ``i+1`` with orthogonal cycles pass each other."""
    bad = _check_real_site(v, i)
    if bad:
        return _fail(bad)
    a = i - 1
    if v.matrix[a, a + 1] != 0:
        return _fail(Failure.INTERSECTION_INDEX_OUT_OF_RANGE)
    reals, ups, lows = _basis(v)
    reals[a], reals[a + 1] = reals[a + 1], reals[a]
    par = list(v.parities)
    par[a], par[a + 1] = par[a + 1], par[a]
    return SurgeryOutcome(_rebase(v, reals + ups + lows, par, v.neg_count, label="s2"))


def pair_for_side(v: VirtualMorseFunction, side: Side) -> int:
    """Index of the conjugate pair whose paths are nearest to the given half-line."""
    return 0 if side is Side.NEG else v.s - 1


def try_s3(v: VirtualMorseFunction, side: Side) -> SurgeryOutcome:
    """A conjugate pair meets on the real line next to 0 and becomes two real values."""
    if v.s == 0:
        return _fail(Failure.NO_SUCH_SITE)
    M, r, s, neg = v.matrix, v.r, v.s, v.neg_count
    j = pair_for_side(v, side)
    m = int(M[r + j, r + s + j])
    if m not in (1, -1):
        return _fail(Failure.INTERSECTION_INDEX_OUT_OF_RANGE)
    reals, ups, lows = _basis(v)
    u, low = ups[j], lows[j]
    on_neg = side is Side.NEG
    farther = range(0, neg) if on_neg else range(neg, r)
    for k in farther:
        reals[k] = _reflect(M, reals[k], u)
    # The pairing of the pair predicts the parities of the newborn values.
    sa = -m
    par = v.parities[:neg] + (sa, -sa) + v.parities[neg:]
    new_neg = neg + 2 if on_neg else neg
    others_up = ups[:j] + ups[j + 1:]
    others_low = lows[:j] + lows[j + 1:]
    found = None
    # The overall orientation of the newborn cycles is the one compatible
    # with the even string; exactly one choice is.
    for eps in (1, -1):
        if on_neg:
            da = eps * sa * low
            db = eps * u - da
        else:
            db = eps * sa * low
            da = eps * u - db
        rows = reals[:neg] + [da, db] + reals[neg:] + others_up + others_low
        B = np.array(rows)
        Mn = B @ M @ B.T
        en = B @ v.even_string
        if (real_even_entries(Mn, par, new_neg) == en[:r + 2]).all():
            if found is not None:
                raise KernelError("s3: both orientations fit the even string")
            found = rows
    if found is None:
        raise KernelError("s3: no orientation fits the even string")
    return SurgeryOutcome(_rebase(v, found, par, new_neg, label="s3"))


def try_s4(v: VirtualMorseFunction, side: Side) -> SurgeryOutcome:
    """A conjugate pair with orthogonal cycles crosses the real line next to 0."""
    if v.s == 0:
        return _fail(Failure.NO_SUCH_SITE)
    M, r, s, neg = v.matrix, v.r, v.s, v.neg_count
    j = pair_for_side(v, side)
    if M[r + j, r + s + j] != 0:
        return _fail(Failure.INTERSECTION_INDEX_OUT_OF_RANGE)
    reals, ups, lows = _basis(v)
    u, low = ups[j], lows[j]
    farther = range(0, neg) if side is Side.NEG else range(neg, r)
    for k in farther:
        reals[k] = _reflect(M, _reflect(M, reals[k], u), low)
    ups[j], lows[j] = low, u
    return SurgeryOutcome(_rebase(v, reals + ups + lows, v.parities, neg, label="s4"))


def _jump(v: VirtualMorseFunction, c: int, new_neg: int, label: str) -> VirtualMorseFunction:
    """Real value ``c`` (0-based) crosses 0.

    Equivalently the base value 0 moves past it: the paths to the upper
    values are unchanged and the paths to the lower values now wind around
    it, picking up its cycle.  The real paths are unchanged, but the real
    point set itself changes by a multiple of the crossed cycle; the
    multiple is read off from the conjugation identity in column ``c``.
    """
    M = v.matrix
    reals, ups, lows = _basis(v)
    lows = [x + (x @ M[:, c]) * reals[c] for x in lows]
    rows = reals + ups + lows
    B = np.array(rows)
    Mn = B @ M @ B.T
    want = real_even_entries(Mn, v.parities, new_neg)[c]
    diff = int(want - v.even_string[c])
    if diff % 2:
        raise KernelError(f"{label}: odd correction of the real cycle")
    e = B @ v.even_string - (diff // 2) * (B @ M[:, c])
    return _rebase(v, rows, v.parities, new_neg, even=e, label=label)


def try_s5(v: VirtualMorseFunction) -> SurgeryOutcome:
    """The negative value nearest to 0 jumps up through 0."""
    if v.neg_count < 1:
        return _fail(Failure.NO_SUCH_SITE)
    c = v.neg_count - 1
    return SurgeryOutcome(_jump(v, c, v.neg_count - 1, "s5"))


def try_s6(v: VirtualMorseFunction) -> SurgeryOutcome:
    """The positive value nearest to 0 jumps down through 0."""
    if v.pos_count < 1:
        return _fail(Failure.NO_SUCH_SITE)
    c = v.neg_count
    return SurgeryOutcome(_jump(v, c, v.neg_count + 1, "s6"))


def try_s7(v: VirtualMorseFunction, j: int, inverse: bool = False) -> SurgeryOutcome:
    """Braid move on the paths to upper values ``j`` and ``j+1``."""
    if v.s < 2 or not 1 <= j <= v.s - 1:
        return _fail(Failure.NO_SUCH_SITE)
    M, r = v.matrix, v.r
    reals, ups, _ = _basis(v)
    a, b = ups[j - 1], ups[j]
    if inverse:
        pair = [b, _reflect(M, a, b)]
    else:
        pair = [_reflect(M, b, a), a]
    ups = ups[:j - 1] + pair + ups[j + 1:]
    S = v.conj
    lows = [x @ S for x in ups]
    return SurgeryOutcome(_rebase(v, reals + ups + lows, v.parities, v.neg_count, label="s7"))


def apply(v: VirtualMorseFunction, move: SurgeryMove) -> SurgeryOutcome:
    k = move.kind
    if k is Kind.S1:
        return try_s1(v, move.site)
    if k is Kind.S2:
        return try_s2(v, move.site)
    if k is Kind.S3:
        return try_s3(v, move.site)
    if k is Kind.S4:
        return try_s4(v, move.site)
    if k is Kind.S5:
        return try_s5(v)
    if k is Kind.S6:
        return try_s6(v)
    return try_s7(v, move.site, move.inverse)


def candidate_moves(v: VirtualMorseFunction) -> list[SurgeryMove]:
    """Every move with a site in range, in the fixed enumeration order."""
    out = [SurgeryMove(kind, i) for i in range(1, v.r) for kind in (Kind.S1, Kind.S2)]
    if v.s:
        out += [SurgeryMove(kind, side) for side in Side for kind in (Kind.S3, Kind.S4)]
    out += [SurgeryMove(Kind.S5), SurgeryMove(Kind.S6)]
    out += [SurgeryMove(Kind.S7, j, inv) for j in range(1, v.s) for inv in (False, True)]
    return out


def enumerate_moves(v: VirtualMorseFunction, kinds: frozenset[Kind] | None = None
                    ) -> list[tuple[SurgeryMove, VirtualMorseFunction]]:
    out = []
    for move in candidate_moves(v):
        if kinds is not None and move.kind not in kinds:
            continue
        res = apply(v, move)
        if res.ok:
            out.append((move, res.result))
    return out

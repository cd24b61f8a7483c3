"""State type for virtual Morse functions and the conventions shared by all modules.

A state records, for a generic real cubic polynomial of three variables with
eight (real or complex) critical values, the intersection matrix of its
vanishing cycles, the even Petrovskii string, the parities of the Morse
indices of the real critical points and the number of negative critical
values.

Column order: real critical values ascending, then the ``s`` values in the
upper half-plane, then their conjugates in the same order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

N = 8
I8 = np.eye(N, dtype=np.int64)
I8.setflags(write=False)
ODD = 1
EVEN = -1

_PARITY_CHAR = {ODD: "o", EVEN: "e"}


def _frozen(a: Sequence[Sequence[int]] | Sequence[int] | np.ndarray) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class VirtualMorseFunction:
    matrix: np.ndarray
    even_string: np.ndarray
    parities: tuple[int, ...]
    neg_count: int
    _key: bytes | None = field(default=None, repr=False, compare=False)
    _conj: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _frozen(self.matrix))
        object.__setattr__(self, "even_string", _frozen(self.even_string))
        object.__setattr__(self, "parities", tuple(int(p) for p in self.parities))
        object.__setattr__(self, "neg_count", int(self.neg_count))

    @property
    def r(self) -> int:
        return len(self.parities)

    @property
    def s(self) -> int:
        return (N - self.r) // 2

    @property
    def pos_count(self) -> int:
        return self.r - self.neg_count

    @property
    def odd_string(self) -> np.ndarray:
        return derive_odd_string(self)

    def key(self) -> bytes:
        k = self._key
        if k is None:
            k = canonical_key(self)
            object.__setattr__(self, "_key", k)
        return k

    @property
    def conj(self) -> np.ndarray:
        S = self._conj
        if S is None:
            S = conjugation(self.matrix, self.parities, self.neg_count)
            S.setflags(write=False)
            object.__setattr__(self, "_conj", S)
        return S

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualMorseFunction):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def parity_word(self) -> str:
        return "".join(_PARITY_CHAR[p] for p in self.parities)

    def __repr__(self) -> str:
        return (f"VirtualMorseFunction(r={self.r}, neg={self.neg_count}, "
                f"parities={self.parity_word()!r}, even={self.even_string.tolist()})")


def conjugation(matrix: np.ndarray, parities: Sequence[int], neg_count: int) -> np.ndarray:
    """Action of complex conjugation on the basis, one image per row.

    A real cycle is carried to its mirror image, which is re-expressed in the
    basis by Picard-Lefschetz reflections in the cycles whose paths lie
    between it and 0; the orientation then changes by the parity sign.
    Conjugate pairs are simply exchanged.
    """
    M = np.asarray(matrix, dtype=np.int64)
    r = len(parities)
    s = (N - r) // 2
    S = np.zeros((N, N), dtype=np.int64)
    S[:r, :r] = np.eye(r, dtype=np.int64)
    # Row i of the negative block takes reflections j = i+1 .. neg-1 in that
    # order, so at step j every row above j is updated at once.
    for j in range(1, neg_count):
        S[:j, j] += S[:j] @ M[:, j]
    # Row i of the positive block takes j = i, i-1, .., neg.
    for j in range(r - 1, neg_count - 1, -1):
        S[j:r, j] += S[j:r] @ M[:, j]
    S[:r] *= np.asarray(parities, dtype=np.int64)[:, None]
    for j in range(s):
        S[r + j, r + s + j] = 1
        S[r + s + j, r + j] = 1
    return S


def real_even_entries(matrix: np.ndarray, parities: Sequence[int], neg_count: int,
                      S: np.ndarray | None = None) -> np.ndarray:
    """Even-string entries on the real columns forced by the matrix and parities.

    The even cycle on a real column is the sum of the oriented cycle and its
    conjugate image, paired against the real point set.
    """
    r = len(parities)
    if S is None:
        S = conjugation(matrix, parities, neg_count)
    p = np.zeros(N, dtype=np.int64)
    p[:r] = parities
    return p[:r] + S[:r] @ p


def derive_odd_string(v: VirtualMorseFunction) -> np.ndarray:
    r, s = v.r, v.s
    e = v.even_string
    odd = np.empty(N, dtype=np.int64)
    odd[:r] = 2 * np.asarray(v.parities, dtype=np.int64) - e[:r]
    odd[r:r + s] = -e[r:r + s]
    odd[r + s:] = e[r + s:]
    return odd


def canonical_key(v: VirtualMorseFunction) -> bytes:
    head = bytes([v.r, v.neg_count]) + bytes(p & 0xFF for p in v.parities)
    return head + v.matrix.astype(np.int8).tobytes() + v.even_string.astype(np.int8).tobytes()


@dataclass
class ValidationReport:
    errors: list[str]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def validate(v: VirtualMorseFunction) -> ValidationReport:
    errs: list[str] = []
    M, e = v.matrix, v.even_string
    if M.shape != (N, N):
        return ValidationReport([f"matrix has shape {M.shape}, expected (8, 8)"])
    if e.shape != (N,):
        return ValidationReport([f"even string has length {e.shape}, expected 8"])
    if not (M == M.T).all():
        bad = [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(M != M.T)) if i < j]
        errs.append(f"matrix not symmetric at {bad}")
    for i in range(N):
        if M[i, i] != -2:
            errs.append(f"diagonal must be -2: entry ({i + 1},{i + 1}) is {M[i, i]}")
    off = M[~np.eye(N, dtype=bool)]
    if (np.abs(off) > 2).any():
        errs.append("off-diagonal entries must lie in [-2, 2]")
    r = v.r
    if r % 2 or r > N:
        errs.append(f"number of real values must be even and at most 8, got {r}")
    if any(p not in (ODD, EVEN) for p in v.parities):
        errs.append("parities must be +1 (odd) or -1 (even)")
    if not 0 <= v.neg_count <= r:
        errs.append(f"negative count {v.neg_count} outside [0, {r}]")
    if errs:
        return ValidationReport(errs)
    # Consistency of the strings with the matrix through complex conjugation.
    S = v.conj
    if not (S @ S == I8).all():
        errs.append("conjugation is not an involution on the basis")
    if not (S @ M @ S.T == M).all():
        errs.append("conjugation does not preserve the intersection form")
    expect = real_even_entries(M, v.parities, v.neg_count, S)
    for j in np.nonzero(expect != e[:r])[0]:
        errs.append(f"even string column {j + 1}: {e[j]} but the matrix forces {expect[j]}")
    return ValidationReport(errs)


def from_matrix(matrix: Sequence[Sequence[int]], parities: Sequence[int], neg_count: int,
                pair_even: Sequence[int] = ()) -> VirtualMorseFunction:
    """Build a state whose real even entries are filled in from the matrix.

    ``pair_even`` gives the (equal) even entries of the conjugate pairs.
    """
    M = np.asarray(matrix, dtype=np.int64)
    r = len(parities)
    s = (N - r) // 2
    e = np.zeros(N, dtype=np.int64)
    e[:r] = real_even_entries(M, parities, neg_count)
    if pair_even:
        e[r:r + s] = pair_even
        e[r + s:] = pair_even
    return VirtualMorseFunction(M, e, tuple(parities), neg_count)


def _pair_signs(r: int) -> np.ndarray:
    s = (N - r) // 2
    D = np.ones((2 ** s, N), dtype=np.int64)
    for row, signs in enumerate(itertools.product((1, -1), repeat=s)):
        D[row, r:r + s] = signs
        D[row, r + s:] = signs
    return D


_SIGNS = {r: _pair_signs(r) for r in range(0, N + 1, 2)}


def normalize_orientations(v: VirtualMorseFunction) -> VirtualMorseFunction:
    """Fix the orientations of the conjugate pairs.

    Each pair may be reversed as a whole; the representative chosen is the
    lexicographically largest (matrix row by row, then even string).
    """
    if v.s == 0:
        return v
    D = _SIGNS[v.r]
    Ms = v.matrix[None] * D[:, :, None] * D[:, None, :]
    es = v.even_string[None] * D
    table = np.concatenate([Ms.reshape(len(D), -1), es], axis=1)
    best = np.lexsort(table.T[::-1])[-1]
    if best == 0:
        return v
    out = VirtualMorseFunction(Ms[best], es[best], v.parities, v.neg_count)
    if v._conj is not None:
        # Reversing pairs conjugates the action by the sign matrix.
        d = D[best]
        object.__setattr__(out, "_conj", v._conj * d[:, None] * d[None, :])
    return out


def parse_parities(word: str) -> tuple[int, ...]:
    return tuple(ODD if c == "o" else EVEN for c in word if c in "oe")

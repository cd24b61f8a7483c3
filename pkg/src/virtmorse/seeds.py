"""Seed states in their reference layout (before orientation normalization)."""

from __future__ import annotations

from .lattice_core import VirtualMorseFunction, parse_parities


def _state(rows, even, parities, neg):
    return VirtualMorseFunction(rows, even, parse_parities(parities), neg)


_RAW = {
    "XI1_SIX": (
        [
            [-2,  0,  0,  1,  0,  0,  0, -1],
            [ 0, -2,  0,  1,  0,  1,  1,  0],
            [ 0,  0, -2,  1,  1,  0,  1,  0],
            [ 1,  1,  1, -2,  0,  0, -1,  1],
            [ 0,  0,  1,  0, -2,  0,  0,  0],
            [ 0,  1,  0,  0,  0, -2,  0,  0],
            [ 0,  1,  1, -1,  0,  0, -2, -1],
            [-1,  0,  0,  1,  0,  0, -1, -2],
        ],
        [1, 1, 1, 0, -2, -2, -1, -1], "ooo eee", 4,
    ),
    "XI1_630_A": (
        [
            [-2,  0,  0,  1,  1,  0,  1, -1],
            [ 0, -2,  0,  0,  1,  0,  0,  0],
            [ 0,  0, -2,  0,  1,  1,  1, -1],
            [ 1,  0,  0, -2,  0,  0, -1,  0],
            [ 1,  1,  1,  0, -2,  0, -1,  1],
            [ 0,  0,  1,  0,  0, -2, -1,  0],
            [ 1,  0,  1, -1, -1, -1, -2,  0],
            [-1,  0, -1,  0,  1,  0,  0, -2],
        ],
        [0, 0, 0, -1, 1, -1, 0, 0], "ooo eee", 0,
    ),
    "XI1_630_B": (
        [
            [-2,  0,  0,  0,  0,  1,  0,  0],
            [ 0, -2,  0,  1,  0,  0,  0,  0],
            [ 0,  0, -2,  1,  1,  1,  1, -1],
            [ 0,  1,  1, -2,  0,  0, -1,  0],
            [ 0,  0,  1,  0, -2,  0,  0,  1],
            [ 1,  0,  1,  0,  0, -2, -1,  0],
            [ 0,  0,  1, -1,  0, -1, -2, -1],
            [ 0,  0, -1,  0,  1,  0, -1, -2],
        ],
        [0, 0, 0, 0, -1, 0, -1, -1], "ooo eee", 0,
    ),
    "XI1_112": (
        [
            [-2,  0,  0,  1,  1, -1, -1,  0],
            [ 0, -2,  1,  0,  1, -1, -1,  0],
            [ 0,  1, -2,  0,  0,  1,  0,  0],
            [ 1,  0,  0, -2,  0,  1,  0,  0],
            [ 1,  1,  0,  0, -2,  1,  1, -1],
            [-1, -1,  1,  1,  1, -2,  0,  0],
            [-1, -1,  0,  0,  1,  0, -2,  0],
            [ 0,  0,  0,  0, -1,  0,  0, -2],
        ],
        [1, 1, -1, -1, -1, 2, 0, 0], "ooe eeo", 6,
    ),
    "XI1_28": (
        [
            [-2,  1,  1, -1, -1,  1,  0,  0],
            [ 1, -2,  0,  1,  1, -1, -1,  0],
            [ 1,  0, -2,  1,  1, -1,  0,  1],
            [-1,  1,  1, -2,  0,  1,  0,  0],
            [-1,  1,  1,  0, -2,  1,  1, -1],
            [ 1, -1, -1,  1,  1, -2,  0,  0],
            [ 0, -1,  0,  0,  1,  0, -2,  0],
            [ 0,  0,  1,  0, -1,  0,  0, -2],
        ],
        [-1, 1, 1, -1, -1, 2, 0, 0], "eoo eeo", 6,
    ),
    "XI1_60": (
        [
            [-2,  1,  1, -1, -1,  0, -1, -1],
            [ 1, -2,  0,  1,  0,  0,  0,  0],
            [ 1,  0, -2,  1,  0, -1,  0,  1],
            [-1,  1,  1, -2,  0,  0,  0,  0],
            [-1,  0,  0,  0, -2, -1,  0,  0],
            [ 0,  0, -1,  0, -1, -2,  0,  0],
            [-1,  0,  0,  0,  0,  0, -2, -1],
            [-1,  0,  1,  0,  0,  0, -1, -2],
        ],
        [1, -1, -1, 2, 0, 0, 0, 0], "oeeo", 4,
    ),
    "XI1_365": (
        [
            [-2,  1,  0,  1,  0, -1, -1,  0],
            [ 1, -2,  0,  0,  0,  0,  0,  0],
            [ 0,  0, -2,  1,  0,  0, -1,  1],
            [ 1,  0,  1, -2, -1,  1,  1, -1],
            [ 0,  0,  0, -1, -2,  1,  0,  0],
            [-1,  0,  0,  1,  1, -2,  0, -1],
            [-1,  0, -1,  1,  0,  0, -2,  1],
            [ 0,  0,  1, -1,  0, -1,  1, -2],
        ],
        [0, 0, 1, 0, 0, 1, 0, 1], "oeoe", 4,
    ),
    "XI2_665": (
        [
            [-2,  0,  0,  0,  1,  0,  1,  0],
            [ 0, -2,  0,  1,  1,  1,  1, -1],
            [ 0,  0, -2,  0,  1,  0,  0, -1],
            [ 0,  1,  0, -2,  0,  0,  0,  0],
            [ 1,  1,  1,  0, -2,  0, -1,  1],
            [ 0,  1,  0,  0,  0, -2, -1,  1],
            [ 1,  1,  0,  0, -1, -1, -2,  0],
            [ 0, -1, -1,  0,  1,  1,  0, -2],
        ],
        [1, -1, 1, 0, 0, 0, 0, 0], "ooo eee", 6,
    ),
    "XI2_952": (
        [
            [-2,  0, -2,  0,  1,  1,  1,  1],
            [ 0, -2,  0,  0,  1,  0,  0,  0],
            [-2,  0, -2,  0,  1,  1,  1,  1],
            [ 0,  0,  0, -2,  0,  1,  0,  0],
            [ 1,  1,  1,  0, -2,  0,  0,  0],
            [ 1,  0,  1,  1,  0, -2,  0,  0],
            [ 1,  0,  1,  0,  0,  0, -2, -1],
            [ 1,  0,  1,  0,  0,  0, -1, -2],
        ],
        [0, 1, 0, 1, 0, 0, -1, -1], "eoo oee", 6,
    ),
}

TYPE_OF = {name: ("XI1" if name.startswith("XI1") else "XI2") for name in _RAW}
DEFAULT_SEED = {"XI1": "XI1_SIX", "XI2": "XI2_665"}


def seed(name: str) -> VirtualMorseFunction:
    rows, even, parities, neg = _RAW[name]
    return _state(rows, even, parities, neg)


def names() -> list[str]:
    return list(_RAW)

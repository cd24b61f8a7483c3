"""Reference D-graphs of the eight-point components, as edge lists.

Vertex names encode the drawing: ``W``/``B`` for odd/even vertices followed
by the horizontal position, with a row letter where needed.  Edge weights
are signed multiplicities: positive for solid, negative for dashed lines.
Every edge points from the lower to the higher critical value.
"""

from __future__ import annotations

from .lattice_core import EVEN, ODD

RefGraph = tuple[dict[str, int], list[tuple[str, str, int]]]


def _colors(names: str) -> dict[str, int]:
    return {n: (ODD if n.startswith("W") else EVEN) for n in names.split()}


_ROW = "W0 W40 W80 W120 B0 B40 B80 B120"

REFERENCE: dict[str, RefGraph] = {
    "XI1-54": (_colors(_ROW), [
        ("W0", "B0", -1), ("W40", "B40", -1), ("W120", "B120", -1), ("B80", "W80", -2),
        ("W0", "B80", 1), ("W40", "B80", 1), ("W120", "B80", 1),
        ("W80", "B120", 1), ("W80", "B0", 1), ("W80", "B40", 1),
        ("B80", "B120", 1), ("B80", "B40", 1), ("B80", "B0", 1),
        ("W120", "W80", 1), ("W40", "W80", 1), ("W0", "W80", 1),
    ]),
    # Bottom-left vertex is the minimum, top-right the maximum.
    "XI1-72": ({"BA": EVEN, "WB": ODD, "WC": ODD, "WD": ODD,
                "BE": EVEN, "BF": EVEN, "BG": EVEN, "WH": ODD}, [
        ("BA", "WB", 1), ("BA", "WC", 1), ("BA", "WD", 1), ("WB", "BF", 1),
        ("WC", "BF", 1), ("WD", "BE", 1), ("WB", "BE", 1), ("WD", "BG", 1),
        ("WC", "BG", 1), ("BG", "WH", 1), ("BE", "WH", 1), ("BF", "WH", 1),
        ("BA", "WH", 1),
        ("BA", "BE", -1), ("WC", "WH", -1), ("BA", "BF", -1), ("WD", "WH", -1),
        ("BA", "BG", -1), ("WB", "WH", -1),
    ]),
    # The top vertex is a maximum.
    "XI1-432": ({"Wa": ODD, "Wb": ODD, "Wc": ODD, "Bd": EVEN, "Be": EVEN,
                 "Bf": EVEN, "Bg": EVEN, "Wh": ODD}, [
        ("Wa", "Bd", 1), ("Wb", "Bd", 1), ("Wc", "Bd", 1),
        ("Bd", "Wh", 1), ("Be", "Wh", 1), ("Bf", "Wh", 1), ("Bg", "Wh", 1),
        ("Wa", "Be", 1), ("Wb", "Bf", 1), ("Wc", "Bg", 1),
        ("Wa", "Wh", -1), ("Wb", "Wh", -1), ("Wc", "Wh", -1),
    ]),
    # The drawing points the horizontal top edge from B120 to B80, which would
    # close the cycle B80 -> W80 -> B120 -> B80; the edge is taken upward.
    "XI1-783": (_colors(_ROW), [
        ("W0", "B0", 1), ("W0", "B80", 1), ("W40", "B40", 1), ("W40", "B80", 1),
        ("W120", "B80", 1), ("W120", "B120", -1), ("W40", "W80", 1), ("W120", "W80", 1),
        ("W0", "W80", 1), ("W80", "B120", 1), ("B80", "B120", 1), ("B80", "W80", -2),
    ]),
    "XI1-1233": (_colors(_ROW), [
        ("W0", "B0", 1), ("W40", "B40", 1), ("W80", "B80", 1), ("W120", "B120", 1),
        ("W0", "B40", 1), ("B40", "B80", 1), ("W40", "W80", 1), ("W80", "B120", 1),
        ("W0", "W80", 1), ("B40", "B120", 1), ("W40", "B80", -1), ("B40", "W80", -2),
    ]),
    "XI2-324": (_colors(_ROW), [
        ("W0", "B0", 1), ("W40", "B40", -1), ("W120", "B120", -1), ("B80", "W80", -2),
        ("W0", "B80", 1), ("W40", "B80", 1), ("W120", "B80", 1), ("W80", "B120", 1),
        ("W80", "B40", 1), ("B80", "B120", 1), ("B80", "B40", 1),
        ("W120", "W80", 1), ("W40", "W80", 1), ("W0", "W80", 1),
    ]),
    # The lowest vertex is a minimum.
    "XI2-504": ({"B60": EVEN, "W0": ODD, "W40": ODD, "W80": ODD, "W113": ODD,
                 "B0": EVEN, "B40": EVEN, "B80": EVEN}, [
        ("B60", "W0", 1), ("B60", "W40", 1), ("B60", "W80", 1), ("B60", "W113", 1),
        ("W0", "B40", 1), ("W40", "B80", 1), ("W0", "B0", 1), ("W40", "B0", 1),
        ("W80", "B80", 1), ("W80", "B40", 1),
        ("B60", "B0", -1), ("B60", "B40", -1), ("B60", "B80", -1),
    ]),
    "XI2-945": (_colors(_ROW), [
        ("W0", "B0", 1), ("W0", "B80", 1), ("W40", "B40", 1), ("W40", "B80", 1),
        ("W120", "B80", 1), ("W120", "B120", 1), ("W40", "W80", 1), ("W120", "W80", 1),
        ("W0", "W80", 1), ("B80", "W80", -2),
    ]),
    "XI2-1413": (_colors(_ROW), [
        ("W0", "B0", 1), ("W0", "B40", 1), ("W0", "W40", 1), ("B40", "B80", 1),
        ("W120", "B120", 1), ("W40", "B120", 1), ("B40", "B120", 1), ("W40", "B80", 1),
        ("W80", "B80", 1), ("B40", "W40", -2),
    ]),
}

# Up-down pairing: True when the graph is its own involute.
SELF_DUAL = {"XI1-54": True, "XI1-72": True, "XI1-1233": True,
             "XI1-432": False, "XI1-783": False,
             "XI2-324": False, "XI2-504": False, "XI2-945": False, "XI2-1413": False}

# Integer Morse indices drawn in the figures: odd vertices 1, even vertices 2,
# except the named extrema.
EXTREMA = {"XI1-72": {"BA": 0, "WH": 3}, "XI1-432": {"Wh": 3}, "XI2-504": {"B60": 0}}


def figure_indices(name: str) -> dict[str, int]:
    colors, _ = REFERENCE[name]
    idx = {v: (1 if c == ODD else 2) for v, c in colors.items()}
    idx.update(EXTREMA.get(name, {}))
    return idx

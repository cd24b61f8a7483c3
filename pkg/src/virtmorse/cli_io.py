"""Text format for states and the command line interface.

State files look like this (r and the negative count sit above the last
two columns)::

                       6  4
     -2  0  0  1  0  0  0 -1
      ...eight matrix rows...

      1  1  1 -2  0  0  1 -1      odd string
      1  1  1  0 -2 -2 -1 -1      even string

      1  1  1 -1 -1 -1  0  0      parities, 0 for non-real columns

The odd string is redundant; the parser recomputes it and rejects files
where it disagrees.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import invariants as inv
from . import poly_lab
from .acceptance import CARDS, CENSUS, STRICT, run_all
from .analysis import TYPES, TypeAnalysis, analyze
from .explorer import (Component, build_formal_graph, census, component_graph, query,
                       real_nonreal_nonzero, real_real_nonzero, sparse_and_negative, virtual_component)
from .lattice_core import N, VirtualMorseFunction, derive_odd_string, validate
from .seeds import DEFAULT_SEED, TYPE_OF, names, seed

WIDTH = 3


class StateFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _row(values: Sequence[int]) -> str:
    return "".join(f"{int(v):{WIDTH}d}" for v in values)


def emit_state(v: VirtualMorseFunction) -> str:
    lines = [" " * (WIDTH * (N - 2)) + f"{v.r:{WIDTH}d}{v.neg_count:{WIDTH}d}"]
    lines += [_row(row) for row in v.matrix]
    lines.append("")
    lines.append(_row(derive_odd_string(v)))
    lines.append(_row(v.even_string))
    lines.append("")
    lines.append(_row(list(v.parities) + [0] * (N - v.r)))
    return "\n".join(lines) + "\n"


def _ints(text: str, line: int, count: int) -> list[int]:
    try:
        vals = [int(t) for t in text.split()]
    except ValueError:
        raise StateFormatError(line, f"expected integers, got {text.strip()!r}") from None
    if len(vals) != count:
        raise StateFormatError(line, f"expected {count} entries, got {len(vals)}")
    return vals


def parse_state(text: str, check: bool = True) -> VirtualMorseFunction:
    """Read a state file.  With ``check`` the state must also pass ``validate``."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != 14:
        raise StateFormatError(min(len(lines), 14) + 1 if len(lines) < 14 else 15,
                               f"expected 14 lines, got {len(lines)}")
    r, neg = _ints(lines[0], 1, 2)
    matrix = [_ints(lines[1 + i], 2 + i, N) for i in range(N)]
    for ln in (10, 13):
        if lines[ln - 1].strip():
            raise StateFormatError(ln, "expected a blank line")
    odd = _ints(lines[10], 11, N)
    even = _ints(lines[11], 12, N)
    par = _ints(lines[13], 14, N)
    if r % 2 or not 0 <= r <= N:
        raise StateFormatError(1, f"real count {r} must be even and at most {N}")
    if not 0 <= neg <= r:
        raise StateFormatError(1, f"negative count {neg} outside [0, {r}]")
    for k, p in enumerate(par):
        if k < r and p not in (1, -1):
            raise StateFormatError(14, f"column {k + 1}: parity must be 1 or -1, got {p}")
        if k >= r and p != 0:
            raise StateFormatError(14, f"column {k + 1}: non-real column must have parity 0, got {p}")
    v = VirtualMorseFunction(matrix, even, tuple(par[:r]), neg)
    expect = derive_odd_string(v)
    for k in range(N):
        if odd[k] != expect[k]:
            raise StateFormatError(11, f"odd string column {k + 1}: {odd[k]} but the even string "
                                       f"and parities give {expect[k]}")
    if check:
        report = validate(v)
        if not report.ok:
            raise StateFormatError(2, "; ".join(report.errors))
    return v


def load_seed(name_or_path: str) -> VirtualMorseFunction:
    if name_or_path in names():
        return seed(name_or_path)
    return parse_state(Path(name_or_path).read_text())


# Output helpers

class Output:
    def __init__(self, path: str | None, structured: bool):
        self.structured = structured
        self._fh = open(path, "w") if path else sys.stdout

    def record(self, **fields) -> None:
        if self.structured:
            self._fh.write(json.dumps(fields, default=_jsonable) + "\n")

    def text(self, line: str = "") -> None:
        if not self.structured:
            self._fh.write(line + "\n")

    def close(self) -> None:
        if self._fh is not sys.stdout:
            self._fh.close()


def _jsonable(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, inv.Passport):
        return list(o.as_tuple())
    raise TypeError(type(o))


def _table(header: Sequence[str], rows: Sequence[Sequence], out: Output) -> None:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for n, row in enumerate(cells):
        out.text("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        if n == 0:
            out.text("  ".join("-" * w for w in widths))


ISOTOPY = {"XI1": {0: 1, 2: 3, 4: 4, 6: 5, 8: 8}, "XI2": {0: 0, 2: 1, 4: 3, 6: 4, 8: 8}}


# Subcommands

def cmd_validate(args, out: Output) -> int:
    v = load_seed(args.seed) if args.seed in names() else parse_state(Path(args.seed).read_text(), check=False)
    report = validate(v)
    out.record(valid=report.ok, errors=report.errors)
    out.text("valid" if report.ok else "invalid")
    for e in report.errors:
        out.text("  " + e)
    return 0 if report.ok else 1


def _kinds(args) -> list[str]:
    return [args.type] if args.type else list(TYPES)


def cmd_census(args, out: Output) -> int:
    status = 0
    rows = []
    for kind in _kinds(args):
        c = analyze(kind, args.threads).census()
        total = sum(c.values())
        out.record(type=kind, **{f"r{r}": n for r, n in c.items()}, total=total)
        rows.append([kind] + [c[r] for r in sorted(c)] + [total])
        if args.check and c != CENSUS[kind]:
            status = 1
    _table(["type", "0", "2", "4", "6", "8", "total"], rows, out)
    return status


def cmd_explore(args, out: Output) -> int:
    v = load_seed(args.seed) if args.seed else seed(DEFAULT_SEED[args.type or "XI1"])
    g = build_formal_graph(v, threads=args.threads)
    c = census(g)
    out.record(states=len(g), edges=len(g.edges), census=c)
    out.text(f"{len(g)} states, {len(g.edges)} surgery edges")
    _table(["real points", "states"], sorted(c.items()), out)
    return 0


def _component_rows(a: TypeAnalysis) -> list[list]:
    rows = []
    for c in a.components:
        p = a.passports[c.index]
        strict = inv.strict_class_count(c.card) if c.r == 8 else ""
        rows.append([a.kind, c.index, c.r, c.card, str(p), a.figures.get(c.index, ""),
                     "chiral" if a.chiral(c) else "achiral", strict])
    return rows


def cmd_components(args, out: Output) -> int:
    status = 0
    rows = []
    for kind in _kinds(args):
        a = analyze(kind, args.threads)
        for row in _component_rows(a):
            out.record(type=row[0], index=row[1], r=row[2], card=row[3],
                       passport=[int(t) for t in row[4].strip("()").split(",")],
                       figure=row[5] or None, chirality=row[6], strict=row[7] or None)
        rows += _component_rows(a)
        if args.check:
            for r, cards in CARDS[kind].items():
                if sorted(c.card for c in a.with_r(r)) != sorted(cards):
                    status = 1
    _table(["type", "#", "r", "card", "passport", "figure", "chirality", "strict"], rows, out)
    return status


def cmd_component(args, out: Output) -> int:
    v = load_seed(args.seed)
    comp = virtual_component(v, threads=args.threads)
    out.record(seed=args.seed, card=comp.card, r=comp.r)
    out.text(str(comp.card))
    if args.check and args.seed in TYPE_OF:
        kind = TYPE_OF[args.seed]
        return 0 if comp.card in CARDS[kind].get(comp.r, []) else 1
    return 0


PREDICATES: dict[str, Callable[[VirtualMorseFunction], bool]] = {
    "sparse": lambda v: real_real_nonzero(v) <= 5 and real_nonreal_nonzero(v) <= 5,
    "sparse-negative": sparse_and_negative,
}


def cmd_query(args, out: Output) -> int:
    g = component_graph(load_seed(args.seed), args.threads)
    hits = query(g, PREDICATES[args.predicate])
    out.record(seed=args.seed, card=len(g), matches=len(hits),
               neg_counts=sorted(st.neg_count for st, _ in hits))
    out.text(f"{len(hits)} of {len(g)} states satisfy {args.predicate}")
    for st, _ in hits:
        out.text(f"  neg={st.neg_count} parities={st.parity_word()}")
    return 0


def _pick(args) -> list[tuple[TypeAnalysis, Component]]:
    picked = []
    for kind in _kinds(args):
        a = analyze(kind, args.threads)
        for c in a.with_r(8):
            if args.figure and a.figures.get(c.index) != args.figure:
                continue
            picked.append((a, c))
    return picked


def _edge_list(d: inv.DGraph) -> str:
    return ", ".join(f"{a + 1}->{b + 1}:{w:+d}" for a, b, w in sorted(d.edges))


TEMPLATE_PAIRS = [("D5", "A3"), ("A3:eoe", "A5:oeoeo"), ("A4", "A4"), ("A6", "A2"), ("A5", "A3"),
                  ("A4", "D4"), ("A4", "D4+"), ("A2", "D6"), ("A2", "D6+"), ("D4", "D4"),
                  ("D4+", "D4"), ("D4+", "D4+"), ("A2", "E6")]


def cmd_dgraph(args, out: Output) -> int:
    for a, c in _pick(args):
        d = a.dgraph(c)
        partner = a.partner(c)
        splits = [f"{x}->{y}" for x, y in TEMPLATE_PAIRS
                  if inv.admits_bidecomposition(d, inv.template(x), inv.template(y))]
        out.record(type=a.kind, index=c.index, card=c.card, figure=a.figures.get(c.index),
                   colors=list(d.colors), edges=sorted(d.edges),
                   canonical=inv.canonical_dgraph(d).hex(), up_down_partner=partner.index,
                   bidecompositions=splits)
        out.text(f"{a.kind} component {c.index} (card {c.card}, {a.figures.get(c.index, '?')})")
        out.text("  colors:    " + "".join("o" if x > 0 else "e" for x in d.colors))
        out.text("  edges:     " + _edge_list(d))
        out.text("  canonical: " + inv.canonical_dgraph(d).hex())
        out.text(f"  up-down:   component {partner.index} ({a.figures.get(partner.index, '?')})")
        out.text("  splits:    " + (", ".join(splits) or "none"))
    return 0


def cmd_normalize(args, out: Output) -> int:
    for a, c in _pick(args):
        d = a.dgraph(c)
        idx = a.vertex_indices(c)
        nd = inv.normalize_dgraph(d, idx)
        out.record(type=a.kind, index=c.index, figure=a.figures.get(c.index), indices=list(idx),
                   edges=sorted(nd.edges), unchanged=nd == d)
        out.text(f"{a.kind} component {c.index} ({a.figures.get(c.index, '?')}), indices {''.join(map(str, idx))}")
        out.text("  normal edges: " + _edge_list(nd) + ("  (unchanged)" if nd == d else ""))
    return 0


def cmd_homology(args, out: Output) -> int:
    status = 0
    rows = []
    for a, c in _pick(args):
        h = inv.morse_complex(a.dgraph(c), a.vertex_indices(c)).homology()
        out.record(type=a.kind, index=c.index, figure=a.figures.get(c.index), homology=list(h))
        rows.append([a.kind, c.index, a.figures.get(c.index, ""), " ".join(map(str, h))])
        want = (0, 0, 0, 0) if a.kind == "XI1" else (0, 1, 1, 0)
        if args.check and h != want:
            status = 1
    _table(["type", "#", "figure", "dim H0..H3 over Z2"], rows, out)
    return status


def cmd_catalog(args, out: Output) -> int:
    status = 0
    rows = []
    for res in poly_lab.verify_catalog(names=args.name or None):
        out.record(name=res.entry.name, type=res.kind.value, passport=res.passport,
                   real_points=res.real_count, ok=res.ok, problems=res.problems)
        rows.append([res.entry.name, res.kind.value, res.passport or "degenerate", res.real_count,
                     "ok" if res.ok else "; ".join(res.problems)])
        if not res.ok:
            status = 1
    _table(["name", "type", "passport", "real", "status"], rows, out)
    return status


def cmd_poly(args, out: Output) -> int:
    params = dict(kv.split("=", 1) for kv in args.param)
    p = poly_lab.CubicPolynomial.parse(args.expression, **params)
    kind = poly_lab.classify_report(p)
    report = poly_lab.solve(p)
    out.record(polynomial=str(p), type=kind.kind.value, points=[
        dict(location=c.location, value=c.value, signature=c.signature,
             multiplicity=c.multiplicity, residual=c.residual) for c in report.points])
    out.text(f"f = {p}")
    out.text(f"type {kind.kind.value} ({kind.method}, margin {kind.margin:.3g})")
    rows = [[f"{c.location[0]:.10g}", f"{c.location[1]:.10g}", f"{c.location[2]:.10g}",
             f"{c.value:.10g}", "degenerate" if c.degenerate else c.morse_index, f"{c.residual:.1e}"]
            for c in report.points]
    _table(["x", "y", "z", "value", "index", "residual"], rows, out)
    if all(not c.degenerate for c in report.points):
        out.text(f"passport {poly_lab.passport_of(p)}")
    for w in report.warnings:
        out.text("warning: " + w)
    return 0


def cmd_report(args, out: Output) -> int:
    if args.check:
        verdicts = run_all()
        for v in verdicts:
            out.record(criterion=v.number, title=v.title, ok=v.ok, detail=v.detail)
            out.text(v.line())
        return 0 if all(v.ok for v in verdicts) else 1
    status = 0
    tables = [args.table] if args.table else [1, 2, 3]
    data = {kind: analyze(kind, args.threads) for kind in TYPES}
    if 1 in tables:
        out.text("Isotopy classes of Morse polynomials")
        rows = []
        for kind, a in data.items():
            iso = a.isotopy_classes()
            rows.append([kind] + [iso[r] for r in sorted(iso)] + [sum(iso.values())])
            out.record(table=1, type=kind, **{f"r{r}": n for r, n in iso.items()}, total=sum(iso.values()))
            if iso != ISOTOPY[kind]:
                status = 1
        _table(["real points", "0", "2", "4", "6", "8", "total"], rows, out)
        out.text()
    if 2 in tables:
        out.text("Virtual Morse functions")
        rows = []
        for kind, a in data.items():
            c = a.census()
            rows.append([kind] + [c[r] for r in sorted(c)] + [sum(c.values())])
            out.record(table=2, type=kind, **{f"r{r}": n for r, n in c.items()}, total=sum(c.values()))
            if c != CENSUS[kind]:
                status = 1
        _table(["real points", "0", "2", "4", "6", "8", "total"], rows, out)
        out.text()
    if 3 in tables:
        out.text("Virtual components")
        rows = []
        for kind, a in data.items():
            rows += _component_rows(a)
            strict = sum(inv.strict_class_count(c.card) for c in a.with_r(8))
            out.record(table=3, type=kind, strict_morse_classes=strict)
            if strict != STRICT[kind]:
                status = 1
        for row in rows:
            out.record(table=3, type=row[0], index=row[1], r=row[2], card=row[3], passport=row[4],
                       figure=row[5] or None, chirality=row[6])
        _table(["type", "#", "r", "card", "passport", "figure", "chirality", "strict"], rows, out)
        for kind, a in data.items():
            out.text(f"strictly Morse classes with eight real points, {kind}: "
                     f"{sum(inv.strict_class_count(c.card) for c in a.with_r(8))}")
    return status


COMMANDS = {
    "validate": cmd_validate, "explore": cmd_explore, "census": cmd_census,
    "components": cmd_components, "component": cmd_component, "query": cmd_query,
    "dgraph": cmd_dgraph, "normalize": cmd_normalize, "homology": cmd_homology,
    "catalog": cmd_catalog, "poly": cmd_poly, "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=TYPES)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--check", action="store_true", help="exit nonzero on any mismatch")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--json", action="store_true", help="line-delimited JSON records")

    p = argparse.ArgumentParser(prog="virtmorse", description="Virtual Morse functions of cubic polynomials")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common]).add_argument("--seed", required=True,
                                                              help="seed name or state file")
    sub.add_parser("explore", parents=[common]).add_argument("--seed")
    sub.add_parser("census", parents=[common])
    sub.add_parser("components", parents=[common])
    sub.add_parser("component", parents=[common]).add_argument("--seed", required=True)
    q = sub.add_parser("query", parents=[common])
    q.add_argument("--seed", required=True)
    q.add_argument("--predicate", choices=sorted(PREDICATES), default="sparse-negative")
    for name in ("dgraph", "normalize", "homology"):
        sub.add_parser(name, parents=[common]).add_argument("--figure", help="e.g. XI2-945 or XI2-945^")
    sub.add_parser("catalog", parents=[common]).add_argument("name", nargs="*")
    pp = sub.add_parser("poly", parents=[common])
    pp.add_argument("expression")
    pp.add_argument("--param", action="append", default=[], help="name=value, e.g. eps=1/10")
    sub.add_parser("report", parents=[common]).add_argument("--table", type=int, choices=(1, 2, 3))
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.out, args.json)
    try:
        return COMMANDS[args.command](args, out)
    except (StateFormatError, poly_lab.PolynomialError, inv.StructuralError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        out.close()


def main() -> None:
    sys.exit(run_cli())

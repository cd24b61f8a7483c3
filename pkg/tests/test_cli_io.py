import json

import pytest
from hypothesis import given, settings, strategies as st

from virtmorse.analysis import analyze
from virtmorse.cli_io import StateFormatError, emit_state, parse_state, run_cli
from virtmorse.lattice_core import normalize_orientations
from virtmorse.seeds import names, seed

SIX_POINT_PRINTOUT = """\
                    6  4
 -2  0  0  1  0  0  0 -1
  0 -2  0  1  0  1  1  0
  0  0 -2  1  1  0  1  0
  1  1  1 -2  0  0 -1  1
  0  0  1  0 -2  0  0  0
  0  1  0  0  0 -2  0  0
  0  1  1 -1  0  0 -2 -1
 -1  0  0  1  0  0 -1 -2

  1  1  1 -2  0  0  1 -1
  1  1  1  0 -2 -2 -1 -1

  1  1  1 -1 -1 -1  0  0
"""


def test_printout_layout():
    assert emit_state(seed("XI1_SIX")) == SIX_POINT_PRINTOUT


@pytest.mark.parametrize("name", names())
def test_seed_roundtrip(name):
    v = seed(name)
    assert parse_state(emit_state(v)) == v


_KEYS = sorted(analyze("XI2").graph.states)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(_KEYS) - 1))
def test_state_roundtrip(n):
    v = analyze("XI2").graph.states[_KEYS[n]]
    text = emit_state(v)
    assert parse_state(text) == v
    assert emit_state(parse_state(text)) == text


def _lines():
    return SIX_POINT_PRINTOUT.splitlines()


def test_corrupted_odd_row_names_the_column():
    lines = _lines()
    row = lines[10].split()
    row[4] = "2"
    lines[10] = "".join(f"{int(t):3d}" for t in row)
    with pytest.raises(StateFormatError) as err:
        parse_state("\n".join(lines))
    assert err.value.line == 11
    assert "column 5" in str(err.value)


def test_line_numbered_errors():
    lines = _lines()
    with pytest.raises(StateFormatError, match="line 13: expected 14 lines"):
        parse_state("\n".join(lines[:12]))
    bad = list(lines)
    bad[3] = bad[3] + "  0"
    with pytest.raises(StateFormatError, match="line 4: expected 8 entries"):
        parse_state("\n".join(bad))
    bad = list(lines)
    bad[9] = "  1"
    with pytest.raises(StateFormatError, match="line 10: expected a blank line"):
        parse_state("\n".join(bad))
    bad = list(lines)
    bad[13] = bad[13][:-3] + "  1"
    with pytest.raises(StateFormatError, match="line 14: column 8"):
        parse_state("\n".join(bad))
    bad = list(lines)
    bad[0] = "  5  4"
    with pytest.raises(StateFormatError, match="line 1"):
        parse_state("\n".join(bad))
    bad = list(lines)
    bad[2] = bad[2].replace("-2", " x", 1)
    with pytest.raises(StateFormatError, match="line 3: expected integers"):
        parse_state("\n".join(bad))


def test_inconsistent_matrix_is_reported_unless_unchecked():
    lines = _lines()
    lines[1] = "  2" + lines[1][3:]
    with pytest.raises(StateFormatError, match="diagonal"):
        parse_state("\n".join(lines))
    parse_state("\n".join(lines), check=False)


def test_cli_component(capsys):
    assert run_cli(["component", "--seed", "XI1_28", "--check"]) == 0
    assert capsys.readouterr().out.strip() == "28"


def test_cli_census_json(capsys):
    assert run_cli(["census", "--type", "XI2", "--json", "--check"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec == {"type": "XI2", "r0": 0, "r2": 255, "r4": 650, "r6": 1897, "r8": 6372, "total": 9174}


def test_cli_report_table_one(capsys):
    assert run_cli(["report", "--table", "1", "--json"]) == 0
    recs = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert [r["total"] for r in recs] == [21, 16]


def test_cli_poly(capsys):
    assert run_cli(["poly", "x^3 + y^3 + z^3 - eps*(x + y + z)", "--param", "eps=1"]) == 0
    out = capsys.readouterr().out
    assert "type XI1" in out and "passport (1, 3, 3, 1)" in out


def test_cli_validate_file(tmp_path, capsys):
    f = tmp_path / "six.txt"
    f.write_text(SIX_POINT_PRINTOUT)
    assert run_cli(["validate", "--seed", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "valid"
    f.write_text(SIX_POINT_PRINTOUT.replace(" -2  0  0  1  0  0  0 -1", "  2  0  0  1  0  0  0 -1"))
    assert run_cli(["validate", "--seed", str(f)]) == 1
    assert run_cli(["validate", "--seed", str(tmp_path / "missing.txt")]) == 2


def test_cli_dgraph_and_normalize(capsys, tmp_path):
    assert run_cli(["dgraph", "--figure", "XI2-945", "--type", "XI2"]) == 0
    assert "XI2-945" in capsys.readouterr().out
    out = tmp_path / "n.jsonl"
    assert run_cli(["normalize", "--figure", "XI2-945", "--type", "XI2", "--json", "--out", str(out)]) == 0
    assert out.read_text().strip()


def test_cli_query(capsys):
    assert run_cli(["query", "--seed", "XI1_630_A", "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["card"] == 630 and rec["matches"] == 6 and rec["neg_counts"] == [4] * 6


def test_cli_bad_polynomial(capsys):
    assert run_cli(["poly", "x^4"]) == 2
    assert "error" in capsys.readouterr().err

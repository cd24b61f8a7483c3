"""End-to-end criteria, one test each.  Run directly for a plain summary."""

import pytest

from virtmorse.acceptance import CRITERIA


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{n:02d}" for n in range(1, len(CRITERIA) + 1)])
def test_criterion(check, capsys):
    verdict = check()
    with capsys.disabled():
        print("\n" + verdict.line())
    assert verdict.ok, verdict.detail


if __name__ == "__main__":
    import sys

    lines = [c() for c in CRITERIA]
    for v in lines:
        print(v.line())
    sys.exit(0 if all(v.ok for v in lines) else 1)

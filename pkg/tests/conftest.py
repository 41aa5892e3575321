from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import ACCEPTANCE  # noqa: E402
from stsrank.designs import TripleSystem  # noqa: E402

FANO = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
AG23 = [
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (1, 5, 6), (2, 3, 7),
    (0, 5, 7), (1, 3, 8), (2, 4, 6),
]


@pytest.fixture
def fano():
    return TripleSystem.from_blocks(7, FANO)


@pytest.fixture
def ag23():
    return TripleSystem.from_blocks(9, AG23)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[k]
        ok = all(c[1] for c in checks)
        failed = [f"{name}: {detail}" for name, good, detail in checks if not good]
        line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({sum(c[1] for c in checks)}/{len(checks)} checks)"
        tr.write_line(line)
        for f in failed:
            tr.write_line(f"    failed {f}")

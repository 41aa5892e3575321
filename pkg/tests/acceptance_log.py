"""Results recorded by test_acceptance.py and printed by conftest, one line per criterion."""

from __future__ import annotations

ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def record(criterion: int, name: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.setdefault(criterion, []).append((name, bool(ok), detail))
    return ok

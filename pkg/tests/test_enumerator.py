from __future__ import annotations

import ast
from pathlib import Path

import pytest

from oracles import exact_covers
from stsrank import enumerator
from stsrank.designs import TripleSystem, validate_sts
from stsrank.enumerator import count_exact_cover, exact_cover_sts, iter_exact_cover
from stsrank.errors import ResourceError
from stsrank.fields import CodeSpec
from stsrank.geometry import weight3_design


def test_single_block():
    assert count_exact_cover(TripleSystem(3, ((0, 1, 2),))) == 1


@pytest.mark.parametrize("spec,count", [((2, 3, 1), 2), ((3, 2, 1), 12), ((2, 3, 2), 6), ((2, 4, 1), 128)])
def test_counts_match_reference_search(spec, count):
    D = weight3_design(CodeSpec(*spec))
    sols = exact_cover_sts(D)
    assert len(sols) == count
    assert all(validate_sts(S).is_sts for S in sols)
    assert {frozenset(S.blocks) for S in sols} == set(exact_covers(D.v, D.blocks))


def test_output_order():
    D = weight3_design(CodeSpec(2, 4, 1))
    idx = list(iter_exact_cover(D))
    assert idx == sorted(idx)
    assert all(list(t) == sorted(t) for t in idx)


def test_block_cap(monkeypatch):
    D = weight3_design(CodeSpec(2, 3, 1))
    with pytest.raises(ResourceError):
        count_exact_cover(D, cap=10)
    with pytest.raises(ResourceError):
        count_exact_cover(weight3_design(CodeSpec(2, 5, 1)))
    monkeypatch.setattr(enumerator, "BLOCK_CAP", 10)
    with pytest.raises(ResourceError):
        count_exact_cover(D)


def test_no_knowledge_of_code_structure():
    """The oracle may only import the design data model."""
    src = Path(enumerator.__file__).read_text()
    mods = set()
    for node in ast.walk(ast.parse(src)):
        if isinstance(node, ast.ImportFrom):
            mods.add(node.module)
        elif isinstance(node, ast.Import):
            mods.update(a.name for a in node.names)
    local = {m for m in mods if m and not m.startswith(("__future__", "typing", "itertools", "collections", "math"))}
    assert local <= {"designs", "errors"}

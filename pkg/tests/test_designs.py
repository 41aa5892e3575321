from __future__ import annotations

import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stsrank.components import enumerate_all_sts
from stsrank.designs import (
    TripleSystem,
    fano_plane,
    affine_plane_3,
    incidence_matrix,
    read_jsonl,
    sts_rank,
    validate_sts,
    write_jsonl,
)
from stsrank.errors import DomainError, ParameterError
from stsrank.fields import CodeSpec
from stsrank.geometry import weight3_design


def test_validate(fano):
    assert validate_sts(fano).is_sts
    broken = TripleSystem(7, fano.blocks[1:])
    cert = validate_sts(broken)
    assert not cert.is_sts and cert.failing_pair == (0, 1) and cert.coverage == 0
    assert not validate_sts(weight3_design(CodeSpec(2, 3, 1))).is_sts


def test_builtin_planes(fano, ag23):
    assert fano_plane() == fano
    assert affine_plane_3() == ag23


def test_incidence(fano, ag23):
    assert incidence_matrix(TripleSystem(3, ((0, 1, 2),)), 2).data.tolist() == [[1, 1, 1]]
    for D, p in ((fano, 2), (ag23, 3)):
        A = incidence_matrix(D, p).data
        assert (A.sum(axis=1) == 3).all()
        assert (A.sum(axis=0) == (D.v - 1) // 2).all()


def test_ranks(fano, ag23):
    assert sts_rank(fano, 2) == 4
    assert sts_rank(ag23, 3) == 6
    assert sts_rank(fano, 5) == 7
    with pytest.raises(DomainError):
        sts_rank(TripleSystem(7, fano.blocks[1:]), 2)


@pytest.mark.parametrize("v", [7, 9])
def test_full_rank_away_from_2_and_3(v):
    for S in enumerate_all_sts(v)[:50]:
        assert sts_rank(S, 5) == v


@pytest.mark.parametrize("v,p,floor", [(7, 2, 4), (9, 3, 6)])
def test_rank_lower_bound_on_all_small_systems(v, p, floor):
    for S in enumerate_all_sts(v):
        assert sts_rank(S, p) >= floor


def test_constructor_rejects_unsorted():
    with pytest.raises(ParameterError):
        TripleSystem(3, ((0, 2, 1),))
    with pytest.raises(ParameterError):
        TripleSystem(7, ((0, 1, 2), (0, 1, 2)))
    with pytest.raises(ParameterError):
        TripleSystem(3, ((0, 1, 3),))


def test_json_and_jsonl(fano, ag23):
    assert fano.to_json() == '{"v":7,"blocks":[[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]}'
    assert TripleSystem.from_json(ag23.to_json()) == ag23
    buf = io.StringIO()
    assert write_jsonl([fano, ag23], buf) == 2
    buf.seek(0)
    assert list(read_jsonl(buf)) == [fano, ag23]


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(9)))
def test_relabel_keeps_sts_and_rank(perm):
    S = affine_plane_3().relabel(perm)
    assert validate_sts(S).is_sts
    assert len(S.blocks) == 12
    assert sts_rank(S, 3) == 6

from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import parity_columns, rank_mod_p
from stsrank.designs import incidence_matrix
from stsrank.errors import DomainError, ParameterError, ResourceError
from stsrank import fields
from stsrank.fields import (
    CodeSpec,
    FieldMatrix,
    build_parity_check,
    is_codeword,
    matrix_rank,
    verify_dual_structure,
)


def test_identity_rank():
    assert matrix_rank(FieldMatrix(2, np.eye(3, dtype=int))) == 3


def test_fano_and_affine_plane_ranks(fano, ag23):
    assert matrix_rank(incidence_matrix(fano, 2)) == 4
    assert matrix_rank(incidence_matrix(ag23, 3)) == 6


def test_parity_check_examples():
    assert build_parity_check(CodeSpec(2, 3, 1)).data.tolist() == [[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1]]
    assert build_parity_check(CodeSpec(3, 2, 1)).data.tolist() == [[1] * 9, [0, 0, 0, 1, 1, 1, 2, 2, 2]]
    assert build_parity_check(CodeSpec(2, 3, 2)).data.tolist() == [[0, 0, 0, 1, 1, 1, 1]]


SPECS = [(p, n, t) for p, top in ((2, 7), (3, 5)) for n in range(2, top) for t in range(1, n)]


@pytest.mark.parametrize("p,n,t", SPECS)
def test_parity_check_matches_multiset_rule(p, n, t):
    H = build_parity_check(CodeSpec(p, n, t))
    assert [tuple(c) for c in H.data.T.tolist()] == parity_columns(p, n, t)


@pytest.mark.parametrize("p,n,t", [(p, n, t) for p, top in ((2, 11), (3, 8)) for n in range(2, top) for t in range(1, n)])
def test_parity_check_rank(p, n, t):
    spec = CodeSpec(p, n, t)
    if spec.v > 3000:
        pytest.skip("matrix too wide for a unit test")
    assert matrix_rank(build_parity_check(spec)) == n - t + (p == 3)


@pytest.mark.parametrize("bad", [(2, 3, 0), (2, 3, 3), (5, 3, 1), (3, 1, 1)])
def test_invalid_spec(bad):
    with pytest.raises(ParameterError):
        CodeSpec(*bad)


def test_is_codeword():
    H = build_parity_check(CodeSpec(2, 3, 1))
    assert is_codeword(H, [0] * 7)
    assert is_codeword(H, [1, 1, 1, 0, 0, 0, 0])
    # a unit vector is a codeword exactly when its column of H is zero
    for i in range(7):
        x = [0] * 7
        x[i] = 1
        assert is_codeword(H, x) == (i == 0)
    with pytest.raises(ParameterError):
        is_codeword(H, [0] * 6)


def test_dual_structure_examples(fano, ag23):
    r = verify_dual_structure(incidence_matrix(fano, 2))
    assert r.passed and r.m == 3 and r.histogram == {0: 1, 4: 7}
    r = verify_dual_structure(incidence_matrix(ag23, 3))
    assert r.passed and r.m == 3 and r.histogram == {0: 1, 6: 24, 9: 2}
    with pytest.raises(DomainError):
        verify_dual_structure(FieldMatrix(2, [[0]]))


def test_dual_cap(fano, monkeypatch):
    monkeypatch.setattr(fields, "DUAL_WORD_CAP", 4)
    with pytest.raises(ResourceError):
        verify_dual_structure(incidence_matrix(fano, 2))


def test_json_round_trip():
    H = build_parity_check(CodeSpec(3, 3, 1))
    text = H.to_json()
    assert set(json.loads(text)) == {"p", "rows", "cols", "data"}
    assert FieldMatrix.from_json(text) == H


def test_matrix_is_read_only():
    H = build_parity_check(CodeSpec(2, 3, 1))
    with pytest.raises(ValueError):
        H.data[0, 0] = 1


matrices = st.integers(1, 9).flatmap(
    lambda r: st.integers(1, 9).flatmap(
        lambda c: st.tuples(
            st.sampled_from([2, 3, 5]),
            st.lists(st.lists(st.integers(0, 4), min_size=c, max_size=c), min_size=r, max_size=r),
        )
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_matches_reference_and_is_permutation_invariant(pm, rnd):
    p, rows = pm
    rows = [[x % p for x in r] for r in rows]
    want = rank_mod_p(rows, p)
    assert matrix_rank(FieldMatrix(p, rows)) == want
    rnd.shuffle(rows)
    perm = list(range(len(rows[0])))
    rnd.shuffle(perm)
    assert matrix_rank(FieldMatrix(p, [[r[j] for j in perm] for r in rows])) == want

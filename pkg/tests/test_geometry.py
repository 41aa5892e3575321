from __future__ import annotations

import random

import pytest

from oracles import weight3_blocks
from stsrank.composer import RecipeSpace, compose
from stsrank.designs import TripleSystem, fano_plane
from stsrank.enumerator import exact_cover_sts
from stsrank.errors import ContainmentError, DomainError, ResourceError
from stsrank.fields import CodeSpec
from stsrank.geometry import (
    classify_block,
    column_partition,
    constructive_design,
    decompose_sts,
    geometry_of,
    inspect_json,
    verify_gdd,
    weight3_design,
)

BINARY = [(2, n, t) for n in range(2, 6) for t in range(1, n)]
TERNARY = [(3, n, t) for n in range(2, 4) for t in range(1, n)]


@pytest.mark.parametrize("spec,count", [((2, 3, 1), 11), ((3, 2, 1), 30), ((2, 4, 1), 63), ((2, 4, 2), 119)])
def test_weight3_block_counts(spec, count):
    D = weight3_design(CodeSpec(*spec))
    assert len(D.blocks) == count
    assert list(D.blocks) == weight3_blocks(*spec)


def test_weight3_cap():
    with pytest.raises(ResourceError):
        weight3_design(CodeSpec(2, 9, 1))


def test_partition_examples():
    p = column_partition(CodeSpec(2, 3, 1))
    assert p.zero_set == (0,) and p.groups == ((1, 2), (3, 4), (5, 6))
    p = column_partition(CodeSpec(3, 2, 1))
    assert p.zero_set == () and p.groups == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    p = column_partition(CodeSpec(2, 4, 2))
    assert len(p.zero_set) == 3 and [len(g) for g in p.groups] == [4, 4, 4]


@pytest.mark.parametrize("spec,points,lines", [((2, 3, 1), 3, 1), ((2, 5, 2), 7, 7), ((3, 3, 1), 9, 12), ((2, 5, 1), 15, 35)])
def test_geometry_sizes(spec, points, lines):
    geo = geometry_of(CodeSpec(*spec))
    assert (len(geo.points), len(geo.lines)) == (points, lines)
    assert list(geo.lines) == sorted(geo.lines)
    assert all(list(line) == sorted(line) for line in geo.lines)


def test_classify_examples():
    spec = CodeSpec(2, 3, 1)
    part, geo = column_partition(spec), geometry_of(spec)
    c = classify_block(part, geo, (1, 3, 5))
    assert c.tag == "transversal" and c.line == 0
    c = classify_block(part, geo, (0, 1, 2))
    assert c.tag == "mixed" and c.group == 0 and c.zero_point == 0
    with pytest.raises(DomainError):
        classify_block(part, geo, (0, 1, 3))
    spec = CodeSpec(3, 2, 1)
    c = classify_block(column_partition(spec), geometry_of(spec), (0, 1, 2))
    assert c.tag == "mixed" and c.group == 0 and c.zero_point is None


@pytest.mark.parametrize("spec", BINARY + TERNARY)
def test_gdd_and_constructive_families(spec):
    spec = CodeSpec(*spec)
    r = verify_gdd(spec)
    assert r.passed
    T = spec.T
    if spec.binary:
        assert r.lambda_cross_group == (T + 1 if spec.M > 1 else None)
        assert r.mixed_per_same_pair == T
        if T >= 3:
            assert r.interior_params == (T, 3, T - 2)
    else:
        assert (r.lambda_same_group, r.lambda_cross_group) == (T - 2, T)
    D = weight3_design(spec)
    assert constructive_design(spec) == D
    assert sum(r.class_census.values()) == len(D.blocks)
    part, geo = column_partition(spec), geometry_of(spec)
    per_line = {}
    for b in D.blocks:
        c = classify_block(part, geo, b)
        if c.tag == "transversal":
            per_line[c.line] = per_line.get(c.line, 0) + 1
    assert len(per_line) == len(geo.lines)
    assert all(k == spec.group_size**3 for k in per_line.values())


def test_gdd_report_values():
    r = verify_gdd(CodeSpec(3, 2, 1))
    assert (r.lambda_same_group, r.lambda_cross_group) == (1, 3)
    r = verify_gdd(CodeSpec(2, 4, 2))
    assert r.interior_params == (3, 3, 1) and r.mixed_per_same_pair == 3 and r.lambda_cross_group == 4
    r = verify_gdd(CodeSpec(2, 3, 1))
    assert r.interior_params is None and r.mixed_per_same_pair == 1 and r.lambda_cross_group == 2


def test_decompose_both_sts7():
    spec = CodeSpec(2, 3, 1)
    squares = RecipeSpace(spec).squares
    seen = set()
    for S in exact_cover_sts(weight3_design(spec)):
        r = decompose_sts(S, spec)
        assert r.interior.v == 1 and r.interior.blocks == ()
        assert all(f.vertex_count == 2 for f, _ in r.groups)
        assert r.lines[0] in squares
        seen.add(r.lines[0])
        assert compose(r, spec) == S
    assert len(seen) == 2


def test_decompose_rejects_foreign_system():
    spec = CodeSpec(2, 3, 1)
    D = set(weight3_design(spec).blocks)
    F = fano_plane().relabel([0, 1, 3, 2, 4, 5, 6])
    assert not set(F.blocks) <= D
    with pytest.raises(ContainmentError):
        decompose_sts(F, spec)


@pytest.mark.parametrize("spec", [(2, 3, 1), (2, 4, 1), (2, 3, 2), (2, 4, 2), (2, 5, 2), (3, 2, 1), (3, 3, 1)])
def test_round_trip(spec):
    spec = CodeSpec(*spec)
    space = RecipeSpace(spec)
    rng = random.Random(f"{spec.p}-{spec.n}-{spec.t}")
    for _ in range(100):
        r = space.random(rng)
        S = compose(r, spec)
        assert decompose_sts(S, spec) == r
        assert compose(decompose_sts(S, spec), spec) == S


def test_inspect_json_shape():
    import json

    obj = json.loads(inspect_json(CodeSpec(2, 3, 1)))
    assert obj["partition"]["zeroSet"] == [0]
    assert obj["geometry"]["lines"] == [[0, 1, 2]]

"""The weight-3 triple system D of C_{n,t}, its column groups and quotient geometry.

Points of D are column indices of H_{n,t}.  Binary: the T zero columns form
V_0 and the rest split into M groups of T+1 identical columns, one per point
of PG(n-1-t, 2).  Ternary: M groups of T identical columns, one per point of
AG(n-t, 3).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from .designs import TripleSystem, pair_coverage
from .errors import ContainmentError, DomainError, ResourceError, TheoremViolation
from .fields import CodeSpec, build_parity_check, digits
from .recipes import BinaryRecipe, OneFactorization, TernaryRecipe, TransversalDesign

WEIGHT3_V_CAP = 255


@dataclass(frozen=True)
class GroupPartition:
    zero_set: tuple[int, ...]
    groups: tuple[tuple[int, ...], ...]
    group_point: tuple[int, ...]  # group index -> geometry point index

    def group_of(self) -> dict[int, int]:
        return {x: i for i, g in enumerate(self.groups) for x in g}

    def to_dict(self) -> dict:
        return {
            "zeroSet": list(self.zero_set),
            "groups": [list(g) for g in self.groups],
            "groupPoint": list(self.group_point),
        }


@dataclass(frozen=True)
class Geometry:
    kind: str  # "PG" or "AG"
    d: int
    q: int
    points: tuple[tuple[int, ...], ...]
    lines: tuple[tuple[int, int, int], ...]

    def third_point(self, a: int, b: int) -> int:
        return _third_point_table(self)[a, b]

    def to_dict(self) -> dict:
        return {
            "kind": f"{self.kind}({self.d},{self.q})",
            "points": [list(p) for p in self.points],
            "lines": [list(l) for l in self.lines],
        }


@lru_cache(maxsize=None)
def _third_point_table(geo: Geometry) -> dict:
    table = {}
    for a, b, c in geo.lines:
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            table[x, y] = table[y, x] = z
    return table


@lru_cache(maxsize=None)
def geometry_of(spec: CodeSpec) -> Geometry:
    """PG(n-1-t, 2) (binary) or AG(n-t, 3) (ternary), points in lex order."""
    k = spec.n - spec.t
    if spec.binary:
        vals = range(1, 2**k)
        points = tuple(tuple(digits(x, 2, k)) for x in vals)
        lines = sorted(
            (a - 1, b - 1, (a ^ b) - 1) for a in vals for b in vals if a < b < (a ^ b)
        )
        return Geometry("PG", k - 1, 2, points, tuple(lines))
    points = tuple(tuple(digits(x, 3, k)) for x in range(3**k))
    index = {p: i for i, p in enumerate(points)}
    lines = set()
    for i, j in combinations(range(len(points)), 2):
        third = tuple((-a - b) % 3 for a, b in zip(points[i], points[j]))
        lines.add(tuple(sorted((i, j, index[third]))))
    return Geometry("AG", k, 3, points, tuple(sorted(lines)))


@lru_cache(maxsize=None)
def column_partition(spec: CodeSpec) -> GroupPartition:
    """Split of the column indices consistent with the lexicographic column order."""
    T, M = spec.T, spec.M
    if spec.binary:
        zero = tuple(range(T))
        groups = tuple(tuple(range(T + i * (T + 1), T + (i + 1) * (T + 1))) for i in range(M))
    else:
        zero = ()
        groups = tuple(tuple(range(i * T, (i + 1) * T)) for i in range(M))
    return GroupPartition(zero, groups, tuple(range(M)))


def _check_cap(spec: CodeSpec) -> None:
    if spec.v > WEIGHT3_V_CAP:
        raise ResourceError(f"v={spec.v} exceeds the weight-3 scan cap {WEIGHT3_V_CAP}")


@lru_cache(maxsize=None)
def weight3_design(spec: CodeSpec) -> TripleSystem:
    """Supports of all weight-3 words of C_{n,t} (ternary: words with all entries 1).

    Brute force: every 3-subset of columns is tested by its syndrome.
    """
    _check_cap(spec)
    H = build_parity_check(spec).data.astype(np.int16)
    triples = np.array(list(combinations(range(spec.v), 3)), dtype=np.int32)
    keep = []
    chunk = 1 << 18
    for s in range(0, len(triples), chunk):
        tr = triples[s : s + chunk]
        syn = (H[:, tr[:, 0]] + H[:, tr[:, 1]] + H[:, tr[:, 2]]) % spec.p
        keep.append(tr[~syn.any(axis=0)])
    blocks = np.concatenate(keep) if keep else np.zeros((0, 3), dtype=np.int32)
    return TripleSystem(spec.v, tuple(tuple(int(x) for x in b) for b in blocks))


def constructive_design(spec: CodeSpec) -> TripleSystem:
    """D assembled from the block families predicted by the block-classification lemma."""
    _check_cap(spec)
    part, geo = column_partition(spec), geometry_of(spec)
    blocks = []
    if spec.binary:
        blocks.extend(combinations(part.zero_set, 3))
        for g in part.groups:
            for x in part.zero_set:
                blocks.extend((x, y, z) for y, z in combinations(g, 2))
    else:
        for g in part.groups:
            blocks.extend(combinations(g, 3))
    for line in geo.lines:
        blocks.extend(product(*(part.groups[i] for i in line)))
    return TripleSystem.from_blocks(spec.v, blocks)


# ---------------------------------------------------------------- classification

@dataclass(frozen=True)
class BlockClass:
    """tag is "interior", "mixed" or "transversal".

    mixed: `group` is the group holding two (binary) or all three (ternary)
    points; `zero_point` is the V_0 point in the binary case, None otherwise.
    transversal: `line` is the index of the geometry line.
    """

    tag: str
    group: int | None = None
    zero_point: int | None = None
    line: int | None = None


def classify_block(part: GroupPartition, geo: Geometry, b) -> BlockClass:
    """Classify a block of D by how it meets V_0 and the groups."""
    gof = part.group_of()
    zero = set(part.zero_set)
    b = tuple(sorted(b))
    if len(set(b)) != 3:
        raise DomainError(f"{b} is not a 3-set")
    zs = [x for x in b if x in zero]
    gs = [gof[x] for x in b if x not in zero]
    if len(zs) == 3:
        return BlockClass("interior")
    if len(zs) == 1 and len(gs) == 2 and gs[0] == gs[1]:
        return BlockClass("mixed", group=gs[0], zero_point=zs[0])
    if not zs and len(set(gs)) == 1:
        if part.zero_set:
            raise DomainError(f"{b} lies inside one group; not a block of the binary D")
        return BlockClass("mixed", group=gs[0])
    if not zs and len(set(gs)) == 3:
        pts = tuple(sorted(part.group_point[g] for g in gs))
        try:
            return BlockClass("transversal", line=geo.lines.index(pts))
        except ValueError:
            pass
    raise DomainError(f"{b} is not a block of the weight-3 design")


# ---------------------------------------------------------------- GDD

@dataclass(frozen=True)
class GddReport:
    group_count: int
    group_size: int
    lambda_same_group: int | None
    lambda_cross_group: int | None
    zero_to_group: int | None          # binary only
    interior_params: tuple | None      # binary only: (T, 3, lambda)
    mixed_per_same_pair: int | None    # binary only
    block_count: int
    class_census: dict
    passed: bool


def _uniform(values) -> int | None:
    vals = set(values)
    return vals.pop() if len(vals) == 1 else None


def verify_gdd(spec: CodeSpec) -> GddReport:
    """Pair-coverage counts of D against the group divisible design theorem."""
    D = weight3_design(spec)
    part, geo = column_partition(spec), geometry_of(spec)
    gof = part.group_of()
    zero = set(part.zero_set)
    cov = pair_coverage(D)
    same, cross, zg, interior = [], [], [], []
    for (a, b), c in cov.items():
        if a in zero and b in zero:
            interior.append(c)
        elif a in zero or b in zero:
            zg.append(c)
        elif gof[a] == gof[b]:
            same.append(c)
        else:
            cross.append(c)
    census = Counter(classify_block(part, geo, b).tag for b in D.blocks)
    lam_same, lam_cross = _uniform(same), _uniform(cross)
    T = spec.T
    if spec.binary:
        # interior pairs: only interior blocks, T-2 of them
        lam_int = _uniform(interior) if interior else None
        int_blocks = [b for b in D.blocks if set(b) <= zero]
        mixed_same = _uniform(same)
        passed = (
            (T < 3 or lam_int == T - 2)
            and len(int_blocks) == comb(T, 3)
            and mixed_same == T
            and (not cross or lam_cross == T + 1)  # t = n-1 leaves a single group
            and (not zg or _uniform(zg) == T)
            and census["transversal"] == len(geo.lines) * (T + 1) ** 3
        )
        return GddReport(
            spec.M, T + 1, mixed_same, lam_cross, _uniform(zg) if zg else None,
            (T, 3, lam_int) if T >= 3 else None, mixed_same, len(D.blocks), dict(census), passed,
        )
    passed = (
        lam_same == T - 2
        and lam_cross == T
        and census["transversal"] == len(geo.lines) * T**3
    )
    return GddReport(spec.M, T, lam_same, lam_cross, None, None, None, len(D.blocks), dict(census), passed)


# ---------------------------------------------------------------- decomposition

def _latin_from_blocks(blocks, rows, cols, syms) -> TransversalDesign:
    ri = {x: i for i, x in enumerate(rows)}
    ci = {x: i for i, x in enumerate(cols)}
    si = {x: i for i, x in enumerate(syms)}
    g = len(rows)
    cells = [[None] * g for _ in range(g)]
    for b in blocks:
        r = next(x for x in b if x in ri)
        c = next(x for x in b if x in ci)
        s = next(x for x in b if x in si)
        if cells[ri[r]][ci[c]] is not None:
            raise TheoremViolation("two transversal blocks share a row/column pair")
        cells[ri[r]][ci[c]] = si[s]
    if any(x is None for row in cells for x in row):
        raise TheoremViolation("transversal blocks on a line do not form a TD")
    return TransversalDesign(tuple(tuple(row) for row in cells))


def _local_sts(blocks, members) -> TripleSystem:
    loc = {x: i for i, x in enumerate(members)}
    return TripleSystem.from_blocks(len(members), ((loc[a], loc[b], loc[c]) for a, b, c in blocks))


def decompose_sts(S: TripleSystem, spec: CodeSpec):
    """Split an STS contained in D into its recipe (inverse of `composer.compose`)."""
    from .designs import require_sts

    require_sts(S)
    D = weight3_design(spec)
    if S.v != spec.v:
        raise ContainmentError(f"STS has {S.v} points, code length is {spec.v}")
    dset = set(D.blocks)
    missing = [b for b in S.blocks if b not in dset]
    if missing:
        raise ContainmentError(f"block {missing[0]} is not a weight-3 word of {spec}")
    part, geo = column_partition(spec), geometry_of(spec)
    by_group: dict[int, list] = {i: [] for i in range(spec.M)}
    by_line: dict[int, list] = {j: [] for j in range(len(geo.lines))}
    interior = []
    for b in S.blocks:
        cls = classify_block(part, geo, b)
        if cls.tag == "interior":
            interior.append(b)
        elif cls.tag == "mixed":
            by_group[cls.group].append(b)
        else:
            by_line[cls.line].append(b)
    lines = tuple(
        _latin_from_blocks(by_line[j], *(part.groups[part.group_point.index(p)] for p in line))
        for j, line in enumerate(geo.lines)
    )
    if not spec.binary:
        return TernaryRecipe(tuple(_local_sts(by_group[i], g) for i, g in enumerate(part.groups)), lines)

    zero = part.zero_set
    zloc = {x: i for i, x in enumerate(zero)}
    groups = []
    for i, g in enumerate(part.groups):
        loc = {x: k for k, x in enumerate(g)}
        factor_of: dict[int, list] = {x: [] for x in range(len(zero))}
        for b in by_group[i]:
            x = next(p for p in b if p in zloc)
            y, z = sorted(loc[p] for p in b if p not in zloc)
            factor_of[zloc[x]].append((y, z))
        factors = {x: tuple(sorted(edges)) for x, edges in factor_of.items()}
        ordered = sorted(factors.values(), key=lambda f: next(e[1] for e in f if e[0] == 0))
        try:
            fact = OneFactorization(len(g), tuple(ordered))
        except Exception as exc:
            raise TheoremViolation(f"group {i} does not carry a 1-factorization: {exc}") from exc
        bij = tuple(ordered.index(factors[x]) for x in range(len(zero)))
        groups.append((fact, bij))
    return BinaryRecipe(_local_sts(interior, zero), tuple(groups), lines)


def inspect_json(spec: CodeSpec) -> str:
    return json.dumps(
        {
            "spec": {"p": spec.p, "n": spec.n, "t": spec.t, "v": spec.v, "T": spec.T, "M": spec.M},
            "partition": column_partition(spec).to_dict(),
            "geometry": geometry_of(spec).to_dict(),
        },
        separators=(",", ":"),
    )

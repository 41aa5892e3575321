"""Canonical forms and automorphism groups of small STS, and the mass formula.

canonical_form runs an individualization-refinement search.  Points are
coloured, the colouring is refined until stable, and then a point of the
first smallest non-singleton cell is individualized.  Every discrete leaf
gives a relabeling; the canonical form is the lexicographically least
relabeled block list over the leaves.  Refinement uses block adjacency and,
for each pair of points, the cycle type of its cycle graph.  Both are
isomorphism invariants, so the leaf set is relabeling-equivariant.
Automorphisms found at equivalent leaves prune the tree: orbit pruning under
the pointwise stabilizer of the current prefix, plus backjumping to the
common ancestor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .designs import TripleSystem, require_sts, sts_rank
from .errors import ContainmentError, ParameterError, ResourceError, TheoremViolation
from .fields import CodeSpec
from .geometry import column_partition, geometry_of, weight3_design

CANONICAL_V_CAP = 15
LONG_V_CAP = 27

Permutation = tuple[int, ...]


def _third_table(D: TripleSystem) -> list[list[int]]:
    third = [[-1] * D.v for _ in range(D.v)]
    for a, b, c in D.blocks:
        third[a][b] = third[b][a] = c
        third[a][c] = third[c][a] = b
        third[b][c] = third[c][b] = a
    return third


def _pair_types(D: TripleSystem, third) -> list[list[int]]:
    """Cycle type of the cycle graph of every pair, as small integers."""
    v = D.v
    raw = [[()] * v for _ in range(v)]
    for a in range(v):
        for b in range(a + 1, v):
            c = third[a][b]
            seen = {a, b, c}
            lengths = []
            for x in range(v):
                if x in seen:
                    continue
                n, y, use_a = 0, x, True
                while True:
                    seen.add(y)
                    n += 1
                    y = third[a][y] if use_a else third[b][y]
                    use_a = not use_a
                    if y == x:
                        break
                lengths.append(n)
            raw[a][b] = raw[b][a] = tuple(sorted(lengths))
    kinds = {t: i for i, t in enumerate(sorted({raw[a][b] for a in range(v) for b in range(v) if a != b}))}
    return [[kinds[raw[a][b]] if a != b else -1 for b in range(v)] for a in range(v)]


class _Search:
    def __init__(self, D: TripleSystem):
        self.D = D
        self.v = D.v
        third = _third_table(D)
        self.ptype = _pair_types(D, third)
        self.inc = [[] for _ in range(self.v)]
        for a, b, c in D.blocks:
            self.inc[a].append((b, c))
            self.inc[b].append((a, c))
            self.inc[c].append((a, b))
        self.first = None   # (labeling, certificate, prefix)
        self.best = None
        self.gens: list[Permutation] = []
        self.first_path: list[tuple[list[int], list[int]]] = []  # (prefix, cell) at each depth
        self.leaves = 0

    # ---- refinement
    def refine(self, colors: list[int]) -> list[int]:
        v, ptype, inc = self.v, self.ptype, self.inc
        ncells = len(set(colors))
        while True:
            sigs = []
            for p in range(v):
                cp = colors
                pair_part = sorted((cp[q], ptype[p][q]) for q in range(v) if q != p)
                block_part = sorted((min(cp[x], cp[y]), max(cp[x], cp[y])) for x, y in inc[p])
                sigs.append((cp[p], tuple(pair_part), tuple(block_part)))
            rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
            colors = [rank[s] for s in sigs]
            if len(rank) == ncells:
                return colors
            ncells = len(rank)

    @staticmethod
    def individualize(colors: list[int], x: int) -> list[int]:
        keys = [(c, 0 if p == x else 1) for p, c in enumerate(colors)]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        return [rank[k] for k in keys]

    def certificate(self, lab: list[int]):
        return tuple(sorted(tuple(sorted((lab[a], lab[b], lab[c]))) for a, b, c in self.D.blocks))

    # ---- orbits
    def _orbit_roots(self, prefix: Sequence[int]) -> list[int]:
        parent = list(range(self.v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in prefix):
                for x in range(self.v):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.v)]

    # ---- search
    def run(self):
        self._node(self.refine([0] * self.v), [])

    def _leaf(self, colors, prefix) -> int | None:
        self.leaves += 1
        cert = self.certificate(colors)
        if self.first is None:
            self.first = (colors, cert, list(prefix))
            self.best = self.first
            return None
        for ref in (self.first, self.best):
            if cert == ref[1]:
                inv = [0] * self.v
                for p, l in enumerate(ref[0]):
                    inv[l] = p
                g = tuple(inv[colors[p]] for p in range(self.v))
                if any(g[p] != p for p in range(self.v)):
                    self.gens.append(g)
                common = 0
                while common < min(len(prefix), len(ref[2])) and prefix[common] == ref[2][common]:
                    common += 1
                return common
        if cert < self.best[1]:
            self.best = (colors, cert, list(prefix))
        return None

    def _node(self, colors, prefix) -> int | None:
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        nonsingle = [(n, c) for c, n in sizes.items() if n > 1]
        if not nonsingle:
            return self._leaf(colors, prefix)
        _, target = min(nonsingle)
        cell = [p for p in range(self.v) if colors[p] == target]
        depth = len(prefix)
        on_first_path = self.first is None
        if on_first_path:
            self.first_path.append((list(prefix), cell))
        done_roots: set[int] = set()
        for x in cell:
            roots = self._orbit_roots(prefix)
            if roots[x] in {roots[y] for y in done_roots}:
                continue
            done_roots.add(x)
            jump = self._node(self.refine(self.individualize(colors, x)), prefix + [x])
            if jump is not None and jump < depth:
                return jump
        return None

    def group_order(self) -> int:
        order = 1
        for prefix, cell in self.first_path:
            x = self.first[2][len(prefix)]
            roots = self._orbit_roots(prefix)
            order *= sum(1 for y in range(self.v) if roots[y] == roots[x])
        return order


def _check_cap(D: TripleSystem, long: bool) -> None:
    cap = LONG_V_CAP if long else CANONICAL_V_CAP
    if D.v > cap:
        raise ResourceError(f"v={D.v} exceeds the canonical-form cap {cap}")


def _search(D: TripleSystem, long: bool = False) -> _Search:
    require_sts(D)
    _check_cap(D, long)
    s = _Search(D)
    s.run()
    return s


def canonical_form(D: TripleSystem, long: bool = False) -> TripleSystem:
    """Representative of the isomorphism class of an STS: equal iff isomorphic."""
    s = _search(D, long)
    return TripleSystem(D.v, s.best[1])


def canonical_labeling(D: TripleSystem, long: bool = False) -> Permutation:
    """A relabeling mapping D onto canonical_form(D)."""
    return tuple(_search(D, long).best[0])


@dataclass(frozen=True)
class AutomorphismGroup:
    v: int
    order: int
    generators: tuple[Permutation, ...]

    def elements(self) -> list[Permutation]:
        return group_elements(self.v, self.generators)


def automorphism_group(D: TripleSystem, long: bool = False) -> AutomorphismGroup:
    s = _search(D, long)
    return AutomorphismGroup(D.v, s.group_order(), tuple(s.gens))


def compose_perm(g: Sequence[int], h: Sequence[int]) -> Permutation:
    """(g * h)(x) = g(h(x))."""
    return tuple(g[x] for x in h)


def group_elements(v: int, gens: Iterable[Sequence[int]]) -> list[Permutation]:
    """All elements of the group generated by `gens`, by breadth-first closure."""
    gens = [tuple(g) for g in gens]
    ident = tuple(range(v))
    seen = {ident}
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            k = compose_perm(g, h)
            if k not in seen:
                seen.add(k)
                queue.append(k)
    return sorted(seen)


def preserves(g: Sequence[int], D: TripleSystem) -> bool:
    blocks = set(D.blocks)
    return all(tuple(sorted((g[a], g[b], g[c]))) in blocks for a, b, c in D.blocks)


# ---------------------------------------------------------------- code automorphisms

def code_aut_membership(g: Sequence[int], spec: CodeSpec) -> bool:
    """True iff g fixes V_0, permutes the groups and induces a collineation of the geometry."""
    if len(g) != spec.v or sorted(g) != list(range(spec.v)):
        raise ParameterError(f"need a permutation of degree {spec.v}")
    part, geo = column_partition(spec), geometry_of(spec)
    if {g[x] for x in part.zero_set} != set(part.zero_set):
        return False
    gof = part.group_of()
    point_map = {}
    for i, grp in enumerate(part.groups):
        images = set()
        for x in grp:
            if g[x] not in gof:
                return False
            images.add(gof[g[x]])
        if len(images) != 1:
            return False
        point_map[part.group_point[i]] = part.group_point[images.pop()]
    lines = set(geo.lines)
    return all(tuple(sorted(point_map[p] for p in line)) in lines for line in geo.lines)


def brute_force_stabilizer(D: TripleSystem, chunk: int = 1 << 15) -> list[Permutation]:
    """Every permutation of the points mapping the block set onto itself (all v! of them tried)."""
    v = D.v
    if v > 10:
        raise ResourceError("brute force over v! permutations is limited to v <= 10")
    blocks = np.array(D.blocks, dtype=np.int64).reshape(-1, 3)
    target = np.sort((1 << blocks).sum(axis=1))
    found = []
    it = permutations(range(v))
    while True:
        batch = [p for _, p in zip(range(chunk), it)]
        if not batch:
            break
        P = np.array(batch, dtype=np.int64)
        masks = (1 << P[:, blocks]).sum(axis=2)
        masks.sort(axis=1)
        ok = np.all(masks == target[None, :], axis=1)
        found.extend(tuple(int(x) for x in P[i]) for i in np.nonzero(ok)[0])
    return found


# ---------------------------------------------------------------- classes

@dataclass
class IsoClass:
    canonical: TripleSystem
    multiplicity: int
    aut_order: int
    stabilizer_order: int
    rank: int


@dataclass
class IsoClassReport:
    spec: CodeSpec
    classes: list[IsoClass] = field(default_factory=list)
    total_distinct: int = 0
    aut_code: int = 0

    @property
    def mass_sum(self) -> Fraction:
        return sum((Fraction(self.aut_code, c.stabilizer_order) for c in self.classes), Fraction(0))

    @property
    def mass_balanced(self) -> bool:
        return self.mass_sum == self.total_distinct

    def rank_histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.classes:
            out[c.rank] = out.get(c.rank, 0) + c.multiplicity
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "p": self.spec.p, "n": self.spec.n, "t": self.spec.t,
            "totalDistinct": str(self.total_distinct),
            "autC": str(self.aut_code),
            "massSum": str(self.mass_sum),
            "massBalanced": self.mass_balanced,
            "rankHistogram": {str(k): v for k, v in self.rank_histogram().items()},
            "classes": [
                {
                    "canonical": c.canonical.to_dict(),
                    "multiplicity": c.multiplicity,
                    "autOrder": str(c.aut_order),
                    "stabilizerOrder": str(c.stabilizer_order),
                    "rank": c.rank,
                }
                for c in self.classes
            ],
        }


def iso_classes(systems: Iterable[TripleSystem], spec: CodeSpec, long: bool = False) -> IsoClassReport:
    """Partition systems in the code by isomorphism and evaluate the mass formula.

    The stabilizer of a class representative in Aut C is found by filtering
    its full automorphism group through `code_aut_membership`.
    """
    from .counting import aut_code_order

    dset = set(weight3_design(spec).blocks)
    by_canon: dict[TripleSystem, list] = {}
    for S in systems:
        if S.v != spec.v or any(b not in dset for b in S.blocks):
            raise ContainmentError("system is not contained in the weight-3 design of the code")
        key = canonical_form(S, long)
        if key in by_canon:
            by_canon[key][1] += 1
        else:
            by_canon[key] = [S, 1]
    report = IsoClassReport(spec, aut_code=aut_code_order(spec))
    for key, (rep, mult) in by_canon.items():
        grp = automorphism_group(rep, long)
        elems = grp.elements()
        if len(elems) != grp.order:
            raise TheoremViolation("automorphism group order and closure size disagree")
        stab = sum(1 for g in elems if code_aut_membership(g, spec))
        report.classes.append(IsoClass(key, mult, grp.order, stab, sts_rank(rep, spec.p)))
        report.total_distinct += mult
    report.classes.sort(key=lambda c: (c.rank, c.canonical.blocks))
    return report

"""Build STS inside C_{n,t} from component choices, and walk all such choices.

A binary STS is assembled from an STS(T) on the zero columns, a
1-factorization of each group matched bijectively to the zero columns, and a
Latin square on every line of PG(n-1-t, 2).  A ternary STS takes an STS(T) on
every group and a Latin square on every line of AG(n-t, 3).  On a line with
groups A < B < C (by geometry point), cell (r, c) = s gives the block
{A[r], B[c], C[s]}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from math import prod
from typing import Iterator, Sequence

from .components import (
    enumerate_all_sts,
    enumerate_one_factorizations,
    enumerate_transversal_designs,
)
from .designs import TripleSystem
from .errors import ResourceError, StructureError
from .fields import CodeSpec
from .geometry import column_partition, geometry_of
from .recipes import BinaryRecipe, Recipe, TernaryRecipe

STREAM_CAP = 10**7


def _line_groups(spec: CodeSpec):
    part, geo = column_partition(spec), geometry_of(spec)
    at = {pt: part.groups[i] for i, pt in enumerate(part.group_point)}
    return [tuple(at[pt] for pt in line) for line in geo.lines]


def _transversal_blocks(recipe_lines, line_groups, out: list) -> None:
    for td, (A, B, C) in zip(recipe_lines, line_groups):
        for r, row in enumerate(td.cells):
            a = A[r]
            for c, s in enumerate(row):
                out.append((a, B[c], C[s]))


def compose(r: Recipe, spec: CodeSpec) -> TripleSystem:
    """The STS described by recipe r inside the weight-3 design of `spec`."""
    part = column_partition(spec)
    line_groups = _line_groups(spec)
    if len(r.lines) != len(line_groups):
        raise StructureError(f"recipe has {len(r.lines)} line designs, geometry has {len(line_groups)} lines")
    size = spec.group_size
    if any(td.g != size for td in r.lines):
        raise StructureError(f"line designs must have order {size}")
    if len(r.groups) != spec.M:
        raise StructureError(f"recipe has {len(r.groups)} group entries, code has {spec.M} groups")
    blocks: list = []
    if spec.binary:
        if not isinstance(r, BinaryRecipe):
            raise StructureError("binary code needs a BinaryRecipe")
        zero = part.zero_set
        if r.interior.v != spec.T:
            raise StructureError(f"interior system must have {spec.T} points")
        blocks.extend((zero[a], zero[b], zero[c]) for a, b, c in r.interior.blocks)
        for g, (fact, bij) in zip(part.groups, r.groups):
            if fact.vertex_count != size or sorted(bij) != list(range(spec.T)):
                raise StructureError("group entry must be a 1-factorization of K_{T+1} with a bijection")
            for x, k in enumerate(bij):
                z = zero[x]
                blocks.extend((z, g[a], g[b]) for a, b in fact.factors[k])
    else:
        if not isinstance(r, TernaryRecipe):
            raise StructureError("ternary code needs a TernaryRecipe")
        for g, sub in zip(part.groups, r.groups):
            if sub.v != spec.T:
                raise StructureError(f"group systems must have {spec.T} points")
            blocks.extend((g[a], g[b], g[c]) for a, b, c in sub.blocks)
    _transversal_blocks(r.lines, line_groups, blocks)
    blocks.sort()
    return TripleSystem(spec.v, tuple(blocks))


# ---------------------------------------------------------------- recipe space

class RecipeSpace:
    """The Cartesian product of component choices, in odometer order.

    Digits (most significant first): interior STS; for each group the
    factorization and then the bijection (permutations in lex order); for each
    line the Latin square.  Ternary: one STS per group, then the lines.
    """

    def __init__(self, spec: CodeSpec):
        self.spec = spec
        n_lines = len(geometry_of(spec).lines)
        self.squares = enumerate_transversal_designs(spec.group_size)
        if spec.binary:
            self.interiors = enumerate_all_sts(spec.T)
            self.factorizations = enumerate_one_factorizations(spec.T + 1)
            self.bijections = list(permutations(range(spec.T)))
            per_group = [len(self.factorizations), len(self.bijections)]
            self.radices = [len(self.interiors)] + per_group * spec.M + [len(self.squares)] * n_lines
        else:
            self.systems = enumerate_all_sts(spec.T)
            self.radices = [len(self.systems)] * spec.M + [len(self.squares)] * n_lines
        self.size = prod(self.radices)

    def __len__(self) -> int:
        # len() is limited to sys.maxsize; use .size for big spaces
        return self.size

    def recipe(self, digits_: Sequence[int]) -> Recipe:
        spec = self.spec
        it = iter(digits_)
        if spec.binary:
            interior = self.interiors[next(it)]
            groups = tuple(
                (self.factorizations[next(it)], self.bijections[next(it)]) for _ in range(spec.M)
            )
            return BinaryRecipe(interior, groups, tuple(self.squares[d] for d in it))
        groups = tuple(self.systems[next(it)] for _ in range(spec.M))
        return TernaryRecipe(groups, tuple(self.squares[d] for d in it))

    def digits_at(self, index: int) -> list[int]:
        out = []
        for r in reversed(self.radices):
            index, d = divmod(index, r)
            out.append(d)
        if index:
            raise IndexError("recipe index out of range")
        return out[::-1]

    def __getitem__(self, index: int) -> Recipe:
        return self.recipe(self.digits_at(index))

    def random(self, rng: random.Random) -> Recipe:
        return self.recipe([rng.randrange(r) for r in self.radices])

    def __iter__(self) -> Iterator[Recipe]:
        for d in product(*(range(r) for r in self.radices)):
            yield self.recipe(d)


def iter_compositions(spec: CodeSpec, start: int = 0) -> Iterator[TripleSystem]:
    """compose(r) for every recipe r, from odometer position `start` on."""
    space = RecipeSpace(spec)
    total = space.size
    if total > STREAM_CAP:
        raise ResourceError(f"{total} recipes exceed the stream cap {STREAM_CAP}; use count mode")
    if start >= total:
        return
    if start == 0:
        odometer = product(*(range(r) for r in space.radices))
    else:
        odometer = _product_from(space.radices, space.digits_at(start))
    for d in odometer:
        yield compose(space.recipe(d), spec)


def _product_from(radices, first):
    d = list(first)
    while True:
        yield tuple(d)
        i = len(d) - 1
        while i >= 0:
            d[i] += 1
            if d[i] < radices[i]:
                break
            d[i] = 0
            i -= 1
        if i < 0:
            return


@dataclass
class EnumerationResult:
    count: int
    systems: Iterator[TripleSystem] | None = None


def enumerate_compositions(spec: CodeSpec, mode: str = "count") -> EnumerationResult:
    """mode="count": the product formula; mode="stream": count plus a lazy stream of all systems."""
    from .counting import formula_distinct

    if mode == "count":
        return EnumerationResult(formula_distinct(spec))
    if mode == "stream":
        space = RecipeSpace(spec)
        if space.size > STREAM_CAP:
            raise ResourceError(f"{space.size} recipes exceed the stream cap {STREAM_CAP}; use count mode")
        return EnumerationResult(space.size, iter_compositions(spec))
    raise ValueError(f"unknown mode {mode!r}")

"""Component objects and the composition data ("recipes") for STS inside C_{n,t}.

Kept apart from `composer` and `geometry` because both build and take
recipes apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .designs import TripleSystem
from .errors import ParameterError

Edge = tuple[int, int]


@dataclass(frozen=True)
class OneFactorization:
    """Factors of K_{2k}, ordered by the partner of vertex 0 (factor i holds edge (0, i+1)).

    Each factor is a sorted tuple of sorted edges.
    """

    vertex_count: int
    factors: tuple[tuple[Edge, ...], ...]

    def __post_init__(self):
        m = self.vertex_count
        if m < 2 or m % 2:
            raise ParameterError("a 1-factorization needs an even vertex count >= 2")
        if len(self.factors) != m - 1:
            raise ParameterError(f"K_{m} needs {m - 1} factors")
        seen = set()
        for i, f in enumerate(self.factors):
            if len(f) != m // 2 or sorted({x for e in f for x in e}) != list(range(m)):
                raise ParameterError(f"factor {i} is not a perfect matching")
            if (0, i + 1) not in f:
                raise ParameterError("factors must be ordered by the partner of vertex 0")
            for e in f:
                if e[0] >= e[1] or e in seen:
                    raise ParameterError(f"edge {e} repeated or unsorted")
                seen.add(e)


@dataclass(frozen=True)
class TransversalDesign:
    """TD[3;g] on three labelled groups, stored as a Latin square: block (r, c, cells[r][c])."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = len(self.cells)
        full = set(range(g))
        for row in self.cells:
            if len(row) != g or set(row) != full:
                raise ParameterError("rows of a Latin square must be permutations")
        for c in range(g):
            if {row[c] for row in self.cells} != full:
                raise ParameterError("columns of a Latin square must be permutations")

    @property
    def g(self) -> int:
        return len(self.cells)

    def triples(self):
        for r, row in enumerate(self.cells):
            for c, s in enumerate(row):
                yield r, c, s


@dataclass(frozen=True)
class BinaryRecipe:
    """interior: STS(T) on V_0 (local labels 0..T-1).
    groups[i] = (1-factorization of K_{T+1} on G_i, bijection) where bijection[x] is the
    index of the factor matched to the x-th zero column.
    lines[j]: the Latin square on the j-th line (rows/cols/symbols = its groups in increasing order).
    """

    interior: TripleSystem
    groups: tuple[tuple[OneFactorization, tuple[int, ...]], ...]
    lines: tuple[TransversalDesign, ...]


@dataclass(frozen=True)
class TernaryRecipe:
    """groups[i]: STS(T) on G_i in local labels; lines[j]: Latin square on the j-th line."""

    groups: tuple[TripleSystem, ...]
    lines: tuple[TransversalDesign, ...]


Recipe = Union[BinaryRecipe, TernaryRecipe]

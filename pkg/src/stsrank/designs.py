"""Triple systems: data model, STS check, incidence matrices, p-rank."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, TextIO

import numpy as np

from .errors import DomainError, ParameterError
from .fields import FieldMatrix, matrix_rank

Block = tuple[int, int, int]


@dataclass(frozen=True)
class TripleSystem:
    """Points 0..v-1 and a lexicographically sorted, duplicate-free tuple of blocks."""

    v: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        if self.v < 0:
            raise ParameterError("v must be nonnegative")
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        prev = None
        for b in blocks:
            if len(b) != 3 or not (0 <= b[0] < b[1] < b[2] < self.v):
                raise ParameterError(f"block {b} is not an increasing 3-subset of 0..{self.v - 1}")
            if prev is not None and b <= prev:
                raise ParameterError("blocks must be sorted and duplicate-free")
            prev = b

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Iterable[int]]) -> "TripleSystem":
        """Normalizing constructor: sorts each block and the block list."""
        return cls(v, tuple(sorted(set(tuple(sorted(b)) for b in blocks))))

    def relabel(self, perm) -> "TripleSystem":
        """Image under the point map i -> perm[i]."""
        return TripleSystem.from_blocks(self.v, ((perm[a], perm[b], perm[c]) for a, b, c in self.blocks))

    def __len__(self):
        return len(self.blocks)

    def to_dict(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "TripleSystem":
        return cls(int(obj["v"]), tuple(tuple(b) for b in obj["blocks"]))

    @classmethod
    def from_json(cls, text: str) -> "TripleSystem":
        return cls.from_dict(json.loads(text))


def write_jsonl(systems: Iterable[TripleSystem], fh: TextIO) -> int:
    n = 0
    for s in systems:
        fh.write(s.to_json())
        fh.write("\n")
        n += 1
    return n


def read_jsonl(fh: TextIO) -> Iterator[TripleSystem]:
    for line in fh:
        line = line.strip()
        if line:
            yield TripleSystem.from_json(line)


@dataclass(frozen=True)
class StsCertificate:
    is_sts: bool
    failing_pair: tuple[int, int] | None = None
    coverage: int | None = None


def pair_coverage(D: TripleSystem) -> dict[tuple[int, int], int]:
    cov = {pair: 0 for pair in combinations(range(D.v), 2)}
    for a, b, c in D.blocks:
        cov[a, b] += 1
        cov[a, c] += 1
        cov[b, c] += 1
    return cov


def validate_sts(D: TripleSystem) -> StsCertificate:
    """Check that every pair of points lies in exactly one block.

    On failure the first offending pair (in lex order) and its coverage are
    reported.
    """
    for pair, count in pair_coverage(D).items():
        if count != 1:
            return StsCertificate(False, pair, count)
    return StsCertificate(True)


def require_sts(D: TripleSystem) -> None:
    cert = validate_sts(D)
    if not cert.is_sts:
        raise DomainError(f"not a Steiner triple system: pair {cert.failing_pair} covered {cert.coverage} times")


def incidence_matrix(D: TripleSystem, p: int) -> FieldMatrix:
    """Block-by-point incidence matrix over GF(p)."""
    a = np.zeros((max(1, len(D.blocks)), max(1, D.v)), dtype=np.int64)
    for i, b in enumerate(D.blocks):
        a[i, list(b)] = 1
    return FieldMatrix(p, a)


def sts_rank(D: TripleSystem, p: int) -> int:
    """p-rank of a Steiner triple system."""
    require_sts(D)
    return matrix_rank(incidence_matrix(D, p))


def fano_plane() -> TripleSystem:
    """PG(2,2) on points 0..6 (nonzero vectors of GF(2)^3 minus one)."""
    return TripleSystem.from_blocks(
        7, ((a - 1, b - 1, (a ^ b) - 1) for a in range(1, 8) for b in range(a + 1, 8) if (a ^ b) > b)
    )


def affine_plane_3() -> TripleSystem:
    """AG(2,3) point-line design on points 3x+y."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    blocks = set()
    for i, j in combinations(range(9), 2):
        (a, b), (c, d) = pts[i], pts[j]
        k = pts.index(((-a - c) % 3, (-b - d) % 3))
        blocks.add(tuple(sorted((i, j, k))))
    return TripleSystem.from_blocks(9, blocks)

"""Exact-cover oracle: every STS whose blocks are drawn from a given triple system.

Columns of the cover problem are the point pairs, rows are the candidate
blocks.  The search knows nothing about codes, groups or geometries.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .designs import TripleSystem
from .errors import ResourceError

BLOCK_CAP = 200


def _setup(D: TripleSystem, cap: int | None):
    cap = BLOCK_CAP if cap is None else cap
    if len(D.blocks) > cap:
        raise ResourceError(f"{len(D.blocks)} candidate blocks exceed the oracle cap {cap}")
    v = D.v
    pid = {pair: i for i, pair in enumerate(combinations(range(v), 2))}
    masks = []
    for a, b, c in D.blocks:
        masks.append((1 << pid[a, b]) | (1 << pid[a, c]) | (1 << pid[b, c]))
    rows_of = [[] for _ in pid]
    for i, m in enumerate(masks):
        x = m
        while x:
            low = x & -x
            rows_of[low.bit_length() - 1].append((i, m))
            x ^= low
    return len(pid), masks, rows_of


def iter_exact_cover(D: TripleSystem, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the block-index sets (sorted tuples) of all STS inside D.

    Branches on the uncovered pair with the fewest compatible blocks; the
    emission order is deterministic but not sorted.
    """
    npairs, masks, rows_of = _setup(D, cap)
    full = (1 << npairs) - 1
    if npairs == 0:
        yield ()
        return
    chosen: list[int] = []

    def rec(covered: int):
        if covered == full:
            yield tuple(sorted(chosen))
            return
        best = None
        best_n = 1 << 30
        free = full & ~covered
        while free:
            low = free & -free
            cands = [r for r in rows_of[low.bit_length() - 1] if not r[1] & covered]
            if len(cands) < best_n:
                best, best_n = cands, len(cands)
                if best_n <= 1:
                    break
            free ^= low
        for i, m in best:
            chosen.append(i)
            yield from rec(covered | m)
            chosen.pop()

    yield from rec(0)


def count_exact_cover(D: TripleSystem, cap: int | None = None) -> int:
    return sum(1 for _ in iter_exact_cover(D, cap))


def exact_cover_sts(D: TripleSystem, cap: int | None = None) -> list[TripleSystem]:
    """All STS(v) inside D, ordered by the lex order of their chosen block-index sets."""
    sols = sorted(iter_exact_cover(D, cap))
    return [TripleSystem(D.v, tuple(D.blocks[i] for i in sol)) for sol in sols]

"""Backtracking enumerators for the three building blocks of an STS inside C_{n,t}.

N1(v): labelled STS(v); N2(2k): 1-factorizations of K_{2k}; N3(g): Latin
squares of order g (= TD[3;g] on three labelled groups).  Orders beyond the
enumeration caps are served from the packaged constants table, and only when
that table carries a paper-sourced value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Iterator

from .designs import TripleSystem
from .errors import ParameterError, UnknownConstantError
from .recipes import OneFactorization, TransversalDesign

STS_ORDERS = (1, 3, 7, 9)
FACTORIZATION_ORDERS = (2, 4, 6, 8)
LATIN_MAX = 5


# ---------------------------------------------------------------- STS(v)

def iter_all_sts(v: int) -> Iterator[TripleSystem]:
    """All labelled STS(v) in lex order of their block lists."""
    if v not in STS_ORDERS:
        raise UnknownConstantError([("N1", v)])
    if v == 1:
        yield TripleSystem(1, ())
        return
    # third[a][b] is the third point of the block on {a, b}, or -1
    third = [[-1] * v for _ in range(v)]
    blocks: list[tuple[int, int, int]] = []
    pairs = list(combinations(range(v), 2))

    def rec(k: int):
        while k < len(pairs) and third[pairs[k][0]][pairs[k][1]] >= 0:
            k += 1
        if k == len(pairs):
            yield TripleSystem(v, tuple(sorted(blocks)))
            return
        a, b = pairs[k]
        for c in range(b + 1, v):
            if third[a][c] < 0 and third[b][c] < 0:
                third[a][b] = third[b][a] = c
                third[a][c] = third[c][a] = b
                third[b][c] = third[c][b] = a
                blocks.append((a, b, c))
                yield from rec(k + 1)
                blocks.pop()
                third[a][b] = third[b][a] = -1
                third[a][c] = third[c][a] = -1
                third[b][c] = third[c][b] = -1

    # the pair order makes each system appear once; sort for a lex stream
    yield from sorted(rec(0), key=lambda s: s.blocks)


def enumerate_all_sts(v: int) -> list[TripleSystem]:
    return _all_sts(v)


@lru_cache(maxsize=None)
def _all_sts(v: int) -> list[TripleSystem]:
    return list(iter_all_sts(v))


# ---------------------------------------------------------------- 1-factorizations

def iter_one_factorizations(m: int) -> Iterator[OneFactorization]:
    """All 1-factorizations of K_m; factor i is the one containing edge (0, i+1)."""
    if m not in FACTORIZATION_ORDERS:
        raise UnknownConstantError([("N2", m)])
    used = [[False] * m for _ in range(m)]
    factors: list[tuple] = []

    def matchings(i: int, matched: list, edges: list):
        # extend a partial perfect matching of factor i by pairing the lowest free vertex
        try:
            a = matched.index(False)
        except ValueError:
            yield tuple(sorted(edges))
            return
        matched[a] = True
        for b in range(a + 1, m):
            if not matched[b] and not used[a][b]:
                matched[b] = True
                edges.append((a, b))
                yield from matchings(i, matched, edges)
                edges.pop()
                matched[b] = False
        matched[a] = False

    def rec(i: int):
        if i == m - 1:
            yield OneFactorization(m, tuple(factors))
            return
        matched = [False] * m
        matched[0] = matched[i + 1] = True
        for f in matchings(i, matched, [(0, i + 1)]):
            for a, b in f:
                used[a][b] = True
            factors.append(f)
            yield from rec(i + 1)
            factors.pop()
            for a, b in f:
                used[a][b] = False

    yield from rec(0)


@lru_cache(maxsize=None)
def _all_factorizations(m: int) -> list[OneFactorization]:
    return list(iter_one_factorizations(m))


def enumerate_one_factorizations(m: int) -> list[OneFactorization]:
    return _all_factorizations(m)


# ---------------------------------------------------------------- Latin squares

def iter_latin_squares(g: int) -> Iterator[TransversalDesign]:
    """All Latin squares of order g in row-major lex order (cell-by-cell backtracking with bitmasks)."""
    if not 1 <= g <= LATIN_MAX:
        raise UnknownConstantError([("N3", g)])
    full = (1 << g) - 1
    row_used = [0] * g
    col_used = [0] * g
    cells = [[0] * g for _ in range(g)]

    def rec(k: int):
        if k == g * g:
            yield TransversalDesign(tuple(tuple(r) for r in cells))
            return
        r, c = divmod(k, g)
        free = full & ~(row_used[r] | col_used[c])
        s = 0
        while free:
            if free & 1:
                bit = 1 << s
                row_used[r] |= bit
                col_used[c] |= bit
                cells[r][c] = s
                yield from rec(k + 1)
                row_used[r] &= ~bit
                col_used[c] &= ~bit
            free >>= 1
            s += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _all_latin(g: int) -> list[TransversalDesign]:
    return list(iter_latin_squares(g))


def enumerate_transversal_designs(g: int) -> list[TransversalDesign]:
    return _all_latin(g)


# ---------------------------------------------------------------- catalog

@dataclass(frozen=True)
class CountConstant:
    kind: str
    order: int
    value: int
    provenance: str  # "enumerated" or "paper-constant"
    source: str = ""


@lru_cache(maxsize=None)
def _table() -> dict:
    text = resources.files("stsrank").joinpath("data/constants.json").read_text()
    obj = json.loads(text)
    return {(c["kind"], c["order"]): c for c in obj["constants"]}


def tabulated_constants() -> list[CountConstant]:
    return [
        CountConstant(c["kind"], c["order"], int(c["value"]), c["provenance"], c["source"])
        for c in _table().values()
    ]


@lru_cache(maxsize=None)
def _enumerated_count(kind: str, order: int) -> int | None:
    if kind == "N1" and order in STS_ORDERS:
        return len(_all_sts(order))
    if kind == "N2" and order in FACTORIZATION_ORDERS:
        return len(_all_factorizations(order))
    if kind == "N3" and 1 <= order <= LATIN_MAX:
        return len(_all_latin(order))
    return None


def catalog_count(kind: str, order: int) -> CountConstant:
    """N1/N2/N3 value: enumerated when within caps, else the paper constant, else UnknownConstantError."""
    kind = kind.upper()
    if kind not in ("N1", "N2", "N3"):
        raise ParameterError(f"unknown component kind {kind!r}")
    n = _enumerated_count(kind, order)
    entry = _table().get((kind, order))
    if n is not None:
        return CountConstant(kind, order, n, "enumerated", entry["source"] if entry else "")
    if entry is not None and entry["provenance"] == "paper-constant":
        return CountConstant(kind, order, int(entry["value"]), "paper-constant", entry["source"])
    raise UnknownConstantError([(kind, order)])

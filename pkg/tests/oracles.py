"""Slow, obviously-correct reference implementations used to freeze derived values.

Nothing here imports the package; every routine works on plain lists.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Gaussian elimination on a list-of-lists copy."""
    m = [[x % p for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def parity_columns(p: int, n: int, t: int) -> list[tuple[int, ...]]:
    """Columns of H_{n,t} from the multiset rule, sorted as tuples (row 0 most significant)."""
    k = n - t
    cols = []
    if p == 2:
        cols += [(0,) * k] * (2**t - 1)
        for vec in product(range(2), repeat=k):
            if any(vec):
                cols += [vec] * 2**t
    else:
        for vec in product(range(3), repeat=k):
            cols += [(1,) + vec] * 3**t
    return sorted(cols)


def weight3_blocks(p: int, n: int, t: int) -> list[tuple[int, int, int]]:
    cols = parity_columns(p, n, t)
    out = []
    for b in combinations(range(len(cols)), 3):
        if all(sum(cols[i][r] for i in b) % p == 0 for r in range(len(cols[0]))):
            out.append(b)
    return out


def is_sts(v: int, blocks) -> bool:
    seen = set()
    for b in blocks:
        for pair in combinations(sorted(b), 2):
            if pair in seen:
                return False
            seen.add(pair)
    return len(seen) == comb(v, 2)


def exact_covers(v: int, blocks) -> list[frozenset]:
    """All STS inside `blocks`, by plain recursion on the least uncovered pair."""
    by_pair: dict = {}
    for b in blocks:
        for pair in combinations(b, 2):
            by_pair.setdefault(pair, []).append(b)
    pairs = list(combinations(range(v), 2))
    out = []

    def rec(chosen, covered):
        pair = next((q for q in pairs if q not in covered), None)
        if pair is None:
            out.append(frozenset(chosen))
            return
        for b in by_pair.get(pair, []):
            bp = list(combinations(b, 2))
            if not any(q in covered for q in bp):
                rec(chosen + [b], covered | set(bp))

    rec([], frozenset())
    return out


def distinct_relabelings(v: int, blocks) -> int:
    return len({frozenset(tuple(sorted(g[x] for x in b)) for b in blocks) for g in permutations(range(v))})


def latin_square_count(g: int) -> int:
    rows = list(permutations(range(g)))
    n = 0
    for sq in product(rows, repeat=g):
        if all(len({r[c] for r in sq}) == g for c in range(g)):
            n += 1
    return n


def one_factorization_count(m: int) -> int:
    """Unordered 1-factorizations of K_m (factor sets, not sequences)."""
    def matchings(vs):
        if not vs:
            yield ()
            return
        a = vs[0]
        for b in vs[1:]:
            rest = [x for x in vs if x not in (a, b)]
            for mm in matchings(rest):
                yield ((a, b),) + mm

    ms = [frozenset(x) for x in matchings(list(range(m)))]
    by_edge0 = {}
    for mt in ms:
        partner = next(b for a, b in mt if a == 0)
        by_edge0.setdefault(partner, []).append(mt)
    count = 0

    def rec(k, used):
        nonlocal count
        if k == m:
            count += 1
            return
        for mt in by_edge0[k]:
            if not (mt & used):
                rec(k + 1, used | mt)

    rec(1, frozenset())
    return count


def automorphisms_brute(v: int, blocks) -> list[tuple[int, ...]]:
    bs = {tuple(sorted(b)) for b in blocks}
    return [g for g in permutations(range(v)) if all(tuple(sorted(g[x] for x in b)) in bs for b in bs)]

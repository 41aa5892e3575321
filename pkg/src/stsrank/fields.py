"""Linear algebra over small prime fields and the parity-check matrices H_{n,t}.

GF(2) elimination works on rows packed into Python ints; other primes use
numpy arrays with modular row operations.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, ParameterError, ResourceError

# p ** corank must stay below this for exhaustive dual enumeration
DUAL_WORD_CAP = 2**24


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


class FieldMatrix:
    """Immutable matrix over GF(p)."""

    __slots__ = ("p", "data")

    def __init__(self, p: int, data):
        if not _is_prime(p):
            raise ParameterError(f"p={p} is not prime")
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ParameterError("matrix must be 2-D with at least one row and column")
        if arr.min() < 0 or arr.max() >= p:
            raise ParameterError(f"entries must lie in 0..{p - 1}")
        arr = arr.astype(np.uint8 if p < 256 else np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.p, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"FieldMatrix(p={self.p}, shape={self.data.shape})"

    def to_json(self) -> str:
        return json.dumps(
            {"p": self.p, "rows": self.rows, "cols": self.cols, "data": self.data.tolist()},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "FieldMatrix":
        obj = json.loads(text)
        m = cls(obj["p"], obj["data"])
        if (m.rows, m.cols) != (obj["rows"], obj["cols"]):
            raise ParameterError("declared shape does not match data")
        return m


@dataclass(frozen=True)
class CodeSpec:
    """The code C_{n,t} over GF(p), p in {2, 3}, with 1 <= t <= n-1."""

    p: int
    n: int
    t: int

    def __post_init__(self):
        if self.p not in (2, 3):
            raise ParameterError(f"field must be 2 or 3, got {self.p}")
        if not (isinstance(self.n, int) and isinstance(self.t, int)):
            raise ParameterError("n and t must be integers")
        if not 1 <= self.t <= self.n - 1:
            raise ParameterError(f"need 1 <= t <= n-1, got n={self.n}, t={self.t}")

    @property
    def binary(self) -> bool:
        return self.p == 2

    @property
    def v(self) -> int:
        return 2**self.n - 1 if self.binary else 3**self.n

    @property
    def T(self) -> int:
        return 2**self.t - 1 if self.binary else 3**self.t

    @property
    def M(self) -> int:
        return 2 ** (self.n - self.t) - 1 if self.binary else 3 ** (self.n - self.t)

    @property
    def group_size(self) -> int:
        return self.T + 1 if self.binary else self.T

    @property
    def max_rank(self) -> int:
        """Largest p-rank of an STS contained in the code: v - 1 - n + t (binary: v - n + t)."""
        if self.binary:
            return 2**self.n - 1 - self.n + self.t
        return 3**self.n - 1 - self.n + self.t

    def __str__(self):
        return f"C({self.n},{self.t}) over GF({self.p})"


# ---------------------------------------------------------------- rank

def _pack_rows(a: np.ndarray) -> list[int]:
    weights = 1 << np.arange(a.shape[1], dtype=object)
    return [int(np.dot(row.astype(object), weights)) for row in a]


def _rank_gf2(rows: list[int]) -> int:
    # xor basis keyed by leading bit
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (matrix, pivot columns)."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def matrix_rank(M: FieldMatrix) -> int:
    """Rank of M over GF(M.p) by exact elimination."""
    if M.p == 2:
        return _rank_gf2(_pack_rows(M.data))
    return len(rref(M.data, M.p)[1])


def nullspace_basis(M: FieldMatrix) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0} over GF(p)."""
    p = M.p
    R, pivots = rref(M.data, p)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = (-R[r, f]) % p
    return basis


# ---------------------------------------------------------------- H_{n,t}

def column_values(spec: CodeSpec) -> list[int]:
    """Integer value of each column of the lower (non-all-ones) part of H_{n,t}.

    Row 0 is the most significant digit; the list is sorted ascending.
    """
    if spec.binary:
        vals = [0] * spec.T
        for x in range(1, 2 ** (spec.n - spec.t)):
            vals.extend([x] * (spec.T + 1))
        return vals
    vals = []
    for x in range(3 ** (spec.n - spec.t)):
        vals.extend([x] * spec.T)
    return vals


def digits(x: int, base: int, width: int) -> list[int]:
    """Base-`base` digits of x, most significant first."""
    out = [0] * width
    for i in range(width - 1, -1, -1):
        x, out[i] = divmod(x, base)
    return out


def build_parity_check(spec: CodeSpec) -> FieldMatrix:
    """The parity-check matrix H_{n,t} with lexicographically sorted columns."""
    k = spec.n - spec.t
    cols = [digits(x, spec.p, k) for x in column_values(spec)]
    lower = np.array(cols, dtype=np.int64).T.reshape(k, spec.v)
    if spec.binary:
        return FieldMatrix(2, lower)
    return FieldMatrix(3, np.vstack([np.ones((1, spec.v), dtype=np.int64), lower]))


def is_codeword(H: FieldMatrix, x: Sequence[int]) -> bool:
    """True iff H x = 0 over GF(p)."""
    vec = np.asarray(x, dtype=np.int64)
    if vec.shape != (H.cols,):
        raise ParameterError(f"vector length {vec.size} does not match {H.cols} columns")
    return not np.any((H.data.astype(np.int64) @ vec) % H.p)


# ---------------------------------------------------------------- dual structure

@dataclass(frozen=True)
class DualStructureReport:
    p: int
    v: int
    m: int
    w: int | None
    histogram: dict[int, int]
    passed: bool


def _dual_weights(basis: np.ndarray, p: int) -> Counter:
    """Weight histogram of the span of `basis` (all p**m combinations, zero included)."""
    m, v = basis.shape
    hist: Counter = Counter()
    if m == 0:
        hist[0] = 1
        return hist
    total = p**m
    chunk = 1 << 15
    powers = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % p
        words = (coeffs @ basis) % p
        w = np.count_nonzero(words, axis=1)
        hist.update(dict(zip(*np.unique(w, return_counts=True))))
        if p == 3:
            # words off the line spanned by j must have equally many 1s and 2s
            ones = np.count_nonzero(words == 1, axis=1)
            off = w != v
            if np.any(ones[off] * 2 != w[off]):
                hist["unbalanced"] += int(np.count_nonzero(ones[off] * 2 != w[off]))
    return Counter({int(k) if not isinstance(k, str) else k: int(c) for k, c in hist.items()})


def verify_dual_structure(A: FieldMatrix) -> DualStructureReport:
    """Enumerate the dual of the code spanned by an STS incidence matrix.

    Binary: every nonzero dual word must have weight (v+1)/2.  Ternary: apart
    from the multiples of the all-one vector, every dual word has weight 2v/3
    with as many 1s as 2s.
    """
    from .designs import TripleSystem, validate_sts

    p = A.p
    if p not in (2, 3):
        raise ParameterError("dual structure is only defined over GF(2) and GF(3)")
    data = A.data
    if not np.all((data == 0) | (data == 1)) or not np.all(data.sum(axis=1) == 3):
        raise DomainError("not an incidence matrix of a triple system")
    v = A.cols
    blocks = sorted(tuple(int(i) for i in np.nonzero(row)[0]) for row in data)
    if len(set(blocks)) != len(blocks) or not validate_sts(TripleSystem(v, tuple(blocks))).is_sts:
        raise DomainError("matrix is not the incidence matrix of a Steiner triple system")
    m = v - matrix_rank(A)
    if p**m > DUAL_WORD_CAP:
        raise ResourceError(f"dual has {p}^{m} words, above the cap {DUAL_WORD_CAP}")
    hist = _dual_weights(nullspace_basis(A), p)
    unbalanced = hist.pop("unbalanced", 0)
    nonzero = {w: c for w, c in hist.items() if w}
    if p == 2:
        passed = set(nonzero) <= {(v + 1) // 2} and (v + 1) % 2 == 0
        w = (v + 1) // 2**m if (v + 1) % 2**m == 0 else None
    else:
        passed = (
            not unbalanced
            and nonzero.get(v, 0) == 2
            and set(nonzero) <= {v, 2 * v // 3}
            and v % 3 == 0
        )
        w = v // 3 ** (m - 1) if m >= 1 and v % 3 ** (m - 1) == 0 else None
    return DualStructureReport(p, v, m, w, dict(sorted(hist.items())), passed)

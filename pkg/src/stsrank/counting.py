"""Exact counts and isomorphism-class bounds for STS inside C_{n,t}.

Everything is int or fractions.Fraction; nothing here touches floating point.

Notation: s = number of distinct STS in the code, |Aut C| the order of the
wreath-product group acting on it, U an upper bound on |Aut S| for every STS S
in the code.  The class count x then satisfies s/|Aut C| <= x <= U*s/|Aut C|.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial, floor, prod

from .components import catalog_count
from .errors import ParameterError, TheoremViolation, UnknownConstantError
from .fields import CodeSpec


def group_order(kind: str, dim: int, q: int) -> int:
    """|PGL(d, 2)| = |GL(d, 2)| or |AGL(d, 3)|."""
    kind = kind.upper()
    if dim < 1:
        raise ParameterError("dimension must be >= 1")
    gl = prod(q**dim - q**i for i in range(dim))
    if kind == "PGL" and q == 2:
        return gl
    if kind == "AGL" and q == 3:
        return q**dim * gl
    raise ParameterError(f"{kind}({dim},{q}) is outside the supported PGL(d,2)/AGL(d,3)")


def _geometry_group(spec: CodeSpec) -> int:
    k = spec.n - spec.t
    return group_order("PGL", k, 2) if spec.binary else group_order("AGL", k, 3)


def aut_code_order(spec: CodeSpec) -> int:
    """T! ((T+1)!)^M |PGL(n-t,2)|  or  (T!)^M |AGL(n-t,3)|."""
    T, M = spec.T, spec.M
    if spec.binary:
        return factorial(T) * factorial(T + 1) ** M * _geometry_group(spec)
    return factorial(T) ** M * _geometry_group(spec)


def aut_sts_upper(spec: CodeSpec, sharp: bool = False) -> int:
    """Upper bound U on |Aut S| for any STS S inside the code.

    Default: T! ((T+1)!)^(n-t+1) |PGL(n-t,2)| resp. (T!)^(n-t+1) |AGL(n-t,3)|.
    sharp=True (binary only): ((T+1)!)^(n-t) |PGL(n-t,2)|.  A group-fixing
    automorphism is pinned down by its action on the n-t groups over a basis
    of PG(n-1-t,2), and its action on V_0 follows from that on any one group.
    """
    T, k = spec.T, spec.n - spec.t
    if spec.binary:
        if sharp:
            return factorial(T + 1) ** k * _geometry_group(spec)
        return factorial(T) * factorial(T + 1) ** (k + 1) * _geometry_group(spec)
    return factorial(T) ** (k + 1) * _geometry_group(spec)


def formula_distinct(spec: CodeSpec) -> int:
    """s(n,t) = N1(T) (N2(T+1) T!)^M N3(T+1)^(M(M-1)/6)  or  s'(n,t) = N1(T)^M N3(T)^(M(M-1)/6)."""
    T, M = spec.T, spec.M
    lines = M * (M - 1) // 6
    needed = [("N1", T), ("N3", spec.group_size)]
    if spec.binary:
        needed.insert(1, ("N2", T + 1))
    values, missing = {}, []
    for kind, order in needed:
        try:
            values[kind] = catalog_count(kind, order).value
        except UnknownConstantError:
            missing.append((kind, order))
    if missing:
        raise UnknownConstantError(missing)
    if spec.binary:
        return values["N1"] * (values["N2"] * factorial(T)) ** M * values["N3"] ** lines
    return values["N1"] ** M * values["N3"] ** lines


def _exact_div(a: int, b: int, what: str) -> int:
    q, r = divmod(a, b)
    if r:
        raise TheoremViolation(f"{what}: {a} is not divisible by {b}")
    return q


def formula_classical(p: int, n: int) -> int:
    """Copies of the classical system inside the t=1 code: 2^(2^(n-1)-n) or 6^(3^(n-1)) / (2 3^n)."""
    if n < 2:
        raise ParameterError("need n >= 2")
    if p == 2:
        return 2 ** (2 ** (n - 1) - n)
    if p == 3:
        return _exact_div(6 ** (3 ** (n - 1)), 2 * 3**n, "cl'(n,1)")
    raise ParameterError("field must be 2 or 3")


def classical_stabilizer_order(p: int, n: int) -> int:
    """Order of the subgroup of Aut C (t=1) fixing one classical copy.

    Ternary: collineations of AG(n,3) fixing a parallel class, 2|AGL(n,3)|/(3^n - 1).
    Binary: collineations of PG(n-1,2) fixing a point, |PGL(n,2)|/(2^n - 1).
    """
    if p == 3:
        return _exact_div(2 * group_order("AGL", n, 3), 3**n - 1, "|S|")
    if p == 2:
        return _exact_div(group_order("PGL", n, 2), 2**n - 1, "|S|")
    raise ParameterError("field must be 2 or 3")


def formula_exact_rank_t1(p: int, n: int) -> int:
    """Distinct STS in the t=1 code whose rank is exactly one above the minimum."""
    return formula_distinct(CodeSpec(p, n, 1)) - formula_classical(p, n)


# ---------------------------------------------------------------- bounds

@dataclass(frozen=True)
class BoundsReport:
    spec: CodeSpec
    s: int
    aut_code: int
    u: int
    U: int
    lower_rational: Fraction
    upper_rational: Fraction

    @property
    def lower_int(self) -> int:
        return ceil(self.lower_rational)

    @property
    def upper_int(self) -> int:
        return floor(self.upper_rational)

    def to_dict(self) -> dict:
        def frac(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {
            "p": self.spec.p, "n": self.spec.n, "t": self.spec.t,
            "s": str(self.s), "autC": str(self.aut_code), "u": str(self.u), "U": str(self.U),
            "lowerRational": frac(self.lower_rational), "upperRational": frac(self.upper_rational),
            "lowerInt": str(self.lower_int), "upperInt": str(self.upper_int),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def iso_bounds(spec: CodeSpec, sharp: bool = False) -> BoundsReport:
    """Bounds on the number of isomorphism classes of STS with rank at most spec.max_rank.

    The upper bound is evaluated in its cancelled form s / ((T+1)!)^(M-n+t-1)
    (binary) or s / (T!)^(M-n+t-1) (ternary) and cross-checked against U s/|Aut C|.
    """
    s = formula_distinct(spec)
    aut = aut_code_order(spec)
    U = aut_sts_upper(spec, sharp)
    lower = Fraction(s, aut)
    upper = Fraction(U * s, aut)
    if not sharp:
        base = factorial(spec.T + 1) if spec.binary else factorial(spec.T)
        e = spec.M - spec.n + spec.t - 1
        displayed = Fraction(s, base**e) if e >= 0 else Fraction(s * base**-e)
        if displayed != upper:
            raise TheoremViolation("cancelled upper bound disagrees with U*s/|Aut C|")
        upper = displayed
    return BoundsReport(spec, s, aut, 1, U, lower, upper)


def iso_bounds_exact_rank(spec: CodeSpec, refined: bool = False, sharp: bool = False) -> int:
    """Lower bound on isomorphism classes of STS with rank exactly spec.max_rank.

    t >= 2: ceil(lower(t) - upper(t-1)), floored at 0.
    t = 1: ceil(lower(1) - 1) (the classical system is the only class below);
    refined: ceil((s - cl) / |Aut C|), using the exact count of classical copies.
    `sharp` selects the tighter |Aut S| bound for the subtracted upper bound.
    """
    if refined and spec.t != 1:
        raise ParameterError("the refined bound only exists for t = 1")
    lo = iso_bounds(spec)
    if spec.t == 1:
        if refined:
            cl = formula_classical(spec.p, spec.n)
            return max(0, ceil(Fraction(lo.s - cl, lo.aut_code)))
        return max(0, ceil(lo.lower_rational - 1))
    below = iso_bounds(CodeSpec(spec.p, spec.n, spec.t - 1), sharp=sharp)
    return max(0, ceil(lo.lower_rational - below.upper_rational))

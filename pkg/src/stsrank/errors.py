"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes, so every module raises one of them
rather than a bare ValueError/RuntimeError.
"""

from __future__ import annotations


class StsRankError(Exception):
    """Base class for all library errors."""

    kind = "error"


class ParameterError(StsRankError, ValueError):
    """Invalid (p, n, t) or other out-of-range argument."""

    kind = "parameter"


class DomainError(StsRankError, ValueError):
    """Input is well-formed but not of the required kind (e.g. not an STS)."""

    kind = "domain"


class ResourceError(StsRankError):
    """A desk-scale cap would be exceeded."""

    kind = "resource"


class ContainmentError(DomainError):
    """A triple system is not contained in the weight-3 design of the code."""

    kind = "containment"


class StructureError(DomainError):
    """A recipe does not fit the partition/geometry of its code."""

    kind = "structure"


class TheoremViolation(StsRankError):
    """A structure theorem failed on valid input. Never expected to fire."""

    kind = "theorem-violation"


class UnknownConstantError(StsRankError):
    """A component count N_1/N_2/N_3 is neither enumerable nor tabulated."""

    kind = "unknown-constant"

    def __init__(self, missing):
        self.missing = tuple(missing)
        names = ", ".join(f"{k}({o})" for k, o in self.missing)
        super().__init__(f"unknown constant(s): {names}")

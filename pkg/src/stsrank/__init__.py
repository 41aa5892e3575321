"""Steiner triple systems inside binary and ternary Hamming-type codes."""

from __future__ import annotations

from .components import catalog_count
from .composer import RecipeSpace, compose, enumerate_compositions, iter_compositions
from .counting import (
    aut_code_order,
    formula_classical,
    formula_distinct,
    formula_exact_rank_t1,
    iso_bounds,
    iso_bounds_exact_rank,
)
from .designs import TripleSystem, incidence_matrix, sts_rank, validate_sts
from .enumerator import count_exact_cover, exact_cover_sts
from .errors import (
    ContainmentError,
    DomainError,
    ParameterError,
    ResourceError,
    StructureError,
    StsRankError,
    TheoremViolation,
    UnknownConstantError,
)
from .fields import CodeSpec, FieldMatrix, build_parity_check, matrix_rank, verify_dual_structure
from .geometry import column_partition, decompose_sts, geometry_of, verify_gdd, weight3_design
from .iso import automorphism_group, canonical_form, iso_classes

__version__ = "0.1.0"

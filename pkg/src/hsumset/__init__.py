"""Restricted h-fold sumsets of finite integer sets.

Exact computation (bitmap DP plus an independent brute-force oracle),
an executable catalog of closed-form cardinality formulas for interval-
minus-deletions families, and exhaustive verification of the extremal
classifications those formulas feed.
"""

from .engine import (
    layer_table,
    restricted_cardinality,
    restricted_sumset,
    restricted_sumset_naive,
    unrestricted_sumset,
    SumLayers,
)
from .errors import CoverageError, DomainError, ResourceLimitError
from .intset import (
    AffineMap,
    FiniteIntSet,
    NormalForm,
    apply_affine,
    gcd_of_differences,
    make_set,
    normalize,
    reflect,
)
from . import families as _families  # noqa: F401  (populates the catalog registry)
from .bounds import (
    check_direct_bounds,
    check_two_fold_bounds,
    extremal_two_fold_family,
)
from .catalog import (
    crosscheck,
    enumerate_params,
    instantiate,
    predicted_cardinality,
)
from .classifier import (
    EnumerationSpec,
    classify_by_cardinality,
    enumerate_normalized_sets,
    expected_sets,
    verify_classification,
    verify_containment,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "CoverageError",
    "DomainError",
    "EnumerationSpec",
    "FiniteIntSet",
    "NormalForm",
    "ResourceLimitError",
    "SumLayers",
    "apply_affine",
    "check_direct_bounds",
    "check_two_fold_bounds",
    "classify_by_cardinality",
    "crosscheck",
    "enumerate_normalized_sets",
    "enumerate_params",
    "expected_sets",
    "extremal_two_fold_family",
    "gcd_of_differences",
    "instantiate",
    "layer_table",
    "make_set",
    "normalize",
    "predicted_cardinality",
    "reflect",
    "restricted_cardinality",
    "restricted_sumset",
    "restricted_sumset_naive",
    "unrestricted_sumset",
    "verify_classification",
    "verify_containment",
]

"""Exact cohomology of homogeneous bundles on Grassmannians, Koszul
hypercohomology bookkeeping, and a verification harness for the
deformation counts of cubic hypersurfaces and their schemes of lines.

All arithmetic is exact integer arithmetic.
"""

from ._version import __version__
from .bbw import (
    Bundle,
    CohomologyProfile,
    Grassmannian,
    bbw_cohomology,
    bundle_rank,
    canonical_bundle,
    dual_bundle,
    rho,
)
from .checks import CheckResult, Report, UsageError, list_checks, run_checks
from .classes import (
    DecompositionComparison,
    EquivariantClass,
    det_shift,
    equal_mod_det,
    named_class,
    serre_check,
    verify_claimed_decompositions,
    wedge_class,
)
from .gl2 import (
    NotDecomposableError,
    character_product,
    decompose_gl2_character,
    gl2_character,
    gl2_tensor,
    sym_power_gl2,
    wedge_power_gl2,
)
from .koszul import (
    AXIOMS,
    IDEAL_SHEAF,
    RESTRICTION,
    Axiom,
    DeformationNumbers,
    DegreeVerdict,
    DimValue,
    KoszulPage,
    UnderdeterminedError,
    analyze,
    build_page,
    deformation_numbers,
    euler_consistency,
    ideal_sheaf_cohomology,
    restricted_cohomology,
)
from .weights import (
    count_ssyt,
    dominant_sort,
    is_dominant,
    littlewood_richardson,
    partitions_of,
    weyl_dimension,
)

__all__ = [
    "__version__",
    "AXIOMS",
    "Axiom",
    "Bundle",
    "CheckResult",
    "CohomologyProfile",
    "DecompositionComparison",
    "DeformationNumbers",
    "DegreeVerdict",
    "DimValue",
    "EquivariantClass",
    "Grassmannian",
    "IDEAL_SHEAF",
    "KoszulPage",
    "NotDecomposableError",
    "RESTRICTION",
    "Report",
    "UnderdeterminedError",
    "UsageError",
    "analyze",
    "bbw_cohomology",
    "build_page",
    "bundle_rank",
    "canonical_bundle",
    "character_product",
    "count_ssyt",
    "decompose_gl2_character",
    "deformation_numbers",
    "det_shift",
    "dominant_sort",
    "dual_bundle",
    "equal_mod_det",
    "euler_consistency",
    "gl2_character",
    "gl2_tensor",
    "ideal_sheaf_cohomology",
    "is_dominant",
    "list_checks",
    "littlewood_richardson",
    "named_class",
    "partitions_of",
    "restricted_cohomology",
    "rho",
    "run_checks",
    "serre_check",
    "sym_power_gl2",
    "verify_claimed_decompositions",
    "wedge_class",
    "wedge_power_gl2",
    "weyl_dimension",
]

"""Exact toolkit for critical sets of Latin squares."""

from .bounds import (
    BoundsRow,
    ChainCheck,
    bm_upper,
    bounds_table,
    check_chain,
    crossover,
    exact_counting_lower,
    log_factorial,
    log_Ln_lower,
    nelder_bound,
    stirling_check,
    svr_bound,
    theorem1_lower,
    theorem1_lower_proof_form,
)
from .constructions import (
    all_but_first_row_col,
    back_circulant,
    classic_5x5,
    nelder_triangle,
    random_latin_square,
)
from .core import (
    MAX_ORDER,
    GridError,
    LatinSquare,
    PartialLatinSquare,
    Triple,
    parse_partial,
    relabel,
    remove_entry,
    serialize,
    with_entry,
)
from .criticality import (
    KNOWN_LCS,
    KNOWN_LCS_LOWER_BOUNDS,
    CriticalityReport,
    LargestCritical,
    LcsRecord,
    RemovalCheck,
    largest_critical_in,
    lcs_exhaustive,
    minimize_uc,
    verify_critical,
)
from .enumeration import EnumerationResult, count_all, iter_reduced
from .solver import (
    CONTRADICTION,
    FIXED_POINT,
    CompletionReport,
    NotUniqueError,
    count_completions,
    is_uniquely_completable,
    propagate,
    unique_completion,
)

__all__ = [
    "MAX_ORDER",
    "GridError",
    "LatinSquare",
    "PartialLatinSquare",
    "Triple",
    "parse_partial",
    "relabel",
    "remove_entry",
    "serialize",
    "with_entry",
    "CONTRADICTION",
    "FIXED_POINT",
    "CompletionReport",
    "NotUniqueError",
    "count_completions",
    "is_uniquely_completable",
    "propagate",
    "unique_completion",
    "KNOWN_LCS",
    "KNOWN_LCS_LOWER_BOUNDS",
    "CriticalityReport",
    "LargestCritical",
    "LcsRecord",
    "RemovalCheck",
    "largest_critical_in",
    "lcs_exhaustive",
    "minimize_uc",
    "verify_critical",
    "all_but_first_row_col",
    "back_circulant",
    "classic_5x5",
    "nelder_triangle",
    "random_latin_square",
    "EnumerationResult",
    "count_all",
    "iter_reduced",
    "BoundsRow",
    "ChainCheck",
    "bm_upper",
    "bounds_table",
    "check_chain",
    "crossover",
    "exact_counting_lower",
    "log_factorial",
    "log_Ln_lower",
    "nelder_bound",
    "stirling_check",
    "svr_bound",
    "theorem1_lower",
    "theorem1_lower_proof_form",
]

__version__ = "0.1.0"

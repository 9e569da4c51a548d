"""Arithmetic of maximal curves over the tower F_p < F_q < F_q2 < F_q4.

The package builds deterministic finite field towers, defines additive
curve models F(y) = x^d, expands functions locally at points, reads off
Weierstrass order sequences, audits the divisor identities of the
system cut by L((q+1) * P_infinity), and evaluates one-point codes.
"""

from .agcode import (
    DistanceReport,
    EvalCode,
    build_code,
    export_matrix,
    min_distance_exact,
    read_matrix_csv,
    read_matrix_json,
)
from .curve_model import (
    INFINITY,
    CurveModel,
    MaximalityReport,
    Point,
    define_curve,
    hermitian_curve,
    points_to_csv,
)
from .field_tower import (
    DEFAULT_AMBIENT_BUDGET,
    BudgetError,
    FieldTower,
    PrecisionError,
    build_tower,
)
from .function_field import (
    FuncElement,
    LocalSeries,
    RRBasis,
    SectionWitness,
    basis_functions,
    const,
    default_precision,
    evaluate,
    local_expansion,
    max_precision,
    normal_form,
    rr_basis,
    solve_section,
    valuation_at,
    valuation_at_infinity,
    x_of,
    y_of,
)
from .verdicts import (
    BRANCH_CONJ,
    BRANCH_FULL,
    BRANCH_NONE,
    BoundsReport,
    ConjectureHit,
    ConjectureReport,
    DichotomyVerdict,
    EmbeddingReport,
    IntervalClassification,
    NormalizationResult,
    QuarterGenusReport,
    ScanRecord,
    SyntheticInstance,
    bounds_report,
    castelnuovo_bound,
    conjecture_explore,
    dichotomy_check,
    embedding_check,
    genus_interval_classify,
    normalize_model,
    quarter_genus_check,
)
from .weierstrass import (
    NON_RATIONAL,
    RAMIFIED,
    UNRAMIFIED,
    LinearSystemInfo,
    NumericalSemigroup,
    OrderCensus,
    OrderSequence,
    RamificationReport,
    SelmerBound,
    linear_system_info,
    nongaps_at_infinity,
    order_census,
    order_sequence,
    pair_genus,
    ramification_audit,
    selmer_upper_bound,
    semigroup_gaps,
)

__version__ = "0.1.0"

__all__ = [
    "BRANCH_CONJ",
    "BRANCH_FULL",
    "BRANCH_NONE",
    "BoundsReport",
    "BudgetError",
    "ConjectureHit",
    "ConjectureReport",
    "CurveModel",
    "DEFAULT_AMBIENT_BUDGET",
    "DichotomyVerdict",
    "DistanceReport",
    "EmbeddingReport",
    "EvalCode",
    "FieldTower",
    "FuncElement",
    "INFINITY",
    "IntervalClassification",
    "LinearSystemInfo",
    "LocalSeries",
    "MaximalityReport",
    "NON_RATIONAL",
    "NormalizationResult",
    "NumericalSemigroup",
    "OrderCensus",
    "OrderSequence",
    "Point",
    "PrecisionError",
    "QuarterGenusReport",
    "RAMIFIED",
    "RRBasis",
    "RamificationReport",
    "ScanRecord",
    "SectionWitness",
    "SelmerBound",
    "SyntheticInstance",
    "UNRAMIFIED",
    "basis_functions",
    "bounds_report",
    "build_code",
    "build_tower",
    "castelnuovo_bound",
    "conjecture_explore",
    "const",
    "default_precision",
    "define_curve",
    "dichotomy_check",
    "embedding_check",
    "evaluate",
    "export_matrix",
    "genus_interval_classify",
    "hermitian_curve",
    "linear_system_info",
    "local_expansion",
    "max_precision",
    "min_distance_exact",
    "nongaps_at_infinity",
    "normal_form",
    "normalize_model",
    "order_census",
    "order_sequence",
    "pair_genus",
    "points_to_csv",
    "quarter_genus_check",
    "ramification_audit",
    "read_matrix_csv",
    "read_matrix_json",
    "rr_basis",
    "selmer_upper_bound",
    "semigroup_gaps",
    "solve_section",
    "valuation_at",
    "valuation_at_infinity",
    "x_of",
    "y_of",
]

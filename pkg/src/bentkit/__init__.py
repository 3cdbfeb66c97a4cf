"""bentkit: bent Boolean functions from partial spreads.

Constructions (symmetric, Maiorana-McFarland, partial-spread minus/plus,
the quotient form over Desarguesian spreads), Walsh-Hadamard spectra under
the standard or trace-form pairing, duals, Rayleigh quotients, distances
to the dual, and exhaustive desk-scale censuses of the distance classes.
"""

from .field import GF2k, ReduciblePolynomialError, DEFAULT_POLYS
from .boolfun import (
    AnfPoly,
    TruthTable,
    mm_bent,
    mm_dual,
    subspace_indicator,
    subspace_span,
    symmetric_bent,
    symmetric_value_pattern,
)
from .spectral import (
    Duality,
    DualityClass,
    NotBentError,
    SingularMatrixError,
    WalshSpectrum,
    affine_transform,
    dist_to_dual,
    dual,
    duality_class,
    hamming_dist,
    is_bent,
    is_orthogonal,
    nonlinearity,
    rayleigh,
    rayleigh_quotient,
    wht,
    wht_restricted,
)
from .spreads import (
    LINE_INFINITY,
    SpreadLine,
    SpreadSelection,
    desarguesian,
    dual_selection,
    is_selfdual_selection,
    line_dual,
    line_points,
    ps_general,
    ps_minus,
    ps_plus,
    psap_from_g,
    selection,
    selection_from_g,
)
from .analysis import (
    CensusReport,
    CharSumReport,
    DistributionRow,
    MetricIdentity,
    SymmetricRecord,
    anti_selfdual_check,
    balanced_g_functions,
    census,
    dist_formula_general,
    dist_formula_ps_minus,
    dist_formula_ps_plus,
    distribution_table,
    intersection_index,
    kloosterman_sum,
    metric_identity_check,
    nf_formula,
    rayleigh_vs_charsum,
    run_verification_suite,
    selfdual_counts,
    symmetric_report,
)

__version__ = "0.1.0"

__all__ = [
    "AnfPoly",
    "CensusReport",
    "CharSumReport",
    "DEFAULT_POLYS",
    "DistributionRow",
    "Duality",
    "DualityClass",
    "GF2k",
    "LINE_INFINITY",
    "MetricIdentity",
    "NotBentError",
    "ReduciblePolynomialError",
    "SingularMatrixError",
    "SpreadLine",
    "SpreadSelection",
    "SymmetricRecord",
    "TruthTable",
    "WalshSpectrum",
    "affine_transform",
    "anti_selfdual_check",
    "balanced_g_functions",
    "census",
    "desarguesian",
    "dist_formula_general",
    "dist_formula_ps_minus",
    "dist_formula_ps_plus",
    "dist_to_dual",
    "distribution_table",
    "dual",
    "dual_selection",
    "duality_class",
    "hamming_dist",
    "intersection_index",
    "is_bent",
    "is_orthogonal",
    "is_selfdual_selection",
    "kloosterman_sum",
    "line_dual",
    "line_points",
    "metric_identity_check",
    "mm_bent",
    "mm_dual",
    "nf_formula",
    "nonlinearity",
    "ps_general",
    "ps_minus",
    "ps_plus",
    "psap_from_g",
    "rayleigh",
    "rayleigh_quotient",
    "rayleigh_vs_charsum",
    "run_verification_suite",
    "selection",
    "selection_from_g",
    "selfdual_counts",
    "subspace_indicator",
    "subspace_span",
    "symmetric_bent",
    "symmetric_report",
    "symmetric_value_pattern",
    "wht",
    "wht_restricted",
]

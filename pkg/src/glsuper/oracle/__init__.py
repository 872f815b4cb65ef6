"""Brute-force ground truth: explicit matrix modules, rank tests, and gl(1|1) resolutions."""

from .gt import GTPattern, GlRep, gl_simple, gt_patterns, weyl_dim_gl
from .modules import (
    MatrixModule,
    direct_sum,
    dual_kac_module,
    element_matrix,
    f_odd_element,
    kac_module,
    matrix_to_csv,
    odd_projectivity_test,
    rank_element,
    rank_variety,
    standard_rank_element,
    trivial_module,
    trivial_summand_check,
)
from .gl11 import (
    GrowthFit,
    ResolutionTrace,
    gl11_ext,
    gl11_kac,
    gl11_minimal_resolution,
    gl11_projective,
    gl11_simple,
    kl_poly_gl11,
    measured_growth,
)

__all__ = [
    "GTPattern",
    "GlRep",
    "GrowthFit",
    "MatrixModule",
    "ResolutionTrace",
    "direct_sum",
    "dual_kac_module",
    "element_matrix",
    "f_odd_element",
    "gl11_ext",
    "gl11_kac",
    "gl11_minimal_resolution",
    "gl11_projective",
    "gl11_simple",
    "gl_simple",
    "gt_patterns",
    "kac_module",
    "kl_poly_gl11",
    "matrix_to_csv",
    "measured_growth",
    "odd_projectivity_test",
    "rank_element",
    "rank_variety",
    "standard_rank_element",
    "trivial_module",
    "trivial_summand_check",
    "weyl_dim_gl",
]

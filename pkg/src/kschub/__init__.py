"""Exact K-theoretic Schubert calculus.

Grothendieck polynomials of permutations, stable Grothendieck polynomials
G_lambda and the bialgebra they span, quiver coefficients with the
alternating-sign conjecture checker, and the expansion of G_w in the stable
basis.  All arithmetic is exact over the integers.
"""

from .gamma import (
    GammaElement,
    GammaSeries,
    cmyd_product,
    coprod_coeff,
    coproduct,
    enumerate_cmyd,
    expand_in_basis,
    expand_in_basis_double,
    jacobi_trudi_check,
    lr_coeff,
    lr_table,
    product,
    rect_coprod,
    series_identities_check,
    skew,
    straighten,
)
from .grothpoly import (
    GrothPoly,
    eval_G_double,
    eval_G_single,
    groth_double,
    groth_in_window,
    lenart_det,
    stable_truncation,
)
from .kernel import IMPLEMENTATION
from .polyzx import MultiPoly, det, divided_difference, h_complete, h_mod
from .quiver import (
    QuiverElement,
    RankConditions,
    complexes_coeffs,
    conjecture_sweep,
    expand_gw,
    expected_codim,
    flag_rank_conditions,
    quiver_coeffs,
    rectangle_diagram,
)
from .shapes import Partition, Permutation, SkewShape, partition, perm

__version__ = "0.1.0"

__all__ = [
    "GammaElement",
    "GammaSeries",
    "GrothPoly",
    "IMPLEMENTATION",
    "MultiPoly",
    "Partition",
    "Permutation",
    "QuiverElement",
    "RankConditions",
    "SkewShape",
    "cmyd_product",
    "complexes_coeffs",
    "conjecture_sweep",
    "coprod_coeff",
    "coproduct",
    "det",
    "divided_difference",
    "enumerate_cmyd",
    "eval_G_double",
    "eval_G_single",
    "expand_gw",
    "expand_in_basis",
    "expand_in_basis_double",
    "expected_codim",
    "flag_rank_conditions",
    "groth_double",
    "groth_in_window",
    "h_complete",
    "h_mod",
    "jacobi_trudi_check",
    "lenart_det",
    "lr_coeff",
    "lr_table",
    "partition",
    "perm",
    "product",
    "quiver_coeffs",
    "rect_coprod",
    "rectangle_diagram",
    "series_identities_check",
    "skew",
    "stable_truncation",
    "straighten",
]

"""Exact computations with graded algebras, Koszul duals, Nakayama data and Hopf coactions."""

from .scalars import Cyclotomic, Rationals, RationalFunctions, Scalar, field_from_name
from .free_algebra import FreeAlgebra, NCPoly
from .presentation import (
    GradedPresentation,
    jordan_plane,
    koszul_dual,
    koszul_numeric_check,
    presentation,
    quantum_plane,
    skew_polynomial_ring,
)
from .frobenius import dual_bases_and_nakayama, finite_dim_algebra, frobenius_check, nakayama_of_A

__version__ = "0.1.0"

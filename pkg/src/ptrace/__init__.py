"""Exact computation of Poisson-trace invariants: zeroth Poisson homology of
surfaces, Milnor/Jacobi data, symmetric-power series, Kostka and Tutte
polynomial formulas."""

from .exact_core import (
    BigradedHilbert,
    GradedHilbert,
    TrigradedHilbert,
    TruncatedSeries,
    WeightedPolynomial,
    WeightedRing,
    graded_monomials,
    jacobian_det,
    series_product,
    span_dim,
)
from .parsing import ParseError, parse_polynomial
from .poisson_bracket import Hp0Profile, SurfaceVariety, bracket, hp0_dims, is_isolated
from .singularity import cone_curve, duval_record, jacobi_hilbert

__version__ = "0.1.0"

__all__ = [
    "BigradedHilbert", "GradedHilbert", "TrigradedHilbert", "TruncatedSeries",
    "WeightedPolynomial", "WeightedRing", "graded_monomials", "jacobian_det",
    "series_product", "span_dim", "ParseError", "parse_polynomial", "Hp0Profile",
    "SurfaceVariety", "bracket", "hp0_dims", "is_isolated", "cone_curve",
    "duval_record", "jacobi_hilbert",
]

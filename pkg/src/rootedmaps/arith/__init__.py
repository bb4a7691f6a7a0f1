"""Exact arithmetic: rationals, polynomials, truncated series, partial fractions.

Scalars are :class:`fractions.Fraction` (or plain ``int`` where a value is
known to be integral).
"""

from fractions import Fraction as Rational

from .packing import pack, unpack
from .partial_fractions import (
    ROOTS,
    PartialFractionForm,
    RationalFunction,
    pf_apply_D,
    pf_expand_in_t,
    pf_integrate_from_1,
    t_series,
)
from .polynomial import UniPoly, poly_add_into, poly_mul
from .series import BiSeries, TruncatedSeries, evaluate_poly_at_series

__all__ = [
    "BiSeries",
    "PartialFractionForm",
    "ROOTS",
    "Rational",
    "RationalFunction",
    "TruncatedSeries",
    "UniPoly",
    "evaluate_poly_at_series",
    "pack",
    "pf_apply_D",
    "pf_expand_in_t",
    "pf_integrate_from_1",
    "poly_add_into",
    "poly_mul",
    "t_series",
    "unpack",
]

"""Exact arithmetic: rationals, Laurent polynomials, rational functions, series.

Rationals are :class:`fractions.Fraction` throughout.
"""

from fractions import Fraction as Rational

from .errors import (
    DegenerateSubstitutionError,
    ExactCoreError,
    FieldMismatchError,
    PoleError,
    UnsupportedIntegralError,
    VariableMismatchError,
    ZeroDenominatorError,
)
from .fields import QQ, QU, QW, Field, FunctionField, RationalField, field_by_name
from .laurent import LaurentPoly, poly_arith, poly_gcd
from .ratfn import RatFn, ratfn_normalize, ratfn_substitute
from .serialize import clear_nested, format_poly, format_ratfn, fraction_str, from_json, to_json
from .series import SeriesExpansion, series_expand


def poly_derivative(p):
    return p.derivative()


def laurent_antiderivative_from_1(p, var="r"):
    """``F(var) = integral_1^var p(t) dt``; ``p`` must have no ``t^-1`` term."""
    return p.antiderivative_from_1(var)


__all__ = [
    "DegenerateSubstitutionError",
    "clear_nested",
    "ExactCoreError",
    "Field",
    "FieldMismatchError",
    "FunctionField",
    "LaurentPoly",
    "PoleError",
    "QQ",
    "QU",
    "QW",
    "RatFn",
    "Rational",
    "RationalField",
    "SeriesExpansion",
    "UnsupportedIntegralError",
    "VariableMismatchError",
    "ZeroDenominatorError",
    "field_by_name",
    "format_poly",
    "format_ratfn",
    "fraction_str",
    "from_json",
    "laurent_antiderivative_from_1",
    "poly_arith",
    "poly_derivative",
    "poly_gcd",
    "ratfn_normalize",
    "ratfn_substitute",
    "series_expand",
    "to_json",
]

"""Exact rational scalars.

``fractions.Fraction`` already keeps values reduced with a positive
denominator; this module only adds the coercion rules used throughout the
package. Integral values are kept as plain ``int`` so that the common case
(traces and Lefschetz sums are integral in the ``{1, zeta}`` basis) runs at
machine-int speed.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Union[int, Fraction]


def as_rational(x: object) -> Rational:
    """Coerce ``x`` to an exact rational, rejecting floats and other inexact types."""
    if type(x) is int:
        return x
    if type(x) is Fraction:
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, _RationalABC):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_rational(Fraction(x.strip()))
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def rational_str(x: Rational) -> str:
    """Canonical ``p/q`` text (``p`` alone when integral)."""
    x = as_rational(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"

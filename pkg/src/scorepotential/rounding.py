"""Exact rational coercion and the half-up rounding rule used for display and name counts."""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction


def to_fraction(value) -> Fraction:
    """Coerce a number to an exact Fraction.

    Floats go through their shortest decimal repr, so a literal like 0.4
    means 2/5 rather than its binary neighbour.  Strings and Decimals parse
    exactly; use Fraction directly for non-decimal rationals.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot convert non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def round_half_up(value) -> int:
    """Round to the nearest integer, halves away from zero-ward ties (1.5 -> 2)."""
    if isinstance(value, Fraction):
        return math.floor(value + Fraction(1, 2))
    if isinstance(value, int):
        return value
    return math.floor(value + 0.5)

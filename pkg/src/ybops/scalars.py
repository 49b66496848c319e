"""Scalar field helpers.

Exact mode works over the rationals (``fractions.Fraction``); float mode uses
Python floats with a configurable absolute tolerance.  All identity checks in
the library default to exact mode, floats only appear in the numerical search.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int, float]

DEFAULT_TOL = 1e-9


def rational(x) -> Fraction:
    """Coerce ints, Fractions and 'num/den' strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    raise TypeError(f"cannot coerce {type(x).__name__} to rational")


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction))


def is_zero(x: Scalar, tol: float = DEFAULT_TOL) -> bool:
    """Exact zero test for rationals, tolerance test for floats."""
    if is_exact(x):
        return x == 0
    return abs(x) < tol


def format_scalar(x: Scalar) -> str:
    """Serialize a scalar; rationals as 'num/den' (or 'num' for integers)."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return repr(x)


def parse_scalar(s: str, field: str = "rational") -> Scalar:
    """Inverse of :func:`format_scalar` for the given field tag."""
    if field == "rational":
        return Fraction(s)
    if field == "float64":
        return float(Fraction(s)) if "/" in s else float(s)
    raise ValueError(f"unknown field {field!r}")

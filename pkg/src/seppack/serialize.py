"""Rational-safe JSON helpers shared by the file formats.

Rationals travel as "p/q" strings (plain integers allowed and normalized on
load); floats stay native JSON numbers.  A zero denominator is rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def scalar_to_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return float(v)


def scalar_from_json(v):
    if isinstance(v, bool):
        raise ParseError(f"boolean is not a scalar: {v!r}")
    if isinstance(v, str):
        parts = v.split("/")
        if len(parts) == 1:
            num, den = parts[0], "1"
        elif len(parts) == 2:
            num, den = parts
        else:
            raise ParseError(f"malformed rational {v!r}")
        try:
            numerator, denominator = int(num), int(den)
        except ValueError:
            raise ParseError(f"malformed rational {v!r}") from None
        if denominator == 0:
            raise ParseError(f"zero denominator in rational {v!r}")
        return Fraction(numerator, denominator)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise ParseError(f"unsupported scalar literal {v!r}")


def fraction_from_json(v) -> Fraction:
    s = scalar_from_json(v)
    if not isinstance(s, Fraction):
        raise ParseError(f"expected an exact rational, got float {v!r}")
    return s

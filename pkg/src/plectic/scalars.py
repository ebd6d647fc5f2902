"""Scalar modes: exact rationals (int/Fraction) or float64.

A whole computation runs in one mode.  Exact values are Python ints or
fractions.Fraction, normalized to int whenever the denominator is 1 (int
arithmetic is much faster on the hot paths).  Float mode carries no exact
equality guarantees; tolerances apply only to rank decisions (see linalg).
"""

from __future__ import annotations

from fractions import Fraction

EXACT = "exact"
FLOAT = "float"

#: float-mode rank cutoff: singular values below RANK_TOL * s_max count as zero
RANK_TOL = 1e-9


def normalize(x):
    """Collapse integral Fractions to int; leave ints and floats alone."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return x


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def mode_of(values) -> str:
    """EXACT if every value is int/Fraction, FLOAT if any float appears."""
    for v in values:
        if isinstance(v, float):
            return FLOAT
        if not isinstance(v, (int, Fraction)):
            raise TypeError(f"unsupported scalar {v!r}")
    return EXACT


def parse_rational(text: str):
    """Parse '5', '-3/4' or '0.25' into an exact scalar."""
    s = text.strip()
    try:
        return normalize(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return repr(x)

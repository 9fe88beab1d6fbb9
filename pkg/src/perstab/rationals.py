"""Exact rational parsing and printing.

Every number crossing a module or wire boundary is a `fractions.Fraction`
printed as "p/q" (or "p" for integers).  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class InputError(ValueError):
    """Malformed or out-of-contract input; the message names the violated rule."""


def parse_rational(value, what: str = "value") -> Fraction:
    """Parse "p/q", "p", an int, or a Fraction into an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"{what}: floats are not accepted, pass an exact rational string")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{what}: {value!r} is not a rational p/q") from exc
    raise InputError(f"{what}: cannot interpret {value!r} as a rational")


def fmt(q: Fraction) -> str:
    """Canonical "p/q" (or "p") rendering."""
    return str(Fraction(q))

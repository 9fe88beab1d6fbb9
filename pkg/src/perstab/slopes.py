"""Slope functions on the perverse heart and its tilt, plus the class trichotomy."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .charges import z_threefold
from .lattice import ChernVector, ContractionModel
from .rationals import InputError, fmt


@dataclass(frozen=True)
class ExtendedSlope:
    """A rational slope or +infinity.

    The tilt slope records the charge's imaginary part alongside +infinity
    when the denominator vanishes, mirroring how Harder-Narasimhan arguments
    treat rank-zero classes.
    """

    finite: bool
    value: Fraction | None = None
    im_at_infinity: Fraction | None = None

    @classmethod
    def of(cls, value: Fraction) -> "ExtendedSlope":
        return cls(True, value)

    @classmethod
    def infinite(cls, im: Fraction | None = None) -> "ExtendedSlope":
        return cls(False, None, im)

    def __lt__(self, other: "ExtendedSlope") -> bool:
        if not self.finite:
            return False
        if not other.finite:
            return True
        return self.value < other.value

    def __le__(self, other: "ExtendedSlope") -> bool:
        return self < other or self == other

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedSlope):
            return NotImplemented
        if self.finite != other.finite:
            return False
        return True if not self.finite else self.value == other.value

    def to_json(self) -> dict:
        if self.finite:
            return {"finite": True, "value": fmt(self.value)}
        out = {"finite": False, "value": "inf"}
        if self.im_at_infinity is not None:
            out["im"] = fmt(self.im_at_infinity)
        return out


class HeartCase(enum.Enum):
    CASE_A = "CaseA"
    CASE_B = "CaseB"
    CASE_C = "CaseC"
    VIOLATION = "Violation"


def _mu_denominator(model: ContractionModel, v: ChernVector) -> Fraction:
    """ch1 . fw (surface) or ch1 . fw^2 (3-fold)."""
    x, y = v.ch1
    if model.kind.is_surface:
        return x * model.w
    return x * model.w + y * model.fwsq_d


def mu(model: ContractionModel, v: ChernVector) -> ExtendedSlope:
    """Slope (ch1 . fw-power) / ch0; +infinity on rank zero."""
    if v.kind is not model.kind:
        raise InputError("mu: class kind does not match the model")
    if v.ch0 < 0:
        raise InputError("mu: ch0 must be nonnegative on heart classes")
    if v.ch0 == 0:
        return ExtendedSlope.infinite()
    return ExtendedSlope.of(_mu_denominator(model, v) / v.ch0)


def nu(model: ContractionModel, b, v: ChernVector) -> ExtendedSlope:
    """Tilt slope Im Z / (ch1 . fw^2); +infinity (with Im recorded) on zero."""
    if not model.kind.is_threefold:
        raise InputError("nu: model must be a 3-fold contraction")
    if v.kind is not model.kind:
        raise InputError("nu: class kind does not match the model")
    denom = _mu_denominator(model, v)
    if denom < 0:
        raise InputError("nu: ch1 . fw^2 must be nonnegative on tilted-heart classes")
    im = z_threefold(model, b, v).im
    if denom == 0:
        return ExtendedSlope.infinite(im)
    return ExtendedSlope.of(im / denom)


def trichotomy(model: ContractionModel, b, v: ChernVector) -> HeartCase:
    """Which of the three tilted-heart sign patterns the class satisfies.

    Violation is an outcome, not an error: it flags classes that cannot be
    realized by a nonzero object of the double-tilted heart.
    """
    if not model.kind.is_threefold:
        raise InputError("trichotomy: model must be a 3-fold contraction")
    if v.kind is not model.kind:
        raise InputError("trichotomy: class kind does not match the model")
    denom = _mu_denominator(model, v)
    if denom > 0:
        return HeartCase.CASE_A
    if denom < 0:
        return HeartCase.VIOLATION
    z = z_threefold(model, b, v)
    if z.im > 0:
        return HeartCase.CASE_B
    if z.im == 0 and z.re < 0:
        return HeartCase.CASE_C
    return HeartCase.VIOLATION

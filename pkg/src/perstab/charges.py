"""Central charge evaluation and exact phase comparison.

A charge is an exact complex number (re, im).  Phases are never computed as
real numbers: nonzero charges are totally ordered on the phase interval
(0, 2] (measured in half-turns) by a band index plus the sign of the cross
product re1*im2 - im1*re2 within a band.  The bands are

    im > 0            -> phase in (0, 1)
    im = 0 and re < 0 -> phase 1      (the semistable-of-phase-one locus)
    im < 0            -> phase in (1, 2)
    im = 0 and re > 0 -> phase 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chern import twist
from .lattice import ChernVector, ContractionModel
from .rationals import InputError, fmt, parse_rational


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "ChargeValue") -> "ChargeValue":
        return ChargeValue(self.re + other.re, self.im + other.im)

    def to_json(self) -> dict:
        return {"re": fmt(self.re), "im": fmt(self.im)}


class Order(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def z_surface(model: ContractionModel, v: ChernVector) -> ChargeValue:
    """Z(E) = (-ch2 + w/2 ch0) + i (ch1 . fw) on the surface."""
    if not model.kind.is_surface:
        raise InputError("z_surface: model must be a surface blow-down")
    if v.kind is not model.kind:
        raise InputError("z_surface: class kind does not match the model")
    x, _a = v.ch1
    return ChargeValue(-v.ch2 + model.w / 2 * v.ch0, x * model.w)


def z_threefold(model: ContractionModel, b, v: ChernVector) -> ChargeValue:
    """Z_{bD}(E) = (-ch3^b + fw^2/2 ch1) + i (fw . ch2^b - w/6 ch0)."""
    if not model.kind.is_threefold:
        raise InputError("z_threefold: model must be a 3-fold contraction")
    if v.kind is not model.kind:
        raise InputError("z_threefold: class kind does not match the model")
    tv = twist(model, v, b)
    x, y = tv.ch1
    fwsq_ch1 = x * model.w + y * model.fwsq_d
    re = -tv.ch3 + fwsq_ch1 / 2
    im = model.fw_dot_curve(tv.ch2) - model.w / 6 * tv.ch0
    return ChargeValue(re, im)


def phase_band(z: ChargeValue) -> int:
    if z.is_zero():
        raise InputError("phase: the zero charge has no phase")
    if z.im > 0:
        return 0
    if z.im == 0 and z.re < 0:
        return 1
    if z.im < 0:
        return 2
    return 3


@dataclass(frozen=True)
class PhaseKey:
    """Half-plane band plus the direction of the charge ray.

    Two keys are equal exactly when the charges are positive real multiples
    of each other; ordering by continuous phase is total on nonzero charges.
    """

    band: int
    direction: tuple[Fraction, Fraction]

    @classmethod
    def of(cls, z: ChargeValue) -> "PhaseKey":
        band = phase_band(z)
        scale = max(abs(z.re), abs(z.im))
        return cls(band, (z.re / scale, z.im / scale))

    def _charge(self) -> ChargeValue:
        return ChargeValue(*self.direction)

    def __lt__(self, other: "PhaseKey") -> bool:
        return compare_phase(self._charge(), other._charge()) is Order.LESS

    def __le__(self, other: "PhaseKey") -> bool:
        return compare_phase(self._charge(), other._charge()) is not Order.GREATER


def compare_phase(z1: ChargeValue, z2: ChargeValue) -> Order:
    """Exact comparison of continuous phases on (0, 2]."""
    b1, b2 = phase_band(z1), phase_band(z2)
    if b1 != b2:
        return Order.LESS if b1 < b2 else Order.GREATER
    if b1 in (1, 3):
        return Order.EQUAL
    cross = z1.re * z2.im - z1.im * z2.re
    # within an open half-plane the angle gap is < pi, so the cross product
    # sign decides
    if cross > 0:
        return Order.LESS
    if cross < 0:
        return Order.GREATER
    return Order.EQUAL


def charge(model: ContractionModel, v: ChernVector, b=0) -> ChargeValue:
    """Dispatch to the surface or 3-fold central charge."""
    if model.kind.is_surface:
        if parse_rational(b, "b") != 0:
            raise InputError("charge: surface models only support b = 0")
        return z_surface(model, v)
    return z_threefold(model, b, v)

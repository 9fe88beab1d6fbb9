"""One-parameter wall-crossing on the surface: the family omega_t = fw + eps*t*C.

eps is a positive formal infinitesimal, never a number.  Charges along the
family are polynomials in eps with exact rational coefficients, ordered
lexicographically by degree; that makes "0 < eps << 1" literal.  The wall
between two classes is where their charges align to leading order, and the
verdicts for the three degenerations of a point class follow the two-factor
phase comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .catalog import SimpleClass, simples
from .charges import Order
from .lattice import ChernVector, ContractionModel
from .rationals import InputError, fmt, parse_rational


@dataclass(frozen=True)
class EpsPoly:
    """Polynomial in the infinitesimal eps; sign is the first nonzero coefficient."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coeffs) -> "EpsPoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    def sign(self) -> int:
        for c in self.coeffs:
            if c != 0:
                return 1 if c > 0 else -1
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "EpsPoly") -> "EpsPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return EpsPoly.of(*[x + y for x, y in zip(a, b)])

    def __neg__(self) -> "EpsPoly":
        return EpsPoly.of(*[-c for c in self.coeffs])

    def __sub__(self, other: "EpsPoly") -> "EpsPoly":
        return self + (-other)

    def __mul__(self, other: "EpsPoly") -> "EpsPoly":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return EpsPoly.of(*out)

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coeffs]


class Verdict(enum.Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class ModuliObject:
    """A point-class object with its two catalog factors.

    Non-split objects are extensions of `quotient` by `sub`; the split one is
    the direct sum.  The shifted factor classes always sum to the point class.
    """

    name: str
    sub: SimpleClass
    quotient: SimpleClass
    split: bool


def moduli_objects(model: ContractionModel) -> dict[str, ModuliObject]:
    """The three degenerations of a point class on the surface."""
    if not model.kind.is_surface:
        raise InputError("moduli_objects: model must be a surface blow-down")
    by_name = {s.name: s for s in simples(model)}
    oc, ocm1 = by_name["O_C"], by_name["O_C(-1)[1]"]
    return {
        "O_x_on_C": ModuliObject("O_x_on_C", sub=oc, quotient=ocm1, split=False),
        "Lf_O_0": ModuliObject("Lf_O_0", sub=ocm1, quotient=oc, split=False),
        "OC_plus_OCm1": ModuliObject("OC_plus_OCm1", sub=oc, quotient=ocm1, split=True),
    }


def _family_charge_poly(model: ContractionModel, v: ChernVector) -> tuple[EpsPoly, EpsPoly]:
    """(re, im) as polynomials in u = eps*t, before substituting t."""
    x, a = v.ch1
    re = EpsPoly.of(-v.ch2 + model.w / 2 * v.ch0, 0, -v.ch0 / Fraction(2))
    im = EpsPoly.of(x * model.w, -a)
    return re, im


def family_charge(model: ContractionModel, v: ChernVector, t) -> tuple[EpsPoly, EpsPoly]:
    """Charge of v under omega_t = fw + eps*t*C, as eps-polynomials."""
    if not model.kind.is_surface:
        raise InputError("family_charge: model must be a surface blow-down")
    if v.kind is not model.kind:
        raise InputError("family_charge: class kind does not match the model")
    t = parse_rational(t, "t")
    re_u, im_u = _family_charge_poly(model, v)
    subst = lambda p: EpsPoly.of(*[c * t**i for i, c in enumerate(p.coeffs)])
    return subst(re_u), subst(im_u)


def _band(re: EpsPoly, im: EpsPoly) -> int:
    s = im.sign()
    if s > 0:
        return 0
    if s < 0:
        return 2
    r = re.sign()
    if r < 0:
        return 1
    if r > 0:
        return 3
    raise InputError("phase: the family charge vanishes identically on this class")


def phase_order_family(
    model: ContractionModel, va: ChernVector, vb: ChernVector, t
) -> Order:
    """Exact phase comparison along the family, infinitesimals included."""
    ra, ia = family_charge(model, va, t)
    rb, ib = family_charge(model, vb, t)
    band_a, band_b = _band(ra, ia), _band(rb, ib)
    if band_a != band_b:
        return Order.LESS if band_a < band_b else Order.GREATER
    if band_a in (1, 3):
        return Order.EQUAL
    cross = ra * ib - ia * rb
    s = cross.sign()
    if s > 0:
        return Order.LESS
    if s < 0:
        return Order.GREATER
    return Order.EQUAL


def stability_verdict(model: ContractionModel, obj: ModuliObject, t) -> Verdict:
    """Verdict for one of the three point-class objects at parameter t.

    Both factors are catalog-stable, so a non-split extension is stable
    exactly when its sub-factor has strictly smaller phase; the split object
    is semistable only where the factors align.
    """
    t = parse_rational(t, "t")
    if obj.split:
        return Verdict.STRICTLY_SEMISTABLE if t == 0 else Verdict.UNSTABLE
    order = phase_order_family(model, obj.sub.heart_class, obj.quotient.heart_class, t)
    if order is Order.LESS:
        return Verdict.STABLE
    if order is Order.GREATER:
        return Verdict.UNSTABLE
    return Verdict.STRICTLY_SEMISTABLE


@dataclass
class WallParamResult:
    always_aligned: bool
    roots: list[Fraction]
    coeffs: list[Fraction]  # wall polynomial in u = eps*t

    def to_json(self) -> dict:
        return {
            "always_aligned": self.always_aligned,
            "roots": [fmt(r) for r in self.roots],
            "coeffs": [fmt(c) for c in self.coeffs],
        }


def solve_wall_param(model: ContractionModel, va: ChernVector, vb: ChernVector) -> WallParamResult:
    """Values of t where the two family charges align at leading order.

    The wall function W(u) = Re_A Im_B - Im_A Re_B in u = eps*t either
    vanishes identically (the classes stay aligned for every t), has a
    nonzero constant term (never aligned near the wall locus), or vanishes
    at u = 0 only, putting the wall at t = 0.
    """
    if not model.kind.is_surface:
        raise InputError("solve_wall_param: model must be a surface blow-down")
    ra, ia = _family_charge_poly(model, va)
    rb, ib = _family_charge_poly(model, vb)
    wall = ra * ib - ia * rb
    if wall.is_zero():
        return WallParamResult(True, [], [])
    coeffs = list(wall.coeffs)
    roots = [Fraction(0)] if coeffs[0] == 0 else []
    return WallParamResult(False, roots, coeffs)

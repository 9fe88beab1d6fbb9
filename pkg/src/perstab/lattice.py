"""Numerical lattices of the six built-in contraction geometries.

A contraction is either the blow-down of a (-1)-curve C on a surface, or one
of the five 3-fold divisorial contractions (the exceptional divisor D maps to
a curve in type I and to a point in types II-V, where D is P^2, P^1xP^1, P^2
and the quadric cone respectively).

Conventions:
  * divisor coordinates: surface basis (fw, C); 3-fold basis (fw, D), where
    fw is the pullback of the fixed ample class on the base.
  * curve coordinates (3-folds): the exceptional curve classes of the type,
    plus one ambient generator "fw2" dual to fw (fw.fw2 = 1, D.fw2 = 0) so
    that classes meeting fw nontrivially are expressible.
  * w is omega^2 (surface) or omega^3 (3-fold) for the chosen ample class.

Type I global data (D^3 and the two mixed pairings fw.D^2, fw^2.D) depends on
the center curve and is not needed for any fiber-local computation; the three
numbers are model parameters defaulting to 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .rationals import InputError, fmt, parse_rational


class ContractionKind(enum.Enum):
    SURFACE = "surface"
    TI = "TI"
    TII = "TII"
    TIII = "TIII"
    TIV = "TIV"
    TV = "TV"

    @property
    def is_surface(self) -> bool:
        return self is ContractionKind.SURFACE

    @property
    def is_threefold(self) -> bool:
        return not self.is_surface

    @property
    def contracts_to_point(self) -> bool:
        return self in (ContractionKind.TII, ContractionKind.TIII,
                        ContractionKind.TIV, ContractionKind.TV)

    @classmethod
    def parse(cls, name: str) -> "ContractionKind":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise InputError(f"kind: {name!r} is not one of {valid}") from None


_EXC_CURVES = {
    ContractionKind.TI: ("L",),
    ContractionKind.TII: ("ell",),
    ContractionKind.TIII: ("C1", "C2"),
    ContractionKind.TIV: ("ell",),
    ContractionKind.TV: ("C",),
}

# D.(exceptional curve) per type; fw pairs to 0 with every exceptional curve
_D_DOT_EXC = {
    ContractionKind.TI: (Fraction(-1),),
    ContractionKind.TII: (Fraction(-1),),
    ContractionKind.TIII: (Fraction(-1), Fraction(-1)),
    ContractionKind.TIV: (Fraction(-2),),
    ContractionKind.TV: (Fraction(-1),),
}

_D_CUBE = {
    ContractionKind.TII: Fraction(1),
    ContractionKind.TIII: Fraction(2),
    ContractionKind.TIV: Fraction(4),
    ContractionKind.TV: Fraction(2),
}

# D^2 as a curve class, in exceptional-curve coordinates
_DSQ = {
    ContractionKind.TII: (Fraction(-1),),
    ContractionKind.TIII: (Fraction(-1), Fraction(-1)),
    ContractionKind.TIV: (Fraction(-2),),
    ContractionKind.TV: (Fraction(-2),),
}

AMBIENT_CURVE = "fw2"


@dataclass(frozen=True)
class CanonicalData:
    """Pairings entering the surface Euler form: K_Y.omega and chi(O_X)."""

    ky_dot_omega: Fraction
    chi_o: Fraction


@dataclass(frozen=True)
class ContractionModel:
    kind: ContractionKind
    w: Fraction
    divisor_basis: tuple[str, ...]
    curve_basis: tuple[str, ...]          # exceptional classes only
    d_cube: Fraction                      # D^3 (3-folds) or C^2 = -1 (surface)
    dsq_curve: tuple[Fraction, ...]       # D^2 in curve coords (+ ambient)
    fw_dsq: Fraction                      # fw . D^2
    fwsq_d: Fraction                      # fw^2 . D
    canonical: CanonicalData | None = None

    @property
    def curve_labels(self) -> tuple[str, ...]:
        """Exceptional curve classes followed by the ambient generator."""
        return self.curve_basis + (AMBIENT_CURVE,)

    def d_dot_curve(self, coords: tuple[Fraction, ...]) -> Fraction:
        table = _D_DOT_EXC[self.kind] + (Fraction(0),)
        return sum(t * c for t, c in zip(table, coords, strict=True))

    def fw_dot_curve(self, coords: tuple[Fraction, ...]) -> Fraction:
        # exceptional curves are contracted, only the ambient class survives
        return coords[-1]

    def fw_dot_d_curve(self) -> tuple[Fraction, ...]:
        """The curve class fw.D; zero unless f(D) is a curve."""
        coords = [Fraction(0)] * len(self.curve_labels)
        if self.kind is ContractionKind.TI:
            coords[0] = -self.fw_dsq
            coords[-1] = self.fwsq_d
        return tuple(coords)

    def to_json(self) -> dict:
        pairings = {}
        for lbl, val in zip(self.curve_basis, _D_DOT_EXC.get(self.kind, ())):
            pairings[f"D.{lbl}"] = fmt(val)
            pairings[f"fw.{lbl}"] = "0"
        if self.kind.is_surface:
            pairings = {"C.C": "-1", "C.fw": "0", "fw.fw": fmt(self.w)}
        else:
            pairings[f"fw.{AMBIENT_CURVE}"] = "1"
            pairings[f"D.{AMBIENT_CURVE}"] = "0"
            pairings["fw.D^2"] = fmt(self.fw_dsq)
            pairings["fw^2.D"] = fmt(self.fwsq_d)
        out = {
            "kind": self.kind.value,
            "w": fmt(self.w),
            "divisor_basis": list(self.divisor_basis),
            "curve_basis": list(self.curve_basis),
            "pairings": pairings,
            "d_cube": fmt(self.d_cube),
            "dsq_curve": {
                lbl: fmt(v) for lbl, v in zip(self.curve_labels, self.dsq_curve) if v
            },
        }
        if self.canonical is not None:
            out["canonical_data"] = {
                "ky_dot_omega": fmt(self.canonical.ky_dot_omega),
                "chi_o": fmt(self.canonical.chi_o),
            }
        return out


def make_model(
    kind: ContractionKind | str,
    w,
    *,
    ti_d_cube=0,
    ti_fw_dsq=0,
    ti_fwsq_d=0,
    canonical: CanonicalData | None = None,
) -> ContractionModel:
    """Build the intersection model of one contraction type.

    w is omega^2 (surface) or omega^3 (3-fold) and must be positive.  The
    three ti_* parameters are only consulted in type I.
    """
    if isinstance(kind, str):
        kind = ContractionKind.parse(kind)
    w = parse_rational(w, "w")
    if w <= 0:
        raise InputError("w: must be positive (it is a power of an ample class)")

    if kind.is_surface:
        return ContractionModel(
            kind=kind,
            w=w,
            divisor_basis=("fw", "C"),
            curve_basis=(),
            d_cube=Fraction(-1),
            dsq_curve=(),
            fw_dsq=Fraction(0),
            fwsq_d=Fraction(0),
            canonical=canonical,
        )

    exc = _EXC_CURVES[kind]
    if kind is ContractionKind.TI:
        d_cube = parse_rational(ti_d_cube, "ti_d_cube")
        fw_dsq = parse_rational(ti_fw_dsq, "ti_fw_dsq")
        fwsq_d = parse_rational(ti_fwsq_d, "ti_fwsq_d")
        dsq = (-d_cube, fw_dsq)  # D.(D^2) = D^3 and fw.(D^2) = fw_dsq
    else:
        d_cube = _D_CUBE[kind]
        fw_dsq = Fraction(0)
        fwsq_d = Fraction(0)
        dsq = _DSQ[kind] + (Fraction(0),)
    return ContractionModel(
        kind=kind,
        w=w,
        divisor_basis=("fw", "D"),
        curve_basis=exc,
        d_cube=d_cube,
        dsq_curve=dsq,
        fw_dsq=fw_dsq,
        fwsq_d=fwsq_d,
        canonical=canonical,
    )


@dataclass(frozen=True)
class ChernVector:
    """Graded class in the numerical Grothendieck group, exact coefficients.

    Surfaces carry (ch0, ch1, ch2) with ch1 in divisor coordinates and ch2 a
    number; 3-folds carry (ch0, ch1, ch2, ch3) with ch2 in curve coordinates
    (exceptional classes + ambient generator).
    """

    kind: ContractionKind
    ch0: Fraction
    ch1: tuple[Fraction, ...]
    ch2: object  # Fraction (surface) or tuple[Fraction, ...] (3-fold)
    ch3: Fraction | None = None

    def __post_init__(self):
        if self.kind.is_surface:
            if len(self.ch1) != 2 or not isinstance(self.ch2, Fraction) or self.ch3 is not None:
                raise InputError("class: surface vectors are (ch0, ch1[fw,C], ch2)")
        else:
            n = len(_EXC_CURVES[self.kind]) + 1
            if len(self.ch1) != 2 or not isinstance(self.ch2, tuple) or len(self.ch2) != n:
                raise InputError("class: 3-fold vectors are (ch0, ch1[fw,D], ch2[curves], ch3)")
            if self.ch3 is None:
                raise InputError("class: 3-fold vectors need ch3")

    # -- constructors ------------------------------------------------------

    @classmethod
    def surface(cls, ch0, fw=0, c=0, ch2=0) -> "ChernVector":
        return cls(
            ContractionKind.SURFACE,
            parse_rational(ch0, "ch0"),
            (parse_rational(fw, "ch1.fw"), parse_rational(c, "ch1.C")),
            parse_rational(ch2, "ch2"),
        )

    @classmethod
    def threefold(cls, kind: ContractionKind, ch0, ch1, ch2, ch3) -> "ChernVector":
        n = len(_EXC_CURVES[kind]) + 1
        c2 = tuple(parse_rational(v, "ch2") for v in ch2)
        if len(c2) == n - 1:
            c2 = c2 + (Fraction(0),)
        return cls(
            kind,
            parse_rational(ch0, "ch0"),
            tuple(parse_rational(v, "ch1") for v in ch1),
            c2,
            parse_rational(ch3, "ch3"),
        )

    @classmethod
    def point_class(cls, kind: ContractionKind) -> "ChernVector":
        """ch of a skyscraper sheaf off the exceptional locus."""
        if kind.is_surface:
            return cls.surface(0, 0, 0, 1)
        zeros = (0,) * len(_EXC_CURVES[kind])
        return cls.threefold(kind, 0, (0, 0), zeros, 1)

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other: "ChernVector"):
        if self.kind is not other.kind:
            raise InputError("class: cannot combine vectors of different contraction kinds")

    def __add__(self, other: "ChernVector") -> "ChernVector":
        self._require_same(other)
        if self.kind.is_surface:
            return ChernVector(self.kind, self.ch0 + other.ch0,
                               tuple(a + b for a, b in zip(self.ch1, other.ch1)),
                               self.ch2 + other.ch2)
        return ChernVector(self.kind, self.ch0 + other.ch0,
                           tuple(a + b for a, b in zip(self.ch1, other.ch1)),
                           tuple(a + b for a, b in zip(self.ch2, other.ch2)),
                           self.ch3 + other.ch3)

    def scale(self, k) -> "ChernVector":
        k = parse_rational(k, "scale")
        if self.kind.is_surface:
            return ChernVector(self.kind, k * self.ch0,
                               tuple(k * a for a in self.ch1), k * self.ch2)
        return ChernVector(self.kind, k * self.ch0,
                           tuple(k * a for a in self.ch1),
                           tuple(k * a for a in self.ch2), k * self.ch3)

    def __neg__(self) -> "ChernVector":
        return self.scale(-1)

    def __sub__(self, other: "ChernVector") -> "ChernVector":
        return self + (-other)

    def is_zero(self) -> bool:
        comps = [self.ch0, *self.ch1]
        comps += [self.ch2] if self.kind.is_surface else [*self.ch2, self.ch3]
        return all(v == 0 for v in comps)

    @property
    def top(self) -> Fraction:
        """Top-degree component (ch2 on surfaces, ch3 on 3-folds)."""
        return self.ch2 if self.kind.is_surface else self.ch3

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        d_labels = ("fw", "C") if self.kind.is_surface else ("fw", "D")
        out = {
            "ch0": fmt(self.ch0),
            "ch1": {lbl: fmt(v) for lbl, v in zip(d_labels, self.ch1)},
        }
        if self.kind.is_surface:
            out["ch2"] = fmt(self.ch2)
        else:
            labels = _EXC_CURVES[self.kind] + (AMBIENT_CURVE,)
            out["ch2"] = {lbl: fmt(v) for lbl, v in zip(labels, self.ch2)}
            out["ch3"] = fmt(self.ch3)
        return out

    @classmethod
    def from_json(cls, kind: ContractionKind, data: dict) -> "ChernVector":
        if not isinstance(data, dict):
            raise InputError("class: expected a JSON object")
        ch0 = parse_rational(data.get("ch0", 0), "ch0")
        ch1_raw = data.get("ch1", {})
        if not isinstance(ch1_raw, dict):
            raise InputError("class: ch1 must be an object of named coordinates")
        d_labels = ("fw", "C") if kind.is_surface else ("fw", "D")
        for key in ch1_raw:
            if key not in d_labels:
                raise InputError(f"class: unknown divisor coordinate {key!r} for {kind.value}")
        ch1 = tuple(parse_rational(ch1_raw.get(lbl, 0), f"ch1.{lbl}") for lbl in d_labels)
        if kind.is_surface:
            if "ch3" in data:
                raise InputError("class: surface vectors have no ch3")
            return cls(kind, ch0, ch1, parse_rational(data.get("ch2", 0), "ch2"))
        labels = _EXC_CURVES[kind] + (AMBIENT_CURVE,)
        ch2_raw = data.get("ch2", {})
        if not isinstance(ch2_raw, dict):
            raise InputError("class: 3-fold ch2 must be an object of curve coordinates")
        for key in ch2_raw:
            if key not in labels:
                raise InputError(f"class: unknown curve coordinate {key!r} for {kind.value}")
        ch2 = tuple(parse_rational(ch2_raw.get(lbl, 0), f"ch2.{lbl}") for lbl in labels)
        return cls(kind, ch0, ch1, ch2, parse_rational(data.get("ch3", 0), "ch3"))


def cv_shift(v: ChernVector, n: int) -> ChernVector:
    """Class of v[n]: every component picks up (-1)^n."""
    if not isinstance(n, int):
        raise InputError("shift: n must be an integer")
    return v if n % 2 == 0 else -v


def pair_curve_divisor(model: ContractionModel, divisor: dict | tuple, curve) -> Fraction:
    """Bilinear intersection of a divisor class with a curve class.

    On surfaces both arguments live in the divisor lattice and this is the
    intersection form.  Divisor coordinates may be given as a dict over the
    basis labels or a coordinate tuple; likewise for curves.
    """
    dcoords = _coords(divisor, model.divisor_basis, "divisor")
    if model.kind.is_surface:
        ccoords = _coords(curve, model.divisor_basis, "curve")
        x1, a1 = dcoords
        x2, a2 = ccoords
        return x1 * x2 * model.w - a1 * a2
    ccoords = _coords(curve, model.curve_labels, "curve")
    x, y = dcoords
    return x * model.fw_dot_curve(ccoords) + y * model.d_dot_curve(ccoords)


def _coords(value, labels: tuple[str, ...], what: str) -> tuple[Fraction, ...]:
    if isinstance(value, dict):
        for key in value:
            if key not in labels:
                raise InputError(f"{what}: unknown coordinate {key!r}; basis is {labels}")
        return tuple(parse_rational(value.get(lbl, 0), f"{what}.{lbl}") for lbl in labels)
    value = tuple(value)
    if len(value) == len(labels) - 1 and labels and labels[-1] == AMBIENT_CURVE:
        value = value + (0,)
    if len(value) != len(labels):
        raise InputError(f"{what}: expected {len(labels)} coordinates over {labels}")
    return tuple(parse_rational(v, what) for v in value)

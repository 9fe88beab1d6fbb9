"""Simple-object class catalogs and the twisted-ch3 positivity range.

Per contraction type, the heart of perverse sheaves supported on fibers has a
finite list of simple objects (up to the moving point class).  This module
records their ambient Chern vectors:

  * surface: the structure sheaf of the (-1)-curve and its degree -1 twist
    shifted by one;
  * type I: the degree -1 and -2 line bundles on a fiber line;
  * types II, III, IV: catalogs on P^2 and P^1xP^1, derived through the
    pushforward oracle from the defining exact sequences of the bundles
    involved (the rank-5 kernel on P^2, the rank-3 kernel on P^1xP^1);
  * type V: the quadric cone has no exceptional collection and Q-valued
    self-intersections, so the three ambient vectors are anchored to known
    values and cross-checked against the twist oracle in the tests.

Positivity of each twisted ch3 as b varies cuts out the admissible b-range;
endpoints are exact quadratic surds.  For type IV the derived range disagrees
with the published one, and the solver reports both rather than choosing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chern import DivisorSheafData, grr_push_divisor, grr_push_fiber_line, twist
from .lattice import ChernVector, ContractionKind, ContractionModel, cv_shift, make_model
from .rationals import InputError, fmt
from .surd import BRange, Interval, QuadExtNumber, positivity_range


@dataclass(frozen=True)
class SimpleClass:
    """A named simple class: ambient unshifted Chern vector plus shift parity."""

    name: str
    kind: ContractionKind
    chern: ChernVector
    shift: int

    @property
    def heart_class(self) -> ChernVector:
        """Class of the heart object, i.e. the shift applied."""
        return cv_shift(self.chern, self.shift)

    @property
    def is_point(self) -> bool:
        return self.name == "point"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "chern": self.chern.to_json(),
            "shift": self.shift,
            "heart_class": self.heart_class.to_json(),
        }


@dataclass(frozen=True)
class QuadPoly:
    """q(b) = q2 b^2 + q1 b + q0 with exact rational coefficients."""

    q2: Fraction
    q1: Fraction
    q0: Fraction

    def __call__(self, b: Fraction) -> Fraction:
        return self.q2 * b * b + self.q1 * b + self.q0

    def to_json(self) -> dict:
        return {"q2": fmt(self.q2), "q1": fmt(self.q1), "q0": fmt(self.q0)}


def _omega_p2(kind: ContractionKind) -> DivisorSheafData:
    """ch of the cotangent bundle on P^2 from the Euler sequence."""
    o_m1 = DivisorSheafData.line_bundle(kind, -1)
    o = DivisorSheafData.line_bundle(kind, 0)
    return o_m1.direct_sum(o_m1, 2).minus(o)


def _builders(kind: ContractionKind) -> list[tuple[str, DivisorSheafData, int]]:
    """(name, sheaf data on D, shift) triples for the smooth point contractions."""
    lb = DivisorSheafData.line_bundle
    if kind is ContractionKind.TII:
        omega_m1 = _omega_p2(kind).tensor(lb(kind, -1))
        return [
            ("O_D(-3)[2]", lb(kind, -3), 2),
            ("Omega_D(-1)[1]", omega_m1, 1),
            ("O_D(-2)", lb(kind, -2), 0),
        ]
    if kind is ContractionKind.TIII:
        # rank-3 kernel of the evaluation O(-1,0)^2 + O(0,-1)^2 -> O
        s3 = (
            lb(kind, -1, 0)
            .direct_sum(lb(kind, -1, 0))
            .direct_sum(lb(kind, 0, -1), 1)
            .direct_sum(lb(kind, 0, -1), 1)
            .minus(lb(kind, 0, 0))
        )
        return [
            ("O_D(-2,-2)[2]", lb(kind, -2, -2), 2),
            ("S3(-1,-1)[1]", s3.tensor(lb(kind, -1, -1)), 1),
            ("O_D(-1,-2)", lb(kind, -1, -2), 0),
            ("O_D(-2,-1)", lb(kind, -2, -1), 0),
        ]
    if kind is ContractionKind.TIV:
        omega = _omega_p2(kind)
        # rank-5 kernel of the evaluation Omega^3 -> O(-1)
        s4 = omega.direct_sum(omega).direct_sum(omega, 1).minus(lb(kind, -1))
        return [
            ("O_D(-3)[2]", lb(kind, -3), 2),
            ("S4(-1)[1]", s4.tensor(lb(kind, -1)), 1),
            ("Omega_D(-1)", omega.tensor(lb(kind, -1)), 0),
        ]
    raise InputError(f"no oracle catalog for kind {kind.value}")


# Ambient anchor vectors for the quadric-cone catalog: classes of the
# pushforwards of O_D(-1), the rank-3 bundle, and O_D(-C); the catalog
# entries are their twists by O_X(D).
_TV_ANCHORS = [
    ("O_D(-2)[2]", (0, (0, 1), (-1,), Fraction(1, 3)), 2),
    ("S5(-1)[1]", (0, (0, 3), (-1,), Fraction(-1)), 1),
    ("O_D(-3C)", (0, (0, 1), (0,), Fraction(-1, 6)), 0),
]


def simples(model: ContractionModel) -> list[SimpleClass]:
    """The finite catalog, with the moving point class as the last entry."""
    kind = model.kind
    entries: list[SimpleClass] = []
    if kind.is_surface:
        # a degree-k bundle on the (-1)-curve pushes to (0, C, k + 1/2)
        entries.append(SimpleClass("O_C", kind, ChernVector.surface(0, 0, 1, Fraction(1, 2)), 0))
        entries.append(
            SimpleClass("O_C(-1)[1]", kind, ChernVector.surface(0, 0, 1, Fraction(-1, 2)), 1)
        )
    elif kind is ContractionKind.TI:
        entries.append(SimpleClass("O_L(-2)[1]", kind, grr_push_fiber_line(model, -2), 1))
        entries.append(SimpleClass("O_L(-1)", kind, grr_push_fiber_line(model, -1), 0))
    elif kind is ContractionKind.TV:
        for name, (ch0, ch1, ch2, ch3), shift in _TV_ANCHORS:
            anchor = ChernVector.threefold(kind, ch0, ch1, ch2, ch3)
            entries.append(SimpleClass(name, kind, twist(model, anchor, -1), shift))
    else:
        for name, fd, shift in _builders(kind):
            entries.append(SimpleClass(name, kind, grr_push_divisor(model, fd), shift))
    entries.append(SimpleClass("point", kind, ChernVector.point_class(kind), 0))
    return entries


def twisted_ch3_poly(model: ContractionModel, s: SimpleClass) -> QuadPoly:
    """ch3 of the twisted heart class e^{-bD}.s, as a polynomial in b."""
    if not model.kind.is_threefold:
        raise InputError("twisted_ch3_poly: model must be a 3-fold contraction")
    if s.kind is not model.kind:
        raise InputError("twisted_ch3_poly: catalog entry does not match the model")
    v = s.chern
    if v.ch0 != 0:
        raise InputError("twisted_ch3_poly: catalog classes must have ch0 = 0")
    sign = -1 if s.shift % 2 else 1
    x, y = v.ch1
    q0 = v.ch3
    q1 = -model.d_dot_curve(v.ch2)
    q2 = (x * model.fw_dsq + y * model.d_cube) / 2
    return QuadPoly(sign * q2, sign * q1, sign * q0)


# Published admissible ranges, used as a cross-check against the derived ones.
def _published_range(kind: ContractionKind) -> BRange:
    half = Fraction(1, 2)
    if kind is ContractionKind.TI:
        return BRange([Interval(QuadExtNumber.rational(half), QuadExtNumber.rational(3 * half))])
    if kind is ContractionKind.TII:
        return BRange([
            Interval(QuadExtNumber(Fraction(2), Fraction(-1, 3), 6),
                     QuadExtNumber(Fraction(2), Fraction(1, 3), 6)),
        ])
    if kind in (ContractionKind.TIII, ContractionKind.TV):
        return BRange([
            Interval(QuadExtNumber(Fraction(7, 6), Fraction(-1, 6), 13),
                     QuadExtNumber(Fraction(1), Fraction(-1, 6), 6)),
            Interval(QuadExtNumber(Fraction(1), Fraction(1, 6), 6),
                     QuadExtNumber(Fraction(7, 6), Fraction(1, 6), 13)),
        ])
    if kind is ContractionKind.TIV:
        return BRange([
            Interval(QuadExtNumber(Fraction(3, 4), Fraction(1, 12), 15),
                     QuadExtNumber(Fraction(4, 5), Fraction(1, 6), 6)),
        ])
    raise InputError(f"no published range for kind {kind.value}")


@dataclass
class BRangeReport:
    """Derived range, the published one, and any disagreement between them."""

    kind: ContractionKind
    derived: BRange
    published: BRange
    constraints: list[tuple[str, QuadPoly]] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.discrepancies

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "derived": self.derived.to_json(),
            "published": self.published.to_json(),
            "constraints": {name: q.to_json() for name, q in self.constraints},
            "discrepancies": list(self.discrepancies),
            "agrees": self.agrees,
        }


def solve_b_range(model: ContractionModel) -> BRangeReport:
    """Intersect {q_s(b) > 0} over the catalog; inequalities are strict.

    Both the catalog-derived range and the published one are reported; any
    difference is flagged, never silently resolved.
    """
    if not model.kind.is_threefold:
        raise InputError("solve_b_range: model must be a 3-fold contraction")
    derived = BRange.all()
    constraints = []
    for s in simples(model):
        q = twisted_ch3_poly(model, s)
        constraints.append((s.name, q))
        derived = derived.intersect(positivity_range(q.q2, q.q1, q.q0))
    published = _published_range(model.kind)
    discrepancies = []
    if derived != published:
        discrepancies = _describe_discrepancy(derived, published)
    return BRangeReport(model.kind, derived, published, constraints, discrepancies)


def _describe_discrepancy(derived: BRange, published: BRange) -> list[str]:
    notes = []
    pub = {(iv.lo, iv.hi) for iv in published.intervals}
    for iv in derived.intervals:
        match = next((p for p in published.intervals if p.lo == iv.lo or p.hi == iv.hi), None)
        if match is None:
            notes.append(
                f"derived component ({iv.lo}, {iv.hi}) "
                f"[~({iv.lo.approx()}, {iv.hi.approx()})] is absent from the published range"
            )
            continue
        if match.lo != iv.lo:
            notes.append(
                f"lower endpoint: derived {iv.lo} (~{iv.lo.approx()}) vs "
                f"published {match.lo} (~{match.lo.approx()})"
            )
        if match.hi != iv.hi:
            notes.append(
                f"upper endpoint: derived {iv.hi} (~{iv.hi.approx()}) vs "
                f"published {match.hi} (~{match.hi.approx()})"
            )
        pub.discard((match.lo, match.hi))
    for lo, hi in pub:
        notes.append(
            f"published component ({lo}, {hi}) does not appear in the derived range"
        )
    if not notes:
        notes.append("derived and published ranges differ")
    return notes


def surface_catalog_by_name(w=1) -> dict[str, SimpleClass]:
    """Convenience index of the surface catalog (w only affects the model)."""
    model = make_model(ContractionKind.SURFACE, w)
    return {s.name: s for s in simples(model)}

"""Twisted Chern characters and the pushforward oracle for divisor sheaves.

The twist by a rational multiple b of the exceptional divisor is the exact
multiplication by e^{-bD} truncated in degree 3.  Catalog classes for the
smooth exceptional divisors (P^2, P^1xP^1) are derived here through the
standard divisor-inclusion pushforward

    ch(i_* F) = i_*( ch(F) . td(N)^{-1} ),   td(N)^{-1} = 1 - n/2 + n^2/6,

with n = c1(O_D(D)).  Formal degree-2 terms on D are kept before pushing even
when they vanish in the ambient ring; dropping them corrupts ch3.  The
ch3 normalization is pinned by the requirement that the printed type V
vectors and all five twisted-positivity ranges are reproduced exactly.

The quadric cone (type V) has Q-valued self-intersection C.C = 1/2 on its
ruling; the naive formula above is only trusted there for pullback line
bundles, and the type V catalog is anchored to known ambient vectors instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    AMBIENT_CURVE,
    ChernVector,
    ContractionKind,
    ContractionModel,
    pair_curve_divisor,
    parse_rational,
)
from .rationals import InputError

# Picard generators of the exceptional divisor, per type
_PIC_GENS = {
    ContractionKind.TII: ("H",),
    ContractionKind.TIII: ("H1", "H2"),
    ContractionKind.TIV: ("H",),
    ContractionKind.TV: ("C", "h"),
}

# c1(O_D(D)) in those generators
_NORMAL_C1 = {
    ContractionKind.TII: (Fraction(-1),),
    ContractionKind.TIII: (Fraction(-1), Fraction(-1)),
    ContractionKind.TIV: (Fraction(-2),),
    ContractionKind.TV: (Fraction(0), Fraction(-1)),
}


def _pic_pairing(kind: ContractionKind, a: tuple, b: tuple) -> Fraction:
    """Intersection number of two divisor classes on D."""
    if kind in (ContractionKind.TII, ContractionKind.TIV):
        return a[0] * b[0]
    if kind is ContractionKind.TIII:
        return a[0] * b[1] + a[1] * b[0]
    # quadric cone: h = 2C and C.C = 1/2
    ga = a[0] + 2 * a[1]
    gb = b[0] + 2 * b[1]
    return Fraction(ga * gb, 2)


@dataclass(frozen=True)
class DivisorSheafData:
    """Chern data (rank, c1, ch2) of a sheaf on the exceptional divisor D."""

    kind: ContractionKind
    rank: Fraction
    c1: tuple[Fraction, ...]
    ch2: Fraction

    @classmethod
    def make(cls, kind: ContractionKind, rank, c1, ch2) -> "DivisorSheafData":
        gens = _PIC_GENS.get(kind)
        if gens is None:
            raise InputError("divisor sheaf: kind must contract D to a point (TII-TV)")
        c1 = tuple(parse_rational(v, "c1") for v in c1)
        if len(c1) != len(gens):
            raise InputError(f"divisor sheaf: c1 needs {len(gens)} coordinates over {gens}")
        return cls(kind, parse_rational(rank, "rank"), c1, parse_rational(ch2, "ch2"))

    @classmethod
    def line_bundle(cls, kind: ContractionKind, *degrees) -> "DivisorSheafData":
        """O_D(c1) for c1 given in the Picard generators of D."""
        if kind not in _PIC_GENS:
            raise InputError("divisor sheaf: kind must contract D to a point (TII-TV)")
        c1 = tuple(Fraction(d) for d in degrees)
        if len(c1) != len(_PIC_GENS[kind]):
            raise InputError(f"divisor sheaf: need {len(_PIC_GENS[kind])} degrees for {kind.value}")
        half_sq = _pic_pairing(kind, c1, c1) / 2
        return cls.make(kind, 1, c1, half_sq)

    def tensor(self, other: "DivisorSheafData") -> "DivisorSheafData":
        """Truncated product of Chern characters on D."""
        if self.kind is not other.kind:
            raise InputError("divisor sheaf: mismatched kinds in tensor")
        c1 = tuple(a * other.rank + b * self.rank for a, b in zip(self.c1, other.c1))
        ch2 = (
            self.rank * other.ch2
            + other.rank * self.ch2
            + _pic_pairing(self.kind, self.c1, other.c1)
        )
        return DivisorSheafData(self.kind, self.rank * other.rank, c1, ch2)

    def direct_sum(self, other: "DivisorSheafData", mult: int = 1) -> "DivisorSheafData":
        if self.kind is not other.kind:
            raise InputError("divisor sheaf: mismatched kinds in sum")
        return DivisorSheafData(
            self.kind,
            self.rank + mult * other.rank,
            tuple(a + mult * b for a, b in zip(self.c1, other.c1)),
            self.ch2 + mult * other.ch2,
        )

    def minus(self, other: "DivisorSheafData") -> "DivisorSheafData":
        return self.direct_sum(other, mult=-1)

    def twist_by_normal(self, k: int) -> "DivisorSheafData":
        """Tensor with O_D(kD); multiplies ch by e^{k.c1(O_D(D))}."""
        n = _NORMAL_C1[self.kind]
        exp = DivisorSheafData(
            self.kind,
            Fraction(1),
            tuple(k * v for v in n),
            Fraction(k * k) * _pic_pairing(self.kind, n, n) / 2,
        )
        return self.tensor(exp)


def twist(model: ContractionModel, v: ChernVector, b) -> ChernVector:
    """e^{-bD} . v, exact and truncated at the top degree.

    Surfaces carry no divisor twist in this setup; only b = 0 is accepted
    there.
    """
    b = parse_rational(b, "b")
    if v.kind is not model.kind:
        raise InputError("twist: class kind does not match the model")
    if model.kind.is_surface:
        if b != 0:
            raise InputError("twist: surface models only support b = 0")
        return v
    x, y = v.ch1
    r = v.ch0
    # D.ch1 as a curve class
    fw_d = model.fw_dot_d_curve()
    d_ch1 = tuple(x * fd + y * ds for fd, ds in zip(fw_d, model.dsq_curve))
    ch1 = (x, y - b * r)
    ch2 = tuple(
        c - b * dc + (b * b / 2) * r * ds
        for c, dc, ds in zip(v.ch2, d_ch1, model.dsq_curve)
    )
    d_ch2 = model.d_dot_curve(v.ch2)
    dsq_ch1 = x * model.fw_dsq + y * model.d_cube
    ch3 = (
        v.ch3
        - b * d_ch2
        + (b * b / 2) * dsq_ch1
        - (b**3 / 6) * r * model.d_cube
    )
    return ChernVector(model.kind, r, ch1, ch2, ch3)


def grr_push_divisor(model: ContractionModel, fd: DivisorSheafData) -> ChernVector:
    """ch(i_* F) for F on the exceptional divisor of a point contraction."""
    if not model.kind.contracts_to_point:
        raise InputError("grr_push_divisor: model must contract D to a point (TII-TV)")
    if fd.kind is not model.kind:
        raise InputError("grr_push_divisor: sheaf data kind does not match the model")
    n = _NORMAL_C1[model.kind]
    n_sq = _pic_pairing(model.kind, n, n)
    # ch(F) . td(N)^{-1} on D, keeping the formal degree-2 term
    deg1 = tuple(c - (fd.rank / 2) * m for c, m in zip(fd.c1, n))
    deg2 = fd.ch2 - _pic_pairing(model.kind, fd.c1, n) / 2 + (fd.rank / 6) * n_sq
    return ChernVector(
        model.kind,
        Fraction(0),
        (Fraction(0), fd.rank),
        _push_curve(model.kind, deg1),
        deg2,
    )


def _push_curve(kind: ContractionKind, c1: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Send a divisor class on D to its curve class in the ambient lattice."""
    if kind in (ContractionKind.TII, ContractionKind.TIV):
        exc = (c1[0],)
    elif kind is ContractionKind.TIII:
        exc = (c1[0], c1[1])
    else:  # quadric cone: everything is a rational multiple of the ruling
        exc = (c1[0] + 2 * c1[1],)
    return exc + (Fraction(0),)


def grr_push_fiber_line(model: ContractionModel, k: int) -> ChernVector:
    """ch(i_* O_L(k)) for a fiber line L of a type I contraction.

    The normal bundle of a fiber is O + O(-1), so the pushforward is
    (0, 0, L, k + 1/2).
    """
    if model.kind is not ContractionKind.TI:
        raise InputError("grr_push_fiber_line: model must be type I")
    if not isinstance(k, int):
        raise InputError("grr_push_fiber_line: k must be an integer")
    return ChernVector.threefold(
        ContractionKind.TI, 0, (0, 0), (1, 0), Fraction(2 * k + 1, 2)
    )


def euler_pairing_surface(model: ContractionModel, v: ChernVector, w: ChernVector) -> Fraction:
    """chi(v, w) on the surface via Riemann-Roch.

    Uses K_X = f*K_Y + C (so K_X.C = -1 always) and td_2(X) = chi(O_X).
    The pairings K_Y.omega and chi(O_X) enter only when the corresponding
    terms survive; they must then be present in the model's canonical data.
    """
    if not model.kind.is_surface:
        raise InputError("euler_pairing_surface: model must be a surface blow-down")
    if v.kind is not model.kind or w.kind is not model.kind:
        raise InputError("euler_pairing_surface: class kind does not match the model")
    e0, (ex, ea), e2 = v.ch0, v.ch1, v.ch2
    f0, (fx, fa), f2 = w.ch0, w.ch1, w.ch2
    total = e0 * f2 + e2 * f0
    total -= ex * fx * model.w - ea * fa  # ch1(v).ch1(w)
    kx_coeff = e0 * fx - ex * f0  # fw-part of e0.ch1(w) - ch1(v).f0
    kc_coeff = e0 * fa - ea * f0  # C-part
    total += kc_coeff / 2  # -(K_X/2) paired with the C-part, K_X.C = -1
    if kx_coeff != 0 or e0 * f0 != 0:
        if model.canonical is None:
            raise InputError(
                "euler_pairing_surface: canonical_data (K_Y.omega, chi(O_X)) "
                "is required for classes with surviving rank terms"
            )
        total -= kx_coeff * model.canonical.ky_dot_omega / 2
        total += e0 * f0 * model.canonical.chi_o
    return total


# Ambient curve-class helper used by tests and the service layer.
def ambient_curve_class(model: ContractionModel, fw2_coeff) -> tuple[Fraction, ...]:
    """Curve coordinates of a class pairing to fw2_coeff with fw and to 0 with D."""
    coeff = parse_rational(fw2_coeff, AMBIENT_CURVE)
    zeros = [Fraction(0)] * len(model.curve_basis)
    return tuple(zeros) + (coeff,)


def push_trace(model: ContractionModel, fd: DivisorSheafData) -> dict:
    """Step-by-step audit record of one divisor pushforward, JSON-ready."""
    from .rationals import fmt

    gens = _PIC_GENS[model.kind]
    n = _NORMAL_C1[model.kind]
    n_sq = _pic_pairing(model.kind, n, n)
    deg1 = tuple(c - (fd.rank / 2) * m for c, m in zip(fd.c1, n))
    deg2 = fd.ch2 - _pic_pairing(model.kind, fd.c1, n) / 2 + (fd.rank / 6) * n_sq

    def pic(coords):
        return {g: fmt(c) for g, c in zip(gens, coords)}

    return {
        "input": {"rank": fmt(fd.rank), "c1": pic(fd.c1), "ch2": fmt(fd.ch2)},
        "normal_c1": pic(n),
        "td_inverse": {
            "deg1": pic(tuple(-m / 2 for m in n)),
            "deg2": fmt(n_sq / 6),
        },
        "product_on_divisor": {"deg1": pic(deg1), "deg2": fmt(deg2)},
        "pushed": grr_push_divisor(model, fd).to_json(),
    }

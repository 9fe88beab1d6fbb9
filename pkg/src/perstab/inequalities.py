"""Bogomolov-Gieseker inequality margins and the support-property norm.

Each checker reports the exact margin (LHS - RHS, after moving everything to
one side) together with the boolean verdict, so callers can distinguish
equality cases.  Square roots are avoided by working with squared quantities;
the only root in the support norm is sqrt(-beta_minus^2) = |a| for
ch1 = x fw + a C, which is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charges import z_surface
from .chern import twist
from .lattice import ChernVector, ContractionModel
from .rationals import InputError, fmt, parse_rational


@dataclass(frozen=True)
class BGReport:
    margin: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {"margin": fmt(self.margin), "holds": self.holds}


def _ch1_sq_dot_fw(model: ContractionModel, v: ChernVector) -> Fraction:
    """(ch1)^2 . fw on a 3-fold, through the mixed pairing table."""
    x, y = v.ch1
    return x * x * model.w + 2 * x * y * model.fwsq_d + y * y * model.fw_dsq


def bg_discriminant(model: ContractionModel, v: ChernVector) -> BGReport:
    """ch1^2 - 2 ch0 ch2 (surface) or (ch1^2 - 2 ch0 ch2) . fw (3-fold)."""
    if v.kind is not model.kind:
        raise InputError("bg_discriminant: class kind does not match the model")
    if model.kind.is_surface:
        x, a = v.ch1
        margin = x * x * model.w - a * a - 2 * v.ch0 * v.ch2
    else:
        margin = _ch1_sq_dot_fw(model, v) - 2 * v.ch0 * model.fw_dot_curve(v.ch2)
    return BGReport(margin, margin >= 0)


def bg_weak_surface(model: ContractionModel, v: ChernVector) -> BGReport:
    """(ch1 . fw)^2 - 2 w ch0 ch2."""
    if not model.kind.is_surface:
        raise InputError("bg_weak_surface: model must be a surface blow-down")
    if v.kind is not model.kind:
        raise InputError("bg_weak_surface: class kind does not match the model")
    x, _a = v.ch1
    margin = (x * model.w) ** 2 - 2 * model.w * v.ch0 * v.ch2
    return BGReport(margin, margin >= 0)


def bg_strong_margin(model: ContractionModel, v: ChernVector, c_omega, threshold=0) -> BGReport:
    """ch1^2 - 2 ch0 ch2 + c_omega (ch1.fw)^2 / w, against 0 or -1.

    The constant c_omega is caller-supplied; only its existence is proved,
    never a value.
    """
    if not model.kind.is_surface:
        raise InputError("bg_strong_margin: model must be a surface blow-down")
    if v.kind is not model.kind:
        raise InputError("bg_strong_margin: class kind does not match the model")
    c_omega = parse_rational(c_omega, "c_omega")
    threshold = parse_rational(threshold, "threshold")
    if threshold not in (Fraction(0), Fraction(-1)):
        raise InputError("bg_strong_margin: threshold must be 0 or -1")
    x, a = v.ch1
    lhs = x * x * model.w - a * a - 2 * v.ch0 * v.ch2 + c_omega * (x * model.w) ** 2 / model.w
    margin = lhs - threshold
    return BGReport(margin, margin >= 0)


def bg_threefold_margin(model: ContractionModel, b, v: ChernVector) -> BGReport:
    """(ch1 . fw^2)^2 - 2 w ch0 (ch2^{bD} . fw) for positive-rank classes."""
    if not model.kind.is_threefold:
        raise InputError("bg_threefold_margin: model must be a 3-fold contraction")
    if v.kind is not model.kind:
        raise InputError("bg_threefold_margin: class kind does not match the model")
    if v.ch0 <= 0:
        raise InputError("bg_threefold_margin: ch0 must be positive")
    x, y = v.ch1
    lhs = (x * model.w + y * model.fwsq_d) ** 2
    tv = twist(model, v, b)
    rhs = 2 * model.w * v.ch0 * model.fw_dot_curve(tv.ch2)
    margin = lhs - rhs
    return BGReport(margin, margin >= 0)


def support_norm(model: ContractionModel, v: ChernVector) -> Fraction:
    """max(|r|, |n|, |beta_+ . fw|, sqrt(-beta_-^2)) for ch1 = x fw + a C."""
    if not model.kind.is_surface:
        raise InputError("support_norm: model must be a surface blow-down")
    if v.kind is not model.kind:
        raise InputError("support_norm: class kind does not match the model")
    x, a = v.ch1
    return max(abs(v.ch0), abs(v.ch2), abs(x) * model.w, abs(a))


def support_ratio_sq(model: ContractionModel, v: ChernVector) -> Fraction:
    """||v||^2 / |Z(v)|^2, the squared support-property ratio."""
    z = z_surface(model, v)
    if z.is_zero():
        raise InputError("support_ratio_sq: the charge vanishes on this class")
    return support_norm(model, v) ** 2 / (z.re * z.re + z.im * z.im)

"""Exact arithmetic for quadratic surds p + q*sqrt(d) and unions of open intervals.

All range endpoints produced by the twisted-ch3 solver live in real quadratic
extensions of Q.  Comparisons never go through floating point: a single surd
has a computable sign (square and track signs), and two surds over different
squarefree d are compared by squaring once more.  Decimal renderings exist
only for display and are marked non-authoritative.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .rationals import InputError, fmt


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n >= 0 as s^2 * d with d squarefree; returns (s, d)."""
    if n < 0:
        raise ValueError("squarefree_decompose needs a nonnegative integer")
    if n == 0:
        return 0, 1
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * n


def sqrt_rational(r: Fraction) -> tuple[Fraction, int]:
    """Exact sqrt(r) = c*sqrt(d) for r >= 0; returns (c, d) with d squarefree."""
    if r < 0:
        raise ValueError("sqrt_rational needs a nonnegative rational")
    s, d = squarefree_decompose(r.numerator * r.denominator)
    return Fraction(s, r.denominator), d


@dataclass(frozen=True)
class QuadExtNumber:
    """p + q*sqrt(d) with p, q rational and d a squarefree positive integer.

    The normalized form (q = 0 forces d = 1; square parts of d folded into q)
    is unique, so structural equality is numerical equality.  Order
    comparisons work across different d.
    """

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self):
        p, q, d = Fraction(self.p), Fraction(self.q), self.d
        if d <= 0:
            raise ValueError("d must be a positive integer")
        s, d0 = squarefree_decompose(d)
        if s != 1:
            q, d = q * s, d0
        if q == 0:
            d = 1
        if d == 1:
            p, q = p + q, Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    @classmethod
    def rational(cls, p) -> "QuadExtNumber":
        return cls(Fraction(p), Fraction(0), 1)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 with q^2 d, the larger magnitude wins
        lhs, rhs = p * p, q * q * d
        if lhs == rhs:
            return 0
        big_is_p = lhs > rhs
        return (1 if p > 0 else -1) if big_is_p else (1 if q > 0 else -1)

    def __neg__(self) -> "QuadExtNumber":
        return QuadExtNumber(-self.p, -self.q, self.d)

    def shift(self, r: Fraction) -> "QuadExtNumber":
        return QuadExtNumber(self.p + r, self.q, self.d)

    def scale(self, r: Fraction) -> "QuadExtNumber":
        return QuadExtNumber(self.p * r, self.q * r, self.d)

    def _cmp(self, other: "QuadExtNumber") -> int:
        """Sign of self - other, exactly, allowing different d."""
        if self.d == other.d or other.q == 0:
            return QuadExtNumber(self.p - other.p, self.q - other.q, self.d).sign()
        if self.q == 0:
            return -QuadExtNumber(other.p - self.p, other.q, other.d).sign()
        # sign of (A + B*sqrt(m)) - C*sqrt(n), all of A,B,C nonzero paths on
        # distinct squarefree m != n: compare by squaring once.
        lhs = QuadExtNumber(self.p - other.p, self.q, self.d)
        s_l = lhs.sign()
        s_r = 1 if other.q > 0 else -1
        if s_l != s_r:
            return 1 if s_l > s_r else -1
        # both sides share a strict sign: compare squares
        sq = QuadExtNumber(
            (self.p - other.p) ** 2 + self.q**2 * self.d - other.q**2 * other.d,
            2 * (self.p - other.p) * self.q,
            self.d,
        )
        return sq.sign() * s_l

    def __lt__(self, other) -> bool:
        return self._cmp(_coerce(other)) < 0

    def __le__(self, other) -> bool:
        return self._cmp(_coerce(other)) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(_coerce(other)) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(_coerce(other)) >= 0

    def approx(self, sig: int = 12) -> str:
        """Decimal rendering with `sig` significant digits; display only."""
        guard = sig + 25
        scale = 10**guard
        root = Fraction(isqrt(self.d * scale * scale), scale)
        val = self.p + self.q * root
        with decimal.localcontext() as ctx:
            ctx.prec = sig
            dec = decimal.Decimal(val.numerator) / decimal.Decimal(val.denominator)
        return str(dec)

    def approx_fraction(self, guard: int = 30) -> Fraction:
        """Rational approximation within 10^-guard; display/sampling only."""
        scale = 10**guard
        root = Fraction(isqrt(self.d * scale * scale), scale)
        return self.p + self.q * root

    def __str__(self) -> str:
        if self.q == 0:
            return fmt(self.p)
        return f"{fmt(self.p)} + {fmt(self.q)}*sqrt({self.d})"

    def to_json(self) -> dict:
        return {"p": fmt(self.p), "q": fmt(self.q), "d": self.d, "approx": self.approx()}


def _coerce(x) -> QuadExtNumber:
    if isinstance(x, QuadExtNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadExtNumber.rational(x)
    raise TypeError(f"cannot compare QuadExtNumber with {type(x).__name__}")


class _Infinity:
    """Endpoint sentinel; compared by identity, two singletons below."""

    def __init__(self, sgn: int):
        self.sgn = sgn

    def __repr__(self) -> str:
        return "-inf" if self.sgn < 0 else "+inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(+1)


def _ep_lt(a, b) -> bool:
    """a < b for endpoints (QuadExtNumber or the infinity sentinels)."""
    if a is NEG_INF:
        return b is not NEG_INF
    if a is POS_INF:
        return False
    if b is NEG_INF:
        return False
    if b is POS_INF:
        return True
    return a < b


def _ep_max(a, b):
    return b if _ep_lt(a, b) else a


def _ep_min(a, b):
    return a if _ep_lt(a, b) else b


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); endpoints are surds or infinity sentinels."""

    lo: object
    hi: object

    def is_empty(self) -> bool:
        if self.lo is NEG_INF or self.hi is POS_INF:
            return self.lo is POS_INF or self.hi is NEG_INF
        return not _ep_lt(self.lo, self.hi)

    def contains(self, x: Fraction) -> bool:
        xs = QuadExtNumber.rational(x)
        below = self.lo is NEG_INF or self.lo < xs
        above = self.hi is POS_INF or xs < self.hi
        return below and above

    def to_json(self) -> dict:
        def ep(e):
            if isinstance(e, _Infinity):
                return {"inf": "-" if e.sgn < 0 else "+"}
            return e.to_json()

        return {"lo": ep(self.lo), "hi": ep(self.hi)}


class BRange:
    """Finite union of disjoint open intervals, sorted left to right."""

    def __init__(self, intervals: list[Interval] | None = None):
        items = [iv for iv in (intervals or []) if not iv.is_empty()]
        items.sort(key=lambda iv: _SortKey(iv.lo))
        # overlapping intervals merge; touching open intervals (a,b),(b,c)
        # stay separate because b itself is excluded
        merged: list[Interval] = []
        for iv in items:
            if merged and _ep_lt(iv.lo, merged[-1].hi):
                merged[-1] = Interval(merged[-1].lo, _ep_max(merged[-1].hi, iv.hi))
            else:
                merged.append(iv)
        self.intervals = merged

    @classmethod
    def all(cls) -> "BRange":
        return cls([Interval(NEG_INF, POS_INF)])

    @classmethod
    def empty(cls) -> "BRange":
        return cls([])

    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, x: Fraction) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def intersect(self, other: "BRange") -> "BRange":
        out = []
        for a in self.intervals:
            for b in other.intervals:
                out.append(Interval(_ep_max(a.lo, b.lo), _ep_min(a.hi, b.hi)))
        return BRange(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BRange):
            return NotImplemented
        return self.intervals == other.intervals

    def sample_points(self) -> list[Fraction]:
        """One exact rational strictly inside each interval.

        Rational approximations of the endpoints are refined until the exact
        membership check passes, so the result is certified, not heuristic.
        """
        points = []
        for iv in self.intervals:
            if iv.lo is NEG_INF and iv.hi is POS_INF:
                points.append(Fraction(0))
                continue
            for guard in (30, 60, 120):
                if iv.lo is NEG_INF:
                    cand = iv.hi.approx_fraction(guard) - 1
                elif iv.hi is POS_INF:
                    cand = iv.lo.approx_fraction(guard) + 1
                else:
                    cand = (iv.lo.approx_fraction(guard) + iv.hi.approx_fraction(guard)) / 2
                cand = cand.limit_denominator(10 ** (guard // 2))
                if iv.contains(cand):
                    points.append(cand)
                    break
            else:
                raise InputError("interval too thin to sample; widen the guard precision")
        return points

    def to_json(self) -> dict:
        return {"intervals": [iv.to_json() for iv in self.intervals]}

    def __repr__(self) -> str:
        if not self.intervals:
            return "BRange(empty)"
        parts = []
        for iv in self.intervals:
            lo = "-inf" if iv.lo is NEG_INF else str(iv.lo)
            hi = "+inf" if iv.hi is POS_INF else str(iv.hi)
            parts.append(f"({lo}, {hi})")
        return " u ".join(parts)


class _SortKey:
    def __init__(self, ep):
        self.ep = ep

    def __lt__(self, other: "_SortKey") -> bool:
        return _ep_lt(self.ep, other.ep)


def positivity_range(q2: Fraction, q1: Fraction, q0: Fraction) -> BRange:
    """{b : q2*b^2 + q1*b + q0 > 0} as a union of open intervals."""
    if q2 == 0:
        if q1 == 0:
            return BRange.all() if q0 > 0 else BRange.empty()
        root = QuadExtNumber.rational(-q0 / q1)
        if q1 > 0:
            return BRange([Interval(root, POS_INF)])
        return BRange([Interval(NEG_INF, root)])
    disc = q1 * q1 - 4 * q2 * q0
    if disc < 0:
        return BRange.all() if q2 > 0 else BRange.empty()
    if disc == 0:
        if q2 < 0:
            return BRange.empty()
        root = QuadExtNumber.rational(-q1 / (2 * q2))
        return BRange([Interval(NEG_INF, root), Interval(root, POS_INF)])
    c, d = sqrt_rational(disc)
    half = c / (2 * abs(q2))
    center = -q1 / (2 * q2)
    r1 = QuadExtNumber(center, -half, d)
    r2 = QuadExtNumber(center, half, d)
    if q2 > 0:
        return BRange([Interval(NEG_INF, r1), Interval(r2, POS_INF)])
    return BRange([Interval(r1, r2)])

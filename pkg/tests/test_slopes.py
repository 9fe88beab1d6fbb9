import random
from fractions import Fraction as F

import pytest

from perstab.charges import z_threefold
from perstab.lattice import ChernVector, ContractionKind, InputError, make_model
from perstab.slopes import ExtendedSlope, HeartCase, mu, nu, trichotomy

from conftest import rand_fraction


class TestMu:
    def test_surface_example(self, surface):
        v = ChernVector.surface(2, 1, 5, 0)  # ch1 = fw + 5C
        assert mu(surface, v) == ExtendedSlope.of(F(1, 2))

    def test_rank_zero_is_infinite(self, surface):
        oc = ChernVector.surface(0, 0, 1, F(1, 2))
        assert not mu(surface, oc).finite

    def test_threefold_divisor_is_invisible(self, tv):
        v = ChernVector.threefold(tv.kind, 1, (0, 1), (0,), 0)
        assert mu(tv, v) == ExtendedSlope.of(F(0))

    def test_negative_rank_rejected(self, surface):
        with pytest.raises(InputError):
            mu(surface, ChernVector.surface(-1, 0, 0, 0))

    def test_infinite_dominates(self):
        assert ExtendedSlope.of(F(10**9)) < ExtendedSlope.infinite()
        assert not ExtendedSlope.infinite() < ExtendedSlope.of(F(0))
        assert ExtendedSlope.infinite() == ExtendedSlope.infinite()

    def test_weak_seesaw(self, surface):
        rng = random.Random(17)
        for _ in range(200):
            v = ChernVector.surface(rng.randint(1, 5), rand_fraction(rng),
                                    rand_fraction(rng), rand_fraction(rng))
            w = ChernVector.surface(rng.randint(1, 5), rand_fraction(rng),
                                    rand_fraction(rng), rand_fraction(rng))
            u = v + w
            slopes = sorted([mu(surface, v).value, mu(surface, w).value])
            assert slopes[0] <= mu(surface, u).value <= slopes[1]


class TestNu:
    def test_pullback_divisor_class(self, tv):
        v = ChernVector.threefold(tv.kind, 0, (1, 0), (0,), 0)
        assert nu(tv, 0, v) == ExtendedSlope.of(F(0))

    def test_point_class(self, tv):
        s = nu(tv, 0, ChernVector.point_class(tv.kind))
        assert not s.finite and s.im_at_infinity == 0

    def test_structure_sheaf_records_im(self):
        m = make_model("TV", 6)
        v = ChernVector.threefold(m.kind, 1, (0, 0), (0,), 0)
        s = nu(m, 0, v)
        assert not s.finite and s.im_at_infinity == -1

    def test_negative_denominator_rejected(self, tv):
        with pytest.raises(InputError):
            nu(tv, 0, ChernVector.threefold(tv.kind, 0, (-1, 0), (0,), 0))

    def test_sign_agrees_with_charge(self, threefold):
        rng = random.Random(23)
        for _ in range(100):
            x = F(rng.randint(1, 6), rng.randint(1, 4))
            v = ChernVector.threefold(
                threefold.kind, rand_fraction(rng), (x, rand_fraction(rng)),
                tuple(rand_fraction(rng) for _ in range(len(threefold.curve_basis) + 1)),
                rand_fraction(rng),
            )
            b = rand_fraction(rng)
            s = nu(threefold, b, v)
            im = z_threefold(threefold, b, v).im
            assert s.finite
            assert (s.value > 0) == (im > 0) and (s.value == 0) == (im == 0)


class TestTrichotomy:
    def test_point_class_case_c(self, tv):
        assert trichotomy(tv, F(3, 2), ChernVector.point_class(tv.kind)) is HeartCase.CASE_C

    def test_negative_rank_case_b(self):
        m = make_model("TV", 6)
        v = ChernVector.threefold(m.kind, -1, (0, 0), (0,), 0)
        assert trichotomy(m, 0, v) is HeartCase.CASE_B

    def test_pullback_case_a(self, tv):
        v = ChernVector.threefold(tv.kind, 0, (1, 0), (0,), 0)
        assert trichotomy(tv, 0, v) is HeartCase.CASE_A

    def test_violation_outcomes(self, tv):
        # negative fw-degree, and the zero-ish class with re >= 0
        v = ChernVector.threefold(tv.kind, 0, (-1, 0), (0,), 0)
        assert trichotomy(tv, 0, v) is HeartCase.VIOLATION
        w = ChernVector.threefold(tv.kind, 0, (0, 0), (0,), -1)
        assert trichotomy(tv, 0, w) is HeartCase.VIOLATION

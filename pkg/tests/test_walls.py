import itertools
import random
from fractions import Fraction as F

import pytest

from perstab.charges import Order
from perstab.lattice import ChernVector, InputError
from perstab.walls import (
    EpsPoly,
    Verdict,
    family_charge,
    moduli_objects,
    phase_order_family,
    solve_wall_param,
    stability_verdict,
)

from conftest import rand_surface_class


def oc():
    return ChernVector.surface(0, 0, 1, F(1, 2))


def ocm1_shifted():
    return ChernVector.surface(0, 0, -1, F(1, 2))


def point():
    return ChernVector.surface(0, 0, 0, 1)


class TestEpsPoly:
    def test_sign_is_lexicographic(self):
        assert EpsPoly.of(0, 0, F(-1, 7)).sign() == -1
        assert EpsPoly.of(0, F(1, 9), -100).sign() == 1
        assert EpsPoly.of().sign() == 0

    def test_algebra(self):
        p = EpsPoly.of(1, 2)
        q = EpsPoly.of(0, -2, 3)
        assert (p + q).coeffs == (F(1), F(0), F(3))
        assert (p * q).coeffs == (F(0), F(-2), F(-1), F(6))
        assert (p - p).is_zero()


class TestFamilyCharge:
    def test_oc_at_negative_t(self, surface):
        re, im = family_charge(surface, oc(), -1)
        assert re.coeffs == (F(-1, 2),)
        assert im.coeffs == (F(0), F(1))  # +eps

    def test_ocm1_at_negative_t(self, surface):
        re, im = family_charge(surface, ocm1_shifted(), -1)
        assert re.coeffs == (F(-1, 2),)
        assert im.coeffs == (F(0), F(-1))

    def test_point_any_t(self, surface):
        for t in (F(-1), F(0), F(5, 7)):
            re, im = family_charge(surface, point(), t)
            assert re.coeffs == (F(-1),) and im.is_zero()

    def test_rank_sees_second_order(self, surface):
        re, _ = family_charge(surface, ChernVector.surface(2, 0, 0, 0), F(3))
        assert re.coeffs == (F(1), F(0), F(-9))  # w/2*ch0 - (t eps)^2 ch0 / 2


class TestPhaseOrder:
    def test_wall_flip(self, surface):
        a, b = oc(), ocm1_shifted()
        assert phase_order_family(surface, a, b, -1) is Order.LESS
        assert phase_order_family(surface, a, b, 1) is Order.GREATER
        assert phase_order_family(surface, a, b, 0) is Order.EQUAL

    def test_antisymmetric(self, surface):
        rng = random.Random(31)
        flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS,
                Order.EQUAL: Order.EQUAL}
        count = 0
        while count < 60:
            va, vb = rand_surface_class(rng), rand_surface_class(rng)
            t = F(rng.randint(-4, 4), rng.randint(1, 3))
            try:
                ab = phase_order_family(surface, va, vb, t)
            except InputError:
                continue
            count += 1
            assert phase_order_family(surface, vb, va, t) is flip[ab]

    def test_zero_charge_rejected(self, surface):
        zero = ChernVector.surface(0, 0, 0, 0)
        with pytest.raises(InputError):
            phase_order_family(surface, zero, oc(), 1)


class TestVerdicts:
    def test_factor_classes_sum_to_point(self, surface):
        for obj in moduli_objects(surface).values():
            total = obj.sub.heart_class + obj.quotient.heart_class
            assert total == point()

    def test_table(self, surface):
        objs = moduli_objects(surface)
        expected = {
            ("O_x_on_C", F(-1)): Verdict.STABLE,
            ("O_x_on_C", F(0)): Verdict.STRICTLY_SEMISTABLE,
            ("O_x_on_C", F(1)): Verdict.UNSTABLE,
            ("Lf_O_0", F(-1)): Verdict.UNSTABLE,
            ("Lf_O_0", F(0)): Verdict.STRICTLY_SEMISTABLE,
            ("Lf_O_0", F(1)): Verdict.STABLE,
            ("OC_plus_OCm1", F(-1)): Verdict.UNSTABLE,
            ("OC_plus_OCm1", F(0)): Verdict.STRICTLY_SEMISTABLE,
            ("OC_plus_OCm1", F(1)): Verdict.UNSTABLE,
        }
        for (name, t), want in expected.items():
            assert stability_verdict(surface, objs[name], t) is want

    def test_table_stable_under_t_scaling(self, surface):
        # verdicts only depend on the sign of t
        objs = moduli_objects(surface)
        for name, obj in objs.items():
            for t in (F(-7, 3), F(-1, 100)):
                assert stability_verdict(surface, obj, t) is \
                    stability_verdict(surface, obj, F(-1))
            for t in (F(1, 100), F(12)):
                assert stability_verdict(surface, obj, t) is \
                    stability_verdict(surface, obj, F(1))


class TestWallParam:
    def test_curve_pair(self, surface):
        res = solve_wall_param(surface, oc(), ocm1_shifted())
        assert not res.always_aligned and res.roots == [F(0)]

    def test_identical_classes(self, surface):
        res = solve_wall_param(surface, oc(), oc())
        assert res.always_aligned and res.roots == []

    def test_point_vs_curve(self, surface):
        res = solve_wall_param(surface, point(), oc())
        assert res.roots == [F(0)]
        assert res.coeffs == [F(0), F(1)]

    def test_antisymmetry(self, surface):
        rng = random.Random(37)
        for _ in range(60):
            va, vb = rand_surface_class(rng), rand_surface_class(rng)
            ab = solve_wall_param(surface, va, vb)
            ba = solve_wall_param(surface, vb, va)
            assert ab.always_aligned == ba.always_aligned
            assert [-c for c in ab.coeffs] == ba.coeffs

    def test_generic_pair_never_aligned(self, surface):
        # charges with a nonzero constant cross term have no wall in t
        res = solve_wall_param(surface, ChernVector.surface(1, 1, 0, 0), point())
        assert not res.always_aligned and res.roots == []


def test_moduli_objects_surface_only(tv):
    with pytest.raises(InputError):
        moduli_objects(tv)


def test_wall_locus_factor_multisets_match_decompose(surface):
    # at t = 0 every object is strictly semistable and its two-factor multiset
    # is the unique non-split point-class decomposition
    from perstab.sequiv import decompose, s_equivalent

    split_solution = decompose(surface, point()).solutions[1]
    factor_multisets = []
    for obj in moduli_objects(surface).values():
        assert stability_verdict(surface, obj, 0) is Verdict.STRICTLY_SEMISTABLE
        factor_multisets.append({obj.sub.name: 1, obj.quotient.name: 1})
    for ms in factor_multisets:
        assert s_equivalent(ms, split_solution)
        assert s_equivalent(ms, factor_multisets[0])

from fractions import Fraction as F

import pytest

from perstab.catalog import simples, solve_b_range
from perstab.lattice import ChernVector, ContractionKind, InputError, make_model
from perstab.sequiv import decompose, s_equivalent

from conftest import THREEFOLD_KINDS


class TestDecompose:
    def test_surface_point(self, surface):
        res = decompose(surface, ChernVector.point_class(surface.kind))
        assert res.solutions == [
            {"point": 1},
            {"O_C": 1, "O_C(-1)[1]": 1},
        ]

    def test_type_v_point(self, tv):
        res = decompose(tv, ChernVector.point_class(tv.kind), F(3, 2))
        assert res.solutions == [
            {"point": 1},
            {"O_D(-2)[2]": 1, "S5(-1)[1]": 1, "O_D(-3C)": 2},
        ]

    def test_type_i_point(self):
        m = make_model("TI", 1)
        res = decompose(m, ChernVector.point_class(m.kind), 1)
        assert res.solutions == [
            {"point": 1},
            {"O_L(-2)[1]": 1, "O_L(-1)": 1},
        ]

    @pytest.mark.parametrize("kind", THREEFOLD_KINDS, ids=lambda k: k.value)
    def test_point_has_exactly_two_solutions(self, kind):
        m = make_model(kind, 1)
        b = solve_b_range(m).derived.sample_points()[0]
        res = decompose(m, ChernVector.point_class(kind), b)
        assert len(res.solutions) == 2
        assert {"point": 1} in res.solutions

    @pytest.mark.parametrize("kind", THREEFOLD_KINDS, ids=lambda k: k.value)
    def test_solutions_solve_the_linear_system(self, kind):
        m = make_model(kind, 1)
        b = solve_b_range(m).derived.sample_points()[-1]
        target = ChernVector.point_class(kind)
        by_name = {s.name: s for s in simples(m)}
        for sol in decompose(m, target, b).solutions:
            total = ChernVector.point_class(kind).scale(0)
            for name, mult in sol.items():
                total = total + by_name[name].heart_class.scale(mult)
            assert total == target

    def test_doubling_the_bound_is_stable(self, tv, surface):
        point3 = ChernVector.point_class(tv.kind)
        a = decompose(tv, point3, F(3, 2))
        b = decompose(tv, point3, F(3, 2), bound_multiplier=2)
        assert a.solutions == b.solutions and b.bound == 2 * a.bound
        point2 = ChernVector.point_class(surface.kind)
        assert decompose(surface, point2).solutions == \
            decompose(surface, point2, bound_multiplier=2).solutions

    def test_multiple_points(self, surface):
        res = decompose(surface, ChernVector.surface(0, 0, 0, 2))
        assert res.solutions == [
            {"point": 2},
            {"O_C": 1, "O_C(-1)[1]": 1, "point": 1},
            {"O_C": 2, "O_C(-1)[1]": 2},
        ]

    def test_unreachable_target_empty(self, tv):
        target = ChernVector.threefold(tv.kind, 0, (0, 1), (0,), F(100))
        assert decompose(tv, target, F(3, 2)).solutions == []

    def test_nonpositive_top_reason(self, surface):
        res = decompose(surface, ChernVector.surface(0, 0, 1, -1))
        assert res.solutions == [] and res.reason == "nonpositive-top-degree"

    def test_zero_target(self, surface):
        res = decompose(surface, ChernVector.surface(0, 0, 0, 0))
        assert res.solutions == [{}]

    def test_b_outside_range_rejected(self, tv):
        with pytest.raises(InputError):
            decompose(tv, ChernVector.point_class(tv.kind), F(1))
        with pytest.raises(InputError):
            decompose(tv, ChernVector.point_class(tv.kind), F(0))

    def test_surface_b_rejected(self, surface):
        with pytest.raises(InputError):
            decompose(surface, ChernVector.point_class(surface.kind), F(1, 2))


class TestSEquivalent:
    def test_order_independence(self):
        assert s_equivalent({"O_C": 1, "O_C(-1)[1]": 1}, {"O_C(-1)[1]": 1, "O_C": 1})

    def test_distinct_multisets(self):
        assert not s_equivalent({"point": 1}, {"O_C": 1, "O_C(-1)[1]": 1})

    def test_reflexive_and_zero_entries(self):
        sol = {"O_D(-2)[2]": 1, "S5(-1)[1]": 1, "O_D(-3C)": 2}
        assert s_equivalent(sol, sol)
        assert s_equivalent({"O_C": 1, "point": 0}, {"O_C": 1})

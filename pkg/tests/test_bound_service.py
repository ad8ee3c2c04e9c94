import pytest

from girth_thickness.schemas import ThetaKind
from girth_thickness.services.bound_service import (
    closed_form_lower_bound,
    counting_lower_bound,
    lower_bound_report,
    theta4,
)


class TestLowerBound:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 2), (6, 2), (7, 3), (12, 4), (14, 4)])
    def test_small_values(self, n, expected):
        assert counting_lower_bound(n) == expected
        assert closed_form_lower_bound(n) == expected

    def test_agrees_with_closed_form(self):
        for n in range(1, 5001):
            assert counting_lower_bound(n, 4) == closed_form_lower_bound(n), n

    def test_agrees_on_sparse_large_orders(self):
        for n in range(5001, 10**6 + 1, 997):
            assert counting_lower_bound(n, 4) == closed_form_lower_bound(n), n
        assert counting_lower_bound(10**6, 4) == closed_form_lower_bound(10**6)

    def test_triangle_bound(self):
        # ceil(C(9,2) / 21) = 2
        assert counting_lower_bound(9, 3) == 2

    def test_spanning_trees_bound_large_girth(self):
        # two paths cover K_4, so two parts must not be ruled out
        assert counting_lower_bound(4, 7) == 2
        assert counting_lower_bound(5, "inf") == 3

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            counting_lower_bound(0)
        with pytest.raises(ValueError):
            closed_form_lower_bound(0)


class TestTheta:
    def test_exceptional_orders(self):
        assert theta4(6).value == 3
        k10 = theta4(10)
        assert k10.kind is ThetaKind.RANGE
        assert (k10.lo, k10.hi) == (3, 4)
        assert k10.value is None

    @pytest.mark.parametrize("n", [1, 5, 9, 11, 12, 13, 100])
    def test_generic_orders(self, n):
        assert theta4(n).value == (n + 5) // 4

    def test_report(self):
        report = lower_bound_report(10)
        assert report.lower_bound == report.closed_form == 3
        assert report.theta.hi == 4

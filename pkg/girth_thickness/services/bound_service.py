"""
Counting lower bounds and the known values of theta(4, K_n).
"""

from math import comb

from ..models import Girth
from ..schemas import LowerBoundReport, ThetaKind, ThetaValue
from ..utils.planarity_utils import part_capacity


def counting_lower_bound(n: int, girth_lb: Girth | int | str = 4) -> int:
    """ceil(C(n,2) / part_capacity(n, g)), never below one part."""
    if n < 1:
        raise ValueError(f"Lower bound needs n >= 1, got {n}")
    capacity = part_capacity(n, girth_lb)
    if capacity == 0:
        return 1
    return max(1, -(-comb(n, 2) // capacity))


def closed_form_lower_bound(n: int) -> int:
    """ceil((n+2)/4)."""
    if n < 1:
        raise ValueError(f"Lower bound needs n >= 1, got {n}")
    return (n + 5) // 4


def theta4(n: int) -> ThetaValue:
    if n < 1:
        raise ValueError(f"theta(4, K_n) needs n >= 1, got {n}")
    if n == 10:
        return ThetaValue(n=n, kind=ThetaKind.RANGE, lo=3, hi=4)
    value = 3 if n == 6 else closed_form_lower_bound(n)
    return ThetaValue(n=n, kind=ThetaKind.EXACT, lo=value, hi=value)


def lower_bound_report(n: int) -> LowerBoundReport:
    counted = counting_lower_bound(n, 4)
    closed = closed_form_lower_bound(n)
    if counted != closed:
        raise ArithmeticError(f"Counting bound {counted} disagrees with closed form {closed} at n={n}")
    return LowerBoundReport(n=n, lower_bound=counted, closed_form=closed, theta=theta4(n))

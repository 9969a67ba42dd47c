"""abc triples at a fixed epsilon, decided exactly.

A triple (a, b, c) is *exceptional* for epsilon = num/den - 1 when
``c >= rad(abc) ** (num/den)``, checked as ``c**den >= rad(abc)**num``.
The default exponent pair (7, 6) is epsilon = 1/6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .arithmetic import (
    DEFAULT_BUDGET,
    FactorBudget,
    FactorizationBudgetExceeded,
    Order,
    power_compare,
    radical,
)

DEFAULT_EXPONENT = (7, 6)


class InvalidTripleError(ValueError):
    pass


class ScanBudgetExceeded(FactorizationBudgetExceeded):
    def __init__(self, b: int, cause: FactorizationBudgetExceeded):
        super().__init__(cause.n, cause.remaining)
        self.b = b
        self.args = (f"at b={b}: {cause}",)


def _scan_radical(b: int, n: int, budget: FactorBudget) -> int:
    try:
        return radical(n, budget)
    except FactorizationBudgetExceeded as exc:
        raise ScanBudgetExceeded(b, exc) from exc


@dataclass(frozen=True)
class AbcTriple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise InvalidTripleError(f"abc triple needs positive a, b: {self}")
        if self.a + self.b != self.c:
            raise InvalidTripleError(f"a + b != c for {self}")
        if math.gcd(self.a, self.b) != 1:
            raise InvalidTripleError(f"a and b are not coprime in {self}")


@dataclass(frozen=True)
class AbcReport:
    triple: AbcTriple
    rad_abc: int
    exceptional: bool
    quality_approx: str

    def to_json(self) -> dict:
        t = self.triple
        return {
            "a": str(t.a),
            "b": str(t.b),
            "c": str(t.c),
            "rad": str(self.rad_abc),
            "exceptional": self.exceptional,
            "quality_approx": self.quality_approx,
        }

    def line(self) -> str:
        t = self.triple
        return (
            f"a={t.a} b={t.b} c={t.c} rad={self.rad_abc} "
            f"exceptional={str(self.exceptional).lower()} quality_approx={self.quality_approx}"
        )


def quality_approx(c: int, rad: int) -> str:
    """log(c) / log(rad) to 4 decimals, for display only."""
    if rad < 2:
        return "inf"
    # 40 working digits is far more than 4 correctly rounded decimals need
    with mpmath.workdps(40):
        scaled = int(mpmath.nint(mpmath.log(c) / mpmath.log(rad) * 10**4))
    whole, frac = divmod(scaled, 10**4)
    return f"{whole}.{frac:04d}"


def is_exceptional(c: int, rad: int, exponent: tuple[int, int] = DEFAULT_EXPONENT) -> bool:
    num, den = exponent
    return power_compare(c, den, rad, num) is not Order.LESS


def abc_check(
    t: AbcTriple,
    exponent: tuple[int, int] = DEFAULT_EXPONENT,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> AbcReport:
    """
    >>> abc_check(AbcTriple(1, 8, 9)).line()
    'a=1 b=8 c=9 rad=6 exceptional=true quality_approx=1.2263'
    """
    rad = radical(t.a * t.b * t.c, budget)
    return AbcReport(t, rad, is_exceptional(t.c, rad, exponent), quality_approx(t.c, rad))


def case1_triple(b: int) -> AbcTriple:
    """(b, 1, b + 1): its radical is rad(b(b+1)), the quantity bounding length-3 repunits."""
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    return AbcTriple(b, 1, b + 1)


def case2_triple(b: int, q: int) -> AbcTriple:
    """(b^(q-1) - 1, 1, b^(q-1)); rad(abc) = rad(b (b^(q-1) - 1))."""
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    if q < 4:
        raise ValueError(f"q must be >= 4, got {q}")
    c = b ** (q - 1)
    return AbcTriple(c - 1, 1, c)


def scan_case1_exceptions(
    b_max: int,
    exponent: tuple[int, int] = DEFAULT_EXPONENT,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> list[AbcReport]:
    """Reports for every b in [2, b_max] whose case-1 triple is exceptional, ascending.

    Consecutive integers are coprime, so rad(b(b+1)) = rad(b) * rad(b+1) and
    each radical is computed once.
    """
    out = []
    if b_max < 2:
        return out
    rad_next = 2
    for b in range(2, b_max + 1):
        rad_b, rad_next = rad_next, _scan_radical(b, b + 1, budget)
        rad = rad_b * rad_next
        if is_exceptional(b + 1, rad, exponent):
            out.append(AbcReport(case1_triple(b), rad, True, quality_approx(b + 1, rad)))
    return out


def scan_case2_exceptions(
    b_max: int,
    q: int,
    exponent: tuple[int, int] = DEFAULT_EXPONENT,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> list[AbcReport]:
    """Exceptional case-2 triples for b in [2, b_max] at a fixed length q.

    Needs rad(b^(q-1) - 1), which quickly outgrows any factoring budget; a
    budget failure propagates with the offending number attached.
    """
    out = []
    for b in range(2, b_max + 1):
        t = case2_triple(b, q)
        rad = _scan_radical(b, b, budget) * _scan_radical(b, t.a, budget)
        if is_exceptional(t.c, rad, exponent):
            out.append(AbcReport(t, rad, True, quality_approx(t.c, rad)))
    return out

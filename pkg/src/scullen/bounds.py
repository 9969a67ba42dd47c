"""Exact versions of the logarithmic exclusion inequalities.

Each inequality ``A < B log_s n`` with integer A, B is rewritten as
``s**A < n**B`` and decided with :func:`power_compare`. Equality counts as
"does not hold".

* length-3 repunits (n >= 3):   3n - 7 < 4 log_s n
* longer repunits (n >= 2):     11n - 21 < 10 log_s n
* length q >= 4 in general:     (6q - 13) n - 7(q - 1) < (q + 6) log_s n
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .arithmetic import Order, power_compare

DEFAULT_N_CAP = 1024
DEFAULT_S_CAP = 1 << 20


class BoundsCapExceeded(RuntimeError):
    """An enumeration ran into its safety cap before the inequality stopped holding."""


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of comparing ``s**s_exponent`` against ``n**n_exponent``."""

    s: int
    n: int
    s_exponent: int
    n_exponent: int
    order: Order

    @property
    def holds(self) -> bool:
        return self.order is Order.LESS

    def describe(self) -> str:
        rel = {Order.LESS: "<", Order.EQUAL: "=", Order.GREATER: ">"}[self.order]
        return f"{self.s}^{self.s_exponent} {rel} {self.n}^{self.n_exponent}"


def _verdict(s: int, n: int, s_exp: int, n_exp: int) -> BoundVerdict:
    return BoundVerdict(s, n, s_exp, n_exp, power_compare(s, s_exp, n, n_exp))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def eq1_verdict(s: int, n: int) -> BoundVerdict:
    _require(s >= 2, f"s must be >= 2, got {s}")
    _require(n >= 3, f"the length-3 bound needs n >= 3, got {n}")
    return _verdict(s, n, 3 * n - 7, 4)


def eq3_verdict(s: int, n: int) -> BoundVerdict:
    _require(s >= 2, f"s must be >= 2, got {s}")
    _require(n >= 2, f"the long-repunit bound needs n >= 2, got {n}")
    return _verdict(s, n, 11 * n - 21, 10)


def general_q_verdict(s: int, n: int, q: int) -> BoundVerdict:
    _require(s >= 2, f"s must be >= 2, got {s}")
    _require(n >= 2, f"the long-repunit bound needs n >= 2, got {n}")
    _require(q >= 4, f"the general bound needs q >= 4, got {q}")
    return _verdict(s, n, (6 * q - 13) * n - 7 * (q - 1), q + 6)


def eq1_holds(s: int, n: int) -> bool:
    """True iff s**(3n-7) < n**4.

    >>> eq1_holds(9, 3)
    False
    """
    return eq1_verdict(s, n).holds


def eq3_holds(s: int, n: int) -> bool:
    """True iff s**(11n-21) < n**10."""
    return eq3_verdict(s, n).holds


def general_q_holds(s: int, n: int, q: int) -> bool:
    """True iff s**((6q-13)n - 7(q-1)) < n**(q+6)."""
    return general_q_verdict(s, n, q).holds


def enumerate_exceptions(
    holds: Callable[[int, int], bool],
    n_min: int,
    n_cap: int = DEFAULT_N_CAP,
    s_cap: int = DEFAULT_S_CAP,
) -> set[tuple[int, int]]:
    """Every (s, n) with s >= 2, n >= n_min where ``holds`` is true.

    Each s column is scanned upward from ``n_min`` until two consecutive
    failures past the last success; the s scan stops at the first column
    with no successes at all. Both loops are capped, and hitting a cap raises
    :class:`BoundsCapExceeded` rather than returning a truncated set.
    """
    found: set[tuple[int, int]] = set()
    s = 2
    while True:
        if s > s_cap:
            raise BoundsCapExceeded(f"s scan passed cap {s_cap}")
        column_hits = 0
        misses = 0
        n = n_min
        while misses < 2:
            if n > n_cap:
                raise BoundsCapExceeded(f"n scan for s={s} passed cap {n_cap}")
            if holds(s, n):
                found.add((s, n))
                column_hits += 1
                misses = 0
            else:
                misses += 1
            n += 1
        if column_hits == 0:
            return found
        s += 1


def enumerate_eq1_exceptions(n_cap: int = DEFAULT_N_CAP) -> set[tuple[int, int]]:
    return enumerate_exceptions(eq1_holds, 3, n_cap)


def enumerate_eq3_exceptions(n_cap: int = DEFAULT_N_CAP) -> set[tuple[int, int]]:
    return enumerate_exceptions(eq3_holds, 2, n_cap)


def enumerate_general_q_exceptions(q: int, n_cap: int = DEFAULT_N_CAP) -> set[tuple[int, int]]:
    if q < 4:
        raise ValueError(f"the general bound needs q >= 4, got {q}")
    return enumerate_exceptions(lambda s, n: general_q_holds(s, n, q), 2, n_cap)

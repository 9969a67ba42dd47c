"""The two known infinite families of s-Cullen repunits.

Family A: C(s, 1) = s + 1, a repunit whenever s + 1 is one.
Family B: C(s, 2) = 2s^2 + 1 = b^2 + b + 1, i.e. s^2 = b(b+1)/2 is a square
triangular number. The square roots of those obey s' = 6s - s_prev.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arithmetic import is_perfect_square
from .cullen import CullenIndex
from .repunit import is_repunit


class FamilyTag(enum.Enum):
    A = "A"
    B = "B"
    NONE = None

    def to_json(self) -> str | None:
        return self.value


class FamilyInvariantError(RuntimeError):
    pass


@dataclass(frozen=True)
class FamilyBMember:
    """k-th member: C(s, 2) = 2s^2 + 1 is the base-b repunit 111."""

    k: int
    s: int
    b: int


def family_a_members(limit: int) -> list[int]:
    """First ``limit`` values s >= 2 with s + 1 a repunit of length >= 3."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out = []
    s = 2
    while len(out) < limit:
        if is_repunit(s + 1):
            out.append(s)
        s += 1
    return out


def square_triangular_base(s: int) -> int | None:
    """Return b with b(b+1) = 2s^2, or None when s^2 is not triangular."""
    d = 8 * s * s + 1
    r = math.isqrt(d)
    if r * r != d:
        return None
    return (r - 1) // 2


def family_b_members(limit: int) -> list[FamilyBMember]:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out = []
    # s = 1 solves the recurrence too but is not a valid s-Cullen parameter
    prev, s = 1, 6
    for k in range(1, limit + 1):
        b = square_triangular_base(s)
        if b is None or 2 * s * s + 1 != b * b + b + 1:
            raise FamilyInvariantError(f"recurrence produced s={s} with no matching base")
        out.append(FamilyBMember(k, s, b))
        prev, s = s, 6 * s - prev
    return out


def classify(idx: CullenIndex) -> FamilyTag:
    if idx.n == 1 and is_repunit(idx.s + 1):
        return FamilyTag.A
    if idx.n == 2 and idx.s >= 6 and is_perfect_square(8 * idx.s * idx.s + 1):
        return FamilyTag.B
    return FamilyTag.NONE

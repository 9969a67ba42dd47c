"""s-Cullen numbers C(s, n) = n * s**n + 1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class InvalidIndexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CullenIndex:
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.s < 2:
            raise InvalidIndexError(f"s-Cullen numbers need s >= 2, got s={self.s}")
        if self.n < 1:
            raise InvalidIndexError(f"s-Cullen numbers need n >= 1, got n={self.n}")

    def value(self) -> int:
        return self.n * self.s**self.n + 1


def cullen_value(s: int, n: int) -> int:
    """
    >>> cullen_value(6, 2)
    73
    """
    return CullenIndex(s, n).value()


def cullen_column(s: int, n_min: int, n_max: int) -> Iterator[tuple[int, int]]:
    """Yield ``(n, C(s, n))`` for ``n_min <= n <= n_max``, one multiplication per step."""
    if n_min > n_max:
        return
    CullenIndex(s, n_min)
    power = s**n_min
    for n in range(n_min, n_max + 1):
        yield n, n * power + 1
        power *= s


def cullen_range(
    s_min: int, s_max: int, n_min: int, n_max: int
) -> Iterator[tuple[CullenIndex, int]]:
    """Every ``(index, value)`` in the rectangle, s ascending outside, n ascending inside."""
    if s_min > s_max or n_min > n_max:
        return
    for s in range(s_min, s_max + 1):
        for n, value in cullen_column(s, n_min, n_max):
            yield CullenIndex(s, n), value

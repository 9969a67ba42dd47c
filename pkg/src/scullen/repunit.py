"""Repunits (11...1)_b and detection of every base/length pair giving a number."""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2

from .arithmetic import iroot_fast


class InvalidFormError(ValueError):
    pass


@dataclass(frozen=True)
class RepunitForm:
    """The repunit of length ``q`` in base ``b``.

    Length 2 is never allowed, since every x is ``11`` in base x - 1.
    """

    b: int
    q: int

    def __post_init__(self) -> None:
        if self.b < 2 or self.q < 3:
            raise InvalidFormError(f"repunit form needs b >= 2 and q >= 3, got b={self.b}, q={self.q}")

    def value(self) -> int:
        return repunit_value(self.b, self.q)

    def to_json(self) -> dict[str, int]:
        return {"b": self.b, "q": self.q}


def repunit_value(b: int, q: int) -> int:
    """``(b**q - 1) // (b - 1)``, i.e. ``1 + b + ... + b**(q-1)``."""
    if b < 2 or q < 3:
        raise InvalidFormError(f"repunit form needs b >= 2 and q >= 3, got b={b}, q={q}")
    return (b**q - 1) // (b - 1)


def repunit_horner(b: int, q: int) -> int:
    """Same value as :func:`repunit_value`, summed digit by digit."""
    if b < 2 or q < 3:
        raise InvalidFormError(f"repunit form needs b >= 2 and q >= 3, got b={b}, q={q}")
    acc = 0
    for _ in range(q):
        acc = acc * b + 1
    return acc


def detect_repunits(N: int) -> list[RepunitForm]:
    """All ``(b, q)`` with ``b >= 2``, ``q >= 3`` and repunit_value(b, q) == N, by increasing q.

    For a fixed length the base is pinned down by
    ``b**(q-1) < R(b, q) < (b+1)**(q-1)``, so only the integer (q-1)-th root of
    N and its two neighbours need checking.

    >>> [(f.b, f.q) for f in detect_repunits(31)]
    [(5, 3), (2, 5)]
    """
    forms: list[RepunitForm] = []
    if N < 7:
        return forms
    N = gmpy2.mpz(N)
    m = N - 1
    q = 3
    # base-2 repunit of length q is 2**q - 1
    while (1 << q) - 1 <= N:
        r = iroot_fast(N, q - 1)
        for b in (r - 1, r, r + 1):
            # N - 1 = b * R(b, q-1), so b | N - 1 is a free filter
            if b >= 2 and m % b == 0 and (b**q - 1) // (b - 1) == N:
                forms.append(RepunitForm(int(b), q))
        q += 1
    return forms


def is_repunit(N: int) -> bool:
    return bool(detect_repunits(N))

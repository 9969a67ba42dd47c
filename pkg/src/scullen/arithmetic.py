"""Exact integer primitives: powers, k-th roots, primality, factoring, radicals.

Everything here works on non-negative Python ints and never touches floating
point, so the results can be used to decide strict inequalities.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import gmpy2


class FactorizationBudgetExceeded(ArithmeticError):
    """Raised when factoring needs more work than the configured budget allows."""

    def __init__(self, n: int, remaining: int):
        self.n = n
        self.remaining = remaining
        super().__init__(
            f"factorization budget exceeded for {n} (unfactored cofactor {remaining})"
        )


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _check_natural(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")


def ipow(base: int, exp: int) -> int:
    """Return ``base ** exp`` exactly; ``ipow(0, 0) == 1``."""
    _check_natural("base", base)
    _check_natural("exp", exp)
    return base**exp


def iroot(N: int, k: int) -> int:
    """Return the unique ``r`` with ``r**k <= N < (r + 1)**k``.

    Newton iteration from above, started at a power of two that is guaranteed
    to be at least the true root; the sequence decreases monotonically until it
    reaches the floor of the root.

    >>> iroot(73, 2)
    8
    >>> iroot(31, 4)
    2
    """
    _check_natural("N", N)
    if k < 1:
        raise ValueError(f"root degree must be >= 1, got {k}")
    if k == 1 or N < 2:
        return N
    if k == 2:
        return math.isqrt(N)
    if k >= N.bit_length():
        # 2**k > N already
        return 1

    x = 1 << -(-N.bit_length() // k)
    k1 = k - 1
    while True:
        y = (k1 * x + N // x**k1) // k
        if y >= x:
            break
        x = y
    # the iteration lands exactly on the floor root; the check keeps us honest
    while x**k > N:
        x -= 1
    while (x + 1) ** k <= N:
        x += 1
    return x


def iroot_fast(N, k: int):
    """Floor k-th root via GMP; returns an ``mpz``. Used in hot loops."""
    return gmpy2.iroot(gmpy2.mpz(N), k)[0]


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# Strong-pseudoprime testing with the first 13 primes as bases is deterministic
# below this bound (Sorenson & Webster).
DETERMINISTIC_LIMIT = 3317044064679887385961981
_FIXED_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Extra random bases above the deterministic range; each one lets a composite
# through with probability at most 1/4.
EXTRA_ROUNDS = 24


def _strong_probable_prime(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin test.

    Exact for ``n < DETERMINISTIC_LIMIT`` (about 3.3e24). Larger inputs get the
    13 fixed bases plus ``EXTRA_ROUNDS`` random bases drawn from a generator
    seeded with ``n`` itself, so the answer is reproducible and a composite
    survives with probability below ``4**-EXTRA_ROUNDS``.
    """
    if n < 2:
        return False
    for p in _FIXED_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while not d & 1:
        d >>= 1
        r += 1
    if not all(_strong_probable_prime(n, a, d, r) for a in _FIXED_BASES):
        return False
    if n < DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(
        _strong_probable_prime(n, rng.randrange(2, n - 1), d, r)
        for _ in range(EXTRA_ROUNDS)
    )


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p strictly increasing."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class FactorBudget:
    """Work limits for :func:`factor`.

    Trial division runs over primes up to ``trial_limit``; whatever composite
    remains goes to Brent's rho, which may take at most ``rho_iterations``
    steps per cofactor split before giving up.
    """

    trial_limit: int = 10**6
    rho_iterations: int = 2_000_000


DEFAULT_BUDGET = FactorBudget()


@lru_cache(maxsize=4)
def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _brent_rho(n: int, max_iter: int) -> int | None:
    """Return a non-trivial factor of odd composite ``n``, or None if the cap is hit."""
    rng = random.Random(n)
    spent = 0
    while spent < max_iter:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < max_iter:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r <<= 1
        if g == n:
            # batched gcd overshot; step back one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Complete prime factorization of ``n >= 1``.

    Raises :class:`FactorizationBudgetExceeded` instead of returning a
    partial answer.

    >>> factor(90).as_dict()
    {2: 1, 3: 2, 5: 1}
    """
    if n < 1:
        raise ValueError(f"factor() needs n >= 1, got {n}")
    found: dict[int, int] = {}
    rest = n
    for p in primes_up_to(budget.trial_limit):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1:
        stack = [rest]
        while stack:
            m = stack.pop()
            if is_probable_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            # p**2 cofactors are common in radicals of consecutive integers
            if is_perfect_square(m):
                r = math.isqrt(m)
                stack += [r, r]
                continue
            d = _brent_rho(m, budget.rho_iterations)
            if d is None:
                raise FactorizationBudgetExceeded(n, m)
            stack += [d, m // d]
    return Factorization(tuple(sorted(found.items())))


def radical(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """Product of the distinct primes dividing ``n``; ``radical(1) == 1``."""
    out = 1
    for p, _ in factor(n, budget):
        out *= p
    return out


def _degenerate_power(base: int, exp: int) -> int | None:
    if exp == 0 or base == 1:
        return 1
    if base == 0:
        return 0
    return None


def power_compare(x: int, a: int, y: int, b: int) -> Order:
    """Exact order of ``x**a`` against ``y**b``.

    Bit lengths settle most comparisons without building the powers.
    """
    for name, v in (("x", x), ("a", a), ("y", y), ("b", b)):
        _check_natural(name, v)
    lt, rt = _degenerate_power(x, a), _degenerate_power(y, b)
    if lt is not None and rt is not None:
        return Order((lt > rt) - (lt < rt))
    # a non-degenerate side is at least 2
    if lt is not None:
        return Order.LESS
    if rt is not None:
        return Order.GREATER
    # x**a lies in [2**(a*(lx-1)), 2**(a*lx))
    lx, ly = x.bit_length(), y.bit_length()
    if a * (lx - 1) >= b * ly:
        return Order.GREATER
    if b * (ly - 1) >= a * lx:
        return Order.LESS
    u, v = x**a, y**b
    return Order((u > v) - (u < v))

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scullen.arithmetic import (
    DETERMINISTIC_LIMIT,
    FactorBudget,
    Factorization,
    FactorizationBudgetExceeded,
    Order,
    factor,
    ipow,
    iroot,
    iroot_fast,
    is_probable_prime,
    power_compare,
    radical,
)

from oracles import trial_division


def repeated_product(x, e):
    out = 1
    for _ in range(e):
        out *= x
    return out


class TestIpow:
    def test_small(self):
        assert ipow(2, 10) == 1024

    @pytest.mark.parametrize("x", [0, 1, 2, 17, 10**40])
    def test_zero_exponent(self, x):
        assert ipow(x, 0) == 1

    def test_digit_count(self):
        v = ipow(10, 60)
        assert v == repeated_product(10, 60)
        assert len(str(v)) == 61

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ipow(2, -1)


class TestIroot:
    @pytest.mark.parametrize("N,k,r", [(73, 2, 8), (31, 4, 2), (0, 5, 0), (1, 3, 1), (12345, 1, 12345)])
    def test_examples(self, N, k, r):
        assert iroot(N, k) == r

    def test_exhaustive_small(self):
        for k in range(1, 21):
            for N in range(0, 10**6 + 1, 997 if k > 1 else 10007):
                r = iroot(N, k)
                assert r**k <= N < (r + 1) ** k
        # every N near the perfect powers, where off-by-one errors live
        for k in range(2, 21):
            r = 1
            while r**k <= 10**6:
                for N in (r**k - 1, r**k, r**k + 1):
                    root = iroot(N, k)
                    assert root**k <= N < (root + 1) ** k
                r += 1

    @settings(max_examples=300)
    @given(st.integers(min_value=0, max_value=10**200), st.integers(min_value=1, max_value=300))
    def test_big(self, N, k):
        r = iroot(N, k)
        assert r**k <= N < (r + 1) ** k
        assert iroot_fast(N, k) == r

    def test_rejects_zero_degree(self):
        with pytest.raises(ValueError):
            iroot(10, 0)


class TestPrimality:
    def test_examples(self):
        assert is_probable_prime(2)
        assert not is_probable_prime(1)
        assert not is_probable_prime(0)
        assert not is_probable_prime(2451)

    def test_matches_sieve(self):
        limit = 20000
        sieve = [True] * (limit + 1)
        sieve[0] = sieve[1] = False
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                for m in range(p * p, limit + 1, p):
                    sieve[m] = False
        assert [n for n in range(limit + 1) if is_probable_prime(n)] == [
            n for n in range(limit + 1) if sieve[n]
        ]

    @pytest.mark.parametrize(
        "n",
        [
            3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
            3825123056546413051,  # strong pseudoprime to bases 2..23
            318665857834031151167461,  # strong pseudoprime to bases 2..37
            561,
            25326001,  # strong pseudoprime to bases 2, 3, 5
        ],
    )
    def test_strong_pseudoprimes_rejected(self, n):
        assert not is_probable_prime(n)

    @pytest.mark.parametrize("p", [2**61 - 1, 2**89 - 1, 2**127 - 1, 10**30 + 57])
    def test_known_primes(self, p):
        assert is_probable_prime(p)

    def test_above_deterministic_range(self):
        p, q = 2**61 - 1, 2**89 - 1
        assert p * q > DETERMINISTIC_LIMIT
        assert not is_probable_prime(p * q)
        assert is_probable_prime(2**521 - 1)


class TestFactor:
    def test_examples(self):
        assert factor(90).as_dict() == {2: 1, 3: 2, 5: 1}
        assert factor(1) == Factorization(())
        assert factor(72).as_dict() == {2: 3, 3: 2}

    def test_reassembles_up_to_1e5(self):
        for n in range(1, 10**5 + 1):
            f = factor(n)
            assert f.value() == n
            assert list(f.primes) == sorted(set(f.primes))

    def test_against_trial_division(self):
        for n in range(1, 5001):
            assert factor(n).as_dict() == trial_division(n)

    def test_large_semiprime_uses_rho(self):
        p, q = 1000003, 999999937
        assert factor(p * q).as_dict() == {p: 1, q: 1}
        # both factors beyond a tiny trial-division limit
        assert factor(p * q * q, FactorBudget(trial_limit=100)).as_dict() == {p: 1, q: 2}

    def test_128_bit_input(self):
        p, q = 4294967311, 18446744073709551629  # primes near 2**32 and 2**64
        r = 1000000007
        n = p * q * r
        assert n.bit_length() <= 128
        assert factor(n).as_dict() == {r: 1, p: 1, q: 1}

    def test_budget_exceeded(self):
        p, q = 2**61 - 1, 2**89 - 1
        with pytest.raises(FactorizationBudgetExceeded):
            factor(p * q, FactorBudget(trial_limit=1000, rho_iterations=1000))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            factor(0)

    def test_malformed_factorization(self):
        with pytest.raises(ValueError):
            Factorization(((3, 1), (2, 1)))
        with pytest.raises(ValueError):
            Factorization(((2, 0),))


class TestRadical:
    def test_examples(self):
        assert radical(90) == 30
        assert radical(72) == 6
        assert radical(1) == 1
        assert radical(101) == 101

    def test_properties_up_to_1e5(self):
        for n in range(1, 10**5 + 1):
            r = radical(n)
            assert n % r == 0
            assert radical(r) == r
            # squarefree
            assert all(e == 1 for _, e in factor(r))


class TestPowerCompare:
    @pytest.mark.parametrize(
        "args,expected",
        [
            ((9, 2, 3, 4), Order.EQUAL),
            ((2, 11, 6, 4), Order.GREATER),
            ((1024, 1, 2, 10), Order.EQUAL),
            ((0, 0, 1, 5), Order.EQUAL),
            ((0, 3, 1, 0), Order.LESS),
            ((5, 0, 0, 7), Order.GREATER),
            ((1, 100, 2, 1), Order.LESS),
            ((2, 1, 1, 100), Order.GREATER),
        ],
    )
    def test_examples(self, args, expected):
        assert power_compare(*args) == expected

    def test_random_against_expansion(self):
        rng = random.Random(20240611)
        for _ in range(1000):
            x = rng.choice([rng.randrange(0, 20), rng.randrange(2, 10**6), rng.randrange(2, 10**30)])
            y = rng.choice([rng.randrange(0, 20), rng.randrange(2, 10**6), rng.randrange(2, 10**30)])
            # keep expanded values below ~10**4 digits
            a = rng.randrange(0, 300)
            b = rng.randrange(0, 300)
            u, v = x**a, y**b
            assert power_compare(x, a, y, b) == Order((u > v) - (u < v))

    def test_near_ties(self):
        # 2**k vs (2**k - 1) and (2**k + 1) to the same power
        for k in range(1, 60):
            assert power_compare(2**k, 7, 2**k - 1, 7) is Order.GREATER
            assert power_compare(2**k, 7, 2**k + 1, 7) is Order.LESS
            assert power_compare(2, 7 * k, 2**k, 7) is Order.EQUAL

    @given(st.integers(0, 10**9), st.integers(0, 60), st.integers(0, 10**9), st.integers(0, 60))
    def test_antisymmetric(self, x, a, y, b):
        assert power_compare(x, a, y, b) == -power_compare(y, b, x, a)

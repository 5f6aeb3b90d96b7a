import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from pellcrit import intcore


def test_is_prime_examples():
    assert intcore.is_prime(2)
    assert not intcore.is_prime(221)
    assert not intcore.is_prime(1394)
    assert not intcore.is_prime(1)
    with pytest.raises(ValueError):
        intcore.is_prime(0)


def test_is_prime_against_sieve():
    limit = 100_000
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    for n in range(1, limit + 1):
        assert intcore.is_prime(n) == bool(flags[n]), n


def test_is_prime_large_sample():
    random.seed(0)
    for _ in range(2000):
        n = random.randrange(100_000, 1_000_000)
        by_division = all(n % d for d in range(2, math.isqrt(n) + 1))
        assert intcore.is_prime(n) == by_division, n


def test_factor_examples():
    f = intcore.factor(221)
    assert f.sign == 1 and f.factors == ((13, 1), (17, 1))
    f = intcore.factor(-56)
    assert f.sign == -1 and f.factors == ((2, 3), (7, 1))
    f = intcore.factor(1394)
    assert f.factors == ((2, 1), (17, 1), (41, 1))
    with pytest.raises(ValueError):
        intcore.factor(0)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=-(10**9), max_value=10**9).filter(lambda n: n != 0))
def test_factor_roundtrip(n):
    fac = intcore.factor(n)
    assert fac.value() == n
    primes = [p for p, _ in fac.factors]
    assert primes == sorted(set(primes))


def test_factor_larger():
    for n in [2**61 - 1, 10**12 + 39, (2**31 - 1) * (2**31 - 1), 600851475143]:
        assert intcore.factor(n).value() == n


def test_sqrt_mod_examples():
    assert intcore.sqrt_mod(2, 17) == 6
    assert intcore.sqrt_mod(-1, 13) == 5
    assert intcore.sqrt_mod(3, 7) is None
    with pytest.raises(ValueError):
        intcore.sqrt_mod(3, 15)
    with pytest.raises(ValueError):
        intcore.sqrt_mod(3, 2)


def test_sqrt_mod_matches_jacobi():
    from pellcrit.symbols import jacobi

    for p in [3, 5, 7, 11, 13, 17, 97, 193, 65537]:
        for a in range(0, min(p, 80)):
            r = intcore.sqrt_mod(a, p)
            if jacobi(a, p) in (0, 1):
                assert r is not None and (r * r - a) % p == 0
                assert 0 <= r <= (p - 1) // 2
            else:
                assert r is None


def test_sqrt_mod_prime_power_exhaustive():
    for p, k in [(2, 1), (2, 2), (2, 5), (2, 6), (3, 3), (3, 4), (5, 3), (7, 2)]:
        mod = p**k
        for a in range(mod):
            got = intcore.sqrt_mod_prime_power(a, p, k)
            want = sorted(x for x in range(mod) if (x * x - a) % mod == 0)
            assert got == want, (a, p, k)


def test_two_squares_prime():
    assert intcore.two_squares_prime(13) == (3, 2)
    assert intcore.two_squares_prime(17) == (1, 4)
    assert intcore.two_squares_prime(5) == (1, 2)
    assert intcore.two_squares_prime(61) == (5, 6)
    assert intcore.two_squares_prime(29) == (5, 2)
    for p in [x for x in range(5, 3000) if intcore.is_prime(x) and x % 4 == 1]:
        a, b = intcore.two_squares_prime(p)
        assert a * a + b * b == p and a % 2 == 1 and b % 2 == 0 and a > 0 and b > 0


def test_crt():
    x, m = intcore.crt([(2, 3), (3, 5), (2, 7)])
    assert m == 105 and x % 3 == 2 and x % 5 == 3 and x % 7 == 2
    with pytest.raises(ValueError):
        intcore.crt([(0, 4), (1, 6)])

"""Exact integer arithmetic: primality, factorization, modular square roots.

Everything here works on arbitrary-precision Python ints; nothing is
floating point.  Deterministic for the sizes this package cares about
(fundamental Pell solutions get huge, but the numbers we factor or test
for primality stay at desk scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

isqrt = math.isqrt


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = _sieve(2000)
_SMALL_SET = set(_SMALL_PRIMES)

# Strong-pseudoprime witnesses: proven complete below this bound.
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Beyond the proven bound, a fixed wider base set keeps results reproducible.
_MR_EXTRA = tuple(p for p in _SMALL_PRIMES[:50])


def _strong_probable_prime(n: int, base: int) -> bool:
    if base % n == 0:
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test for n >= 1."""
    if n < 1:
        raise ValueError("is_prime requires n >= 1")
    if n < 4:
        return n != 1
    if n % 2 == 0:
        return False
    if n <= _SMALL_PRIMES[-1]:
        return n in _SMALL_SET
    for p in _SMALL_PRIMES[:40]:
        if n % p == 0:
            return False
    bases = _MR_WITNESSES if n < _MR_LIMIT else _MR_EXTRA
    return all(_strong_probable_prime(n, b) for b in bases)


@dataclass(frozen=True)
class Factorization:
    """Signed prime-power decomposition sign * prod p_i^e_i, primes increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        primes = [p for p, _ in self.factors]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("primes must be strictly increasing")
        for p, e in self.factors:
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factor {p}^{e}")

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _pollard_brent(n: int) -> int:
    # Brent's cycle variant; deterministic parameter sweep keeps runs repeatable.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = 0
        while g == 1:
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
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factor search failed for {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factor(n: int) -> Factorization:
    """Full factorization of a nonzero integer."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        _factor_into(n, out)
    return Factorization(sign, tuple(sorted(out.items())))


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a mod an odd prime p, normalized to 0 <= r <= (p-1)/2.

    Returns None when a is a non-residue.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, x = 0, t
        while x != 1:
            x = x * x % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def sqrt_mod_prime_power(a: int, p: int, k: int) -> list[int]:
    """All solutions of x^2 = a mod p^k, for p prime, k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pk = p**k
    a %= pk
    if a == 0:
        step = p ** ((k + 1) // 2)
        return list(range(0, pk, step))
    v = 0
    aa = a
    while aa % p == 0:
        aa //= p
        v += 1
    if v % 2 == 1:
        return []
    if v == 0:
        return _sqrt_mod_unit(a, p, k)
    half = p ** (v // 2)
    sub = sqrt_mod_prime_power(aa, p, k - v)
    roots = set()
    period = p ** (k - v // 2)
    for r in sub:
        base = (half * r) % period
        for t in range(0, pk // period):
            roots.add((base + t * period) % pk)
    return sorted(roots)


def _sqrt_mod_unit(a: int, p: int, k: int) -> list[int]:
    pk = p**k
    if p == 2:
        if k == 1:
            return [1]
        if k == 2:
            return [1, 3] if a % 4 == 1 else []
        if a % 8 != 1:
            return []
        r = 1
        for j in range(3, k):
            if (r * r - a) % (1 << (j + 1)):
                r += 1 << (j - 1)
        return sorted({r % pk, (-r) % pk, (r + pk // 2) % pk, (-r + pk // 2) % pk})
    r = sqrt_mod(a, p)
    if r is None:
        return []
    pj = p
    while pj < pk:
        # Newton lift: r <- r - (r^2 - a)/(2r)
        pj *= p
        r = (r - (r * r - a) * pow(2 * r, -1, pj)) % pj
    return sorted({r, pk - r})


def crt(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine (residue, modulus) pairs with pairwise coprime moduli."""
    x, m = 0, 1
    for r, mod in residues:
        g = math.gcd(m, mod)
        if g != 1:
            raise ValueError("moduli must be coprime")
        x = (x * mod * pow(mod, -1, m) + r * m * pow(m, -1, mod)) % (m * mod)
        m *= mod
    return x, m


def two_squares_prime(p: int) -> tuple[int, int]:
    """Write a prime p = 1 mod 4 as a^2 + b^2 with a odd > 0, b even > 0."""
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a prime = 1 mod 4")
    r = sqrt_mod(p - 1, p)
    assert r is not None
    a0, a1 = p, r
    while a1 * a1 > p:
        a0, a1 = a1, a0 % a1
    a = a1
    b = isqrt(p - a * a)
    assert a * a + b * b == p
    if a % 2 == 0:
        a, b = b, a
    return a, b

"""Data about Q(sqrt(D)) and the order Z[sqrt(D)].

Splitting of rational primes, sums of two squares, x^2 + 2 y^2
representations, and the auxiliary "twist point" (x0, y0, z0) solving
x0^2 - D y0^2 = ell z0^2 whose element x0 - y0 sqrt(D) generates the
quadratic extension used by the two-character solvability criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intcore import (
    crt,
    factor,
    isqrt,
    is_square,
    sqrt_mod_prime_power,
    two_squares_prime,
)
from .pellsolver import minimal_solutions

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"

FAMILY_PQ = "pq"
FAMILY_2D = "2d"
FAMILY_OTHER = "other"


@dataclass(frozen=True)
class QuadOrderInfo:
    """Shape of the order Z[sqrt(D)] relevant to the criteria."""

    D: int
    discriminant: int
    family: str
    primes: tuple[int, ...]  # (p, q) for pq; prime divisors of d for 2d

    @property
    def d(self) -> int:
        return self.D // 2


def classify_order(D: int) -> QuadOrderInfo:
    if D <= 0 or is_square(D):
        raise ValueError(f"D must be a positive non-square, got {D}")
    fac = factor(D)
    ps = fac.primes()
    if (
        len(ps) == 2
        and fac.factors[0][1] == 1
        and fac.factors[1][1] == 1
        and ps[0] % 4 == 1
        and ps[1] % 4 == 1
    ):
        return QuadOrderInfo(D, 4 * D, FAMILY_PQ, ps)
    if D % 2 == 0:
        d = D // 2
        dfac = factor(d)
        if d % 2 == 1 and all(e == 1 for _, e in dfac.factors) and all(
            p % 8 == 1 for p in dfac.primes()
        ):
            return QuadOrderInfo(D, 4 * D, FAMILY_2D, dfac.primes())
    return QuadOrderInfo(D, 4 * D, FAMILY_OTHER, ())


def splitting_type(D: int, l: int) -> str:
    """Behavior of the prime l in the order Z[sqrt(D)]."""
    if l == 2:
        r = D % 8
        if r == 1:
            return SPLIT
        if r == 5:
            return INERT
        return RAMIFIED
    if D % l == 0:
        return RAMIFIED
    t = pow(D % l, (l - 1) // 2, l)
    return SPLIT if t == 1 else INERT


def two_squares_all(m: int) -> list[tuple[int, int]]:
    """All primitive m = r^2 + s^2 up to order and sign, as r >= s > 0 pairs.

    Assembled from Gaussian prime splittings; empty when m has a prime
    factor = 3 mod 4 or is divisible by 4.  For m = 2 the pair is (1, 1).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    fac = factor(m)
    if fac.exponent(2) > 1:
        return []
    reps = [(1, 0)]
    if fac.exponent(2) == 1:
        reps = [(1, 1)]  # multiply by 1 + i
    for p, e in fac.factors:
        if p == 2:
            continue
        if p % 4 == 3:
            return []
        a, b = two_squares_prime(p)
        pe_plus = (a, b)
        for _ in range(e - 1):
            pe_plus = (pe_plus[0] * a - pe_plus[1] * b, pe_plus[0] * b + pe_plus[1] * a)
        pe_minus = (pe_plus[0], -pe_plus[1])
        reps = [
            (x * u - y * v, x * v + y * u)
            for x, y in reps
            for u, v in (pe_plus, pe_minus)
        ]
    out = set()
    for x, y in reps:
        r, s = sorted((abs(x), abs(y)), reverse=True)
        assert r * r + s * s == m and math.gcd(r, s) == 1
        out.add((r, s))
    return sorted(out)


def repr_x2_plus_2y2(m: int) -> tuple[int, int] | None:
    """One primitive a^2 + 2 b^2 = m with a, b >= 0, or None."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return (1, 0)
    if m == 2:
        return (0, 1)
    fac = factor(m)
    if fac.exponent(2) > 1:
        return None
    for p in fac.primes():
        if p != 2 and p % 8 not in (1, 3):
            return None
    # Cornacchia with -2: run Euclid from each square root of -2 mod m
    parts = []
    for p, e in fac.factors:
        rs = sqrt_mod_prime_power(-2 % p**e, p, e)
        if not rs:
            return None
        parts.append([(r, p**e) for r in rs])
    combos: list[list[tuple[int, int]]] = [[]]
    for options in parts:
        combos = [c + [o] for c in combos for o in options]
    roots = sorted({crt(c)[0] % m for c in combos})
    for t in roots:
        r0, r1 = m, t
        while r1 * r1 > m:
            r0, r1 = r1, r0 % r1
        if r1 == 0:
            continue
        rem = m - r1 * r1
        if rem % 2 == 0 and is_square(rem // 2):
            a, b = r1, isqrt(rem // 2)
            if math.gcd(a, b) == 1:
                return (a, b)
    return None


@dataclass(frozen=True)
class TwistPoint:
    """Solution (x0, y0, z0) of x0^2 - D y0^2 = ell z0^2, x0 > 0, gcd(x0, y0) = 1.

    The element x0 - y0 sqrt(D) is totally positive and generates the
    quadratic extension whose Artin character supplements the class group.
    """

    x0: int
    y0: int
    z0: int
    ell: int
    D: int

    def __post_init__(self) -> None:
        if self.x0 * self.x0 - self.D * self.y0 * self.y0 != self.ell * self.z0 * self.z0:
            raise ValueError("not a twist point")
        if self.x0 <= 0 or math.gcd(self.x0, self.y0) != 1:
            raise ValueError("twist point must have x0 > 0, gcd(x0, y0) = 1")

    def element(self) -> tuple[int, int]:
        """Coordinates of x0 - y0 sqrt(D)."""
        return (self.x0, -self.y0)

    def norm(self) -> int:
        return self.ell * self.z0 * self.z0


def twist_point_candidates(D: int, ell: int, z_cap: int | None = None):
    """Yield twist points in lexicographic (z0, y0, x0) order."""
    if z_cap is None:
        z_cap = isqrt(D) + 2
    for z in range(1, z_cap + 1):
        hits = []
        for x, y in minimal_solutions(D, ell * z * z):
            if x > 0 and math.gcd(x, y) == 1:
                hits.append((y, x))
        for y, x in sorted(hits):
            yield TwistPoint(x, y, z, ell, D)


def find_twist_point(D: int, ell: int) -> TwistPoint:
    """Lexicographically minimal twist point for (D, ell)."""
    for tp in twist_point_candidates(D, ell):
        return tp
    raise ValueError(f"no solution of x^2 - {D} y^2 = {ell} z^2 within bound")

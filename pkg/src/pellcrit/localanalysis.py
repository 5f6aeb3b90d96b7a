"""Local computations at the completions of E = Q(sqrt(D)).

Z_l-solvability of x^2 - D y^2 = n, square classes of 2-adic numbers,
quadratic Hilbert symbols over the completions E_v (including the wild
quadratic extensions of Q_2), the norm-class character table of the
auxiliary quadratic extension, and residue-field splitting tests.

The 2-adic symbol engine works on the finite group E_v*/(E_v*)^2: a unit
is a square iff it is one modulo pi^(2e+1), so square classes are exact
data at bounded precision.  The Hilbert pairing on that group is pinned
down by three families of identities, each a theorem: the projection
formula (x, c)_v = (N x, c)_2 for rational c, the diagonal identity
(x, x)_v = (x, -1)_v, and Steinberg relations (x, 1-x)_v = 1.  Solving
that linear system over GF(2) determines the full pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intcore import is_prime, sqrt_mod
from .symbols import REAL, jacobi, hilbert_q
from .quadring import (
    FAMILY_2D,
    INERT,
    RAMIFIED,
    SPLIT,
    TwistPoint,
    classify_order,
    splitting_type,
)


# ---------------------------------------------------------------------------
# places


@dataclass(frozen=True)
class Place:
    """A place of E = Q(sqrt(D)).

    Split places carry the chosen square root of D mod l^prec, so the two
    conjugate places are distinguishable; real places carry the embedding
    sign of sqrt(D).
    """

    l: object  # prime or REAL
    kind: str
    D: int
    root: int | None = None
    prec: int = 0
    sign: int = 0


def _lift_root_odd(D: int, l: int, prec: int) -> int:
    r = sqrt_mod(D % l, l)
    if r is None or r == 0:
        raise ValueError(f"D not a nonzero square mod {l}")
    mod = l
    while mod < l**prec:
        mod *= l
        r = (r - (r * r - D) * pow(2 * r, -1, mod)) % mod
    return r


def _lift_root_2(D: int, prec: int) -> int:
    if D % 8 != 1:
        raise ValueError("D must be 1 mod 8 to split at 2")
    r = 1
    for j in range(3, prec):
        if (r * r - D) % (1 << (j + 1)):
            r += 1 << (j - 1)
    return r % (1 << prec)


def places_over(D: int, l: int, prec: int = 24) -> tuple[Place, ...]:
    """The places of E over the rational prime l."""
    st = splitting_type(D, l)
    if st == SPLIT:
        r = _lift_root_2(D, prec) if l == 2 else _lift_root_odd(D, l, prec)
        mod = l**prec
        return (
            Place(l, SPLIT, D, root=r, prec=prec),
            Place(l, SPLIT, D, root=mod - r, prec=prec),
        )
    return (Place(l, st, D, prec=prec),)


def real_places(D: int) -> tuple[Place, Place]:
    return (Place(REAL, "real", D, sign=1), Place(REAL, "real", D, sign=-1))


def _as_pair(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, tuple):
        return (Fraction(x[0]), Fraction(x[1]))
    return (Fraction(x), Fraction(0))


# ---------------------------------------------------------------------------
# square classes over Q_2


def square_class_2(u) -> tuple[int, int]:
    """(valuation parity, unit representative) of a nonzero rational in Q_2*.

    The representative is one of 1, -1, 5, -5 (units mod squares); together
    with the parity bit this names the square class among {±1, ±2, ±5, ±10}.
    """
    f = Fraction(u)
    if f == 0:
        raise ValueError("square class of 0 undefined")
    t = f.numerator * f.denominator
    v = 0
    while t % 2 == 0:
        t //= 2
        v += 1
    rep = {1: 1, 3: -5, 5: 5, 7: -1}[t % 8]
    return (v & 1, rep)


def norm_class_2(u) -> int | None:
    """Class of u among local norms {1, -1, 2, -2} at a ramified-at-2 field.

    None when u is not in the norm group (unit part ±5 mod squares).
    """
    par, rep = square_class_2(u)
    if rep in (5, -5):
        return None
    return rep * (2 if par else 1)


# ---------------------------------------------------------------------------
# local solvability and local points


def _val(n: int, l: int) -> int:
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


def local_solvable(D: int, n: int, l: int) -> bool:
    """True iff x^2 - D y^2 = n has a solution in Z_l x Z_l."""
    if n == 0:
        raise ValueError("n must be nonzero")
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if l == 2:
        return _local2(D, n)
    dv = _val(D, l)
    if dv >= 2:
        # x must be divisible by l; descend to the reduced equation
        nv = _val(n, l)
        if nv == 0:
            return jacobi(n, l) == 1
        if nv == 1:
            return False
        return local_solvable(D // (l * l), n // (l * l), l)
    if dv == 0:
        if jacobi(D, l) == 1:
            return True
        return _val(n, l) % 2 == 0
    # l exactly divides D
    m = n
    while m % (l * l) == 0:
        m //= l * l
    if m % l == 0:
        return jacobi(-(m // l) * (D // l), l) == 1
    return jacobi(m, l) == 1


def _local2(D: int, n: int) -> bool:
    while True:
        # primitive layer: some solution with x or y odd
        if _primitive_at_2(D, n):
            return True
        if n % 4 != 0:
            return False
        n //= 4


@lru_cache(maxsize=65536)
def _primitive_at_2_key(dmod: int, nmod: int, k: int) -> bool:
    mod = 1 << k
    for y in range(mod):
        t = (nmod + dmod * y * y) % mod
        if y & 1:
            # x may be anything; t must be a square mod 2^k
            tt = t
            v = 0
            while tt and tt % 2 == 0:
                tt //= 2
                v += 1
            if t == 0 or (v % 2 == 0 and (k - v < 3 or tt % 8 == 1)
                          and (k - v != 2 or tt % 4 == 1)):
                return True
        elif t % 8 == 1:  # x must be odd when y is even
            return True
    return False


def _primitive_at_2(D: int, n: int) -> bool:
    v2d = _val(D, 2) if D % 2 == 0 else 0
    k = 2 * v2d + 5
    mod = 1 << k
    return _primitive_at_2_key(D % mod, n % mod, k)


@dataclass(frozen=True)
class LocalPoint:
    """Residues (x, y) mod l^precision with x^2 - D y^2 = n, Hensel-liftable."""

    l: int
    precision: int
    x: int
    y: int
    liftable: bool = True


def _newton_sqrt_mod_lk(a: int, l: int, prec: int) -> int:
    # square root of a unit square a mod l^prec (odd l) or 2^prec (a = 1 mod 8)
    if l == 2:
        r = 1
        for j in range(3, prec):
            if (r * r - a) % (1 << (j + 1)):
                r += 1 << (j - 1)
        return r % (1 << prec)
    r = sqrt_mod(a % l, l)
    if r is None:
        raise ValueError("not a residue")
    mod = l
    while mod < l**prec:
        mod *= l
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    return r % l**prec


def find_local_point(D: int, n: int, l: int, prec: int = 24) -> LocalPoint | None:
    """A Z_l-point of x^2 - D y^2 = n at the given precision, or None."""
    if not local_solvable(D, n, l):
        return None
    if l == 2:
        return _point_at_2(D, n, prec)
    mod = l**prec
    dv = _val(D, l)
    nv = _val(n, l)
    if dv == 0:
        if jacobi(D, l) == 1:
            r = _lift_root_odd(D, l, prec)
            inv2 = pow(2, -1, mod)
            x = (1 + n) * inv2 % mod
            y = (1 - n) * inv2 * pow(r, -1, mod) % mod
            return LocalPoint(l, prec, x, y)
        # inert: nv even; solve the unit layer mod l then lift
        half = l ** (nv // 2)
        m = n // l**nv
        for xr in range(l):
            t = (xr * xr - m) * pow(D, -1, l) % l
            yr = sqrt_mod(t, l)
            if yr is None:
                continue
            if xr % l == 0 and yr % l == 0:
                continue
            x, y = xr, yr
            if x != 0:
                # lift x as a function of y
                mod_j = l
                while mod_j < mod:
                    mod_j *= l
                    x = (x - (x * x - D * y * y - m) * pow(2 * x, -1, mod_j)) % mod_j
            else:
                mod_j = l
                while mod_j < mod:
                    mod_j *= l
                    y = (y + (x * x - D * y * y - m) * pow(2 * D * y, -1, mod_j)) % mod_j
            return LocalPoint(l, prec, x * half % mod, y * half % mod)
        return None
    # ramified odd prime
    scale = l ** (nv // 2) if nv % 2 == 0 else l ** ((nv - 1) // 2)
    m = n // scale**2
    if nv % 2 == 0:
        x = _newton_sqrt_mod_lk(m % mod, l, prec)
        return LocalPoint(l, prec, x * scale % mod, 0)
    # y^2 = -(m/l) / (D/l), a unit
    c2 = (-(m // l)) * pow(D // l, -1, mod) % mod
    y = _newton_sqrt_mod_lk(c2, l, prec)
    return LocalPoint(l, prec, 0, y * scale % mod)


def _point_at_2(D: int, n: int, prec: int) -> LocalPoint | None:
    mod = 1 << prec
    scale = 1
    while True:
        pt = _point_at_2_primitive(D, n, prec)
        if pt is not None:
            return LocalPoint(2, prec, pt[0] * scale % mod, pt[1] * scale % mod)
        if n % 4 != 0:
            return None
        n //= 4
        scale *= 2


def _point_at_2_primitive(D: int, n: int, prec: int) -> tuple[int, int] | None:
    # scan y residues; t = n + D y^2 an exact 2-adic square gives a point
    for y in range(1024):
        t = n + D * y * y
        if t == 0:
            return (0, y)
        tt, v = t, 0
        while tt % 2 == 0:
            tt //= 2
            v += 1
        if v % 2 == 0 and tt % 8 == 1:
            x = _newton_sqrt_mod_lk(tt % (1 << prec), 2, prec)
            x = x * (1 << (v // 2)) % (1 << prec)
            if x % 2 == 1 or y % 2 == 1:
                return (x, y)
    # fallback: fix an x residue, Newton-lift an odd y through the gradient
    v2d = _val(D, 2) if D % 2 == 0 else 0
    k = 2 * v2d + 5
    mod = 1 << k
    big = 1 << prec
    for x in range(mod):
        for y in range(1, mod, 2):
            if (x * x - D * y * y - n) % mod == 0:
                mj = mod
                while mj < big:
                    mj <<= 1
                    f = x * x - D * y * y - n
                    y = (y + f * pow(2 * D * y, -1, mj)) % mj
                assert (x * x - D * y * y - n) % (big >> 2) == 0
                return (x % big, y % big)
    return None


# ---------------------------------------------------------------------------
# the 2-adic quadratic field engine

_COORD_BITS = 5
_COORD_MOD = 1 << _COORD_BITS


class TwoAdicQuad:
    """E_v = Q_2(sqrt(D)) for nonsplit D: exact square-class arithmetic
    and the quadratic Hilbert pairing on E_v*/(E_v*)^2."""

    def __init__(self, D: int):
        v2 = _val(D, 2) if D % 2 == 0 else 0
        if v2 >= 2:
            raise ValueError("D must have 2-adic valuation 0 or 1")
        if v2 == 0 and D % 8 == 1:
            raise ValueError("Q_2(sqrt(D)) is split, not a field")
        self.D = D
        if v2 == 1:
            self.kind, self.e, self.f = "ram2", 2, 1
            self.pi = (0, 1)
        elif D % 4 == 3:
            self.kind, self.e, self.f = "ram3", 2, 1
            self.pi = (1, 1)
        else:
            self.kind, self.e, self.f = "inert", 1, 2
            self.pi = (2, 0)
            self.c = (D - 1) // 4
        self._canon_cache: dict = {}
        self._build_classes()
        self._solve_gram()

    # -- basis arithmetic (inert uses the (1, phi) basis, phi = (1+sqrt D)/2)

    def from_sqrt_basis(self, x, y):
        x, y = Fraction(x), Fraction(y)
        if self.kind == "inert":
            return (x - y, 2 * y)
        return (x, y)

    def mul(self, u, v):
        a1, b1 = u
        a2, b2 = v
        if self.kind == "inert":
            return (a1 * a2 + self.c * b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)
        return (a1 * a2 + self.D * b1 * b2, a1 * b2 + a2 * b1)

    def norm(self, u):
        a, b = u
        if self.kind == "inert":
            return a * a + a * b - self.c * b * b
        return a * a - self.D * b * b

    def val(self, u) -> int:
        nrm = Fraction(self.norm(u))
        if nrm == 0:
            raise ValueError("valuation of 0")
        t = nrm.numerator * nrm.denominator
        v = 0
        while t % 2 == 0:
            t //= 2
            v += 1
        v -= 2 * _val(nrm.denominator, 2)
        if self.f == 2:
            assert v % 2 == 0
            return v // 2
        return v

    def _div_pi(self, u):
        a, b = Fraction(u[0]), Fraction(u[1])
        if self.kind == "inert":
            return (a / 2, b / 2)
        if self.kind == "ram2":
            return (b, a / self.D)
        # ram3: divide by 1 + sqrt(D); norm is 1 - D
        return ((a - b * self.D) / (1 - self.D), (b - a) / (1 - self.D))

    def unit_part(self, u):
        for _ in range(self.val(u)):
            u = self._div_pi(u)
        return u

    def _coords_mod(self, u) -> tuple[int, int]:
        out = []
        for t in u:
            t = Fraction(t)
            if t.denominator % 2 == 0:
                raise ValueError("element is not integral")
            out.append(t.numerator * pow(t.denominator, -1, _COORD_MOD) % _COORD_MOD)
        return tuple(out)

    def _mulmod(self, u, v) -> tuple[int, int]:
        w = self.mul(u, v)
        return (w[0] % _COORD_MOD, w[1] % _COORD_MOD)

    def _canon(self, ucoords: tuple[int, int]) -> tuple[int, int]:
        hit = self._canon_cache.get(ucoords)
        if hit is None:
            hit = min(self._mulmod(ucoords, s) for s in self._squares)
            self._canon_cache[ucoords] = hit
        return hit

    def class_of(self, u) -> tuple[int, tuple[int, int]]:
        """Square class as (valuation parity, canonical unit residue)."""
        v = self.val(u)
        w = self.unit_part(u)
        return (v & 1, self._canon(self._coords_mod(w)))

    def is_square(self, u) -> bool:
        return self.class_of(u) == self._trivial

    # -- class group structure and the Gram matrix of the pairing

    def _build_classes(self):
        units = [
            (a, b)
            for a in range(_COORD_MOD)
            for b in range(_COORD_MOD)
            if self.norm((a, b)) % 2 == 1
        ]
        self._squares = {self._mulmod(u, u) for u in units}
        unit_classes = sorted({self._canon(self._coords_mod(u)) for u in units})
        assert len(unit_classes) == 8, (self.D, len(unit_classes))
        self._trivial = (0, self._canon((1, 0)))
        self.classes = [(p, c) for p in (0, 1) for c in unit_classes]
        # exact integer representatives
        self._rep = {}
        for p, c in self.classes:
            rep = (c[0], c[1])
            if p:
                rep = self.mul(self.pi, rep)
            self._rep[(p, c)] = rep
        # GF(2) coordinates via greedy basis
        vec = {self._trivial: 0}
        basis = []
        for cls in self.classes:
            if cls not in vec:
                basis.append(cls)
                bit = 1 << (len(basis) - 1)
                for known, kv in list(vec.items()):
                    prod = self.class_of(self.mul(self._rep[known], self._rep[cls]))
                    vec[prod] = kv | bit
        assert len(basis) == 4 and len(vec) == 16, (self.D, len(vec))
        self._vec = vec

    @staticmethod
    def _pair_mask(va: int, vb: int) -> int:
        # unknowns g_ij (i <= j < 4) laid out in a 10-bit mask
        mask = 0
        k = 0
        for i in range(4):
            for j in range(i, 4):
                ai, aj = (va >> i) & 1, (va >> j) & 1
                bi, bj = (vb >> i) & 1, (vb >> j) & 1
                coeff = (ai & bi) if i == j else ((ai & bj) ^ (aj & bi))
                if coeff:
                    mask ^= 1 << k
                k += 1
        return mask

    def _solve_gram(self):
        rows: list[tuple[int, int]] = []

        def add(cls_a, cls_b, rhs_sign):
            rows.append(
                (self._pair_mask(self._vec[cls_a], self._vec[cls_b]),
                 0 if rhs_sign == 1 else 1)
            )

        rational_cls = {}
        for cq in (1, -1, 2, -2, 5, -5, 10, -10):
            rational_cls[cq] = self.class_of((cq, 0))
        for cls in self.classes:
            nb = self.norm(self._rep[cls])
            # diagonal: (x, x) = (x, -1) = (N x, -1)_2
            add(cls, cls, hilbert_q(nb, -1, 2))
            # projection formula against every rational square class
            for cq, acls in rational_cls.items():
                add(acls, cls, hilbert_q(nb, cq, 2))
        # Steinberg relations (x, 1 - x) = 1
        for layer in (None, self.pi):
            for a in range(-8, 9):
                for b in range(-8, 9):
                    if a == 0 and b == 0:
                        continue
                    xi = (a, b) if layer is None else self.mul(layer, (a, b))
                    one_minus = (1 - xi[0], -xi[1])
                    if one_minus == (0, 0) or self.norm(xi) == 0 or self.norm(one_minus) == 0:
                        continue
                    rows.append(
                        (self._pair_mask(self._vec[self.class_of(xi)],
                                         self._vec[self.class_of(one_minus)]), 0)
                    )
        # Gaussian elimination over GF(2), 10 unknowns
        pivots: dict[int, tuple[int, int]] = {}
        for mask, rhs in rows:
            for pb in sorted(pivots, reverse=True):
                if mask >> pb & 1:
                    pm, pr = pivots[pb]
                    mask ^= pm
                    rhs ^= pr
            if mask == 0:
                if rhs:
                    raise ArithmeticError(f"inconsistent Hilbert pairing for D={self.D}")
                continue
            pivots[mask.bit_length() - 1] = (mask, rhs)
        if len(pivots) != 10:
            raise ArithmeticError(
                f"Hilbert pairing underdetermined for D={self.D} (rank {len(pivots)})"
            )
        gram = 0
        for pb in sorted(pivots, reverse=True):
            pm, pr = pivots[pb]
            # back-substitute
            for qb in sorted(pivots, reverse=True):
                if qb < pb and pm >> qb & 1:
                    qm, qr = pivots[qb]
                    pm ^= qm
                    pr ^= qr
            if pr:
                gram |= 1 << pb
        self._gram = gram
        # cache the full 16 x 16 table
        self._table = {}
        for ca in self.classes:
            for cb in self.classes:
                bit = bin(self._pair_mask(self._vec[ca], self._vec[cb]) & gram).count("1") & 1
                self._table[(ca, cb)] = -1 if bit else 1

    def pair(self, u, v) -> int:
        """Quadratic Hilbert symbol (u, v) over this field."""
        return self._table[(self.class_of(u), self.class_of(v))]


@lru_cache(maxsize=None)
def two_adic_context(D: int) -> TwoAdicQuad:
    return TwoAdicQuad(D)


# ---------------------------------------------------------------------------
# Hilbert symbols over E_v


def _q_symbol_from_data(l: int, v1: int, u1: int, v2: int, u2: int) -> int:
    # (a, b)_l from valuations and unit parts
    if l == 2:
        eps1, eps2 = (u1 - 1) // 2 & 1, (u2 - 1) // 2 & 1
        om1, om2 = (u1 * u1 - 1) // 8 & 1, (u2 * u2 - 1) // 8 & 1
        return -1 if (eps1 * eps2 + v1 * om2 + v2 * om1) & 1 else 1
    s = 1
    if (v1 & 1) and (v2 & 1) and ((l - 1) // 2) & 1:
        s = -s
    if v2 & 1:
        s *= jacobi(u1, l)
    if v1 & 1:
        s *= jacobi(u2, l)
    return s


def _embed_val_unit(x: Fraction, y: Fraction, place: Place) -> tuple[int, int]:
    # valuation and unit part mod small power for x + y * root in Q_l
    l = place.l
    den = x.denominator * y.denominator
    x, y = x * den * den, y * den * den  # same square class, now integral
    assert x.denominator == 1 and y.denominator == 1
    t = x.numerator + y.numerator * place.root
    mod = l**place.prec
    t %= mod
    if t == 0:
        raise ArithmeticError("split embedding needs more precision")
    v = 0
    while t % l == 0:
        t //= l
        v += 1
    if v > place.prec - 4:
        raise ArithmeticError("split embedding needs more precision")
    return v, t


def hilbert_ev(alpha, beta, place: Place) -> int:
    """Quadratic Hilbert symbol (alpha, beta) over E_v.

    Elements are rationals or coordinate pairs (x, y) meaning x + y sqrt(D).
    """
    xa, ya = _as_pair(alpha)
    xb, yb = _as_pair(beta)
    if (xa, ya) == (0, 0) or (xb, yb) == (0, 0):
        raise ValueError("Hilbert symbol arguments must be nonzero")
    D = place.D
    if place.kind == "real":
        sa = _real_sign(xa, ya, D, place.sign)
        sb = _real_sign(xb, yb, D, place.sign)
        return -1 if (sa < 0 and sb < 0) else 1
    if place.kind == SPLIT:
        v1, u1 = _embed_val_unit(xa, ya, place)
        v2, u2 = _embed_val_unit(xb, yb, place)
        if place.l == 2:
            return _q_symbol_from_data(2, v1, u1 % 8, v2, u2 % 8)
        return _q_symbol_from_data(place.l, v1, u1 % place.l, v2, u2 % place.l)
    if place.l == 2:
        ctx = two_adic_context(D)
        return ctx.pair(ctx.from_sqrt_basis(xa, ya), ctx.from_sqrt_basis(xb, yb))
    return _tame_symbol(xa, ya, xb, yb, place)


def _real_sign(x: Fraction, y: Fraction, D: int, sign: int) -> int:
    # sign of x + sign * y * sqrt(D), exactly
    if y == 0:
        return 1 if x > 0 else -1
    ysq = y * y * D
    xy = x * x
    if sign * y > 0:
        if x >= 0:
            return 1
        return 1 if ysq > xy else -1
    if x <= 0:
        return -1
    return 1 if xy > ysq else -1


def _odd_val_unit(ctx_D: int, x: Fraction, y: Fraction, place: Place):
    """(valuation, unit coords) of x + y sqrt(D) at a nonsplit odd place."""
    l = place.l
    D = ctx_D
    nrm = x * x - D * y * y
    t = nrm.numerator * nrm.denominator
    vn = 0
    while t % l == 0:
        t //= l
        vn += 1
    vn -= 2 * _val(nrm.denominator, l)
    if place.kind == INERT:
        assert vn % 2 == 0
        v = vn // 2
        scale = Fraction(1, l**v)
        return v, (x * scale, y * scale)
    # ramified: v(x + y sqrt(D)) = v_l(norm); divide out sqrt(D)^v
    v = vn
    k = v // 2
    x, y = x / Fraction(l**k), y / Fraction(l**k)
    if v % 2 == 1:
        # (x + y sqrt(D)) / sqrt(D) = y + (x / D) sqrt(D)
        x, y = y, x / Fraction(D)
    return v, (x, y)


def _tame_symbol(xa, ya, xb, yb, place: Place) -> int:
    l = place.l
    D = place.D
    v1, (ux1, uy1) = _odd_val_unit(D, xa, ya, place)
    v2, (ux2, uy2) = _odd_val_unit(D, xb, yb, place)

    def chi(ux: Fraction, uy: Fraction) -> int:
        if place.kind == INERT:
            # residue field F_{l^2}; quadratic character via the norm to F_l
            nrm = ux * ux - D * uy * uy
            r = nrm.numerator * pow(nrm.denominator, -1, l) % l
            return jacobi(r, l)
        r = ux.numerator * pow(ux.denominator, -1, l) % l
        return jacobi(r, l)

    s = 1
    if (v1 & 1) and (v2 & 1):
        if place.kind == RAMIFIED and ((l - 1) // 2) & 1:
            s = -s
        # inert residue field has -1 a square; no sign there
    if v2 & 1:
        s *= chi(ux1, uy1)
    if v1 & 1:
        s *= chi(ux2, uy2)
    return s


# ---------------------------------------------------------------------------
# the norm-class character of the auxiliary extension


@dataclass(frozen=True)
class CharacterTable:
    """Values of the norm-class character at 1, -1, 2, -2 over the place at 2."""

    chi_1: int
    chi_neg1: int
    chi_2: int
    chi_neg2: int

    def value(self, norm_class: int) -> int:
        return {1: self.chi_1, -1: self.chi_neg1, 2: self.chi_2, -2: self.chi_neg2}[
            norm_class
        ]


def character_table(D: int, twist: TwistPoint) -> CharacterTable:
    """chi'(c) = ((xi_c, x0 - y0 sqrt(D)) / v) for norm classes c in {1,-1,2,-2}.

    Computed through the 2-adic Hilbert engine on explicit local points of
    norm c, not through closed forms.
    """
    info = classify_order(D)
    if info.family != FAMILY_2D:
        raise ValueError(f"D={D} is not 2 times a squarefree product of 1 mod 8 primes")
    if twist.D != D:
        raise ValueError("twist point belongs to a different D")
    ctx = two_adic_context(D)
    theta = ctx.from_sqrt_basis(*twist.element())
    values = {}
    for c in (1, -1, 2, -2):
        pt = find_local_point(D, c, 2, prec=24)
        assert pt is not None, (D, c)
        xi = ctx.from_sqrt_basis(pt.x, pt.y)
        values[c] = ctx.pair(xi, theta)
    tab = CharacterTable(values[1], values[-1], values[2], values[-2])
    if tab.chi_1 != 1 or tab.chi_neg2 != tab.chi_neg1 * tab.chi_2:
        raise ArithmeticError(f"character table inconsistent for D={D}: {tab}")
    return tab


def twist_residue_square(D: int, twist: TwistPoint, place: Place) -> bool:
    """Whether x0 - y0 sqrt(D) is a square in the residue field at the place.

    Only defined away from 2 and the twist prime (where the extension is
    unramified); the unit part of the element is tested.
    """
    l = place.l
    if place.kind == "real" or l == 2 or l == twist.ell:
        raise ValueError("place must be prime to 2 and the twist prime")
    x0, y0 = twist.element()
    if place.kind == SPLIT:
        _, u = _embed_val_unit(Fraction(x0), Fraction(y0), place)
        return jacobi(u % l, l) == 1
    _, (ux, uy) = _odd_val_unit(D, Fraction(x0), Fraction(y0), place)
    if place.kind == INERT:
        nrm = ux * ux - D * uy * uy
        r = nrm.numerator * pow(nrm.denominator, -1, l) % l
        return jacobi(r, l) == 1
    r = ux.numerator * pow(ux.denominator, -1, l) % l
    return jacobi(r, l) == 1

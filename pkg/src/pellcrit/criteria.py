"""Closed-form decision procedures for the supported families.

Classification of x^2 - pq y^2 in {-1, p, q} and x^2 - 2p y^2 in
{-1, 2, -2} by quartic residue symbols, the explicit D = 221 criterion,
and the unsolvability checks for x^2 - 2d y^2 = 2, -1, -2.  Anything the
symbols leave open falls back to the Pell oracle, flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intcore import factor, is_prime, sqrt_mod
from .symbols import jacobi, quartic_2_of_d, quartic_residue
from .quadring import classify_order, FAMILY_2D, two_squares_all
from .verdict import Verdict
from . import pellsolver

UNDETERMINED = "undetermined"


def _oracle_target(D: int, targets: list[int]) -> tuple[int | None, Verdict]:
    hits = [(t, pellsolver.solve(D, t)) for t in targets]
    solvable = [(t, v) for t, v in hits if v.solvable]
    if len(solvable) == 1:
        t, v = solvable[0]
        return t, Verdict("solvable", v.witness, provenance="oracle")
    if not solvable:
        return None, Verdict("unsolvable", None, "oracle", reason="no-target-solvable")
    raise ArithmeticError(f"trichotomy violated for D={D}: {solvable}")


def classify_pq(p: int, q: int) -> tuple[int | None, Verdict]:
    """The solvable target among x^2 - pq y^2 = -1, p, q.

    Quartic-symbol dispatch where the criteria apply; otherwise the oracle
    resolves the classification and the verdict says so.
    """
    if p == q or not (is_prime(p) and is_prime(q)):
        raise ValueError("p, q must be distinct primes")
    D = p * q
    if p % 4 == 3 or q % 4 == 3:
        # -1 is locally impossible; the symbols here say nothing more
        return _oracle_target(D, [p, q])
    if jacobi(p, q) == -1:
        v = pellsolver.solve(D, -1)
        assert v.solvable
        return -1, Verdict("solvable", v.witness, provenance="nonresidue-pair")
    rp, rq = quartic_residue(q, p), quartic_residue(p, q)
    if rp * rq == -1:
        target = p if rp == 1 else q
        v = pellsolver.solve(D, target)
        assert v.solvable, (p, q, target)
        return target, Verdict("solvable", v.witness, provenance="quartic-trichotomy")
    if rp == -1 and rq == -1:
        v = pellsolver.solve(D, -1)
        assert v.solvable
        return -1, Verdict("solvable", v.witness, provenance="quartic-both-negative")
    return _oracle_target(D, [-1, p, q])


def classify_2p(p: int) -> tuple[int | None, Verdict]:
    """The solvable target among x^2 - 2p y^2 = -1, 2, -2 for an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    D = 2 * p
    r8 = p % 8
    if r8 == 3:
        target, prov = -2, "classical-residue"
    elif r8 == 7:
        target, prov = 2, "classical-residue"
    elif r8 == 5:
        target, prov = -1, "classical-residue"
    elif p % 16 == 9:
        target = -1 if quartic_residue(2, p) == -1 else -2
        prov = "quartic-2p"
    elif quartic_residue(2, p) == -1:  # p = 1 mod 16
        target, prov = 2, "quartic-2p"
    else:
        return _oracle_target(D, [-1, 2, -2])
    v = pellsolver.solve(D, target)
    assert v.solvable, (p, target)
    return target, Verdict("solvable", v.witness, provenance=prov)


@dataclass(frozen=True)
class Decomposition221:
    """n = (-1)^sign_exp 2^exp2 13^exp13 17^exp17 * prod p_i^e_i with the
    residue-symbol subsets of the remaining primes."""

    sign_exp: int
    exp2: int
    exp13: int
    exp17: int
    rest: tuple[tuple[int, int], ...]
    set1: tuple[int, ...]  # (13/p) = (17/p) = -1
    set2: tuple[int, ...]  # (221/p) = -1
    set3: tuple[int, ...]  # (13/p) = (17/p) = 1 and the quartic splits mod p
    n1: int  # product over primes outside set2


def _quartic_splits_mod_p(p: int) -> bool:
    # does x^4 - 238 x^2 + 17 have a root mod p; its roots in x^2 are
    # 119 +- 8 sqrt(221), and the two choices are squares simultaneously
    r = sqrt_mod(221, p)
    assert r is not None
    return jacobi(119 - 8 * r, p) == 1


def decompose_221(n: int) -> Decomposition221:
    fac = factor(n)
    rest = tuple((p, e) for p, e in fac.factors if p not in (2, 13, 17))
    set1, set2, set3 = [], [], []
    n1 = 1
    for p, e in rest:
        j13, j17 = jacobi(13, p), jacobi(17, p)
        if j13 == -1 and j17 == -1:
            set1.append(p)
        if j13 * j17 == -1:
            set2.append(p)
        else:
            n1 *= p**e
        if j13 == 1 and j17 == 1 and _quartic_splits_mod_p(p):
            set3.append(p)
    return Decomposition221(
        0 if fac.sign == 1 else 1,
        fac.exponent(2),
        fac.exponent(13),
        fac.exponent(17),
        rest,
        tuple(set1),
        tuple(set2),
        tuple(set3),
        n1,
    )


def decide_221(n: int) -> Verdict:
    """Solvability of x^2 - 221 y^2 = n by the explicit symbol conditions."""
    if n == 0:
        raise ValueError("n must be nonzero")
    dec = decompose_221(n)
    cond1 = (
        dec.exp2 % 2 == 0
        and jacobi(dec.n1, 17) == 1
        and all(jacobi(221, p) == 1 for p, e in dec.rest if e % 2 == 1)
    )
    if not cond1:
        return Verdict("unsolvable", None, "221-closed-form", reason="norm-condition")
    if dec.set1:
        cond2 = True
    else:
        # sign product over the primes that split in both Q(sqrt 13) and
        # Q(sqrt 17) but where the twist quartic stays irreducible
        lhs = 1
        for p, e in dec.rest:
            if (
                e % 2
                and p not in dec.set3
                and jacobi(13, p) == 1
                and jacobi(17, p) == 1
            ):
                lhs = -lhs
        for p, e in dec.rest:
            if p not in dec.set2 and e % 2 and jacobi(-1, p) == -1:
                lhs = -lhs
        rhs = quartic_residue(dec.n1, 17)
        if (dec.sign_exp + dec.exp13) % 2:
            rhs = -rhs
        cond2 = lhs == rhs
    if not cond2:
        return Verdict("unsolvable", None, "221-closed-form", reason="twist-condition")
    v = pellsolver.solve(221, n)
    assert v.solvable, n
    return Verdict("solvable", v.witness, "221-closed-form")


def known_obstructions(d: int, n: int) -> Verdict | None:
    """Closed-form unsolvability of x^2 - 2d y^2 = n for n in {-1, 2, -2}.

    None when no criterion applies (which does not mean solvable).
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if n == 2:
        if d % 16 == 9:
            return Verdict("unsolvable", None, "mod16-obstruction")
        return None
    if d % 2 == 0:  # the 2d family needs d odd
        return None
    info = classify_order(2 * d)
    if info.family != FAMILY_2D:
        return None
    if n == -1:
        if any(r % 8 in (3, 5) and s % 8 in (3, 5) for r, s in two_squares_all(2 * d)):
            return Verdict("unsolvable", None, "two-squares-obstruction")
        return None
    if n == -2:
        if quartic_2_of_d(d) == -1:
            return Verdict("unsolvable", None, "quartic-obstruction")
        return None
    return None

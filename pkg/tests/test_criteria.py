import pytest

from pellcrit import criteria, pellsolver
from pellcrit.intcore import _SMALL_PRIMES
from pellcrit.symbols import jacobi, quartic_residue


def test_classify_pq_examples():
    t, v = criteria.classify_pq(17, 13)
    assert t == 17 and v.witness == (119, 8)
    t, v = criteria.classify_pq(5, 61)
    assert t == 5 and v.witness == (35, 2)
    t, v = criteria.classify_pq(5, 29)
    assert t == -1 and v.witness == (12, 1)
    t, v = criteria.classify_pq(5, 13)
    assert t == -1 and v.witness == (8, 1)
    with pytest.raises(ValueError):
        criteria.classify_pq(13, 13)
    with pytest.raises(ValueError):
        criteria.classify_pq(15, 7)


def test_classify_pq_role_symmetry():
    for p, q in [(13, 17), (5, 61), (5, 29), (5, 13), (29, 5)]:
        t1, _ = criteria.classify_pq(p, q)
        t2, _ = criteria.classify_pq(q, p)
        assert t1 == t2


def test_classify_pq_trichotomy_small():
    ps = [p for p in _SMALL_PRIMES if p % 4 == 1 and p <= 150]
    for i, p in enumerate(ps):
        for q in ps[i + 1 :]:
            target, verdict = criteria.classify_pq(p, q)
            D = p * q
            solvable = [t for t in (-1, p, q) if pellsolver.solve(D, t).solvable]
            assert len(solvable) == 1
            assert target == solvable[0], (p, q)
            if verdict.witness:
                x, y = verdict.witness
                assert x * x - D * y * y == target


def test_classify_2p_examples():
    t, v = criteria.classify_2p(41)
    assert t == -1 and v.witness == (9, 1)
    t, v = criteria.classify_2p(73)
    assert t == -2 and v.witness == (12, 1)
    t, v = criteria.classify_2p(97)
    assert t == 2 and v.witness == (14, 1)
    t, v = criteria.classify_2p(113)
    assert t == -1 and v.witness == (15, 1) and v.provenance == "oracle"
    with pytest.raises(ValueError):
        criteria.classify_2p(2)


def test_classify_2p_trichotomy_small():
    for p in [q for q in _SMALL_PRIMES if 2 < q <= 1000]:
        target, verdict = criteria.classify_2p(p)
        D = 2 * p
        solvable = [t for t in (-1, 2, -2) if pellsolver.solve(D, t).solvable]
        assert len(solvable) == 1
        assert target == solvable[0], p
        x, y = verdict.witness
        assert x * x - D * y * y == target


def test_decide_221_examples():
    v = criteria.decide_221(17)
    assert v.solvable and v.witness == (119, 8)
    assert not criteria.decide_221(-1).solvable
    assert not criteria.decide_221(-4).solvable
    v = criteria.decide_221(4)
    assert v.solvable and v.witness == (2, 0)
    with pytest.raises(ValueError):
        criteria.decide_221(0)


def test_decide_221_against_oracle_window():
    for n in range(1, 1500):
        for s in (n, -n):
            assert criteria.decide_221(s).solvable == pellsolver.solve(221, s).solvable


def test_known_obstructions_examples():
    v = criteria.known_obstructions(41, 2)
    assert v is not None and v.provenance == "mod16-obstruction"
    v = criteria.known_obstructions(17, -1)
    assert v is not None and v.provenance == "two-squares-obstruction"
    v = criteria.known_obstructions(17, -2)
    assert v is not None and v.provenance == "quartic-obstruction"
    assert criteria.known_obstructions(73, -2) is None
    assert pellsolver.solve(146, -2).witness == (12, 1)


def test_known_obstructions_never_contradict_oracle():
    for d in range(2, 3001):
        for n in (-1, 2, -2):
            v = criteria.known_obstructions(d, n)
            if v is not None:
                assert not pellsolver.solve(2 * d, n).solvable, (d, n)


def test_pall_mechanism():
    # p = 9 mod 16 with a two-squares rep r, s = +-3 mod 8 forces (2/p)_4 = +1
    from pellcrit.quadring import two_squares_all

    hits = 0
    for p in [q for q in _SMALL_PRIMES if q % 16 == 9 and q <= 3000]:
        reps = two_squares_all(2 * p)
        if any(r % 8 in (3, 5) and s % 8 in (3, 5) for r, s in reps):
            assert quartic_residue(2, p) == 1, p
            hits += 1
        else:
            assert quartic_residue(2, p) == -1, p
    assert hits > 3


def test_decompose_221_sets():
    dec = criteria.decompose_221(-2 * 13 * 43 * 43)
    assert dec.sign_exp == 1 and dec.exp2 == 1 and dec.exp13 == 1
    assert dec.rest == ((43, 2),)
    assert dec.n1 == 43 * 43
    assert 43 not in dec.set2
    # 43 splits in both quadratic fields but the quartic stays irreducible
    assert jacobi(13, 43) == 1 and jacobi(17, 43) == 1
    assert 43 not in dec.set3

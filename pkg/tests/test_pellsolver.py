import math
import random

import pytest

from pellcrit import pellsolver


def test_cf_fundamental_examples():
    cf, f = pellsolver.cf_fundamental(221)
    assert (f.x1, f.y1, f.unit_norm) == (1665, 112, 1)
    assert len(cf.period) == 6
    _, f = pellsolver.cf_fundamental(10)
    assert (f.x1, f.y1, f.unit_norm) == (3, 1, -1)
    _, f = pellsolver.cf_fundamental(34)
    assert (f.x1, f.y1, f.unit_norm) == (35, 6, 1)
    with pytest.raises(ValueError):
        pellsolver.cf_fundamental(25)


def test_cf_invariants_to_2000():
    for D in range(2, 2001):
        if math.isqrt(D) ** 2 == D:
            continue
        cf, f = pellsolver.cf_fundamental(D)
        assert f.x1 * f.x1 - D * f.y1 * f.y1 == f.unit_norm
        assert (f.unit_norm == -1) == (len(cf.period) % 2 == 1)
        body = cf.period[:-1]
        assert body == tuple(reversed(body))
        assert cf.period[-1] == 2 * cf.a0
        assert all(q != 0 for _, q in cf.pq_states)


def test_solve_examples():
    v = pellsolver.solve(221, 17)
    assert v.status == "solvable" and v.witness == (119, 8)
    v = pellsolver.solve(82, 2)
    assert v.status == "unsolvable"
    assert v.reason == "class-search-exhausted"  # locally solvable everywhere
    v = pellsolver.solve(305, 5)
    assert v.witness == (35, 2)
    v = pellsolver.solve(221, -4)
    assert v.status == "unsolvable"
    v = pellsolver.solve(15, -1)
    assert v.status == "unsolvable" and v.reason.startswith("local-obstruction")
    with pytest.raises(ValueError):
        pellsolver.solve(221, 0)
    with pytest.raises(ValueError):
        pellsolver.solve(49, 3)


def test_witness_always_verifies():
    random.seed(4)
    for _ in range(600):
        D = random.randint(2, 500)
        if math.isqrt(D) ** 2 == D:
            continue
        n = random.randint(-100, 100)
        if n == 0:
            continue
        v = pellsolver.solve(D, n)
        if v.solvable:
            x, y = v.witness
            assert x * x - D * y * y == n


def test_routes_agree():
    orig = pellsolver._ORBIT_SCAN_LIMIT
    try:
        for D in (13, 34, 61, 82, 146, 221, 305):
            for n in list(range(-25, 26)) + [17, 50, 68]:
                if n == 0:
                    continue
                a = pellsolver.minimal_solutions(D, n)
                pellsolver._ORBIT_SCAN_LIMIT = -1
                b = pellsolver.minimal_solutions(D, n)
                pellsolver._ORBIT_SCAN_LIMIT = orig
                assert a == b, (D, n, a, b)
    finally:
        pellsolver._ORBIT_SCAN_LIMIT = orig


def test_large_unit_cases():
    v = pellsolver.solve(181, -1)
    x, y = v.witness
    assert x * x - 181 * y * y == -1 and y > 10**6
    v = pellsolver.solve(661, 3)
    assert v.solvable and v.witness[0] ** 2 - 661 * v.witness[1] ** 2 == 3


def test_unit_orbit_closure():
    for D, n in [(221, 17), (34, 2), (146, -2), (10, -1)]:
        v = pellsolver.solve(D, n)
        x, y = v.witness
        xp, yp = pellsolver.plus_unit(D)
        xx, yy = x * xp + D * y * yp, x * yp + y * xp
        assert xx * xx - D * yy * yy == n


def test_bound_mult_env(monkeypatch):
    monkeypatch.setenv("PELLCRIT_BOUND_MULT", "3")
    assert pellsolver.solve(221, 17).witness == (119, 8)
    monkeypatch.setenv("PELLCRIT_BOUND_MULT", "0")
    with pytest.raises(ValueError):
        pellsolver.minimal_solutions(221, 17)

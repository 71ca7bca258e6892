import numpy as np
import pytest

from schubhorn import modp

P = 32003


def test_rref_rank_nullspace():
    rng = np.random.default_rng(0)
    for _ in range(50):
        m, k = rng.integers(1, 7, 2)
        a = rng.integers(0, P, (m, k))
        r, pivots = modp.rref(a, P)
        assert modp.rank(a, P) == len(pivots)
        ns = modp.nullspace(a, P)
        assert ns.shape[1] == k - len(pivots)
        assert not modp.matmul(a, ns, P).any()
        if ns.shape[1]:
            assert modp.rank(ns, P) == ns.shape[1]


def test_inverse():
    rng = np.random.default_rng(1)
    for m in (1, 3, 5):
        a = rng.integers(0, P, (m, m))
        while modp.rank(a, P) < m:
            a = rng.integers(0, P, (m, m))
        inv = modp.inverse(a, P)
        assert (modp.matmul(a, inv, P) == np.eye(m, dtype=np.int64)).all()
    with pytest.raises(ValueError):
        modp.inverse(np.zeros((2, 2), dtype=np.int64), P)


def test_solve_and_intersection():
    rng = np.random.default_rng(2)
    a = rng.integers(0, P, (6, 3))
    x = rng.integers(0, P, (3, 2))
    b = modp.matmul(a, x, P)
    got = modp.solve_in_colspace(a, b, P)
    assert (got == x % P).all()
    with pytest.raises(ValueError):
        modp.solve_in_colspace(a, np.eye(6, 1, dtype=np.int64), P)

    c = rng.integers(0, P, (6, 3))
    meet = modp.intersect_columns(a, c, P)
    assert meet.shape[1] == 0  # two generic 3-spaces in dim 6 meet trivially
    joint = np.hstack([a[:, :1], c])
    meet2 = modp.intersect_columns(a, joint, P)
    assert meet2.shape[1] == 1
    assert modp.columns_contained(a, meet2, P)


def test_column_echelon_bottom_positions():
    # columns of the standard flag span: pivots are exactly their indices
    e = np.eye(5, dtype=np.int64)[:, :3]
    _, pivots = modp.column_echelon_bottom(e, P)
    assert pivots == [0, 1, 2]
    rng = np.random.default_rng(3)
    v = rng.integers(0, P, (5, 2))
    ech, pivots = modp.column_echelon_bottom(v, P)
    assert len(pivots) == 2
    for col, piv in enumerate(sorted(pivots)):
        assert ech[piv, col] == 1
        assert not ech[piv + 1:, col].any()


def test_quotient_map():
    rng = np.random.default_rng(4)
    basis = rng.integers(0, P, (6, 2))
    pi, sigma = modp.quotient_map(basis, P)
    assert pi.shape == (4, 6) and sigma.shape == (6, 4)
    assert not modp.matmul(pi, basis, P).any()
    assert (modp.matmul(pi, sigma, P) == np.eye(4, dtype=np.int64)).all()


def test_batch_rank():
    rng = np.random.default_rng(5)
    mats = rng.integers(0, 5, (200, 4, 3))
    got = modp.batch_rank(mats, 5)
    for i in range(200):
        assert got[i] == modp.rank(mats[i], 5)


def test_gaussian_binomial():
    assert modp.gaussian_binomial(4, 2, 2) == 35
    assert modp.gaussian_binomial(2, 1, 3) == 4
    assert modp.gaussian_binomial(3, 3, 2) == 1
    assert modp.gaussian_binomial(3, 0, 5) == 1
    assert modp.gaussian_binomial(5, 2, 5) == 20306

"""Dense exact linear algebra over a prime field, on int64 numpy arrays.

All matrices carry entries reduced into [0, p).  Intermediate values stay
below p + p^2, well inside int64 for any p < 2^31 / 2.
"""

from __future__ import annotations

import numpy as np


def inv_int(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * inv_int(int(a[r, c]), p)) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat: np.ndarray, p: int) -> int:
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right kernel."""
    a = np.asarray(mat, dtype=np.int64)
    cols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, c in enumerate(pivots):
            basis[c, k] = (-r[i, f]) % p
    return basis


def inverse(mat: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(mat, dtype=np.int64)
    m = a.shape[0]
    if m == 0:
        return a.copy()
    aug, pivots = rref(np.hstack([a, np.eye(m, dtype=np.int64)]), p)
    if pivots[:m] != list(range(m)):
        raise ValueError("matrix is singular")
    return aug[:, m:]


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def solve_in_colspace(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """X with a @ X = b, for a of full column rank and b inside its span."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    m, r = a.shape
    red, pivots = rref(np.hstack([a, b.reshape(m, -1)]), p)
    if pivots[:r] != list(range(r)):
        raise ValueError("basis matrix not of full column rank")
    if len(pivots) > r:
        raise ValueError("right-hand side not in the column space")
    return red[:r, r:]


def intersect_columns(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Basis (columns) of colspace(a) & colspace(b); both inputs full column rank."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    ker = nullspace(np.hstack([a, b]), p)
    return matmul(a, ker[: a.shape[1], :], p)


def columns_contained(container: np.ndarray, cols: np.ndarray, p: int) -> bool:
    """Whether every column of `cols` lies in the span of `container`."""
    container = np.asarray(container, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if cols.shape[1] == 0:
        return True
    if container.shape[1] == 0:
        return not cols.any()
    return rank(np.hstack([container, cols]), p) == rank(container, p)


def column_echelon_bottom(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Column-reduce so each column has a unit lowest nonzero entry at a
    distinct row and is zero at every other column's pivot row.

    Returns (reduced matrix with columns sorted by pivot row ascending,
    0-based pivot rows ascending).  For a full-column-rank input the pivot
    rows, 1-based, are exactly the Schubert position of the column span with
    respect to the standard flag.
    """
    a = np.array(mat, dtype=np.int64) % p
    m, k = a.shape
    piv_of_col: dict[int, int] = {}
    remaining = list(range(k))
    for row in range(m - 1, -1, -1):
        hit = None
        for c in remaining:
            if a[row, c]:
                hit = c
                break
        if hit is None:
            continue
        a[:, hit] = (a[:, hit] * inv_int(int(a[row, hit]), p)) % p
        for c in range(k):
            if c != hit and a[row, c]:
                a[:, c] = (a[:, c] - a[row, c] * a[:, hit]) % p
        piv_of_col[hit] = row
        remaining.remove(hit)
        if not remaining:
            break
    if remaining:
        raise ValueError("matrix does not have full column rank")
    order = sorted(piv_of_col, key=piv_of_col.get)
    return a[:, order], sorted(piv_of_col.values())


def quotient_map(basis: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Projection pi onto a complement of colspace(basis) plus a section.

    pi is (m-d) x m with kernel exactly the column space; sigma is
    m x (m-d) with pi @ sigma = identity.  Both are deterministic functions
    of the basis matrix (complement coordinates are the non-pivot rows of
    the bottom column echelon form), so constructions built on them are
    reproducible.
    """
    basis = np.asarray(basis, dtype=np.int64)
    m, d = basis.shape
    ech, pivots = column_echelon_bottom(basis, p)
    nonpiv = [i for i in range(m) if i not in set(pivots)]
    eye = np.eye(m, dtype=np.int64)
    full = (eye - ech @ eye[pivots, :]) % p
    pi = full[nonpiv, :]
    sigma = eye[:, nonpiv]
    return pi, sigma


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices, eliminated in lockstep.

    mats has shape (N, m, k); returns an (N,) int array.  Uses an inverse
    lookup table, so p must be small (intended for the tiny fields of the
    point-counting module)."""
    a = np.array(mats, dtype=np.int64) % p
    n, m, k = a.shape
    if n == 0 or m == 0 or k == 0:
        return np.zeros(n, dtype=np.int64)
    inv_table = np.array([0] + [inv_int(x, p) for x in range(1, p)], dtype=np.int64)
    ranks = np.zeros(n, dtype=np.int64)
    rowpos = np.zeros(n, dtype=np.int64)
    row_idx = np.arange(m)
    for col in range(k):
        live = rowpos < m
        cand = (a[:, :, col] != 0) & (row_idx[None, :] >= rowpos[:, None]) & live[:, None]
        has = cand.any(axis=1)
        ii = np.nonzero(has)[0]
        if ii.size == 0:
            continue
        piv = cand[ii].argmax(axis=1)
        tgt = rowpos[ii]
        tmp = a[ii, piv, :].copy()
        a[ii, piv, :] = a[ii, tgt, :]
        a[ii, tgt, :] = tmp
        pv = a[ii, tgt, col]
        a[ii, tgt, :] = (a[ii, tgt, :] * inv_table[pv][:, None]) % p
        colvals = a[ii, :, col].copy()
        colvals[np.arange(ii.size), tgt] = 0
        a[ii] = (a[ii] - colvals[:, :, None] * a[ii, tgt, :][:, None, :]) % p
        ranks[ii] += 1
        rowpos[ii] += 1
    return ranks


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-space over a q-element field."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(1, k + 1):
        num *= q ** (n - k + i) - 1
        den *= q ** i - 1
    assert num % den == 0
    return num // den

"""Ground-truth Schubert products by brute-force Littlewood-Richardson counting.

Coefficients are counted by backtracking over semistandard skew fillings with
the lattice-word check -- deliberately unoptimized, so that this module stays
a trustworthy oracle for the recursive and probabilistic engines.  Python ints
keep every coefficient exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .core import (
    Partition,
    ProblemTuple,
    SchubertIndex,
    expected_dim,
    index_to_partition,
    normalize_partition,
    partition_to_index,
)


class RectangleMismatch(ValueError):
    """Classes from different Grassmannians cannot be multiplied."""


class WidthOverflow(ValueError):
    """A partition is wider than the allowed level, so its class is zero."""


@dataclass(frozen=True)
class LRCountRequest:
    """Ask for the multiplicity of shape `outer` in inner * weight."""

    outer: Partition
    inner: Partition
    weight: Partition


def lr_coefficient(req: LRCountRequest) -> int:
    """Number of LR skew tableaux of shape outer/inner with content weight.

    Degree or containment mismatches return 0 rather than raising, so
    exhaustive sweeps need no special-casing.
    """
    return _lr_count(normalize_partition(req.outer),
                     normalize_partition(req.inner),
                     normalize_partition(req.weight))


def _lr_count(outer: Partition, inner: Partition, weight: Partition) -> int:
    if sum(outer) != sum(inner) + sum(weight):
        return 0
    if len(inner) > len(outer):
        return 0
    inner_p = inner + (0,) * (len(outer) - len(inner))
    if any(inner_p[i] > outer[i] for i in range(len(outer))):
        return 0
    if not weight:
        return 1
    nvals = len(weight)
    # Cells in reverse reading order (each row right to left); placing values
    # in this order lets the lattice-word prefix condition be checked as we go.
    cells = [(i, c)
             for i in range(len(outer))
             for c in range(outer[i] - 1, inner_p[i] - 1, -1)]
    tab = [[0] * outer[i] for i in range(len(outer))]
    counts = [0] * (nvals + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, c = cells[k]
        hi = tab[i][c + 1] if c + 1 < outer[i] else nvals
        lo = tab[i - 1][c] if i > 0 and c >= inner_p[i - 1] else 0
        total = 0
        for v in range(lo + 1, hi + 1):
            if counts[v] >= weight[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            tab[i][c] = v
            counts[v] += 1
            total += place(k + 1)
            counts[v] -= 1
            tab[i][c] = 0
        return total

    return place(0)


class IntersectionCount(NamedTuple):
    """Coefficient of the point class, plus whether the degree was right."""

    count: int
    top_degree: bool


@dataclass
class CohomClass:
    """Sparse nonnegative-integer combination of partitions in the r x (n-r)
    rectangle; an element of H*(Gr(r, n))."""

    r: int
    n: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        width = self.n - self.r
        for lam, c in self.terms.items():
            if c <= 0:
                raise ValueError("coefficients must be positive")
            if len(lam) > self.r or (lam and lam[0] > width):
                raise ValueError(f"{lam} outside {self.r}x{width} rectangle")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.terms.get(normalize_partition(lam), 0)


def unit(r: int, n: int) -> CohomClass:
    return CohomClass(r, n, {(): 1})


def schubert_class(index: SchubertIndex, r: int, n: int) -> CohomClass:
    return CohomClass(r, n, {index_to_partition(index): 1})


@functools.lru_cache(maxsize=None)
def _pair_product(rows: int, width: int, lam: Partition,
                  mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """sigma_lam * sigma_mu truncated to the rows x width rectangle."""
    target = sum(lam) + sum(mu)
    out = []
    for nu in _shapes_over(lam, rows, width, target):
        c = _lr_count(nu, lam, mu)
        if c:
            out.append((nu, c))
    return tuple(out)


def _shapes_over(lam: Partition, rows: int, width: int, size: int) -> list[Partition]:
    """Partitions of `size` inside rows x width containing lam."""
    lam_p = lam + (0,) * (rows - len(lam))
    out: list[Partition] = []

    def rec(row: int, prev: int, left: int, acc: list[int]):
        if left == 0:
            out.append(normalize_partition(acc))
            return
        if row == rows:
            return
        hi = min(prev, width, left - sum(lam_p[row + 1:]))
        for v in range(hi, lam_p[row] - 1, -1):
            if v > left:
                continue
            acc.append(v)
            rec(row + 1, v, left - v, acc)
            acc.pop()

    if size == 0:
        return [()] if not lam else []
    rec(0, width, size, [])
    return out


def product(a: CohomClass, b: CohomClass) -> CohomClass:
    """Bilinear extension of the LR rule, discarding shapes outside the
    rectangle (those classes vanish on Gr(r, n))."""
    if (a.r, a.n) != (b.r, b.n):
        raise RectangleMismatch(f"Gr({a.r},{a.n}) vs Gr({b.r},{b.n})")
    width = a.n - a.r
    terms: dict[Partition, int] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in _pair_product(a.r, width, lam, mu):
                terms[nu] = terms.get(nu, 0) + ca * cb * c
    return CohomClass(a.r, a.n, terms)


def _fold(problem: ProblemTuple) -> CohomClass:
    acc = unit(problem.r, problem.n)
    for idx in problem.indices:
        acc = product(acc, schubert_class(idx, problem.r, problem.n))
        if acc.is_zero():
            break
    return acc


def is_nonzero_product(problem: ProblemTuple) -> bool:
    """Whether the full product of the classes survives in H*(Gr(r, n))."""
    return not _fold(problem).is_zero()


def intersection_number(problem: ProblemTuple) -> IntersectionCount:
    """Coefficient of the point class in the product.

    When the total codimension is not r(n-r) the count is 0 by convention
    and top_degree is False, so sweeps can branch without try/except.
    """
    if expected_dim(problem) != 0:
        return IntersectionCount(0, False)
    cls = _fold(problem)
    point = normalize_partition((problem.n - problem.r,) * problem.r)
    return IntersectionCount(cls.terms.get(point, 0), True)


def saturation_check(partitions: Sequence[Partition], r: int, ell: int,
                     scale: int) -> tuple[bool, bool]:
    """Evaluate both sides of the width-bounded saturation equivalence.

    Returns (P1, P2): P1 is nonvanishing of the product of the classes of
    the given partitions at level ell, i.e. in H*(Gr(r, r + ell)); P2 is the
    same after scaling every partition and the level by `scale`.  The two
    answers always agree; the caller asserts that.
    """
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    lams = [normalize_partition(p) for p in partitions]
    if not lams:
        raise ValueError("need at least one partition")
    for lam in lams:
        if len(lam) > r:
            raise ValueError(f"{lam} has more than r={r} parts")
    width = max((lam[0] for lam in lams if lam), default=0)
    if width > ell:
        raise WidthOverflow(f"width {width} exceeds level {ell}")

    def nonzero(level: int, shapes: list[Partition]) -> bool:
        n = r + level
        indices = tuple(partition_to_index(lam, r, n) for lam in shapes)
        return is_nonzero_product(ProblemTuple(r, n, indices))

    p1 = nonzero(ell, lams)
    p2 = nonzero(scale * ell, [tuple(scale * x for x in lam) for lam in lams])
    return p1, p2

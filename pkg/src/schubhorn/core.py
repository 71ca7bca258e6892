"""Combinatorics of Schubert indices in a Grassmannian Gr(r, n).

A Schubert class on Gr(r, n) is labelled by the jump set I = {i_1 < ... < i_r}
inside [n] = {1, ..., n}.  Everything here is 1-based, matching the usual
conventions; the API never exposes 0-based positions.  Partitions are plain
tuples of weakly decreasing nonnegative integers with trailing zeros stripped,
so structural equality is mathematical equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class RectangleOverflow(ValueError):
    """Partition does not fit inside the r x (n-r) rectangle."""


class IdentityViolation(AssertionError):
    """The two independent evaluations of the dimension identity disagree."""


def normalize_partition(parts: Iterable[int]) -> Partition:
    """Strip trailing zeros and validate weak decrease."""
    out = tuple(int(x) for x in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    if any(x < 0 for x in out):
        raise ValueError(f"negative part in partition {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts must weakly decrease: {out}")
    return out


@dataclass(frozen=True, order=True)
class SchubertIndex:
    """Strictly increasing subset of [n]; the label of a Schubert class.

    The cardinality r may be 0 (empty index, used for the d = 0 degenerate
    case of the Horn inequalities).
    """

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        e = self.elems
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise ValueError(f"index must strictly increase: {e}")
        if e and (e[0] < 1 or e[-1] > self.n):
            raise ValueError(f"index {e} out of range [1, {self.n}]")

    @property
    def r(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def encode(self) -> str:
        return ",".join(str(i) for i in self.elems)


@dataclass(frozen=True)
class ProblemTuple:
    """An s-tuple of Schubert indices sharing (r, n); one intersection problem."""

    r: int
    n: int
    indices: tuple[SchubertIndex, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("need at least one index")
        for idx in self.indices:
            if idx.n != self.n or idx.r != self.r:
                raise ValueError(f"index {idx} does not live in Gr({self.r},{self.n})")

    @property
    def s(self) -> int:
        return len(self.indices)

    def encode(self) -> str:
        return ";".join(i.encode() for i in self.indices) + f"@{self.n}"


@dataclass(frozen=True)
class InequalityLHS:
    """One Horn inequality label: sub-dimension d, the K-tuple, and the
    left-hand side value.  The inequality is satisfied when value <= 0."""

    d: int
    ktuple: tuple[SchubertIndex, ...]
    value: int

    def encode(self) -> dict:
        return {
            "d": self.d,
            "ktuple": [k.encode() for k in self.ktuple],
            "value": self.value,
        }


def parse_index(text: str, n: int) -> SchubertIndex:
    """Parse a comma-separated index like "1,4"; empty text is the empty index."""
    text = text.strip()
    if not text:
        return SchubertIndex(n, ())
    return SchubertIndex(n, tuple(int(t) for t in text.split(",")))


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition like "2,1"; "" and "-" are empty."""
    text = text.strip()
    if text in ("", "-", "0"):
        return ()
    return normalize_partition(int(t) for t in text.split(","))


def parse_problem(text: str) -> ProblemTuple:
    """Parse a tuple encoding like "1,4;2,3@4"."""
    body, sep, tail = text.partition("@")
    if not sep:
        raise ValueError(f"missing '@n' suffix in {text!r}")
    n = int(tail)
    indices = tuple(parse_index(part, n) for part in body.split(";"))
    r = indices[0].r
    return ProblemTuple(r, n, indices)


def all_indices(r: int, n: int) -> list[SchubertIndex]:
    """All cardinality-r subsets of [n] in lexicographic order."""
    return [SchubertIndex(n, c) for c in itertools.combinations(range(1, n + 1), r)]


def codim(index: SchubertIndex) -> int:
    """Codimension of the Schubert variety: sum of n - r + a - i_a over a."""
    n, r = index.n, index.r
    return sum(n - r + a - ia for a, ia in enumerate(index.elems, start=1))


def index_to_partition(index: SchubertIndex) -> Partition:
    """The partition with lambda_a = n - r + a - i_a; its size equals codim."""
    n, r = index.n, index.r
    return normalize_partition(n - r + a - ia for a, ia in enumerate(index.elems, 1))


def partition_to_index(parts: Sequence[int], r: int, n: int) -> SchubertIndex:
    """Inverse of index_to_partition: i_a = (n - r) + a - lambda_a.

    Raises RectangleOverflow when the partition leaves the r x (n-r)
    rectangle, i.e. when the corresponding class is zero on Gr(r, n).
    """
    lam = normalize_partition(parts)
    if len(lam) > r:
        raise RectangleOverflow(f"{lam} has more than {r} parts")
    if lam and lam[0] > n - r:
        raise RectangleOverflow(f"{lam} is wider than {n - r}")
    padded = lam + (0,) * (r - len(lam))
    return SchubertIndex(n, tuple(n - r + a - padded[a - 1] for a in range(1, r + 1)))


def dual_index(index: SchubertIndex) -> SchubertIndex:
    """The label of the same class under Gr(r, n) ~ Gr(n-r, n):
    reflect the complement, I -> {n + 1 - i : i not in I}."""
    n = index.n
    present = set(index.elems)
    return SchubertIndex(n, tuple(sorted(n + 1 - i for i in range(1, n + 1) if i not in present)))


def dual_problem(problem: ProblemTuple) -> ProblemTuple:
    return ProblemTuple(problem.n - problem.r, problem.n,
                        tuple(dual_index(i) for i in problem.indices))


def expected_dim(problem: ProblemTuple) -> int:
    """dim Gr(r, n) minus the total codimension of the imposed conditions.

    May be negative; a negative value already forces an empty generic
    intersection."""
    r, n = problem.r, problem.n
    return r * (n - r) - sum(codim(i) for i in problem.indices)


def horn_lhs(problem: ProblemTuple, d: int,
             ktuple: Sequence[SchubertIndex]) -> InequalityLHS:
    """Left-hand side of the Horn inequality attached to (d, K):

        sum_j sum_{a in K^j} (n - r + a - i^j_a)  -  d(n - r)

    The product is nonvanishing-compatible with (d, K) iff this is <= 0.
    d = 0 with an empty K-tuple is legal and gives value 0.
    """
    r, n = problem.r, problem.n
    kt = tuple(ktuple)
    if d == 0 and not kt:
        kt = tuple(SchubertIndex(r, ()) for _ in range(problem.s))
    if len(kt) != problem.s:
        raise ValueError("need one K per index")
    total = 0
    for idx, K in zip(problem.indices, kt):
        if K.n != r or K.r != d:
            raise ValueError(f"K={K} is not a d={d} subset of [{r}]")
        total += sum(n - r + a - idx.elems[a - 1] for a in K)
    return InequalityLHS(d, kt, total - d * (n - r))


def compose_positions(k: SchubertIndex, index: SchubertIndex) -> SchubertIndex:
    """Position of a nested subspace in the ambient flag: L = {i_a : a in K}."""
    if k.n != index.r:
        raise ValueError(f"K lives in [{k.n}] but I has cardinality {index.r}")
    return SchubertIndex(index.n, tuple(index.elems[a - 1] for a in k))


def dim_difference_identity(problem: ProblemTuple, d: int,
                            ktuple: Sequence[SchubertIndex]) -> int:
    """Evaluate both sides of the expected-dimension difference identity.

    Left side: expected dimension of the K-tuple in Gr(d, r) minus that of
    the composed L-tuple in Gr(d, n).  Right side: the Horn left-hand side.
    These agree identically; a mismatch signals an implementation bug and
    raises IdentityViolation.
    """
    lhs = horn_lhs(problem, d, ktuple)
    kt = lhs.ktuple
    sub = ProblemTuple(d, problem.r, kt)
    composed = tuple(compose_positions(k, i) for k, i in zip(kt, problem.indices))
    amb = ProblemTuple(d, problem.n, composed)
    left = expected_dim(sub) - expected_dim(amb)
    if left != lhs.value:
        raise IdentityViolation(
            f"dimension identity broke: {left} != {lhs.value} "
            f"for {problem.encode()}, d={d}")
    return lhs.value

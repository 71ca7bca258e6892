"""Parabolic slopes and Harder-Narasimhan certificates for failing tuples.

A Schubert intersection problem induces weights w^j_a = n - r + a - i^j_a on
the abstract r-dimensional space; the slope of a position tuple (d, K) is
the average weight it picks up.  For generic flags the position tuples
realized by actual subspaces are exactly the nonvanishing tuples from the
Horn tables, which makes the slope analysis purely combinatorial.

A Horn inequality is violated precisely when its tuple's slope exceeds the
quotient dimension n - r (the `level` field).  When some nonvanishing tuple
crosses that ceiling, the maximal-slope, then maximal-rank contradictor is
realized by a single subspace, so its product is the class of a point: it
yields a violated inequality whose tuple passes the point-class check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import horn, lr
from .core import (
    InequalityLHS,
    ProblemTuple,
    SchubertIndex,
    compose_positions,
    expected_dim,
    horn_lhs,
)


class PointCheckFailed(RuntimeError):
    """A selected contradictor's product was not the class of a point."""


class CandidatesExhausted(RuntimeError):
    """No destabilizing tuple passed the point-class check; this signals an
    implementation (or theory) discrepancy and must not occur at desk scale."""


@dataclass(frozen=True)
class ParabolicData:
    """Weight data (V, F, w) with the flags kept implicit: slopes depend only
    on positions.  `level` is the quotient dimension n - r the weights were
    measured against; it bounds every weight and is the slope ceiling."""

    r: int
    s: int
    weights: tuple[tuple[int, ...], ...]  # weights[j][a-1], weakly decreasing in a
    level: int

    def __post_init__(self):
        if len(self.weights) != self.s:
            raise ValueError("need one weight row per factor")
        for row in self.weights:
            if len(row) != self.r:
                raise ValueError("each weight row must have r entries")
            if any(row[i] < row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"weights must weakly decrease: {row}")


@dataclass(frozen=True)
class SlopeReport:
    d: int
    ktuple: tuple[SchubertIndex, ...]
    slope: Fraction

    def encode(self) -> dict:
        return {
            "d": self.d,
            "ktuple": [k.encode() for k in self.ktuple],
            "slope": f"{self.slope.numerator}/{self.slope.denominator}",
        }


@dataclass(frozen=True)
class SemistableVerdict:
    problem: ProblemTuple
    full_slope: Fraction
    level: int

    def encode(self) -> dict:
        return {
            "semistable": True,
            "problem": self.problem.encode(),
            "full_slope": f"{self.full_slope.numerator}/{self.full_slope.denominator}",
            "level": self.level,
        }


@dataclass(frozen=True)
class HNCertificate:
    problem: ProblemTuple
    contradictor: SlopeReport
    ltuple: tuple[SchubertIndex, ...]  # contradictor positions composed into [n]
    violated: InequalityLHS
    point_check: int

    def __post_init__(self):
        if self.violated.value <= 0:
            raise ValueError("certificate must carry a violated inequality")
        if self.point_check != 1:
            raise ValueError("contradictor product must be the point class")

    def encode(self) -> dict:
        return {
            "semistable": False,
            "problem": self.problem.encode(),
            "contradictor": self.contradictor.encode(),
            "ltuple": [k.encode() for k in self.ltuple],
            "violated": self.violated.encode(),
            "point_check": self.point_check,
        }


def weights_from_problem(problem: ProblemTuple) -> ParabolicData:
    """w^j_a = n - r + a - i^j_a; weak decrease is automatic."""
    r, n = problem.r, problem.n
    rows = tuple(tuple(n - r + a - idx.elems[a - 1] for a in range(1, r + 1))
                 for idx in problem.indices)
    return ParabolicData(r, problem.s, rows, n - r)


def slope(data: ParabolicData, d: int, ktuple: Sequence[SchubertIndex]) -> Fraction:
    """Average weight picked up by a position tuple: exact rational."""
    if not 1 <= d <= data.r:
        raise ValueError(f"need 1 <= d <= r, got {d}")
    total = 0
    for row, k in zip(data.weights, ktuple):
        if k.r != d or k.n != data.r:
            raise ValueError(f"{k} is not a d={d} subset of [{data.r}]")
        total += sum(row[a - 1] for a in k)
    return Fraction(total, d)


def full_slope(data: ParabolicData) -> Fraction:
    """Slope of the whole space: the d = r, K = [r] case."""
    return Fraction(sum(sum(row) for row in data.weights), data.r)


def _full_tuple(data: ParabolicData) -> tuple[SchubertIndex, ...]:
    return tuple(SchubertIndex(data.r, tuple(range(1, data.r + 1)))
                 for _ in range(data.s))


def destabilizing_tuples(data: ParabolicData,
                         tables: dict[int, horn.NonvanishingTable] | None = None,
                         depth_bound: int = horn.DEFAULT_DEPTH
                         ) -> list[tuple[int, tuple[SchubertIndex, ...], Fraction]]:
    """All realizable (nonvanishing) position tuples whose slope exceeds the
    level, d = 1..r.  Tables default to the memoized recursion's own."""
    out = []
    for d in range(1, data.r + 1):
        table = (tables or {}).get(d) or horn.build_table(d, data.r, data.s, depth_bound)
        for kt in table.tuples:
            mu = slope(data, d, kt)
            if mu > data.level:
                out.append((d, kt, mu))
    return out


def is_semistable(data: ParabolicData,
                  tables: dict[int, horn.NonvanishingTable] | None = None,
                  depth_bound: int = horn.DEFAULT_DEPTH) -> bool:
    """No realizable position tuple has slope exceeding the level.

    The level equals the full-space slope exactly when the weights come
    from a top-degree problem, which is the regime where semistability is
    equivalent to the Horn verdict."""
    return not destabilizing_tuples(data, tables, depth_bound)


def hn_certificate(problem: ProblemTuple,
                   depth_bound: int = horn.DEFAULT_DEPTH
                   ) -> HNCertificate | SemistableVerdict:
    """Produce a violated inequality whose tuple is a point class, or report
    semistability.

    A failure of the d = r codimension condition is routed directly: the
    full tuple is the (trivial) point class of Gr(r, r) and its inequality
    is the violated one.  Otherwise the maximal slope, then maximal rank,
    then lexicographically first destabilizing tuple is checked against the
    LR oracle to be a point class; the order makes the output deterministic
    and the oracle check is the arbiter when ties are genuinely ambiguous."""
    data = weights_from_problem(problem)
    r = problem.r
    mu_full = full_slope(data)

    if expected_dim(problem) < 0:
        kt = _full_tuple(data)
        violated = horn_lhs(problem, r, kt)
        point = lr.intersection_number(ProblemTuple(r, r, kt))
        composed = tuple(compose_positions(k, i) for k, i in zip(kt, problem.indices))
        return HNCertificate(problem, SlopeReport(r, kt, mu_full), composed,
                             violated, point.count)

    cands = destabilizing_tuples(data, depth_bound=depth_bound)
    if not cands:
        return SemistableVerdict(problem, mu_full, data.level)

    cands.sort(key=lambda c: (-c[2], -c[0], tuple(k.elems for k in c[1])))
    failures = []
    for d, kt, mu in cands:
        point = lr.intersection_number(ProblemTuple(d, r, kt))
        if not point.top_degree or point.count != 1:
            failures.append(PointCheckFailed(f"{[k.encode() for k in kt]} -> {point}"))
            continue
        violated = horn_lhs(problem, d, kt)
        composed = tuple(compose_positions(k, i) for k, i in zip(kt, problem.indices))
        return HNCertificate(problem, SlopeReport(d, kt, mu), composed,
                             violated, point.count)
    raise CandidatesExhausted(f"all {len(failures)} destabilizing tuples failed "
                              f"the point check for {problem.encode()}")

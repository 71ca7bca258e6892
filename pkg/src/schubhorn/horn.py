"""Recursive Horn criterion: decide nonvanishing without computing a product.

A tuple of classes on Gr(r, n) is nonzero iff every Horn inequality indexed
by a nonvanishing tuple on a smaller Grassmannian Gr(d, r) holds.  Mode "B"
quantifies over all nonvanishing K-tuples, mode "C" only over those whose
product is the class of a point; the two verdicts always agree.  The d = r
base case is the plain codimension condition.

Tables of nonvanishing tuples per (d, r, s) are built by the recursion
itself and memoized; only the point-class refinement consults the LR oracle,
which keeps the recursion free of circularity.
"""

from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass

from .core import InequalityLHS, ProblemTuple, SchubertIndex, all_indices, expected_dim, horn_lhs
from . import lr


class DepthExceeded(RuntimeError):
    """Recursion would descend past the configured rank bound."""


DEFAULT_DEPTH = 7


@dataclass(frozen=True)
class HornVerdict:
    nonzero: bool
    witness: InequalityLHS | None  # a violated inequality when nonzero is False
    mode: str
    trace_depth: int  # rank of the Grassmannian whose table recursion decided this

    def encode(self) -> dict:
        return {
            "nonzero": self.nonzero,
            "mode": self.mode,
            "trace_depth": self.trace_depth,
            "witness": self.witness.encode() if self.witness else None,
        }


@dataclass(frozen=True)
class NonvanishingTable:
    """All s-tuples of d-subsets of [r] with nonzero product on Gr(d, r),
    plus the subset whose product is exactly the point class."""

    d: int
    r: int
    s: int
    tuples: tuple[tuple[SchubertIndex, ...], ...]
    point_tuples: tuple[tuple[SchubertIndex, ...], ...]

    def to_json(self) -> str:
        return json.dumps({
            "d": self.d,
            "r": self.r,
            "s": self.s,
            "tuples": [[k.encode() for k in kt] for kt in self.tuples],
            "point_tuples": [[k.encode() for k in kt] for kt in self.point_tuples],
        }, sort_keys=True)


_TABLES: dict[tuple[int, int, int], NonvanishingTable] = {}
_TABLES_LOCK = threading.Lock()


def build_table(d: int, r: int, s: int, depth_bound: int = DEFAULT_DEPTH) -> NonvanishingTable:
    if not 0 < d <= r:
        raise ValueError(f"need 0 < d <= r, got d={d}, r={r}")
    if r > depth_bound:
        raise DepthExceeded(f"rank {r} exceeds depth bound {depth_bound}")
    key = (d, r, s)
    table = _TABLES.get(key)
    if table is not None:
        return table

    if d == r:
        # Gr(r, r) is a point: the unique tuple of full sets, and it is the
        # point class there.
        full = tuple(SchubertIndex(r, tuple(range(1, r + 1))) for _ in range(s))
        table = NonvanishingTable(d, r, s, (full,), (full,))
    else:
        subsets = all_indices(d, r)
        tuples = []
        points = []
        for kt in itertools.product(subsets, repeat=s):
            sub = ProblemTuple(d, r, kt)
            if not horn_decide(sub, "B", depth_bound).nonzero:
                continue
            tuples.append(kt)
            if expected_dim(sub) == 0 and lr.intersection_number(sub).count == 1:
                points.append(kt)
        table = NonvanishingTable(d, r, s, tuple(tuples), tuple(points))

    with _TABLES_LOCK:
        _TABLES.setdefault(key, table)
    return _TABLES[key]


def horn_decide(problem: ProblemTuple, mode: str = "B",
                depth_bound: int = DEFAULT_DEPTH) -> HornVerdict:
    """Decide nonvanishing of the product via the Horn inequalities alone.

    Returns the first violated inequality (d ascending, K-tuples in
    lexicographic order) as the witness, so failures are deterministic and
    self-certifying: the witness K-tuple is a member of its table.
    """
    if mode not in ("B", "C"):
        raise ValueError(f"mode must be 'B' or 'C', got {mode!r}")
    r = problem.r
    if r > depth_bound:
        raise DepthExceeded(f"rank {r} exceeds depth bound {depth_bound}")
    for d in range(1, r + 1):
        table = build_table(d, r, problem.s, depth_bound)
        members = table.point_tuples if mode == "C" else table.tuples
        for kt in members:
            ineq = horn_lhs(problem, d, kt)
            if ineq.value > 0:
                return HornVerdict(False, ineq, mode, r)
    return HornVerdict(True, None, mode, r)


def enumerate_inequalities(r: int, n: int, s: int, mode: str = "B",
                           depth_bound: int = DEFAULT_DEPTH) -> list[tuple[int, tuple[SchubertIndex, ...]]]:
    """The exact list of inequality labels a tuple on Gr(r, n) must satisfy.

    The d = r entry is the codimension condition.  Mode "C" returns a subset
    of mode "B"; neither list is claimed to be irredundant.
    """
    if mode not in ("B", "C"):
        raise ValueError(f"mode must be 'B' or 'C', got {mode!r}")
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    labels = []
    for d in range(1, r + 1):
        table = build_table(d, r, s, depth_bound)
        members = table.point_tuples if mode == "C" else table.tuples
        labels.extend((d, kt) for kt in members)
    return labels

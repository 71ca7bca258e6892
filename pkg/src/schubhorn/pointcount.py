"""Brute-force point counts of zero-dimensional Schubert problems over F_q.

For generic flags a zero-dimensional intersection of Schubert varieties is
reduced, so over a finite field where everything splits the number of
rational points equals the intersection number.  Tiny fields make full
enumeration of the Grassmannian feasible: every point is visited and its
Schubert position against each flag computed, membership in the closed
varieties being the componentwise comparison of positions.

Small primes mean genuinely generic flags may not exist for every problem;
samples are therefore reported with a transversality indicator (every
rational solution has tangent-constraint nullity zero) rather than filtered
silently.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import modp, probe
from .core import ProblemTuple, expected_dim

ALLOWED_Q = (2, 3, 5)
MAX_POINTS = 10 ** 6


class SizeExceeded(ValueError):
    """Enumeration would be larger than the configured point budget."""


@dataclass
class EnumeratedGrassmannian:
    """Every point of Gr(r, n)(F_q) as a reduced-row-echelon representative."""

    r: int
    n: int
    q: int
    points: np.ndarray  # shape (N, r, n)

    @property
    def size(self) -> int:
        return self.points.shape[0]


def enumerate_grassmannian(r: int, n: int, q: int) -> EnumeratedGrassmannian:
    if q not in ALLOWED_Q:
        raise ValueError(f"q must be one of {ALLOWED_Q} (prime fields only)")
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    total = modp.gaussian_binomial(n, r, q)
    if total > MAX_POINTS:
        raise SizeExceeded(f"Gr({r},{n}) over F_{q} has {total} points")

    points = []
    for pivots in itertools.combinations(range(n), r):
        free = [(a, c) for a in range(r) for c in range(pivots[a] + 1, n)
                if c not in pivots]
        base = np.zeros((r, n), dtype=np.int64)
        for a, c in enumerate(pivots):
            base[a, c] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            mat = base.copy()
            for (a, c), v in zip(free, values):
                mat[a, c] = v
            points.append(mat)
    stack = np.stack(points) if points else np.zeros((0, r, n), dtype=np.int64)
    assert stack.shape[0] == total
    return EnumeratedGrassmannian(r, n, q, stack)


def batch_positions(gr: EnumeratedGrassmannian, flag: probe.FlagBasis) -> np.ndarray:
    """Schubert position of every enumerated point w.r.t. one flag.

    Returns an (N, r) array of 1-based jump positions, computed from the
    rank profiles dim(V & E_u) = r - rank of the lower coordinate block."""
    q = gr.q
    inv = modp.inverse(flag.matrix, q)
    coords = np.einsum("uv,ivw->iuw", inv, gr.points.transpose(0, 2, 1)) % q
    n, r = gr.n, gr.r
    dims = np.zeros((gr.size, n + 1), dtype=np.int64)
    for u in range(n + 1):
        dims[:, u] = r - modp.batch_rank(coords[:, u:, :], q)
    pos = np.zeros((gr.size, r), dtype=np.int64)
    for a in range(1, r + 1):
        pos[:, a - 1] = (dims >= a).argmax(axis=1)
    return pos


@dataclass
class CountReport:
    problem: ProblemTuple
    q: int
    count: int
    histogram: dict[str, int]       # joint open-cell position of each solution
    solution_indices: list[int]     # rows into the enumeration
    transversal: list[bool]         # per solution: tangent nullity == 0

    @property
    def degenerate(self) -> bool:
        return not all(self.transversal)


def count_solutions(problem: ProblemTuple, flags: Sequence[probe.FlagBasis],
                    gr: EnumeratedGrassmannian | None = None) -> CountReport:
    """Count rational points in the intersection of the closed Schubert
    varieties, with the position histogram of the solutions.

    Requires a zero-dimensional problem.  Each solution is also probed for
    transversality: the tangent constraint system at the point, with the
    flags it induces on the point and its quotient, must have nullity 0."""
    if expected_dim(problem) != 0:
        raise ValueError("point counting needs a zero-dimensional problem")
    if len(flags) != problem.s:
        raise ValueError("need one flag per index")
    q = flags[0].field.p
    if q not in ALLOWED_Q:
        raise ValueError(f"q must be one of {ALLOWED_Q}")
    if gr is None:
        gr = enumerate_grassmannian(problem.r, problem.n, q)
    if (gr.r, gr.n, gr.q) != (problem.r, problem.n, q):
        raise ValueError("enumeration does not match the problem")

    positions = [batch_positions(gr, f) for f in flags]
    bounds = [np.array(idx.elems, dtype=np.int64) for idx in problem.indices]
    member = np.ones(gr.size, dtype=bool)
    for pos, bound in zip(positions, bounds):
        member &= (pos <= bound[None, :]).all(axis=1)
    hits = np.nonzero(member)[0]

    histogram: Counter[str] = Counter()
    transversal = []
    for i in hits:
        joint = ";".join(",".join(str(x) for x in pos[i]) for pos in positions)
        histogram[joint] += 1
        transversal.append(_transverse_at(problem, flags, gr.points[i]))
    return CountReport(problem, q, int(hits.size), dict(histogram),
                       [int(i) for i in hits], transversal)


def _transverse_at(problem: ProblemTuple, flags: Sequence[probe.FlagBasis],
                   point: np.ndarray) -> bool:
    """Tangent-space check at one solution: the induced constraint system on
    maps V -> W/V has nullity equal to the expected dimension (zero here)."""
    fld = flags[0].field
    space = probe.Subspace(fld, point.T)
    sub_flags, quot_flags = [], []
    for f in flags:
        sf, qf = probe.induced_flags(space, f)
        sub_flags.append(sf)
        quot_flags.append(qf)
    h = probe.hom_space(problem, sub_flags, quot_flags, fld)
    return h.observed_rank == 0


@dataclass
class SampleRow:
    seed: int
    count: int
    degenerate: bool

    def csv(self) -> str:
        return f"{self.seed},{self.count},{int(self.degenerate)}"


def sample_counts(problem: ProblemTuple, q: int, samples: int,
                  seed: int = 0) -> tuple[list[SampleRow], EnumeratedGrassmannian]:
    """Draw `samples` random flag tuples and count solutions for each."""
    fld = probe.PrimeField(q)
    gr = enumerate_grassmannian(problem.r, problem.n, q)
    rows = []
    for k in range(samples):
        rng = np.random.default_rng((seed, k))
        flags = [probe.random_flag(problem.n, fld, rng) for _ in range(problem.s)]
        report = count_solutions(problem, flags, gr)
        rows.append(SampleRow(k, report.count, report.degenerate))
    return rows, gr

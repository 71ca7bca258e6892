"""Randomized finite-field probe for Schubert intersection problems.

Generic flags over an algebraically closed field are stood in for by random
flags over a prime field (default p = 32003): the genericity conditions are
open and dense, so a random specialization lands in them with probability
1 - O(1/p), and honest retry covers the rest.  Everything here is exact
arithmetic mod p.

The central object is the constrained homomorphism space

    { phi : V -> Q  with  phi(F^j_a) contained in G^j_{i^j_a - a}  for all j, a }

whose rank at generic flags is at least the expected dimension of the
intersection problem, with equality iff the product of the classes is
nonzero.  Observing equality at any single specialization therefore
*certifies* nonvanishing (the rank can only go up at special points); no
observation can certify vanishing.

Beyond the rank probe, this module realizes the kernel filtration: a chain
S^(h) < ... < S^(1) < S^(0) = V together with injections eta_u of the graded
pieces into Q that witness the observed rank exactly, via the recursion
"take a generic kernel, induce flags on kernel and cokernel, repeat".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import modp
from .core import (
    ProblemTuple,
    SchubertIndex,
    compose_positions,
    expected_dim,
    horn_lhs,
)

CERTIFIED_NONZERO = "CERTIFIED_NONZERO"
INCONCLUSIVE = "INCONCLUSIVE"

DEFAULT_PRIME = 32003


class GenericityFailure(RuntimeError):
    """Random samples did not settle on a single generic answer; resample
    the flags and retry."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


@dataclass
class FlagBasis:
    """Complete flag on kappa^m: E_j is the span of the first j columns."""

    field: PrimeField
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.int64) % self.field.p
        m = self.matrix.shape[0]
        if self.matrix.shape != (m, m):
            raise ValueError("flag basis must be square")
        if modp.rank(self.matrix, self.field.p) != m:
            raise ValueError("flag basis must be invertible")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def subspace_matrix(self, j: int) -> np.ndarray:
        return self.matrix[:, :j]


@dataclass
class Subspace:
    """Column span of a full-column-rank matrix over the prime field."""

    field: PrimeField
    basis: np.ndarray

    def __post_init__(self):
        self.basis = np.asarray(self.basis, dtype=np.int64).reshape(
            self.basis.shape[0], -1) % self.field.p
        if modp.rank(self.basis, self.field.p) != self.basis.shape[1]:
            raise ValueError("basis columns are dependent")

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def random_flag(m: int, fld: PrimeField, rng: np.random.Generator) -> FlagBasis:
    """Uniform invertible matrix by rejection; a draw fails with chance ~1/p."""
    while True:
        mat = rng.integers(0, fld.p, size=(m, m), dtype=np.int64)
        if modp.rank(mat, fld.p) == m:
            return FlagBasis(fld, mat)


def random_flags(problem: ProblemTuple, fld: PrimeField,
                 rng: np.random.Generator) -> tuple[list[FlagBasis], list[FlagBasis]]:
    """One fresh flag pair (on kappa^r and kappa^{n-r}) per index."""
    r, q = problem.r, problem.n - problem.r
    return ([random_flag(r, fld, rng) for _ in range(problem.s)],
            [random_flag(q, fld, rng) for _ in range(problem.s)])


def schubert_position(space: Subspace, flag: FlagBasis) -> SchubertIndex:
    """The unique open cell containing the subspace: jump positions of the
    rank profile a -> dim(S & E_a)."""
    p = space.field.p
    coords = modp.matmul(modp.inverse(flag.matrix, p), space.basis, p)
    _, pivots = modp.column_echelon_bottom(coords, p)
    return SchubertIndex(flag.dim, tuple(i + 1 for i in pivots))


def rank_profile(space: Subspace, flag: FlagBasis) -> list[int]:
    """dim(S & E_u) for u = 0..m; a staircase increasing by 0 or 1."""
    p = space.field.p
    coords = modp.matmul(modp.inverse(flag.matrix, p), space.basis, p)
    return [space.dim - modp.rank(coords[u:, :], p) for u in range(flag.dim + 1)]


def induced_flags(space: Subspace, flag: FlagBasis) -> tuple[FlagBasis, FlagBasis]:
    """Flags inherited by a subspace V and the quotient W/V.

    The flag on V is E_a(V) = E_{i_a} & V where I is the position of V; the
    flag on W/V is the projection of E_{alpha(b)} for alpha running over the
    complement of I.  The subspace flag is expressed in the coordinates
    defined by the subspace's own basis columns; quotient coordinates come
    from the deterministic complement in modp.quotient_map, so repeated runs
    agree."""
    p = space.field.p
    n, r = space.ambient_dim, space.dim
    coords = modp.matmul(modp.inverse(flag.matrix, p), space.basis, p)
    ech, pivots = modp.column_echelon_bottom(coords, p)
    position = [i + 1 for i in pivots]

    ambient_cols = modp.matmul(flag.matrix, ech, p)
    sub = modp.solve_in_colspace(space.basis, ambient_cols, p)
    sub_flag = FlagBasis(space.field, sub) if r else FlagBasis(space.field, np.zeros((0, 0), np.int64))

    pi, _ = modp.quotient_map(space.basis, p)
    alpha = [u for u in range(1, n + 1) if u not in set(position)]
    quot_cols = modp.matmul(pi, flag.matrix[:, [u - 1 for u in alpha]], p)
    quot_flag = FlagBasis(space.field, quot_cols)
    return sub_flag, quot_flag


@dataclass
class HomSpace:
    """Solution space of the flag-containment constraints, as a kernel basis
    of (n-r) x r matrices."""

    problem: ProblemTuple
    field: PrimeField
    kernel_basis: np.ndarray  # shape (rank, n-r, r)

    @property
    def observed_rank(self) -> int:
        return self.kernel_basis.shape[0]

    @property
    def domain_dim(self) -> int:
        return self.problem.r

    @property
    def codomain_dim(self) -> int:
        return self.problem.n - self.problem.r


def hom_space(problem: ProblemTuple, flags_v: Sequence[FlagBasis],
              flags_q: Sequence[FlagBasis], fld: PrimeField | None = None) -> HomSpace:
    """Assemble and solve the linear system cutting out the constrained maps.

    For each j and a, every basis vector of F^j_a paired with every
    functional annihilating G^j_{i^j_a - a} contributes one equation on the
    r(n-r) matrix entries; the kernel is computed by exact elimination."""
    fld = fld or (flags_v[0].field if flags_v else flags_q[0].field)
    p = fld.p
    r, n = problem.r, problem.n
    q = n - r
    if len(flags_v) != problem.s or len(flags_q) != problem.s:
        raise ValueError("need one flag pair per index")
    blocks = []
    for j, idx in enumerate(problem.indices):
        if flags_v[j].dim != r or flags_q[j].dim != q:
            raise ValueError("flag dimensions do not match the problem")
        ginv = modp.inverse(flags_q[j].matrix, p) if q else np.zeros((0, 0), np.int64)
        for a, ia in enumerate(idx.elems, start=1):
            c = ia - a
            if c >= q:
                continue
            annih = ginv[c:, :]                       # functionals killing G_c
            fa = flags_v[j].matrix[:, :a]
            blocks.append(np.kron(annih, fa.T) % p)   # rows: y (x) f -> y^T phi f = 0
    if blocks:
        system = np.vstack(blocks)
    else:
        system = np.zeros((0, q * r), dtype=np.int64)
    kernel = modp.nullspace(system, p)
    stack = kernel.T.reshape(kernel.shape[1], q, r)
    return HomSpace(problem, fld, stack)


@dataclass
class ProbeReport:
    status: str
    expected: int
    observed_ranks: list[int]
    prime: int
    trials: int

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED_NONZERO


def certify_nonzero(problem: ProblemTuple, trials: int = 3,
                    fld: PrimeField | None = None,
                    rng: np.random.Generator | None = None,
                    seed: int | None = None) -> ProbeReport:
    """One-sided randomized nonvanishing test.

    A trial draws fresh flags and measures the hom-space rank.  The rank is
    always >= max(expected, generic); observing rank == expected >= 0 pins
    the generic rank to the expected one, which certifies a nonzero product
    in every characteristic.  Anything else is INCONCLUSIVE: vanishing is
    never certified."""
    fld = fld or PrimeField()
    rng = rng if rng is not None else np.random.default_rng(seed)
    exp = expected_dim(problem)
    observed: list[int] = []
    if exp >= 0:
        for _ in range(trials):
            fv, fq = random_flags(problem, fld, rng)
            h = hom_space(problem, fv, fq, fld)
            observed.append(h.observed_rank)
            if h.observed_rank == exp:
                return ProbeReport(CERTIFIED_NONZERO, exp, observed, fld.p, len(observed))
    return ProbeReport(INCONCLUSIVE, exp, observed, fld.p, max(len(observed), 0))


class KernelSample(NamedTuple):
    phi: np.ndarray                      # (n-r) x r matrix
    kernel: Subspace
    positions: tuple[SchubertIndex, ...]


def _position_key(positions: tuple[SchubertIndex, ...]) -> tuple[int, ...]:
    return tuple(x for k in positions for x in k.elems)


def generic_kernel_element(h: HomSpace, flags_v: Sequence[FlagBasis],
                           rng: np.random.Generator, samples: int = 5,
                           rounds: int = 3) -> KernelSample:
    """Pick a generic member of the hom space and report its kernel data.

    Genericity is open and dense, so among a handful of random combinations
    of the kernel basis the generic behaviour is the one with minimal kernel
    dimension and, among those, componentwise-maximal Schubert positions.
    If no sampled candidate dominates the others, or the sampled data breaks
    the exact rank identity

        rank = expected(problem) + expected(K-tuple on Gr(d, r)) + horn_lhs(d, K)

    the flags themselves are suspect and GenericityFailure is raised for the
    caller to resample."""
    p = h.field.p
    problem = h.problem
    r, q = h.domain_dim, h.codomain_dim
    k = h.observed_rank

    if k == 0:
        phi = np.zeros((q, r), dtype=np.int64)
        kernel = Subspace(h.field, np.eye(r, dtype=np.int64))
        positions = tuple(schubert_position(kernel, f) for f in flags_v)
        return KernelSample(phi, kernel, positions)

    last_error = "no candidate dominated"
    for _ in range(rounds):
        cands: list[tuple[int, tuple[int, ...], KernelSample]] = []
        for _ in range(samples):
            coeffs = rng.integers(0, p, size=k, dtype=np.int64)
            phi = np.tensordot(coeffs, h.kernel_basis, axes=(0, 0)) % p
            kernel = Subspace(h.field, modp.nullspace(phi, p))
            positions = tuple(schubert_position(kernel, f) for f in flags_v)
            cands.append((kernel.dim, _position_key(positions),
                          KernelSample(phi, kernel, positions)))
        dmin = min(c[0] for c in cands)
        finalists = [c for c in cands if c[0] == dmin]
        width = len(finalists[0][1])
        target = tuple(max(f[1][i] for f in finalists) for i in range(width))
        chosen = next((f[2] for f in finalists if f[1] == target), None)
        if chosen is None:
            last_error = "sampled kernel positions are incomparable"
            continue
        d = chosen.kernel.dim
        sub = ProblemTuple(d, r, chosen.positions) if d else None
        identity = (expected_dim(problem)
                    + (expected_dim(sub) if sub else 0)
                    + horn_lhs(problem, d, chosen.positions if d else ()).value)
        if identity != h.observed_rank:
            last_error = (f"rank identity failed: predicted {identity}, "
                          f"observed {h.observed_rank}")
            continue
        return chosen
    raise GenericityFailure(last_error)


@dataclass
class FiltrationCertificate:
    """Kernel filtration witnessing the hom-space rank.

    chain[0] is the identity basis of V = kappa^r and chain[u] a basis of
    S^(u); maps[u] is eta_u written with respect to chain[u]'s columns.
    positions[u] are the Schubert positions of S^(u) in the V-flags (subsets
    of [r]); ambient_positions composes them through the problem's indices
    into [n]."""

    problem: ProblemTuple
    field: PrimeField
    hom_rank: int
    chain: list[np.ndarray]
    maps: list[np.ndarray]
    positions: list[tuple[SchubertIndex, ...]]
    ambient_positions: list[tuple[SchubertIndex, ...]]
    flags_v: list[FlagBasis] = field(repr=False, default_factory=list)
    flags_q: list[FlagBasis] = field(repr=False, default_factory=list)
    seed: int | None = None

    @property
    def h(self) -> int:
        return len(self.chain) - 1

    @property
    def dims(self) -> list[int]:
        return [b.shape[1] for b in self.chain]

    def encode(self) -> dict:
        return {
            "problem": self.problem.encode(),
            "prime": self.field.p,
            "seed": self.seed,
            "hom_rank": self.hom_rank,
            "h": self.h,
            "dims": self.dims,
            "positions_in_v": [[k.encode() for k in pos] for pos in self.positions],
            "positions": [[k.encode() for k in pos] for pos in self.ambient_positions],
        }


def _filtration_levels(problem: ProblemTuple, flags_v: list[FlagBasis],
                       flags_q: list[FlagBasis], fld: PrimeField,
                       rng: np.random.Generator) -> tuple[list[np.ndarray], list[np.ndarray], int]:
    """Recursive worker.  Returns (chain bases S^(1)..S^(h) in the local V
    coordinates, maps eta_0..eta_{h-1} w.r.t. the chain bases, hom rank)."""
    p = fld.p
    r = problem.r
    h = hom_space(problem, flags_v, flags_q, fld)
    if h.observed_rank == 0:
        return [], [], 0

    phi, kernel, positions = generic_kernel_element(h, flags_v, rng)
    d = kernel.dim
    local_expected = expected_dim(ProblemTuple(d, r, positions)) if d else 0
    if local_expected == 0:
        return [kernel.basis], [phi], h.observed_rank

    # Positive expected dimension on the kernel: recurse on the kernel and
    # the quotient with their induced flags, then push the inner maps back
    # through phi (well defined on V/S since S = ker phi).
    sub_flags, quot_flags = [], []
    for f in flags_v:
        sf, qf = induced_flags(kernel, f)
        sub_flags.append(sf)
        quot_flags.append(qf)
    inner_problem = ProblemTuple(d, r, positions)
    inner_chain, inner_maps, _ = _filtration_levels(
        inner_problem, sub_flags, quot_flags, fld, rng)

    _, sigma = modp.quotient_map(kernel.basis, p)
    lift = modp.matmul(phi, sigma, p)  # Q-valued on V/S coordinates
    chain = [kernel.basis] + [modp.matmul(kernel.basis, t, p) for t in inner_chain]
    maps = [phi] + [modp.matmul(lift, m, p) for m in inner_maps]
    return chain, maps, h.observed_rank


def build_filtration(problem: ProblemTuple,
                     flags: tuple[Sequence[FlagBasis], Sequence[FlagBasis]] | None = None,
                     fld: PrimeField | None = None,
                     rng: np.random.Generator | None = None,
                     seed: int | None = None) -> FiltrationCertificate:
    """Run the filtration recursion from fresh (or supplied) flags.

    GenericityFailure propagates; resampling policy belongs to the caller."""
    fld = fld or PrimeField()
    rng = rng if rng is not None else np.random.default_rng(seed)
    if flags is None:
        flags_v, flags_q = random_flags(problem, fld, rng)
    else:
        flags_v, flags_q = list(flags[0]), list(flags[1])
    r = problem.r

    tail, maps, hom_rank = _filtration_levels(problem, flags_v, flags_q, fld, rng)
    chain = [np.eye(r, dtype=np.int64)] + tail
    positions = []
    ambient = []
    for basis in chain:
        space = Subspace(fld, basis)
        pos = tuple(schubert_position(space, f) for f in flags_v)
        positions.append(pos)
        ambient.append(tuple(compose_positions(k, i)
                             for k, i in zip(pos, problem.indices)))
    return FiltrationCertificate(problem, fld, hom_rank, chain, maps,
                                 positions, ambient, flags_v, flags_q, seed)


@dataclass
class FiltrationReport:
    clause_i: bool
    clause_ii: bool
    clause_iii: bool
    structure: bool
    detail: list[str]

    @property
    def ok(self) -> bool:
        return self.clause_i and self.clause_ii and self.clause_iii and self.structure

    def __bool__(self) -> bool:
        return self.ok


def verify_filtration(cert: FiltrationCertificate, problem: ProblemTuple | None = None,
                      flags: tuple[Sequence[FlagBasis], Sequence[FlagBasis]] | None = None
                      ) -> FiltrationReport:
    """Independently re-check a filtration certificate.

    (i)  the final chain member's position tuple has expected dimension 0
         on Gr(d_h, r);
    (ii) every eta_u maps S^(u) & F^j_a into G^j_{i^j_a - a};
    (iii) the hom-space rank equals expected(problem) + horn_lhs of the
         final position tuple.
    Structural sanity (nested chain, strictly decreasing dims, eta_u killing
    S^(u+1) and injective on the graded piece) is reported separately."""
    problem = problem or cert.problem
    fld = cert.field
    p = fld.p
    if flags is None:
        flags_v, flags_q = cert.flags_v, cert.flags_q
    else:
        flags_v, flags_q = list(flags[0]), list(flags[1])
    r, n = problem.r, problem.n
    q = n - r
    detail: list[str] = []

    chain = cert.chain
    hsize = len(chain) - 1
    spaces = [Subspace(fld, b) for b in chain]
    positions = [tuple(schubert_position(sp, f) for f in flags_v) for sp in spaces]

    # (i): the recursion bottomed out on a rigid position tuple.
    d_h = spaces[-1].dim
    final = positions[-1]
    exp_final = expected_dim(ProblemTuple(d_h, r, final)) if d_h else 0
    clause_i = exp_final == 0
    if not clause_i:
        detail.append(f"clause i: expected dim of final tuple is {exp_final}")

    # (ii): containment, checked entry by entry from the stored matrices.
    clause_ii = True
    for u in range(hsize):
        eta = cert.maps[u]
        basis = chain[u]
        for j, idx in enumerate(problem.indices):
            for a, ia in enumerate(idx.elems, start=1):
                c = ia - a
                if c >= q:
                    continue
                meet = modp.intersect_columns(basis, flags_v[j].subspace_matrix(a), p)
                if meet.shape[1] == 0:
                    continue
                local = modp.solve_in_colspace(basis, meet, p)
                image = modp.matmul(eta, local, p)
                target = flags_q[j].subspace_matrix(c)
                if not modp.columns_contained(target, image, p):
                    clause_ii = False
                    detail.append(f"clause ii: eta_{u} leaks at j={j + 1}, a={a}")

    # (iii): the rank formula, with the hom space recomputed from scratch.
    rank_now = hom_space(problem, flags_v, flags_q, fld).observed_rank
    predicted = expected_dim(problem) + horn_lhs(problem, d_h, final if d_h else ()).value
    clause_iii = rank_now == predicted and rank_now == cert.hom_rank
    if not clause_iii:
        detail.append(f"clause iii: rank {rank_now}, predicted {predicted}, "
                      f"recorded {cert.hom_rank}")

    structure = True
    for u in range(hsize):
        upper, lower = chain[u], chain[u + 1]
        if lower.shape[1] >= upper.shape[1]:
            structure = False
            detail.append(f"structure: dims do not strictly decrease at level {u}")
            continue
        if not modp.columns_contained(upper, lower, p):
            structure = False
            detail.append(f"structure: chain not nested at level {u}")
            continue
        local = modp.solve_in_colspace(upper, lower, p)
        if modp.matmul(cert.maps[u], local, p).any():
            structure = False
            detail.append(f"structure: eta_{u} does not kill the next level")
        graded = upper.shape[1] - lower.shape[1]
        if modp.rank(cert.maps[u], p) != graded:
            structure = False
            detail.append(f"structure: eta_{u} not injective on the graded piece")

    return FiltrationReport(clause_i, clause_ii, clause_iii, structure, detail)

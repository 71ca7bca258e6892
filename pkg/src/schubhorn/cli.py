"""Command-line surface: one subcommand per engine or certificate.

Exit codes form a small vocabulary so shell pipelines can branch on
mathematical outcomes:

    0   nonzero (or command succeeded)
    1   zero product
    2   inconclusive (probe abstained)
    3   engines disagree
    64  input could not be parsed
    65  domain error (depth bound, width overflow, size budget, ...)
    70  genericity retries exhausted

All randomness derives from --seed; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import horn, lr, modp, parabolic, pointcount, probe
from .core import (
    ProblemTuple,
    all_indices,
    expected_dim,
    parse_partition,
    parse_problem,
)

EXIT_NONZERO = 0
EXIT_ZERO = 1
EXIT_INCONCLUSIVE = 2
EXIT_DISAGREE = 3
EXIT_PARSE = 64
EXIT_DOMAIN = 65
EXIT_GENERICITY = 70


@dataclass
class RunConfig:
    prime: int = probe.DEFAULT_PRIME
    trials: int = 3
    seed: int = 0
    depth: int = horn.DEFAULT_DEPTH
    fmt: str = "text"
    mode: str = "B"
    engine: str = "all"

    def field(self) -> probe.PrimeField:
        return probe.PrimeField(self.prime)

    def rng(self, *extra: int) -> np.random.Generator:
        return np.random.default_rng((self.seed, *extra))


def _emit(payload: dict, cfg: RunConfig, text_lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# nonzero

def cmd_nonzero(problem: ProblemTuple, cfg: RunConfig) -> int:
    engines: dict[str, dict] = {}
    verdicts: list[bool] = []
    if cfg.engine in ("oracle", "all"):
        nz = lr.is_nonzero_product(problem)
        engines["oracle"] = {"nonzero": nz}
        verdicts.append(nz)
    if cfg.engine in ("horn", "all"):
        modes = ["B", "C"] if cfg.engine == "all" else [cfg.mode]
        for mode in modes:
            v = horn.horn_decide(problem, mode, cfg.depth)
            engines[f"horn-{mode}"] = v.encode()
            verdicts.append(v.nonzero)
    probe_status = None
    if cfg.engine in ("probe", "all"):
        rep = probe.certify_nonzero(problem, cfg.trials, cfg.field(), cfg.rng())
        engines["probe"] = {
            "status": rep.status,
            "expected": rep.expected,
            "observed_ranks": rep.observed_ranks,
        }
        probe_status = rep.status

    agree = len(set(verdicts)) <= 1
    if probe_status == probe.CERTIFIED_NONZERO and verdicts and not all(verdicts):
        agree = False  # a certificate against a zero verdict is a real conflict

    if verdicts:
        verdict = "nonzero" if verdicts[0] else "zero"
    else:
        verdict = "nonzero" if probe_status == probe.CERTIFIED_NONZERO else "inconclusive"

    payload = {
        "problem": problem.encode(),
        "seed": cfg.seed,
        "prime": cfg.prime,
        "engine": cfg.engine,
        "engines": engines,
        "verdict": verdict,
        "agree": agree,
    }
    lines = [f"problem {problem.encode()} (seed {cfg.seed})"]
    for name, data in engines.items():
        lines.append(f"  {name}: {json.dumps(data, sort_keys=True)}")
    lines.append(f"verdict: {verdict}" + ("" if agree else "  [ENGINES DISAGREE]"))
    _emit(payload, cfg, lines)

    if not agree:
        return EXIT_DISAGREE
    if verdict == "nonzero":
        return EXIT_NONZERO
    if verdict == "zero":
        return EXIT_ZERO
    return EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# inequalities

def cmd_inequalities(r: int, n: int, s: int, cfg: RunConfig, dump_tables: bool) -> int:
    labels = horn.enumerate_inequalities(r, n, s, cfg.mode, cfg.depth)
    listing = [{"d": d, "ktuple": [k.encode() for k in kt], "rhs": d * (n - r)}
               for d, kt in labels]
    payload = {"r": r, "n": n, "s": s, "mode": cfg.mode, "count": len(listing),
               "inequalities": listing}
    if dump_tables:
        payload["tables"] = [json.loads(horn.build_table(d, r, s, cfg.depth).to_json())
                             for d in range(1, r + 1)]
    lines = [f"{len(listing)} inequalities for Gr({r},{n}), s={s}, mode {cfg.mode}"]
    lines += [f"  d={e['d']}  K=({'; '.join(e['ktuple'])})  <= {e['rhs']}" for e in listing]
    if dump_tables:
        lines += [horn.build_table(d, r, s, cfg.depth).to_json() for d in range(1, r + 1)]
    _emit(payload, cfg, lines)
    return 0


# ---------------------------------------------------------------------------
# bundled worked examples

EXAMPLES = (
    {
        "name": "E1", "problem": "1,4;2,3@4",
        "expected_dim": 0, "hom_rank": 1, "kernel_dim": 1,
        "kernel_positions": ["1", "2"], "phi_rank": 1,
        "nonzero": False, "witness": {"d": 1, "ktuple": ["1", "2"], "value": 1},
        "h": 1, "dims": [2, 1], "final_positions": ["1", "3"],
        "probe": probe.INCONCLUSIVE,
    },
    {
        "name": "E2", "problem": "1,4;2,4@4",
        "expected_dim": 1, "hom_rank": 1, "kernel_dim": 1,
        "kernel_positions": ["1", "2"], "phi_rank": 1,
        "nonzero": True, "witness": None,
        "h": 1, "dims": [2, 1], "final_positions": ["1", "4"],
        "probe": probe.CERTIFIED_NONZERO,
    },
    {
        "name": "E3", "problem": "1,4,5,6;2,3,5,6@6",
        "expected_dim": 4, "hom_rank": 4, "kernel_dim": 2,
        "kernel_positions": ["1,4", "2,4"], "phi_rank": 2,
        "nonzero": True, "witness": None,
        "h": 2, "dims": [4, 2, 1], "final_positions": ["1", "6"],
        "probe": probe.CERTIFIED_NONZERO,
    },
    {
        "name": "E4", "problem": "2,4@4",
        "expected_dim": 3, "hom_rank": 3, "kernel_dim": 0,
        "kernel_positions": [""], "phi_rank": 2,
        "nonzero": True, "witness": None,
        "h": 1, "dims": [2, 0], "final_positions": [""],
        "probe": probe.CERTIFIED_NONZERO,
    },
)


def run_example(golden: dict, cfg: RunConfig, attempts: int = 10) -> dict:
    """Execute one worked example end to end and diff against its goldens."""
    problem = parse_problem(golden["problem"])
    fld = cfg.field()
    last: Exception | None = None
    for attempt in range(attempts):
        rng = cfg.rng(attempt)
        try:
            flags = probe.random_flags(problem, fld, rng)
            h = probe.hom_space(problem, flags[0], flags[1], fld)
            sample = probe.generic_kernel_element(h, flags[0], rng)
            cert = probe.build_filtration(problem, flags, fld, rng, seed=cfg.seed)
            report = probe.verify_filtration(cert)
            verdict = horn.horn_decide(problem, cfg.mode, cfg.depth)
            probe_rep = probe.certify_nonzero(problem, cfg.trials, fld, cfg.rng(attempt, 1))
        except probe.GenericityFailure as exc:
            last = exc
            continue
        got = {
            "name": golden["name"],
            "problem": golden["problem"],
            "expected_dim": expected_dim(problem),
            "hom_rank": h.observed_rank,
            "kernel_dim": sample.kernel.dim,
            "kernel_positions": [k.encode() for k in sample.positions],
            "phi_rank": modp.rank(sample.phi, fld.p) if sample.phi.size else 0,
            "nonzero": verdict.nonzero,
            "witness": verdict.witness.encode() if verdict.witness else None,
            "h": cert.h,
            "dims": cert.dims,
            "final_positions": [k.encode() for k in cert.ambient_positions[-1]],
            "probe": probe_rep.status,
            "verified": report.ok,
            "attempt": attempt,
            "seed": cfg.seed,
            "prime": cfg.prime,
        }
        mismatches = [key for key in golden if key != "name"
                      and got.get(key) != golden[key]]
        if not report.ok:
            mismatches.append("verified")
        got["mismatches"] = mismatches
        return got
    raise probe.GenericityFailure(f"{golden['name']}:退 no generic sample in "
                                  f"{attempts} attempts ({last})")


def cmd_examples(cfg: RunConfig) -> int:
    failed = 0
    for golden in EXAMPLES:
        got = run_example(golden, cfg)
        ok = not got["mismatches"]
        failed += not ok
        if cfg.fmt == "json":
            print(json.dumps(got, sort_keys=True))
        else:
            status = "PASS" if ok else f"FAIL {got['mismatches']}"
            print(f"{got['name']} {got['problem']}: {status}  "
                  f"(rank {got['hom_rank']}, h={got['h']}, dims {got['dims']})")
    return 0 if not failed else 1


# ---------------------------------------------------------------------------
# saturation / hn / filtration / count

def cmd_saturation(parts_text: str, r: int, ell: int, scale: int, cfg: RunConfig) -> int:
    partitions = [parse_partition(t) for t in parts_text.split(";")]
    p1, p2 = lr.saturation_check(partitions, r, ell, scale)
    payload = {"partitions": [",".join(map(str, p)) for p in partitions],
               "r": r, "level": ell, "scale": scale,
               "p1": p1, "p2": p2, "equivalent": p1 == p2, "seed": cfg.seed}
    _emit(payload, cfg, [f"level {ell}: {'nonzero' if p1 else 'zero'};  "
                         f"scaled x{scale}: {'nonzero' if p2 else 'zero'}",
                         f"equivalent: {p1}/{p2}"])
    return 0 if p1 == p2 else EXIT_DISAGREE


def cmd_hn(problem: ProblemTuple, cfg: RunConfig) -> int:
    result = parabolic.hn_certificate(problem, cfg.depth)
    payload = result.encode()
    payload["seed"] = cfg.seed
    if isinstance(result, parabolic.SemistableVerdict):
        _emit(payload, cfg, [f"{problem.encode()}: semistable "
                             f"(full slope {payload['full_slope']}, level {result.level})"])
        return EXIT_NONZERO
    lines = [f"{problem.encode()}: not semistable",
             f"  contradictor d={result.contradictor.d} "
             f"K=({'; '.join(k.encode() for k in result.contradictor.ktuple)}) "
             f"slope {payload['contradictor']['slope']}",
             f"  violated inequality value {result.violated.value}",
             f"  composed position ({'; '.join(k.encode() for k in result.ltuple)})",
             f"  point check: {result.point_check}"]
    _emit(payload, cfg, lines)
    return EXIT_ZERO


def cmd_filtration(problem: ProblemTuple, cfg: RunConfig, attempts: int = 10) -> int:
    fld = cfg.field()
    last: Exception | None = None
    for attempt in range(attempts):
        try:
            cert = probe.build_filtration(problem, None, fld, cfg.rng(attempt), seed=cfg.seed)
            report = probe.verify_filtration(cert)
        except probe.GenericityFailure as exc:
            last = exc
            continue
        payload = cert.encode()
        payload["verified"] = {"i": report.clause_i, "ii": report.clause_ii,
                               "iii": report.clause_iii, "structure": report.structure}
        payload["attempt"] = attempt
        lines = [f"{problem.encode()}: rank {cert.hom_rank}, depth h={cert.h}, "
                 f"dims {cert.dims}"]
        for u, pos in enumerate(cert.ambient_positions):
            lines.append(f"  level {u}: ({'; '.join(k.encode() for k in pos)})")
        lines.append(f"verified: {report.ok} {report.detail if report.detail else ''}")
        _emit(payload, cfg, lines)
        return 0 if report.ok else EXIT_DISAGREE
    print(f"genericity retries exhausted: {last}", file=sys.stderr)
    return EXIT_GENERICITY


def cmd_count(problem: ProblemTuple, q: int, samples: int, cfg: RunConfig) -> int:
    oracle = lr.intersection_number(problem)
    rows, _ = pointcount.sample_counts(problem, q, samples, cfg.seed)
    if cfg.fmt == "json":
        print(json.dumps({"problem": problem.encode(), "q": q, "seed": cfg.seed,
                          "oracle": oracle.count,
                          "rows": [{"seed": r.seed, "count": r.count,
                                    "degenerate": r.degenerate} for r in rows]},
                         sort_keys=True))
    else:
        print("seed,count,degenerate")
        for r in rows:
            print(r.csv())
        hits = sum(1 for r in rows if r.count == oracle.count and not r.degenerate)
        print(f"# oracle {oracle.count}; {hits}/{len(rows)} clean samples match")
    return 0


# ---------------------------------------------------------------------------
# hidden sweep: engine agreement over a whole Grassmannian

def sweep_agreement(r: int, n: int, s: int, cfg: RunConfig,
                    with_probe: bool = False) -> dict:
    disagreements = []
    zero = nonzero = certified = 0
    rng = cfg.rng()
    fld = cfg.field() if with_probe else None
    for kt in itertools.product(all_indices(r, n), repeat=s):
        p = ProblemTuple(r, n, kt)
        o = lr.is_nonzero_product(p)
        b = horn.horn_decide(p, "B", cfg.depth).nonzero
        c = horn.horn_decide(p, "C", cfg.depth).nonzero
        if not (o == b == c):
            disagreements.append({"problem": p.encode(), "oracle": o, "B": b, "C": c})
        nonzero += o
        zero += not o
        if with_probe:
            rep = probe.certify_nonzero(p, cfg.trials, fld, rng)
            if rep.certified and not o:
                disagreements.append({"problem": p.encode(), "probe": "false certificate"})
            certified += rep.certified
    return {"r": r, "n": n, "s": s, "tuples": zero + nonzero, "nonzero": nonzero,
            "zero": zero, "certified": certified, "disagreements": disagreements}


def cmd_sweep(r: int, n: int, s: int, cfg: RunConfig, with_probe: bool) -> int:
    result = sweep_agreement(r, n, s, cfg, with_probe)
    if cfg.fmt == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        print(f"Gr({r},{n}) s={s}: {result['tuples']} tuples, "
              f"{result['nonzero']} nonzero, {len(result['disagreements'])} disagreements")
    return 0 if not result["disagreements"] else EXIT_DISAGREE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubhorn",
        description="Nonvanishing of Schubert class products, three ways, "
                    "with certificates.")
    parser.add_argument("--prime", type=int, default=probe.DEFAULT_PRIME,
                        help="odd prime for the finite-field probe")
    parser.add_argument("--trials", type=int, default=3,
                        help="probe trials before reporting INCONCLUSIVE")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")
    parser.add_argument("--depth", type=int, default=horn.DEFAULT_DEPTH,
                        help="Horn recursion rank bound")
    parser.add_argument("--mode", choices=("B", "C"), default="B",
                        help="Horn inequality family")
    parser.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    pz = sub.add_parser("nonzero", help="decide whether a product of classes vanishes")
    pz.add_argument("problem", help='tuple encoding, e.g. "1,4;2,3@4"')
    pz.add_argument("--engine", choices=("oracle", "horn", "probe", "all"),
                    default="all")

    pi = sub.add_parser("inequalities", help="list the defining Horn inequalities")
    pi.add_argument("-r", type=int, required=True)
    pi.add_argument("-n", type=int, required=True)
    pi.add_argument("-s", type=int, required=True)
    pi.add_argument("--tables", action="store_true",
                    help="also dump the nonvanishing tables as JSON")

    sub.add_parser("examples", help="run the bundled worked examples against goldens")

    ps = sub.add_parser("saturation", help="width-bounded saturation equivalence")
    ps.add_argument("partitions", help='semicolon-separated, e.g. "2,1;1;1"')
    ps.add_argument("-r", type=int, required=True)
    ps.add_argument("-l", "--level", type=int, required=True)
    ps.add_argument("-N", "--scale", type=int, required=True)

    ph = sub.add_parser("hn", help="Harder-Narasimhan certificate for a tuple")
    ph.add_argument("problem")

    pf = sub.add_parser("filtration", help="kernel filtration certificate")
    pf.add_argument("problem")

    pc = sub.add_parser("count", help="finite-field point counts of a 0-dim problem")
    pc.add_argument("problem")
    pc.add_argument("-q", type=int, default=5, choices=pointcount.ALLOWED_Q)
    pc.add_argument("--samples", type=int, default=50)

    pw = sub.add_parser("sweep")  # internal: exhaustive engine agreement
    pw.add_argument("-r", type=int, required=True)
    pw.add_argument("-n", type=int, required=True)
    pw.add_argument("-s", type=int, required=True)
    pw.add_argument("--probe", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(prime=args.prime, trials=args.trials, seed=args.seed,
                    depth=args.depth, fmt=args.fmt, mode=args.mode)

    try:
        if args.command == "nonzero":
            cfg.engine = args.engine
            return cmd_nonzero(parse_problem(args.problem), cfg)
        if args.command == "inequalities":
            return cmd_inequalities(args.r, args.n, args.s, cfg, args.tables)
        if args.command == "examples":
            return cmd_examples(cfg)
        if args.command == "saturation":
            return cmd_saturation(args.partitions, args.r, args.level, args.scale, cfg)
        if args.command == "hn":
            return cmd_hn(parse_problem(args.problem), cfg)
        if args.command == "filtration":
            return cmd_filtration(parse_problem(args.problem), cfg)
        if args.command == "count":
            return cmd_count(parse_problem(args.problem), args.q, args.samples, cfg)
        if args.command == "sweep":
            return cmd_sweep(args.r, args.n, args.s, cfg, args.probe)
        raise AssertionError(args.command)
    except (horn.DepthExceeded, lr.WidthOverflow, lr.RectangleMismatch,
            pointcount.SizeExceeded, parabolic.CandidatesExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except probe.GenericityFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY


if __name__ == "__main__":
    sys.exit(main())

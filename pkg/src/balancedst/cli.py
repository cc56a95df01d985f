"""Command-line interface.

Exit statuses: 0 success / YES, 1 negative answer, 2 bad input, 3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import __version__
from .diophantine import ContractViolation, ReductionProblem, reduce_coefficients
from .graph import GraphError, format_walk, parse_walk, read_instance, serialize_instance
from .instances import DEGENERATE_KINDS, gen_degenerate, gen_figure1, gen_random
from .oracle import ResourceLimitError, default_bound, shortest_balanced, shortest_balanced_walk
from .solver import decide_balanced
from .witness import build_witness, rebalance_existing, verify_walk

SCHEMA_VERSION = 1
CSV_HEADER = ["family", "n", "verdict", "witness_len", "oracle_min", "decide_ns", "witness_ns"]

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, **record}))
    else:
        print(text)


def _load(path):
    try:
        return read_instance(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_walk(path):
    try:
        with open(path) as fh:
            return parse_walk(fh.read())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_decide(args) -> int:
    verdict = decide_balanced(_load(args.instance))
    rec = verdict.as_record()
    text = " ".join(f"{k}={v}" for k, v in rec.items() if v is not None)
    _emit(args, rec, text)
    return EXIT_OK if verdict.yes else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    inst = _load(args.instance)
    walk = build_witness(inst)
    if walk is None:
        _emit(args, {"answer": "NO", "walk": None}, "NO")
        return EXIT_NEGATIVE
    _emit(args, {"answer": "YES", "length": walk.length, "walk": list(walk)}, format_walk(walk))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args.instance)
    report = verify_walk(inst, _load_walk(args.walk))
    rec = report.as_record()
    _emit(args, rec, " ".join(f"{k}={v}" for k, v in rec.items() if v is not None))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_rebalance(args) -> int:
    inst = _load(args.instance)
    walk = _load_walk(args.walk)
    try:
        out = rebalance_existing(inst, walk)
    except (GraphError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(args, {"length": out.length, "walk": list(out)}, format_walk(out))
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _load(args.instance)
    bound = args.bound or default_bound(inst.n)
    if args.walk:
        walk = shortest_balanced_walk(inst, bound)
        length = None if walk is None else walk.length
    else:
        walk, length = None, shortest_balanced(inst, bound)
    rec = {"bound": bound, "length": length, "walk": None if walk is None else list(walk)}
    if length is None:
        text = "none"
    else:
        text = str(length) + ("\n" + format_walk(walk) if walk is not None else "")
    _emit(args, rec, text)
    return EXIT_OK if length is not None else EXIT_NEGATIVE


def _generate(args):
    if args.family == "figure1":
        return gen_figure1(args.n)
    if args.family == "random":
        return gen_random(args.n, args.p_directed, args.p_neutral, args.seed)
    return gen_degenerate(args.family, args.n)


def cmd_gen(args) -> int:
    try:
        inst = _generate(args)
    except (GraphError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    text = serialize_instance(inst)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        sol = reduce_coefficients(ReductionProblem(args.c, args.k, args.m))
    except ContractViolation as exc:
        raise InputError(str(exc)) from exc
    rec = {"c": sol.c, "k": sol.k, "m_reduced": sol.m, "quotients": sol.quotients, "remainders": sol.remainders}
    lines = [f"c_r = {sol.c[-1]}"]
    for i, (a, b) in enumerate(zip(sol.quotients, sol.remainders)):
        lines.append(f"m[{i}] = {args.m[i]} = {a}*{sol.c[-1]} + {b}  ->  m'[{i}] = {b}")
    lines.append(f"m'[{len(sol.c) - 1}] = {sol.m[-1]}")
    lines.append("m' = " + " ".join(map(str, sol.m)))
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK


@dataclass
class BenchRecord:
    family: str
    n: int
    verdict: str
    witness_len: int | None
    oracle_min: int | None
    decide_ns: int
    witness_ns: int

    def row(self) -> list:
        return ["" if v is None else v for v in asdict(self).values()]


def bench_point(family: str, n: int, oracle_max_n: int, p_directed=0.3, p_neutral=0.2, seed=0) -> BenchRecord:
    if family == "figure1":
        inst = gen_figure1(n)
    elif family == "random":
        inst = gen_random(n, p_directed, p_neutral, seed + n)
    else:
        inst = gen_degenerate(family, n)
    t0 = time.perf_counter_ns()
    verdict = decide_balanced(inst)
    t1 = time.perf_counter_ns()
    walk = build_witness(inst)
    t2 = time.perf_counter_ns()
    oracle_min = shortest_balanced(inst, default_bound(n)) if n <= oracle_max_n else None
    return BenchRecord(
        family, n, verdict.answer.value, None if walk is None else walk.length, oracle_min, t1 - t0, t2 - t1
    )


def parse_range(text: str) -> list[int]:
    """``a..b`` or ``a..b:step``, inclusive."""
    step = 1
    if ":" in text:
        text, step_text = text.split(":", 1)
        step = int(step_text)
    lo, sep, hi = text.partition("..")
    if not sep:
        return [int(lo)]
    return list(range(int(lo), int(hi) + 1, step))


def run_bench(family, ns, oracle_max_n, jobs=1, **kw) -> list[BenchRecord]:
    if family == "figure1":
        ns = [n for n in ns if n >= 8 and n % 4 == 0]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(bench_point, family, n, oracle_max_n, **kw) for n in ns]
            records = [f.result() for f in futures]
    else:
        records = [bench_point(family, n, oracle_max_n, **kw) for n in ns]
    return sorted(records, key=lambda r: r.n)


def write_bench_csv(records, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())


def cmd_bench(args) -> int:
    try:
        ns = parse_range(args.range)
    except ValueError as exc:
        raise InputError(f"bad range {args.range!r}") from exc
    oracle_max_n = args.oracle_max_n
    if oracle_max_n is None:
        oracle_max_n = 32 if args.family == "figure1" else 10
    records = run_bench(
        args.family, ns, oracle_max_n, args.jobs,
        p_directed=args.p_directed, p_neutral=args.p_neutral, seed=args.seed,
    )
    if args.output in (None, "-"):
        write_bench_csv(records, sys.stdout)
    else:
        with open(args.output, "w", newline="") as fh:
            write_bench_csv(records, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balancedst", description="Balanced s-t connectivity toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record instead of plain text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide whether a balanced s-t walk exists")
    p.add_argument("instance")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("witness", parents=[common], help="print a balanced s-t walk")
    p.add_argument("instance")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a walk file against an instance")
    p.add_argument("instance")
    p.add_argument("walk")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rebalance", parents=[common], help="shorten a balanced walk")
    p.add_argument("instance")
    p.add_argument("walk")
    p.set_defaults(func=cmd_rebalance)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive shortest balanced walk")
    p.add_argument("instance")
    p.add_argument("-B", "--bound", type=int, default=None, help="prefix imbalance bound (default 3n^3)")
    p.add_argument("--walk", action="store_true", help="also print one minimal walk")
    p.set_defaults(func=cmd_oracle)

    families = ["figure1", "random", *DEGENERATE_KINDS]
    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--p-directed", type=float, default=0.3)
    gen_opts.add_argument("--p-neutral", type=float, default=0.2)
    gen_opts.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", parents=[gen_opts], help="generate an instance file")
    p.add_argument("family", choices=families)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen, json=False)

    p = sub.add_parser("bench", parents=[gen_opts], help="witness-length growth data as CSV")
    p.add_argument("family", choices=families)
    p.add_argument("range", help="n range, e.g. 8..64 or 8..64:8")
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.add_argument("--oracle-max-n", type=int, default=None)
    p.add_argument("-j", "--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench, json=False)

    p = sub.add_parser("reduce", parents=[common], help="show the coefficient reduction trail")
    p.add_argument("--c", type=int, nargs="+", required=True, help="strictly increasing coefficients")
    p.add_argument("--m", type=int, nargs="+", required=True, help="multipliers")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())

"""Benchmark command line.

Subcommands:
  gen-inc   --n N --seed S --out FILE        incremental link trace
  gen-mix   --n N --ops M --seed S --out FILE  interleaved link/cut/query trace
  replay    --trace FILE --backend ordered|hashed --mode timed|checked
            [--csv FILE] [--label TEXT]
  selftest  --n N --ops M --seeds K          K seeded checked replays

Exit status is 0 on success and 1 when a checked replay diverges from the
oracle.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, trace as trace_mod
from .measure import BACKENDS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ettforest",
        description="Dynamic-forest connectivity benchmark harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-inc", help="generate an incremental link trace")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("gen-mix", help="generate an interleaved trace")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--ops", type=int, required=True, help="operation count")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("replay", help="replay a trace file")
    p.add_argument("--trace", type=Path, required=True)
    p.add_argument("--backend", "--set-backend", dest="backend",
                   choices=sorted(BACKENDS), default="ordered")
    p.add_argument("--mode", choices=("timed", "checked"), default="timed")
    p.add_argument("--csv", type=Path, help="CSV output path (timed mode)")
    p.add_argument("--label", help="record label; defaults to the file stem")

    p = sub.add_parser("selftest", help="run seeded checked replays")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--ops", type=int, default=2000)
    p.add_argument("--seeds", type=int, default=5, help="number of seeds")
    return parser


def _cmd_replay(args) -> int:
    tr = trace_mod.read_trace(args.trace)
    label = args.label or args.trace.stem
    if args.mode == "checked":
        report = bench.replay_checked(tr, args.backend)
        if report.ok:
            print(f"ok: {report.op_count} ops, {report.query_count} queries "
                  f"agree with oracle ({args.backend})")
            return 0
        i, expected, got = report.divergence
        print(f"DIVERGENCE at op {i}: oracle={expected} forest={got} "
              f"({args.backend})", file=sys.stderr)
        return 1
    records = bench.replay_timed(tr, args.backend, label)
    if args.csv:
        bench.emit_csv(records, args.csv)
    for r in records:
        print(f"{r.label}: n={r.n} ops={r.op_count} total={r.total_ns}ns "
              f"per_op={r.per_op_ns}ns min={r.min_ns}ns max={r.max_ns}ns "
              f"backend={r.backend}")
    return 0


def _cmd_selftest(args) -> int:
    failures = 0
    for seed in range(args.seeds):
        tr = trace_mod.generate_interleaved_trace(args.n, args.ops, seed)
        for backend in sorted(BACKENDS):
            report = bench.replay_checked(tr, backend)
            status = "ok" if report.ok else "FAIL"
            print(f"seed {seed} backend {backend}: {status} "
                  f"({report.query_count} queries)")
            if not report.ok:
                failures += 1
    return 1 if failures else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "gen-inc":
        trace_mod.write_trace(
            trace_mod.generate_incremental_trace(args.n, args.seed), args.out)
        return 0
    if args.command == "gen-mix":
        trace_mod.write_trace(
            trace_mod.generate_interleaved_trace(args.n, args.ops, args.seed),
            args.out)
        return 0
    if args.command == "replay":
        return _cmd_replay(args)
    return _cmd_selftest(args)


if __name__ == "__main__":
    sys.exit(main())

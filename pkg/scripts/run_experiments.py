#!/usr/bin/env python3
"""Run the timing sweeps and write one CSV per experiment.

Three experiments, each swept over trace size and set backend:

  incremental  link-only traces ending in a spanning tree; reports
               per-link time as n grows.
  interleaved  mixed link/cut/query traces with as many operations as
               vertices; reports per-kind times.
  teardown     build a spanning tree untimed, then time cutting every
               edge in reverse insertion order until only singletons
               remain.

Results land in --out-dir (default ./results) as incremental.csv,
interleaved.csv and teardown.csv, all in the replay CSV schema.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Tuple

from ettforest import bench, forest
from ettforest.trace import (Trace, generate_incremental_trace,
                             generate_interleaved_trace)


@dataclass
class SweepConfig:
    sizes: Tuple[int, ...] = (1250, 2500, 5000, 10000)
    backends: Tuple[str, ...] = ("ordered", "hashed")
    seed: int = 1
    runs: int = 3
    out_dir: Path = field(default_factory=lambda: Path("results"))


def _teardown_records(trace: Trace, backend: str, label: str,
                      runs: int) -> list:
    """Time only the cut phase; the build phase runs off the clock."""
    totals = []
    edges = [(op.x, op.y) for op in reversed(trace.ops)]
    for _ in range(runs):
        f = forest.forest_of_singletons(trace.n, backend)
        for op in trace.ops:
            f = forest.link(op.x, op.y, f)
        start = time.perf_counter_ns()
        for x, y in edges:
            f = forest.cut(x, y, f)
        totals.append(time.perf_counter_ns() - start)
        assert all(len(c) == 1 for c in forest.components(f))
    mean = sum(totals) // len(totals)
    return [bench.BenchRecord(label=label, n=trace.n, op_count=len(edges),
                              total_ns=mean,
                              per_op_ns=mean // len(edges) if edges else 0,
                              backend=backend, min_ns=min(totals),
                              max_ns=max(totals))]


def run(config: SweepConfig) -> None:
    config.out_dir.mkdir(parents=True, exist_ok=True)
    experiments = {
        "incremental": lambda n: generate_incremental_trace(n, config.seed),
        "interleaved": lambda n: generate_interleaved_trace(n, n,
                                                            config.seed),
        "teardown": lambda n: generate_incremental_trace(n, config.seed),
    }
    for name, make_trace in experiments.items():
        records = []
        for n in config.sizes:
            trace = make_trace(n)
            for backend in config.backends:
                label = f"{name}-n{n}"
                if name == "teardown":
                    rows = _teardown_records(trace, backend, label,
                                             config.runs)
                else:
                    rows = bench.replay_timed(trace, backend, label,
                                              runs=config.runs)
                records.extend(rows)
                print(f"{label} [{backend}]: "
                      f"{rows[0].per_op_ns / 1000:.1f} us/op")
        out = config.out_dir / f"{name}.csv"
        bench.emit_csv(records, out)
        print(f"wrote {out}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=list(SweepConfig.sizes))
    parser.add_argument("--backends", nargs="+",
                        default=list(SweepConfig.backends))
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--runs", type=int, default=SweepConfig.runs)
    parser.add_argument("--out-dir", type=Path,
                        default=Path("results"))
    args = parser.parse_args(argv)
    run(SweepConfig(sizes=tuple(args.sizes),
                    backends=tuple(args.backends), seed=args.seed,
                    runs=args.runs, out_dir=args.out_dir))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Trace replay: wall-clock benchmarking and oracle-checked verification.

Timed replays run a trace three times and report the mean, minimum and
maximum over the runs, both overall and broken out per operation kind.
Forest construction happens before the clock starts.  Checked replays run
the trace against both the forest and the brute-force oracle and report
the first query on which they disagree.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import forest as forest_mod
from . import oracle as oracle_mod
from .measure import get_backend
from .trace import Trace

CSV_COLUMNS = ("label", "n", "op_count", "total_ns", "per_op_ns",
               "backend", "min_ns", "max_ns")

RUNS = 3


@dataclass(frozen=True)
class BenchRecord:
    label: str
    n: int
    op_count: int
    total_ns: int  # mean over runs
    per_op_ns: int  # total_ns / op_count, 0 for an empty trace
    backend: str
    min_ns: int
    max_ns: int


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    backend: str
    op_count: int
    query_count: int
    # (op index, expected answer, forest answer) of the first disagreement
    divergence: Optional[Tuple[int, bool, bool]]


def _apply(f, op):
    if op.kind == "L":
        return forest_mod.link(op.x, op.y, f)
    if op.kind == "C":
        return forest_mod.cut(op.x, op.y, f)
    forest_mod.connected(op.x, op.y, f)
    return f


def _timed_run(trace: Trace, backend_name: str):
    """One execution; returns (overall ns, {kind: ns})."""
    f = forest_mod.forest_of_singletons(trace.n, get_backend(backend_name))
    per_kind = {"L": 0, "C": 0, "Q": 0}
    clock = time.perf_counter_ns
    start = clock()
    for op in trace.ops:
        t0 = clock()
        f = _apply(f, op)
        per_kind[op.kind] += clock() - t0
    return clock() - start, per_kind


def _record(label, n, count, totals, backend) -> BenchRecord:
    mean = sum(totals) // len(totals)
    return BenchRecord(label=label, n=n, op_count=count, total_ns=mean,
                       per_op_ns=mean // count if count else 0,
                       backend=backend, min_ns=min(totals),
                       max_ns=max(totals))


def replay_timed(trace: Trace, backend: str, label: str,
                 runs: int = RUNS) -> List[BenchRecord]:
    """Mean-of-runs timings: one overall record plus one per op kind."""
    overall = []
    kind_totals = {"L": [], "C": [], "Q": []}
    for _ in range(runs):
        total, per_kind = _timed_run(trace, backend)
        overall.append(total)
        for k, ns in per_kind.items():
            kind_totals[k].append(ns)
    counts = {"L": 0, "C": 0, "Q": 0}
    for op in trace.ops:
        counts[op.kind] += 1
    records = [_record(label, trace.n, len(trace.ops), overall, backend)]
    for kind, name in (("L", "link"), ("C", "cut"), ("Q", "query")):
        records.append(_record(f"{label}:{name}", trace.n, counts[kind],
                               kind_totals[kind], backend))
    return records


def replay_checked(trace: Trace, backend: str,
                   per_op_hook=None) -> CheckReport:
    """Replay against the BFS oracle, comparing every query answer.

    per_op_hook, when given, is called as hook(index, op, forest) after
    each operation; tests use it to run invariant validators.
    """
    f = forest_mod.forest_of_singletons(trace.n, get_backend(backend))
    nf = oracle_mod.NaiveForest(trace.n)
    queries = 0
    for i, op in enumerate(trace.ops):
        if op.kind == "L":
            f = forest_mod.link(op.x, op.y, f)
            nf = oracle_mod.naive_link(op.x, op.y, nf)
        elif op.kind == "C":
            f = forest_mod.cut(op.x, op.y, f)
            nf = oracle_mod.naive_cut(op.x, op.y, nf)
        else:
            queries += 1
            got = forest_mod.connected(op.x, op.y, f).connected
            expected = oracle_mod.naive_connected(op.x, op.y, nf)
            if got != expected:
                return CheckReport(False, backend, i + 1, queries,
                                   (i, expected, got))
        if per_op_hook is not None:
            per_op_hook(i, op, f)
    return CheckReport(True, backend, len(trace.ops), queries, None)


def replay(trace: Trace, backend: str = "ordered", mode: str = "timed",
           label: str = "trace"):
    if mode == "timed":
        return replay_timed(trace, backend, label)
    if mode == "checked":
        return replay_checked(trace, backend)
    raise ValueError(f"unknown mode {mode!r}")


def emit_csv(records: List[BenchRecord], out) -> None:
    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([getattr(r, col) for col in CSV_COLUMNS])

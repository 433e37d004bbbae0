"""Replay harness: record shapes, CSV format, oracle checking."""

import csv

import pytest

from ettforest import bench
from ettforest.trace import Trace, TraceOp, generate_interleaved_trace


def test_empty_trace_record():
    records = bench.replay_timed(Trace(3, []), "ordered", "empty", runs=1)
    overall = records[0]
    assert overall.op_count == 0
    assert overall.per_op_ns == 0
    assert overall.backend == "ordered"


def test_per_kind_records():
    tr = Trace(4, [TraceOp("L", 0, 1), TraceOp("Q", 0, 1),
                   TraceOp("C", 0, 1)])
    records = bench.replay_timed(tr, "hashed", "mini", runs=2)
    labels = [r.label for r in records]
    assert labels == ["mini", "mini:link", "mini:cut", "mini:query"]
    for r in records[1:]:
        assert r.op_count == 1
    assert all(r.min_ns <= r.total_ns <= r.max_ns for r in records)


def test_checked_replay_agrees():
    tr = generate_interleaved_trace(30, 200, seed=5)
    for backend in ("ordered", "hashed"):
        report = bench.replay_checked(tr, backend)
        assert report.ok
        assert report.divergence is None
        assert report.op_count == 200
        assert report.query_count == sum(op.kind == "Q" for op in tr.ops)


def test_checked_replay_hook_sees_every_op():
    tr = generate_interleaved_trace(10, 40, seed=1)
    seen = []
    bench.replay_checked(tr, "ordered",
                         per_op_hook=lambda i, op, f: seen.append((i, op)))
    assert [op for _, op in seen] == tr.ops
    assert [i for i, _ in seen] == list(range(40))


def test_replay_dispatch():
    tr = Trace(2, [TraceOp("Q", 0, 1)])
    assert isinstance(bench.replay(tr, mode="checked"), bench.CheckReport)
    assert isinstance(bench.replay(tr, mode="timed"), list)
    with pytest.raises(ValueError):
        bench.replay(tr, mode="profiled")


def test_emit_csv(tmp_path):
    tr = Trace(3, [TraceOp("L", 0, 1), TraceOp("Q", 0, 2)])
    records = bench.replay_timed(tr, "ordered", "csvtest", runs=1)
    out = tmp_path / "r.csv"
    bench.emit_csv(records, out)
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(bench.CSV_COLUMNS)
    assert len(rows) == 1 + len(records)
    assert rows[1][0] == "csvtest"
    assert rows[1][1] == "3"
    assert rows[1][5] == "ordered"

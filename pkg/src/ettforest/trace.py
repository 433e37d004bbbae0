"""Operation traces for the benchmark harness.

A trace is a vertex count plus an ordered list of link / cut / query
operations.  Traces are generated against a reference connectivity
structure so that every L joins two distinct trees and every C removes an
edge added by an earlier L; replays therefore contain no no-ops.

File format: header line ``n <count>``, then one op per line, ``L x y`` /
``C x y`` / ``Q x y``, space-separated decimal, newline-terminated.
Identical (n, m, seed) inputs produce byte-identical files.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import List

KINDS = ("L", "C", "Q")


@dataclass(frozen=True)
class TraceOp:
    kind: str  # "L" | "C" | "Q"
    x: int
    y: int


@dataclass
class Trace:
    n: int
    ops: List[TraceOp] = field(default_factory=list)


def format_trace(trace: Trace) -> str:
    lines = [f"n {trace.n}"]
    for op in trace.ops:
        lines.append(f"{op.kind} {op.x} {op.y}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> Trace:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n "):
        raise ValueError("trace must start with a 'n <count>' header")
    n = int(lines[0][2:])
    ops = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in KINDS:
            raise ValueError(f"line {ln}: malformed op {line!r}")
        x, y = int(parts[1]), int(parts[2])
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"line {ln}: vertex out of range")
        ops.append(TraceOp(parts[0], x, y))
    return Trace(n, ops)


def write_trace(trace: Trace, path) -> None:
    Path(path).write_text(format_trace(trace), newline="\n")


def read_trace(path) -> Trace:
    return parse_trace(Path(path).read_text())


# --- generation -------------------------------------------------------------


class _DSU:
    __slots__ = ("parent", "rank")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def generate_incremental_trace(n: int, seed: int) -> Trace:
    """n - 1 effective links ending in one spanning tree.  Candidate pairs
    are sampled uniformly and rejected until they join distinct trees."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    dsu = _DSU(n)
    ops = []
    while len(ops) < n - 1:
        x = rng.randrange(n)
        y = rng.randrange(n)
        if x != y and dsu.union(x, y):
            ops.append(TraceOp("L", x, y))
    return Trace(n, ops)


def generate_interleaved_trace(n: int, m: int, seed: int) -> Trace:
    """m effective operations mixing links, cuts and queries.

    A component-label map is maintained during generation so candidate
    links and cuts can be validated without replaying the whole trace.
    Cuts relabel the smaller side of the split (found by growing both
    sides in lockstep), keeping generation near-linear overall.
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    if m < 0:
        raise ValueError("op count must be nonnegative")
    rng = random.Random(seed)
    comp = list(range(n))
    comp_size = {i: 1 for i in range(n)}
    adj = {i: set() for i in range(n)}
    edges: List[tuple] = []
    edge_pos = {}
    next_comp = n
    ops = []

    def bfs_side(start):
        seen = {start}
        frontier = [start]
        while frontier:
            out = []
            for v in frontier:
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        out.append(w)
            frontier = out
            yield None  # one expansion round done
        yield seen

    def add_edge(x, y):
        cx, cy = comp[x], comp[y]
        # relabel the smaller component
        if comp_size[cx] < comp_size[cy]:
            small, big = cx, cy
        else:
            small, big = cy, cx
        stack = [x if comp[x] == small else y]
        seen = {stack[0]}
        while stack:
            v = stack.pop()
            comp[v] = big
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp_size[big] += comp_size.pop(small)
        adj[x].add(y)
        adj[y].add(x)
        edge_pos[(x, y)] = len(edges)
        edges.append((x, y))

    def remove_edge(x, y):
        nonlocal next_comp
        pos = edge_pos.pop((x, y))
        last = edges[-1]
        edges[pos] = last
        edges.pop()
        if last != (x, y):
            edge_pos[last] = pos
        adj[x].discard(y)
        adj[y].discard(x)
        # Find the smaller side by expanding both in lockstep, then give
        # it a fresh component label.
        gx, gy = bfs_side(x), bfs_side(y)
        side = None
        while side is None:
            side = next(gx)
            if side is None:
                side = next(gy)
        old = comp[x]
        fresh = next_comp
        next_comp += 1
        for v in side:
            comp[v] = fresh
        comp_size[fresh] = len(side)
        comp_size[old] -= len(side)

    while len(ops) < m:
        kinds = ["Q"]
        if len(edges) < n - 1:
            kinds.append("L")
        if edges:
            kinds.append("C")
        kind = rng.choice(kinds)
        if kind == "L":
            while True:
                x = rng.randrange(n)
                y = rng.randrange(n)
                if x != y and comp[x] != comp[y]:
                    break
            add_edge(x, y)
            ops.append(TraceOp("L", x, y))
        elif kind == "C":
            x, y = edges[rng.randrange(len(edges))]
            remove_edge(x, y)
            ops.append(TraceOp("C", x, y))
        else:
            x = rng.randrange(n)
            y = rng.randrange(n)
            ops.append(TraceOp("Q", x, y))
    return Trace(n, ops)

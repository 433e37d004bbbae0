"""Brute-force reference forest for property testing.

Keeps an explicit edge set and answers connectivity by BFS from scratch.
O(n) per query is fine: this only runs at test scale.
"""

from __future__ import annotations

from collections import deque
from typing import FrozenSet, List, Set, Tuple

Edge = FrozenSet[int]


def _edge(x: int, y: int) -> Edge:
    return frozenset((x, y))


class NaiveForest:
    """Immutable edge-set forest; acyclicity is enforced by rejecting
    links between already-connected vertices."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: FrozenSet[Edge] = frozenset()):
        self.n = n
        self.edges = edges

    def __repr__(self):
        return f"NaiveForest(n={self.n}, edges={len(self.edges)})"


def naive_connected(x: int, y: int, nf: NaiveForest) -> bool:
    if not (0 <= x < nf.n and 0 <= y < nf.n):
        return False
    if x == y:
        return True
    adj = {}
    for e in nf.edges:
        a, b = tuple(e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w == y:
                return True
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def naive_link(x: int, y: int, nf: NaiveForest) -> NaiveForest:
    if x == y or not (0 <= x < nf.n and 0 <= y < nf.n):
        return nf
    if naive_connected(x, y, nf):
        return nf
    return NaiveForest(nf.n, nf.edges | {_edge(x, y)})


def naive_cut(x: int, y: int, nf: NaiveForest) -> NaiveForest:
    e = _edge(x, y)
    if e not in nf.edges:
        return nf
    return NaiveForest(nf.n, nf.edges - {e})


def components(nf: NaiveForest) -> List[Set[int]]:
    """Connected components as vertex sets, sorted by minimum vertex."""
    adj = {v: [] for v in range(nf.n)}
    for e in nf.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    out = []
    for start in range(nf.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
    return out

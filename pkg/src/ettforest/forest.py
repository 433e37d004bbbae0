"""Dynamic forest connectivity over a fixed vertex universe.

A Forest stores its component trees in an outer finger tree whose measure
is the union of the tours' pair sets, so one logarithmic search finds the
tree containing any vertex.  link, cut and connected are the public API;
all three are total: invalid arguments return the input forest unchanged.
try_link / try_cut report why an operation was a no-op.

The vertex universe {0..n-1} is fixed when the forest is built and never
grows or shrinks.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional, Tuple

from .fingertree import FingerTree, MeasureSpec, from_list
from .measure import SetBackend, get_backend, member, union
from . import ett
from .ett import EulerTree


class LinkStatus(enum.Enum):
    LINKED = "linked"
    SAME_VERTEX = "same_vertex"
    ALREADY_CONNECTED = "already_connected"
    MISSING_VERTEX = "missing_vertex"


class CutStatus(enum.Enum):
    CUT = "cut"
    SAME_VERTEX = "same_vertex"
    NOT_CONNECTED = "not_connected"
    EDGE_ABSENT = "edge_absent"


class ConnectivityAnswer(NamedTuple):
    connected: bool
    detail: Optional[Tuple[EulerTree, int, EulerTree, int]]


def _forest_spec(backend: SetBackend) -> MeasureSpec:
    return MeasureSpec(empty=backend.empty,
                       combine=union,
                       measure_of=lambda tree: tree.annotation())


class Forest:
    """An immutable forest of Euler-tour trees."""

    __slots__ = ("trees", "n_vertices", "backend")

    def __init__(self, trees: FingerTree, n_vertices: int,
                 backend: SetBackend):
        self.trees = trees
        self.n_vertices = n_vertices
        self.backend = backend

    def tree_list(self):
        return self.trees.to_list()

    def __repr__(self):
        return (f"Forest(n={self.n_vertices}, "
                f"trees={len(self.tree_list())})")


def forest_of_singletons(n: int, backend="ordered") -> Forest:
    """A forest of n isolated vertices 0..n-1."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if isinstance(backend, str):
        backend = get_backend(backend)
    singles = [ett.singleton_tree(i, backend) for i in range(n)]
    return Forest(from_list(_forest_spec(backend), singles), n, backend)


def _vertex_pred(v: int):
    pair = (v, v)

    def pred(before, _after):
        return member(pair, before)
    pred.prefix_only = True
    pred.disjunctive = True
    return pred


def search_for(v: int, f: Forest) -> Optional[Tuple[EulerTree, int]]:
    """The tree containing v together with that tree's root, or None."""
    if not 0 <= v < f.n_vertices:
        return None
    found = f.trees.search(_vertex_pred(v))
    if found is None:
        return None
    tree = found.hit
    r = ett.root(tree)
    assert r is not None
    return tree, r


def connected(x: int, y: int, f: Forest) -> ConnectivityAnswer:
    """Whether x and y lie in the same tree.  detail is None when either
    vertex is outside the forest."""
    hit_x = search_for(x, f)
    if hit_x is None:
        return ConnectivityAnswer(False, None)
    hit_y = search_for(y, f)
    if hit_y is None:
        return ConnectivityAnswer(False, None)
    tx, rx = hit_x
    ty, ry = hit_y
    if rx == ry:
        return ConnectivityAnswer(True, (tx, rx, tx, rx))
    return ConnectivityAnswer(False, (tx, rx, ty, ry))


def try_link(x: int, y: int, f: Forest) -> Tuple[Forest, LinkStatus]:
    """Add edge {x,y} joining two distinct trees.  No-ops return the same
    forest with the reason."""
    if x == y:
        return f, LinkStatus.SAME_VERTEX
    if not (0 <= x < f.n_vertices and 0 <= y < f.n_vertices):
        return f, LinkStatus.MISSING_VERTEX
    found_x = f.trees.search(_vertex_pred(x))
    if found_x is None:
        return f, LinkStatus.MISSING_VERTEX
    lf1, tx, rf1 = found_x
    rest = lf1.concat(rf1)
    found_y = rest.search(_vertex_pred(y))
    if found_y is None:
        if ett.pair_in((y, y), tx):
            return f, LinkStatus.ALREADY_CONNECTED
        return f, LinkStatus.MISSING_VERTEX
    lf2, ty, rf2 = found_y
    joined = ett.link_tree(x, tx, y, ty)
    if joined is None:
        return f, LinkStatus.MISSING_VERTEX
    trees = lf2.concat(rf2).cons(joined)
    return Forest(trees, f.n_vertices, f.backend), LinkStatus.LINKED


def try_cut(x: int, y: int, f: Forest) -> Tuple[Forest, CutStatus]:
    """Remove edge {x,y} if it is a tree edge, splitting its tree in two."""
    if x == y:
        return f, CutStatus.SAME_VERTEX
    if not (0 <= x < f.n_vertices and 0 <= y < f.n_vertices):
        return f, CutStatus.NOT_CONNECTED
    found = f.trees.search(_vertex_pred(x))
    if found is None:
        return f, CutStatus.NOT_CONNECTED
    lf, t, rf = found
    if not ett.pair_in((y, y), t):
        return f, CutStatus.NOT_CONNECTED
    pieces = ett.cut_tree(x, y, t)
    if pieces is None:
        # x and y share a tree but {x,y} is not one of its edges.
        return f, CutStatus.EDGE_ABSENT
    severed, remainder = pieces
    trees = lf.concat(rf).cons(remainder).cons(severed)
    return Forest(trees, f.n_vertices, f.backend), CutStatus.CUT


def link(x: int, y: int, f: Forest) -> Forest:
    """try_link without the status; invalid links return f unchanged."""
    return try_link(x, y, f)[0]


def cut(x: int, y: int, f: Forest) -> Forest:
    """try_cut without the status; invalid cuts return f unchanged."""
    return try_cut(x, y, f)[0]


def components(f: Forest):
    """Vertex sets of the forest's trees; test and oracle-comparison
    helper, O(total tour length)."""
    out = []
    for tree in f.tree_list():
        out.append(frozenset(a for a, b in tree.pairs() if a == b))
    return out

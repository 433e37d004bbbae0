"""Euler-tour trees over measured finger trees.

A rooted tree is represented by its Euler tour, stored as a finger tree of
vertex pairs.  A pair (v,v) marks the first visit to v; a pair (u,v) marks
traversal of the edge between u and v in that direction.  The tour of a
tree rooted at v is

    tour(v) = (v,v) then, for each child c in order: (v,c), tour(c), (c,v)

so a tree with n vertices yields a sequence of length 3n - 2.  The finger
tree's measure is the set of pairs in the sequence, which lets a single
logarithmic search locate any vertex or edge occurrence.

Linking and cutting are sequence surgery: link splices one tour into
another around a new edge pair, cut excises the sub-tour between the two
directions of an existing edge.  Both preserve tour well-formedness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .fingertree import FingerTree, MeasureSpec, from_list
from .measure import SetBackend, member, union

VertexPair = Tuple[int, int]


class DuplicateVertexError(ValueError):
    """A rose tree carried the same label twice."""


@dataclass
class RoseTree:
    label: int
    children: List["RoseTree"] = field(default_factory=list)


def tour_measure_spec(backend: SetBackend) -> MeasureSpec:
    """Measure spec for tour sequences: each pair measures as a singleton
    set, combined by set union."""
    return MeasureSpec(empty=backend.empty,
                       combine=union,
                       measure_of=backend.singleton)


class EulerTree:
    """One tree of the forest, as its Euler-tour sequence."""

    __slots__ = ("seq",)

    def __init__(self, seq: FingerTree):
        self.seq = seq

    def pairs(self) -> List[VertexPair]:
        return self.seq.to_list()

    def annotation(self):
        return self.seq.measure()

    def __repr__(self):
        return f"EulerTree({self.pairs()!r})"


def singleton_tree(v: int, backend: SetBackend) -> EulerTree:
    return EulerTree(from_list(tour_measure_spec(backend), [(v, v)]))


def tour_of_rose_tree(t: RoseTree, backend: SetBackend) -> EulerTree:
    """Flatten a rose tree into its Euler tour."""
    pairs: List[VertexPair] = []
    seen = set()

    def walk(node: RoseTree):
        v = node.label
        if v in seen:
            raise DuplicateVertexError(f"vertex {v} appears twice")
        seen.add(v)
        pairs.append((v, v))
        for child in node.children:
            pairs.append((v, child.label))
            walk(child)
            pairs.append((child.label, v))

    walk(t)
    return EulerTree(from_list(tour_measure_spec(backend), pairs))


def root(t: EulerTree) -> Optional[int]:
    view = t.seq.view_left()
    if view is None:
        return None
    return view[0][0]


def pair_in(p: VertexPair, t: EulerTree) -> bool:
    return member(p, t.annotation())


def _pred(p: VertexPair):
    # Split where the accumulated prefix first contains p; the after-measure
    # is ignored, so the predicate is monotone whenever p occurs at all.
    def pred(before, _after):
        return member(p, before)
    pred.prefix_only = True
    pred.disjunctive = True
    return pred


def reroot(t: EulerTree, v: int) -> EulerTree:
    """Rotate the tour so v becomes the root; trees not containing v are
    returned unchanged."""
    found = t.seq.search(_pred((v, v)))
    if found is None:
        return t
    left, _, right = found
    return EulerTree(right.concat(left).cons((v, v)))


def link_tree(u: int, tu: EulerTree, v: int, tv: EulerTree
              ) -> Optional[EulerTree]:
    """Join two disjoint tours with a new edge {u,v}, attaching u's tree
    (rerooted at u) below v.  None when either endpoint is missing.

    The rerooting is folded into the first search, so the whole operation
    is 2 searches and 3 concatenations plus O(1) cons/snoc.
    """
    found_u = tu.seq.search(_pred((u, u)))
    if found_u is None:
        return None
    found_v = tv.seq.search(_pred((v, v)))
    if found_v is None:
        return None
    lu, _, ru = found_u
    from_seq = ru.concat(lu).cons((u, u))
    left, _, right = found_v
    head = left.snoc((v, v)).snoc((v, u))
    return EulerTree(head.concat(from_seq).concat(right.cons((u, v))))


def cut_tree(u: int, v: int, t: EulerTree
             ) -> Optional[Tuple[EulerTree, EulerTree]]:
    """Remove the edge {u,v} from the tour, returning (severed subtree,
    remainder).  None when (u,v) or its mate (v,u) is absent.

    At most 3 searches and exactly 1 concatenation.
    """
    found = t.seq.search(_pred((u, v)))
    if found is None:
        return None
    left, _, right = found
    in_left = left.search(_pred((v, u)))
    if in_left is not None:
        left_l, _, right_l = in_left
        return EulerTree(right_l), EulerTree(left_l.concat(right))
    in_right = right.search(_pred((v, u)))
    if in_right is None:
        return None  # mate missing: malformed tour
    left_r, _, right_r = in_right
    return EulerTree(left_r), EulerTree(left.concat(right_r))


# --- tour validation --------------------------------------------------------


class TourError(AssertionError):
    """A tour sequence violated a well-formedness invariant."""


def validate_tour(t: EulerTree) -> None:
    """Check every tour invariant; raise TourError on the first violation.

    Four checks: the sequence parses under the tour grammar, every pair is
    unique, every edge pair has its reversed mate, and the length is 3n - 2
    for n distinct vertices.  Additionally the cached annotation must equal
    the set of pairs actually present.
    """
    pairs = t.pairs()
    if not pairs:
        raise TourError("empty tour")

    distinct = set(pairs)
    if len(distinct) != len(pairs):
        raise TourError("duplicate pair in tour")
    vertices = {a for a, b in pairs if a == b}
    for a, b in pairs:
        if a != b:
            if (b, a) not in distinct:
                raise TourError(f"edge pair {(a, b)} has no mate")
            if a not in vertices or b not in vertices:
                raise TourError(f"edge pair {(a, b)} touches unknown vertex")
    if len(pairs) != 3 * len(vertices) - 2:
        raise TourError(f"length {len(pairs)} for {len(vertices)} vertices")

    # Grammar parse.  The edge pairs trace a closed walk: the first
    # traversal of an edge descends to a vertex not entered before, the
    # second returns to the parent on the path stack.  Rotations from
    # reroot can move a vertex pair (v,v) away from v's first visit, so
    # the only constraint on it is that it occurs while v is the current
    # vertex (pair uniqueness already guarantees exactly one per vertex).
    # The same rotations mean a tour cut out of a larger one may open on
    # an edge pair; the start vertex is the first pair's origin either way.
    r = pairs[0][0]
    entered = {r}
    stack = [r]
    seen_edges = set()
    for a, b in pairs:
        if a != stack[-1]:
            raise TourError(f"pair {(a, b)} does not leave current vertex")
        if a == b:
            continue  # vertex pair at one of a's visits
        if (b, a) in seen_edges:
            if len(stack) < 2 or b != stack[-2]:
                raise TourError(f"return pair {(a, b)} does not go to parent")
            stack.pop()
        else:
            if b in entered:
                raise TourError(f"descent pair {(a, b)} revisits {b}")
            entered.add(b)
            stack.append(b)
        seen_edges.add((a, b))
    if stack != [r]:
        raise TourError("tour ends with unclosed descents")

    annotated = set(t.annotation().to_sorted_pairs())
    if annotated != distinct:
        raise TourError("cached annotation disagrees with tour contents")

"""Euler-tour construction, surgery and validation."""

import random

import pytest

from ettforest import ett
from ettforest.fingertree import count_operations
from ettforest.measure import get_backend

BACKEND = get_backend("ordered")


def leaf(v):
    return ett.singleton_tree(v, BACKEND)


def test_singleton_tour():
    t = leaf(5)
    assert t.pairs() == [(5, 5)]
    assert ett.root(t) == 5
    ett.validate_tour(t)


def test_rose_tree_tour():
    #      0
    #     / \
    #    1   2
    #        |
    #        3
    rt = ett.RoseTree(0, [ett.RoseTree(1), ett.RoseTree(2, [ett.RoseTree(3)])])
    t = ett.tour_of_rose_tree(rt, BACKEND)
    assert t.pairs() == [(0, 0), (0, 1), (1, 1), (1, 0), (0, 2), (2, 2),
                         (2, 3), (3, 3), (3, 2), (2, 0)]
    assert len(t.pairs()) == 3 * 4 - 2
    ett.validate_tour(t)


def test_duplicate_label_rejected():
    rt = ett.RoseTree(1, [ett.RoseTree(1)])
    with pytest.raises(ett.DuplicateVertexError):
        ett.tour_of_rose_tree(rt, BACKEND)


def test_link_two_singletons():
    t = ett.link_tree(1, leaf(1), 2, leaf(2))
    assert t.pairs() == [(2, 2), (2, 1), (1, 1), (1, 2)]
    assert ett.root(t) == 2
    ett.validate_tour(t)


def test_link_missing_endpoint_is_none():
    assert ett.link_tree(9, leaf(1), 2, leaf(2)) is None
    assert ett.link_tree(1, leaf(1), 9, leaf(2)) is None


def test_cut_inverts_link():
    t = ett.link_tree(1, leaf(1), 2, leaf(2))
    pieces = ett.cut_tree(2, 1, t)
    assert pieces is not None
    severed, remainder = pieces
    assert severed.pairs() == [(1, 1)]
    assert remainder.pairs() == [(2, 2)]
    ett.validate_tour(severed)
    ett.validate_tour(remainder)


def test_cut_absent_edge_is_none():
    t = ett.link_tree(1, leaf(1), 2, leaf(2))
    t = ett.link_tree(2, t, 3, leaf(3))
    assert ett.cut_tree(1, 3, t) is None


def test_reroot_rotates_and_preserves_pair_set():
    rt = ett.RoseTree(0, [ett.RoseTree(1, [ett.RoseTree(2)]), ett.RoseTree(3)])
    t = ett.tour_of_rose_tree(rt, BACKEND)
    for v in range(4):
        r = ett.reroot(t, v)
        assert ett.root(r) == v
        assert set(r.pairs()) == set(t.pairs())
        ett.validate_tour(r)
    assert ett.reroot(t, 42) is t


def _random_tree(rng, vertices):
    t = leaf(vertices[0])
    in_tree = [vertices[0]]
    for v in vertices[1:]:
        u = rng.choice(in_tree)
        t = ett.link_tree(v, leaf(v), u, t)
        in_tree.append(v)
    return t


def test_random_surgery_keeps_tours_valid():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(2, 20)
        vs = rng.sample(range(100), n)
        t = _random_tree(rng, vs)
        ett.validate_tour(t)
        # cut a random tour edge, validate both halves, relink them
        edges = [(a, b) for a, b in t.pairs() if a != b]
        a, b = rng.choice(edges)
        severed, remainder = ett.cut_tree(a, b, t)
        ett.validate_tour(severed)
        ett.validate_tour(remainder)
        relinked = ett.link_tree(ett.root(severed), severed,
                                 ett.root(remainder), remainder)
        ett.validate_tour(relinked)
        assert set(p for p in relinked.pairs() if p[0] == p[1]) == \
            set((v, v) for v in vs)


def test_link_and_cut_operation_counts():
    ta = _random_tree(random.Random(1), list(range(8)))
    tb = _random_tree(random.Random(2), list(range(10, 16)))
    with count_operations() as counts:
        joined = ett.link_tree(3, ta, 12, tb)
    assert counts.searches == 2
    assert counts.concats == 3
    with count_operations() as counts:
        assert ett.cut_tree(12, 3, joined) is not None
    assert counts.searches <= 3
    assert counts.concats == 1


def test_severed_tour_may_open_on_an_edge_pair():
    # Rotations can leave a cut-out subtree tour starting mid-visit; the
    # walk is still closed and must validate.
    t = ett.EulerTree(
        ett.from_list(ett.tour_measure_spec(BACKEND),
                      [(1, 2), (2, 2), (2, 1), (1, 1)]))
    ett.validate_tour(t)
    assert ett.root(t) == 1


def _raises_tour_error(pairs):
    t = ett.EulerTree(
        ett.from_list(ett.tour_measure_spec(BACKEND), pairs))
    with pytest.raises(ett.TourError):
        ett.validate_tour(t)


def test_validator_rejects_malformed_tours():
    _raises_tour_error([])  # empty
    _raises_tour_error([(0, 0), (1, 1)])  # wrong length / disconnected
    _raises_tour_error([(0, 0), (0, 1), (1, 1)])  # unmated edge pair
    _raises_tour_error([(0, 0), (0, 1), (1, 0), (0, 0)])  # duplicate pair
    _raises_tour_error([(0, 0), (0, 1), (1, 0), (1, 1)])  # (1,1) after return
    # all counts right, but the vertex pair (1,1) appears while the
    # walk is still at vertex 0
    _raises_tour_error([(0, 0), (1, 1), (0, 1), (1, 0)])

"""Sanity checks on the brute-force reference forest."""

from ettforest.oracle import (NaiveForest, components, naive_connected,
                              naive_cut, naive_link)


def test_connectivity_is_transitive():
    nf = NaiveForest(5)
    nf = naive_link(0, 1, nf)
    nf = naive_link(1, 2, nf)
    assert naive_connected(0, 2, nf)
    assert not naive_connected(0, 3, nf)
    assert naive_connected(4, 4, nf)


def test_link_rejects_cycles_and_bad_input():
    nf = naive_link(0, 1, NaiveForest(3))
    nf = naive_link(1, 2, nf)
    assert naive_link(0, 2, nf) is nf  # would close a cycle
    assert naive_link(1, 1, nf) is nf
    assert naive_link(0, 5, nf) is nf
    assert len(nf.edges) == 2


def test_cut_is_exact_edge_removal():
    nf = naive_link(0, 1, NaiveForest(3))
    cut = naive_cut(1, 0, nf)  # undirected: order must not matter
    assert not naive_connected(0, 1, cut)
    assert naive_cut(0, 2, nf) is nf


def test_components():
    nf = naive_link(3, 4, naive_link(0, 1, NaiveForest(5)))
    assert components(nf) == [{0, 1}, {2}, {3, 4}]


def test_out_of_range_queries_are_false():
    nf = NaiveForest(2)
    assert not naive_connected(0, 5, nf)
    assert not naive_connected(-1, 0, nf)

"""Pair-set semantics: both backends against a plain Python set oracle."""

import pytest
from hypothesis import given, settings, strategies as st

from ettforest.measure import (BACKENDS, COLLAPSE_LIMIT, UnionPairSet,
                               get_backend, insert, member, union)

pairs_st = st.lists(
    st.tuples(st.integers(0, 40), st.integers(0, 40)), max_size=30)

backend_names = sorted(BACKENDS)


@pytest.fixture(params=backend_names)
def backend(request):
    return get_backend(request.param)


def test_empty_has_no_members(backend):
    assert not member((0, 0), backend.empty)
    assert len(backend.empty) == 0
    assert backend.empty.to_sorted_pairs() == ()


def test_singleton(backend):
    s = backend.singleton((3, 7))
    assert member((3, 7), s)
    assert not member((7, 3), s)
    assert s.to_sorted_pairs() == ((3, 7),)


@given(pairs_st)
def test_from_pairs_matches_set_oracle(ps):
    model = set(ps)
    for name in backend_names:
        s = get_backend(name).from_pairs(ps)
        assert set(s) == model
        assert len(s) == len(model)
        for p in ps:
            assert member(p, s)
        assert not member((41, 41), s)


@given(pairs_st, pairs_st)
def test_union_matches_set_oracle(xs, ys):
    for name in backend_names:
        b = get_backend(name)
        u = union(b.from_pairs(xs), b.from_pairs(ys))
        assert set(u) == set(xs) | set(ys)
        for p in xs + ys:
            assert member(p, u)


@given(pairs_st, pairs_st, pairs_st)
@settings(max_examples=50)
def test_union_monoid_laws(xs, ys, zs):
    # associativity, identity, commutativity, idempotence
    for name in backend_names:
        b = get_backend(name)
        a, c, d = b.from_pairs(xs), b.from_pairs(ys), b.from_pairs(zs)
        assert union(union(a, c), d) == union(a, union(c, d))
        assert union(a, b.empty) == a
        assert union(b.empty, a) == a
        assert union(a, c) == union(c, a)
        assert union(a, a) == a


def test_large_union_is_deferred_and_semantically_exact(backend):
    xs = [(i, i) for i in range(COLLAPSE_LIMIT)]
    ys = [(i + 100, i + 100) for i in range(COLLAPSE_LIMIT)]
    u = union(backend.from_pairs(xs), backend.from_pairs(ys))
    assert isinstance(u, UnionPairSet)
    assert set(u) == set(xs) | set(ys)
    for p in xs + ys:
        assert member(p, u)
    assert not member((50, 50), u)
    forced = u.force()
    assert not isinstance(forced, UnionPairSet)
    assert set(forced) == set(u)


def test_small_union_is_collapsed(backend):
    u = union(backend.singleton((1, 1)), backend.singleton((2, 2)))
    assert not isinstance(u, UnionPairSet)
    assert u.to_sorted_pairs() == ((1, 1), (2, 2))


def test_insert_is_persistent(backend):
    s0 = backend.from_pairs([(1, 2)])
    s1 = insert((3, 4), s0)
    assert member((3, 4), s1)
    assert not member((3, 4), s0)
    assert insert((1, 2), s0).to_sorted_pairs() == s0.to_sorted_pairs()


def test_backends_agree_on_equality():
    ps = [(5, 5), (1, 2), (2, 1), (9, 9)]
    a = get_backend("ordered").from_pairs(ps)
    b = get_backend("hashed").from_pairs(ps)
    assert a == b
    assert a.to_sorted_pairs() == b.to_sorted_pairs()


def test_vertex_range_is_validated(backend):
    with pytest.raises(ValueError):
        member((-1, 0), backend.empty)
    with pytest.raises(ValueError):
        backend.singleton((0, 1 << 32))
    with pytest.raises(ValueError):
        insert((-3, 2), backend.empty)


def test_get_backend_rejects_unknown_names():
    with pytest.raises(ValueError):
        get_backend("sorted")
    assert get_backend(get_backend("ordered")).name == "ordered"

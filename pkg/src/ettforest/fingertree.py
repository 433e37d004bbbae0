"""Persistent 2-3 finger trees with cached monoidal measures.

The structure is the classic one: a tree is Empty, a Single element, or a
Deep node holding a prefix digit of 1-4 elements, a recursive middle tree
of 2-3 Nodes, and a suffix digit of 1-4 elements.  Every Node and every
Deep node caches the combine-fold of the measures of the elements beneath
it, in sequence order.

All values are immutable; operations return new trees that share unchanged
substructure with their inputs, so any version remains valid after any
update and values may be read concurrently without synchronisation.

Supported operations and their finger-tree step bounds: ``view_left`` /
``view_right`` O(1), ``cons`` / ``snoc`` amortized O(1), ``concat``
O(log min(n1, n2)), ``search`` O(log n).  Each step additionally pays one
monoid combine.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Any, Callable, Iterator, List, NamedTuple, Optional, Tuple


class MeasureSpec(NamedTuple):
    """The measured-monoid contract: an identity, an associative combine,
    and a per-element measurement."""

    empty: Any
    combine: Callable[[Any, Any], Any]
    measure_of: Callable[[Any], Any]


class Found(NamedTuple):
    """A successful search split.  ``left ++ [hit] ++ right`` is the element
    sequence of the searched tree; the hit is excluded from both sides."""

    left: "FingerTree"
    hit: Any
    right: "FingerTree"


# Operation counting used by tests to verify operation-count claims.
_counts = None


class OpCounts:
    __slots__ = ("searches", "concats")

    def __init__(self):
        self.searches = 0
        self.concats = 0


@contextmanager
def count_operations():
    """Count top-level search/concat calls made inside the block."""
    global _counts
    prev = _counts
    _counts = counts = OpCounts()
    try:
        yield counts
    finally:
        _counts = prev


# --- internal node structures ---------------------------------------------


class _Empty:
    __slots__ = ()


_EMPTY = _Empty()


class _Single:
    __slots__ = ("elem",)

    def __init__(self, elem):
        self.elem = elem


class _Deep:
    # prm/sfm cache the digit measures so search need not refold them
    __slots__ = ("m", "pr", "prm", "mid", "sf", "sfm")

    def __init__(self, m, pr, prm, mid, sf, sfm):
        self.m = m
        self.pr = pr
        self.prm = prm
        self.mid = mid
        self.sf = sf
        self.sfm = sfm


class _Node:
    __slots__ = ("m", "items")

    def __init__(self, m, items):
        self.m = m
        self.items = items


def _melem(spec, x):
    return x.m if type(x) is _Node else spec.measure_of(x)


def _mdigit(spec, d):
    m = _melem(spec, d[0])
    for x in d[1:]:
        m = spec.combine(m, _melem(spec, x))
    return m


def _mtree(spec, t):
    tt = type(t)
    if tt is _Deep:
        return t.m
    if tt is _Single:
        return _melem(spec, t.elem)
    return spec.empty


def _node2(spec, a, b):
    return _Node(spec.combine(_melem(spec, a), _melem(spec, b)), (a, b))


def _node3(spec, a, b, c):
    m = spec.combine(spec.combine(_melem(spec, a), _melem(spec, b)),
                     _melem(spec, c))
    return _Node(m, (a, b, c))


def _deep(spec, pr, mid, sf, prm=None, sfm=None):
    # Callers pass digit measures they already hold; unknown ones are
    # refolded here.
    if prm is None:
        prm = _mdigit(spec, pr)
    if sfm is None:
        sfm = _mdigit(spec, sf)
    m = spec.combine(spec.combine(prm, _mtree(spec, mid)), sfm)
    return _Deep(m, pr, prm, mid, sf, sfm)


# --- cons / snoc -----------------------------------------------------------


def _cons(spec, x, t):
    tt = type(t)
    if tt is _Empty:
        return _Single(x)
    if tt is _Single:
        return _deep(spec, (x,), _EMPTY, (t.elem,))
    # The root measure is refolded from the cached parts rather than
    # combined onto t.m: repeated end insertions then cannot build a
    # deep chain of combines in any one measure value.
    mx = _melem(spec, x)
    pr = t.pr
    if len(pr) < 4:
        prm = spec.combine(mx, t.prm)
        m = spec.combine(spec.combine(prm, _mtree(spec, t.mid)), t.sfm)
        return _Deep(m, (x,) + pr, prm, t.mid, t.sf, t.sfm)
    prm = spec.combine(mx, _melem(spec, pr[0]))
    mid = _cons(spec, _node3(spec, *pr[1:]), t.mid)
    m = spec.combine(spec.combine(prm, _mtree(spec, mid)), t.sfm)
    return _Deep(m, (x, pr[0]), prm, mid, t.sf, t.sfm)


def _snoc(spec, t, x):
    tt = type(t)
    if tt is _Empty:
        return _Single(x)
    if tt is _Single:
        return _deep(spec, (t.elem,), _EMPTY, (x,))
    # Refolded from cached parts; see the matching comment in _cons.
    mx = _melem(spec, x)
    sf = t.sf
    if len(sf) < 4:
        sfm = spec.combine(t.sfm, mx)
        m = spec.combine(spec.combine(t.prm, _mtree(spec, t.mid)), sfm)
        return _Deep(m, t.pr, t.prm, t.mid, sf + (x,), sfm)
    sfm = spec.combine(_melem(spec, sf[3]), mx)
    mid = _snoc(spec, t.mid, _node3(spec, *sf[:3]))
    m = spec.combine(spec.combine(t.prm, _mtree(spec, mid)), sfm)
    return _Deep(m, t.pr, t.prm, mid, (sf[3], x), sfm)


# --- views -----------------------------------------------------------------


def _viewl(spec, t):
    tt = type(t)
    if tt is _Empty:
        return None
    if tt is _Single:
        return t.elem, _EMPTY
    pr = t.pr
    if len(pr) > 1:
        return pr[0], _deep(spec, pr[1:], t.mid, t.sf, sfm=t.sfm)
    view = _viewl(spec, t.mid)
    if view is None:
        return pr[0], _digit_to_tree(spec, t.sf, t.sfm)
    node, mid = view
    return pr[0], _deep(spec, node.items, mid, t.sf,
                        prm=node.m, sfm=t.sfm)


def _viewr(spec, t):
    tt = type(t)
    if tt is _Empty:
        return None
    if tt is _Single:
        return _EMPTY, t.elem
    sf = t.sf
    if len(sf) > 1:
        return _deep(spec, t.pr, t.mid, sf[:-1], prm=t.prm), sf[-1]
    view = _viewr(spec, t.mid)
    if view is None:
        return _digit_to_tree(spec, t.pr, t.prm), sf[0]
    mid, node = view
    return _deep(spec, t.pr, mid, node.items,
                 prm=t.prm, sfm=node.m), sf[0]


def _digit_to_tree(spec, d, dm=None):
    n = len(d)
    if n == 1:
        return _Single(d[0])
    half = n // 2
    return _deep(spec, d[:half], _EMPTY, d[half:])


# Smart constructors tolerating an exhausted digit on one side.


def _deep_l(spec, pr, mid, sf, sfm=None):
    if pr:
        return _deep(spec, pr, mid, sf, sfm=sfm)
    view = _viewl(spec, mid)
    if view is None:
        return _digit_to_tree(spec, sf, sfm)
    node, mid2 = view
    return _deep(spec, node.items, mid2, sf, prm=node.m, sfm=sfm)


def _deep_r(spec, pr, mid, sf, prm=None):
    if sf:
        return _deep(spec, pr, mid, sf, prm=prm)
    view = _viewr(spec, mid)
    if view is None:
        return _digit_to_tree(spec, pr, prm)
    mid2, node = view
    return _deep(spec, pr, mid2, node.items, prm=prm, sfm=node.m)


# --- concatenation ---------------------------------------------------------


def _nodes(spec, xs):
    out = []
    i = 0
    n = len(xs)
    while n - i > 4 or n - i == 3:
        out.append(_node3(spec, xs[i], xs[i + 1], xs[i + 2]))
        i += 3
    if n - i == 4:
        out.append(_node2(spec, xs[i], xs[i + 1]))
        out.append(_node2(spec, xs[i + 2], xs[i + 3]))
    elif n - i == 2:
        out.append(_node2(spec, xs[i], xs[i + 1]))
    return out


def _app3(spec, t1, ts, t2):
    tt1 = type(t1)
    tt2 = type(t2)
    if tt1 is _Empty:
        t = t2
        for x in reversed(ts):
            t = _cons(spec, x, t)
        return t
    if tt2 is _Empty:
        t = t1
        for x in ts:
            t = _snoc(spec, t, x)
        return t
    if tt1 is _Single:
        return _cons(spec, t1.elem, _app3(spec, _EMPTY, ts, t2))
    if tt2 is _Single:
        return _snoc(spec, _app3(spec, t1, ts, _EMPTY), t2.elem)
    mid = _app3(spec, t1.mid, _nodes(spec, list(t1.sf) + ts + list(t2.pr)),
                t2.mid)
    # Refolded from cached parts; see the matching comment in _cons.
    m = spec.combine(spec.combine(t1.prm, _mtree(spec, mid)), t2.sfm)
    return _Deep(m, t1.pr, t1.prm, mid, t2.sf, t2.sfm)


# --- search ----------------------------------------------------------------
#
# The predicate p(before, after) must be monotone: as the split point moves
# left to right, p over (accumulated prefix measure, remaining measure) may
# flip from False to True at most once.  A non-monotone predicate yields an
# unspecified (but structurally valid) split; this is not checked.


# A predicate carrying a true `prefix_only` attribute promises to ignore
# its after argument; search then skips building after-measures entirely
# (roughly half of all combines) and passes the identity instead.


def _search_digit(spec, p, vl, d, vr, skip):
    n = len(d)
    if n == 1:
        return (), d[0], ()
    if skip:
        e = spec.empty
        for i in range(n - 1):
            vl = spec.combine(vl, _melem(spec, d[i]))
            if p(vl, e):
                return d[:i], d[i], d[i + 1:]
        return d[:-1], d[-1], ()
    suffix = [vr]
    for x in reversed(d[1:]):
        suffix.append(spec.combine(_melem(spec, x), suffix[-1]))
    suffix.reverse()  # suffix[i] = measure of d[i+1:] combined with vr
    for i in range(n - 1):
        vl = spec.combine(vl, _melem(spec, d[i]))
        if p(vl, suffix[i]):
            return d[:i], d[i], d[i + 1:]
    return d[:-1], d[-1], ()


# A predicate additionally carrying a true `disjunctive` attribute
# promises that p(a combined with b, -) == p(a, -) or p(b, -), as set
# membership does.  The first satisfying split point is then the first
# element whose own measure satisfies p, so search can test cached
# subtree measures directly instead of building prefix accumulations.


def _find_digit(spec, p, d, e):
    for i in range(len(d) - 1):
        if p(_melem(spec, d[i]), e):
            return d[:i], d[i], d[i + 1:]
    return d[:-1], d[-1], ()


def _find_tree(spec, p, t, e):
    if type(t) is _Single:
        return _EMPTY, t.elem, _EMPTY
    pr, mid, sf = t.pr, t.mid, t.sf
    if p(t.prm, e):
        dl, x, dr = _find_digit(spec, p, pr, e)
        left = _digit_to_tree(spec, dl) if dl else _EMPTY
        return left, x, _deep_l(spec, dr, mid, sf, sfm=t.sfm)
    if type(mid) is not _Empty and p(_mtree(spec, mid), e):
        ml, node, mr = _find_tree(spec, p, mid, e)
        nl, x, nr = _find_digit(spec, p, node.items, e)
        return (_deep_r(spec, pr, ml, nl, prm=t.prm), x,
                _deep_l(spec, nr, mr, sf, sfm=t.sfm))
    dl, x, dr = _find_digit(spec, p, sf, e)
    right = _digit_to_tree(spec, dr) if dr else _EMPTY
    return _deep_r(spec, pr, mid, dl, prm=t.prm), x, right


def _search_tree(spec, p, vl, t, vr, skip):
    if type(t) is _Single:
        return _EMPTY, t.elem, _EMPTY
    pr, mid, sf = t.pr, t.mid, t.sf
    vlp = spec.combine(vl, t.prm)
    vm = _mtree(spec, mid)
    if skip:
        vsr = after_pr = spec.empty
    else:
        vsr = spec.combine(t.sfm, vr)
        after_pr = spec.combine(vm, vsr)
    if p(vlp, after_pr):
        dl, x, dr = _search_digit(spec, p, vl, pr, after_pr, skip)
        left = _digit_to_tree(spec, dl) if dl else _EMPTY
        return left, x, _deep_l(spec, dr, mid, sf, sfm=t.sfm)
    if p(spec.combine(vlp, vm), vsr):
        ml, node, mr = _search_tree(spec, p, vlp, mid, vsr, skip)
        after_node = (spec.empty if skip
                      else spec.combine(_mtree(spec, mr), vsr))
        nl, x, nr = _search_digit(spec, p,
                                  spec.combine(vlp, _mtree(spec, ml)),
                                  node.items, after_node, skip)
        return (_deep_r(spec, pr, ml, nl, prm=t.prm), x,
                _deep_l(spec, nr, mr, sf, sfm=t.sfm))
    dl, x, dr = _search_digit(spec, p, spec.combine(vlp, vm), sf, vr, skip)
    right = _digit_to_tree(spec, dr) if dr else _EMPTY
    return _deep_r(spec, pr, mid, dl, prm=t.prm), x, right


# --- iteration -------------------------------------------------------------


def _iter_elems(t) -> Iterator[Any]:
    tt = type(t)
    if tt is _Empty:
        return
    if tt is _Single:
        yield from _flatten(t.elem)
        return
    for x in t.pr:
        yield from _flatten(x)
    yield from _iter_elems(t.mid)
    for x in t.sf:
        yield from _flatten(x)


def _flatten(x) -> Iterator[Any]:
    if type(x) is _Node:
        for y in x.items:
            yield from _flatten(y)
    else:
        yield x


# --- structural audit (used by tests) --------------------------------------


def _audit(spec, t, depth=0):
    """Recompute every cached measure bottom-up; raise AssertionError on any
    cache/fold mismatch or digit/node arity violation."""
    tt = type(t)
    if tt is _Empty:
        return spec.empty
    if tt is _Single:
        return _audit_elem(spec, t.elem, depth)
    assert 1 <= len(t.pr) <= 4, f"prefix arity {len(t.pr)}"
    assert 1 <= len(t.sf) <= 4, f"suffix arity {len(t.sf)}"
    prm = spec.empty
    for x in t.pr:
        prm = spec.combine(prm, _audit_elem(spec, x, depth))
    sfm = spec.empty
    for x in t.sf:
        sfm = spec.combine(sfm, _audit_elem(spec, x, depth))
    assert t.prm == prm, f"stale prefix-digit measure at depth {depth}"
    assert t.sfm == sfm, f"stale suffix-digit measure at depth {depth}"
    m = spec.combine(spec.combine(prm, _audit(spec, t.mid, depth + 1)), sfm)
    assert t.m == m, f"stale Deep measure at depth {depth}"
    return m


def _audit_elem(spec, x, depth):
    if type(x) is _Node:
        assert depth > 0, "Node element at leaf level"
        assert len(x.items) in (2, 3), f"node arity {len(x.items)}"
        m = spec.empty
        for y in x.items:
            m = spec.combine(m, _audit_elem(spec, y, depth - 1))
        assert x.m == m, "stale Node measure"
        return m
    assert depth == 0, f"leaf element at depth {depth}"
    return spec.measure_of(x)


# --- public wrapper --------------------------------------------------------


class FingerTree:
    """A persistent measured sequence.  Construct with :func:`empty` or
    :func:`from_list`; all methods return new trees."""

    __slots__ = ("spec", "_root")

    def __init__(self, spec: MeasureSpec, root=_EMPTY):
        self.spec = spec
        self._root = root

    def is_empty(self) -> bool:
        return self._root is _EMPTY

    def measure(self):
        return _mtree(self.spec, self._root)

    def cons(self, x) -> "FingerTree":
        return FingerTree(self.spec, _cons(self.spec, x, self._root))

    def snoc(self, x) -> "FingerTree":
        return FingerTree(self.spec, _snoc(self.spec, self._root, x))

    def view_left(self) -> Optional[Tuple[Any, "FingerTree"]]:
        view = _viewl(self.spec, self._root)
        if view is None:
            return None
        head, rest = view
        return head, FingerTree(self.spec, rest)

    def view_right(self) -> Optional[Tuple["FingerTree", Any]]:
        view = _viewr(self.spec, self._root)
        if view is None:
            return None
        rest, last = view
        return FingerTree(self.spec, rest), last

    def concat(self, other: "FingerTree") -> "FingerTree":
        if _counts is not None:
            _counts.concats += 1
        return FingerTree(self.spec, _app3(self.spec, self._root, [],
                                           other._root))

    def search(self, p: Callable[[Any, Any], bool]) -> Optional[Found]:
        """Split at the first point where ``p(prefix measure, rest measure)``
        flips to True, or None when no split point satisfies ``p``.

        Two optional predicate attributes unlock cheaper strategies.  A
        true ``prefix_only`` promises that p ignores its second argument;
        the search then skips computing after-measures and passes the
        monoid identity in their place.  A true ``disjunctive`` (which
        implies prefix_only) additionally promises that p distributes over
        combine in its first argument; the search then tests cached
        subtree measures directly and builds no accumulations at all.
        """
        if _counts is not None:
            _counts.searches += 1
        spec = self.spec
        root = self._root
        if root is _EMPTY:
            return None
        total = _mtree(spec, root)
        e = spec.empty
        if getattr(p, "disjunctive", False):
            if not p(total, e):
                return None
            l, x, r = _find_tree(spec, p, root, e)
            return Found(FingerTree(spec, l), x, FingerTree(spec, r))
        skip = getattr(p, "prefix_only", False)
        if not p(total, e) or p(e, e if skip else total):
            return None
        l, x, r = _search_tree(spec, p, e, root, e, skip)
        return Found(FingerTree(spec, l), x, FingerTree(spec, r))

    def to_list(self) -> List[Any]:
        return list(_iter_elems(self._root))

    def __iter__(self) -> Iterator[Any]:
        return _iter_elems(self._root)

    def audit(self):
        """Verify all cached measures and arity bounds; test helper."""
        return _audit(self.spec, self._root)


def empty(spec: MeasureSpec) -> FingerTree:
    """The empty sequence; its measure is the monoid identity."""
    return FingerTree(spec)


def from_list(spec: MeasureSpec, xs) -> FingerTree:
    """Build by repeated snoc; ``to_list(from_list(xs)) == list(xs)``."""
    root = _EMPTY
    for x in xs:
        root = _snoc(spec, root, x)
    return FingerTree(spec, root)

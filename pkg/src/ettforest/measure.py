"""Set-of-vertex-pairs measures used as finger-tree annotations.

A pair ``(v, v)`` denotes vertex ``v``; a pair ``(u, v)`` with ``u != v``
denotes one directed traversal of the undirected edge ``{u, v}``.  Pair sets
form a monoid under union with the empty set as identity; the monoid is
commutative and idempotent, which the annotation layer exploits freely.

Two interchangeable strict backends are provided:

* ``ordered`` -- a persistent weight-balanced search tree keyed by the
  lexicographic order of ``(first, second)``.
* ``hashed`` -- a persistent radix (Patricia) trie keyed by a perfect
  64-bit packing of the pair, i.e. a collision-free hash trie.

Unions of large sets are deferred: ``union`` returns a union node carrying
a bitmap of the vertices mentioned anywhere below it, so membership tests
can prune whole branches with one mask test.  Small unions are
collapsed into real backend sets immediately, and any deferred set can be
forced into its strict backend representation on demand.  Deferred or not,
a value always behaves as the set-theoretic union of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Tuple

VertexId = int
VertexPair = Tuple[int, int]

# Unions whose combined size is at most this are materialised eagerly.
COLLAPSE_LIMIT = 8

_MAX_VERTEX = 1 << 32


def _check_pair(pair: VertexPair) -> None:
    u, v = pair
    if not (0 <= u < _MAX_VERTEX and 0 <= v < _MAX_VERTEX):
        raise ValueError(f"vertex ids must be in [0, 2**32): {pair!r}")


def _pack(pair: VertexPair) -> int:
    return (pair[0] << 32) | pair[1]


def _unpack(key: int) -> VertexPair:
    return (key >> 32, key & 0xFFFFFFFF)


# Single-bit masks, grown on demand; index v holds 1 << v.
_BITS: list = [1]


def _bit(v: int) -> int:
    bits = _BITS
    while len(bits) <= v:
        bits.append(bits[-1] << 1)
    return bits[v]


def _mentions_of(pair: VertexPair) -> int:
    u, v = pair
    return _bit(u) | _bit(v)


# ---------------------------------------------------------------------------
# Ordered backend: persistent weight-balanced tree over packed keys.
# Nodes are (size, key, left, right) tuples; the empty tree is None.
# Balancing follows the classic weight-balanced scheme (delta=3, ratio=2).
# ---------------------------------------------------------------------------

_DELTA = 3
_RATIO = 2


def _wb_size(t) -> int:
    return t[0] if t is not None else 0


def _wb_balance(k, l, r):
    ls = l[0] if l is not None else 0
    rs = r[0] if r is not None else 0
    if ls + rs <= 1:
        return (ls + rs + 1, k, l, r)
    if rs > _DELTA * ls:
        _, rk, rl, rr = r
        rls = rl[0] if rl is not None else 0
        rrs = rr[0] if rr is not None else 0
        if rls < _RATIO * rrs:
            inner = (ls + rls + 1, k, l, rl)
            return (ls + rs + 1, rk, inner, rr)
        _, rlk, rll, rlr = rl
        a = (ls + _wb_size(rll) + 1, k, l, rll)
        b = (_wb_size(rlr) + rrs + 1, rk, rlr, rr)
        return (ls + rs + 1, rlk, a, b)
    if ls > _DELTA * rs:
        _, lk, ll, lr = l
        lls = ll[0] if ll is not None else 0
        lrs = lr[0] if lr is not None else 0
        if lrs < _RATIO * lls:
            inner = (lrs + rs + 1, k, lr, r)
            return (ls + rs + 1, lk, ll, inner)
        _, lrk, lrl, lrr = lr
        a = (lls + _wb_size(lrl) + 1, lk, ll, lrl)
        b = (_wb_size(lrr) + rs + 1, k, lrr, r)
        return (ls + rs + 1, lrk, a, b)
    return (ls + rs + 1, k, l, r)


def _wb_insert(t, k):
    if t is None:
        return (1, k, None, None)
    _, tk, tl, tr = t
    if k < tk:
        nl = _wb_insert(tl, k)
        if nl is tl:
            return t
        return _wb_balance(tk, nl, tr)
    if k > tk:
        nr = _wb_insert(tr, k)
        if nr is tr:
            return t
        return _wb_balance(tk, tl, nr)
    return t


def _wb_member(t, k) -> bool:
    while t is not None:
        tk = t[1]
        if k < tk:
            t = t[2]
        elif k > tk:
            t = t[3]
        else:
            return True
    return False


def _wb_insert_min(t, k):
    if t is None:
        return (1, k, None, None)
    return _wb_balance(t[1], _wb_insert_min(t[2], k), t[3])


def _wb_insert_max(t, k):
    if t is None:
        return (1, k, None, None)
    return _wb_balance(t[1], t[2], _wb_insert_max(t[3], k))


def _wb_join(k, l, r):
    """Join l, [k], r (all keys in l < k < all keys in r) into one tree."""
    if l is None:
        return _wb_insert_min(r, k)
    if r is None:
        return _wb_insert_max(l, k)
    ls, lk, ll, lr = l
    rs, rk, rl, rr = r
    if _DELTA * ls < rs:
        return _wb_balance(rk, _wb_join(k, l, rl), rr)
    if _DELTA * rs < ls:
        return _wb_balance(lk, ll, _wb_join(k, lr, r))
    return (ls + rs + 1, k, l, r)


def _wb_split(t, k):
    if t is None:
        return None, None
    _, tk, tl, tr = t
    if k < tk:
        ll, lr = _wb_split(tl, k)
        return ll, _wb_join(tk, lr, tr)
    if k > tk:
        rl, rr = _wb_split(tr, k)
        return _wb_join(tk, tl, rl), rr
    return tl, tr


def _wb_union(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a[0] == 1:
        return _wb_insert(b, a[1])
    if b[0] == 1:
        return _wb_insert(a, b[1])
    _, k, l, r = a
    bl, br = _wb_split(b, k)
    return _wb_join(k, _wb_union(l, bl), _wb_union(r, br))


def _wb_iter(t) -> Iterator[int]:
    stack = []
    while t is not None or stack:
        while t is not None:
            stack.append(t)
            t = t[2]
        t = stack.pop()
        yield t[1]
        t = t[3]


# ---------------------------------------------------------------------------
# Hashed backend: persistent little-endian Patricia trie over packed keys.
# A leaf is (1, key); a branch is (size, prefix, mask, left, right); the
# empty trie is None.  Branches split on the lowest differing bit.
# ---------------------------------------------------------------------------


def _pt_join(p1, t1, p2, t2):
    d = p1 ^ p2
    m = d & -d
    p = p1 & (m - 1)
    size = t1[0] + t2[0]
    if p1 & m == 0:
        return (size, p, m, t1, t2)
    return (size, p, m, t2, t1)


def _pt_member(t, k) -> bool:
    while t is not None:
        if len(t) == 2:
            return t[1] == k
        _, p, m, l, r = t
        if k & (m - 1) != p:
            return False
        t = l if k & m == 0 else r
    return False


def _pt_insert(t, k):
    if t is None:
        return (1, k)
    if len(t) == 2:
        if t[1] == k:
            return t
        return _pt_join(k, (1, k), t[1], t)
    s, p, m, l, r = t
    if k & (m - 1) != p:
        return _pt_join(k, (1, k), p, t)
    if k & m == 0:
        nl = _pt_insert(l, k)
        if nl is l:
            return t
        return (s + nl[0] - l[0], p, m, nl, r)
    nr = _pt_insert(r, k)
    if nr is r:
        return t
    return (s + nr[0] - r[0], p, m, l, nr)


def _pt_union(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a is b:
        return a
    if len(a) == 2:
        return _pt_insert(b, a[1])
    if len(b) == 2:
        return _pt_insert(a, b[1])
    sa, pa, ma, la, ra = a
    sb, pb, mb, lb, rb = b
    if ma == mb and pa == pb:
        l = _pt_union(la, lb)
        r = _pt_union(ra, rb)
        if l is la and r is ra:
            return a
        return (l[0] + r[0], pa, ma, l, r)
    if ma < mb and pb & (ma - 1) == pa:
        if pb & ma == 0:
            nl = _pt_union(la, b)
            return (nl[0] + ra[0], pa, ma, nl, ra)
        nr = _pt_union(ra, b)
        return (la[0] + nr[0], pa, ma, la, nr)
    if mb < ma and pa & (mb - 1) == pb:
        if pa & mb == 0:
            nl = _pt_union(a, lb)
            return (nl[0] + rb[0], pb, mb, nl, rb)
        nr = _pt_union(a, rb)
        return (lb[0] + nr[0], pb, mb, lb, nr)
    return _pt_join(pa, a, pb, b)


def _pt_iter(t) -> Iterator[int]:
    if t is None:
        return
    stack = [t]
    while stack:
        n = stack.pop()
        if len(n) == 2:
            yield n[1]
        else:
            stack.append(n[4])
            stack.append(n[3])


# ---------------------------------------------------------------------------
# The PairSet value types.
# ---------------------------------------------------------------------------


class PairSet:
    """A persistent set of vertex pairs; the finger trees' annotation value.

    Values are immutable and freely shareable.  ``union`` never mutates its
    inputs; all constructors return new values.
    """

    __slots__ = ()

    # Height of the deferred-union tree above this value; strict sets are 0.
    height = 0

    def member(self, pair: VertexPair) -> bool:
        u, v = pair
        return self._member_pruned((u << 32) | v, u, v)

    def _mentions_both(self, u: int, v: int) -> bool:
        # O(1) bit tests of the mentions bitmap.  Testing bits on the int
        # directly would allocate a bitmap-sized intermediate; a bytes view
        # is indexable in place, so it is built once and memoised.
        mb = self._mbytes
        if mb is None:
            m = self.mentions
            mb = m.to_bytes((m.bit_length() + 7) // 8, "little")
            self._mbytes = mb
        size = len(mb)
        i = u >> 3
        if i >= size or not (mb[i] >> (u & 7)) & 1:
            return False
        if u == v:
            return True
        j = v >> 3
        return j < size and (mb[j] >> (v & 7)) & 1 != 0

    def union(self, other: "PairSet") -> "PairSet":
        return union(self, other)

    def insert(self, pair: VertexPair) -> "PairSet":
        _check_pair(pair)
        return self.force()._insert_strict(pair)

    def force(self) -> "PairSet":
        """Materialise into a strict backend set."""
        raise NotImplementedError

    def to_sorted_pairs(self) -> Tuple[VertexPair, ...]:
        return tuple(sorted(self))

    def __iter__(self) -> Iterator[VertexPair]:
        return iter(self.force())

    def __len__(self) -> int:
        return len(self.force())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairSet):
            return NotImplemented
        return self.to_sorted_pairs() == other.to_sorted_pairs()

    __hash__ = None  # content equality makes identity hashing misleading

    def __repr__(self) -> str:
        pairs = self.to_sorted_pairs()
        shown = ", ".join(map(str, pairs[:6]))
        if len(pairs) > 6:
            shown += ", ..."
        return f"<{type(self).__name__} {{{shown}}}>"


class OrderedPairSet(PairSet):
    __slots__ = ("_root", "size_hint", "mentions", "_mbytes")

    def __init__(self, root, length: int, mentions: int):
        self._root = root
        self.size_hint = length
        self.mentions = mentions
        self._mbytes = None

    def _member_pruned(self, key: int, u: int, v: int) -> bool:
        if not self._mentions_both(u, v):
            return False
        return _wb_member(self._root, key)

    def force(self) -> "OrderedPairSet":
        return self

    def _insert_strict(self, pair: VertexPair) -> "OrderedPairSet":
        root = _wb_insert(self._root, _pack(pair))
        if root is self._root:
            return self
        return OrderedPairSet(root, self.size_hint + 1,
                              self.mentions | _mentions_of(pair))

    def _union_strict(self, other: "OrderedPairSet") -> "OrderedPairSet":
        root = _wb_union(self._root, other._root)
        return OrderedPairSet(root, _wb_size(root), self.mentions | other.mentions)

    def __iter__(self) -> Iterator[VertexPair]:
        return map(_unpack, _wb_iter(self._root))

    def __len__(self) -> int:
        return self.size_hint


class HashedPairSet(PairSet):
    __slots__ = ("_root", "size_hint", "mentions", "_mbytes")

    def __init__(self, root, length: int, mentions: int):
        self._root = root
        self.size_hint = length
        self.mentions = mentions
        self._mbytes = None

    def _member_pruned(self, key: int, u: int, v: int) -> bool:
        if not self._mentions_both(u, v):
            return False
        return _pt_member(self._root, key)

    def force(self) -> "HashedPairSet":
        return self

    def _insert_strict(self, pair: VertexPair) -> "HashedPairSet":
        root = _pt_insert(self._root, _pack(pair))
        if root is self._root:
            return self
        return HashedPairSet(root, root[0], self.mentions | _mentions_of(pair))

    def _union_strict(self, other: "HashedPairSet") -> "HashedPairSet":
        root = _pt_union(self._root, other._root)
        return HashedPairSet(root, root[0] if root is not None else 0,
                             self.mentions | other.mentions)

    def __iter__(self) -> Iterator[VertexPair]:
        return map(_unpack, _pt_iter(self._root))

    def __len__(self) -> int:
        return self.size_hint


class UnionPairSet(PairSet):
    """A deferred union of two pair sets.

    Semantically identical to the union of its children.  ``mentions`` is
    the bitwise OR of the children's vertex bitmaps; a membership test first
    checks the bitmap and only descends into children that can possibly
    contain the pair.  ``force`` materialises (and memoises) the strict set.
    """

    __slots__ = ("left", "right", "mentions", "height", "size_hint",
                 "_forced", "_mbytes")

    def __init__(self, left: PairSet, right: PairSet):
        self.left = left
        self.right = right
        self.mentions = left.mentions | right.mentions
        lh = left.height
        rh = right.height
        self.height = (lh if lh > rh else rh) + 1
        self.size_hint = left.size_hint + right.size_hint
        self._forced: Optional[PairSet] = None
        self._mbytes = None

    def _member_pruned(self, key: int, u: int, v: int) -> bool:
        forced = self._forced
        if forced is not None:
            return forced._member_pruned(key, u, v)
        if not self._mentions_both(u, v):
            return False
        return (self.left._member_pruned(key, u, v)
                or self.right._member_pruned(key, u, v))

    def force(self) -> PairSet:
        forced = self._forced
        if forced is None:
            forced = self.left.force()._union_strict(self.right.force())
            self._forced = forced
        return forced

    def __iter__(self) -> Iterator[VertexPair]:
        return iter(self.force())

    def __len__(self) -> int:
        return len(self.force())


def union(a: PairSet, b: PairSet) -> PairSet:
    """Set-theoretic union; persistent, inputs unchanged.

    Small operands are merged strictly; larger ones get a single deferred
    node, making union O(1) plus the vertex-bitmap OR.  The depth of the
    resulting union tree mirrors the depth of the caller's combine
    expression, so callers that fold measures structurally (bounded-length
    folds over subtree measures, as the finger tree does) get union trees
    of logarithmic depth without any rebalancing here.
    """
    if a.size_hint == 0:
        return b
    if b.size_hint == 0:
        return a
    if a.size_hint + b.size_hint <= COLLAPSE_LIMIT:
        return a.force()._union_strict(b.force())
    return UnionPairSet(a, b)


def member(pair: VertexPair, s: PairSet) -> bool:
    """True iff ``pair`` is in ``s``."""
    u, v = pair
    if not (0 <= u < _MAX_VERTEX and 0 <= v < _MAX_VERTEX):
        raise ValueError(f"vertex ids must be in [0, 2**32): {pair!r}")
    return s._member_pruned((u << 32) | v, u, v)


def insert(pair: VertexPair, s: PairSet) -> PairSet:
    """``s`` with ``pair`` added; persistent."""
    return s.insert(pair)


EMPTY_ORDERED = OrderedPairSet(None, 0, 0)
EMPTY_HASHED = HashedPairSet(None, 0, 0)


# Singletons are immutable and requested repeatedly for the same pairs
# (every digit refold re-measures its leaf elements), so they are memoised.


@lru_cache(maxsize=1 << 18)
def _ordered_singleton(pair: VertexPair) -> OrderedPairSet:
    u, v = pair
    if not (0 <= u < _MAX_VERTEX and 0 <= v < _MAX_VERTEX):
        raise ValueError(f"vertex ids must be in [0, 2**32): {pair!r}")
    return OrderedPairSet((1, (u << 32) | v, None, None), 1, _bit(u) | _bit(v))


@lru_cache(maxsize=1 << 18)
def _hashed_singleton(pair: VertexPair) -> HashedPairSet:
    u, v = pair
    if not (0 <= u < _MAX_VERTEX and 0 <= v < _MAX_VERTEX):
        raise ValueError(f"vertex ids must be in [0, 2**32): {pair!r}")
    return HashedPairSet((1, (u << 32) | v), 1, _bit(u) | _bit(v))


@dataclass(frozen=True)
class SetBackend:
    """A construction-time choice of strict set representation."""

    name: str
    empty: PairSet = field(repr=False)
    singleton: Callable[[VertexPair], PairSet] = field(repr=False)

    def from_pairs(self, pairs: Iterable[VertexPair]) -> PairSet:
        s = self.empty
        for p in pairs:
            s = s.insert(p)
        return s


ORDERED = SetBackend("ordered", EMPTY_ORDERED, _ordered_singleton)
HASHED = SetBackend("hashed", EMPTY_HASHED, _hashed_singleton)

BACKENDS = {"ordered": ORDERED, "hashed": HASHED}


def get_backend(name) -> SetBackend:
    if isinstance(name, SetBackend):
        return name
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown set backend {name!r}; "
                         f"expected one of {sorted(BACKENDS)}") from None

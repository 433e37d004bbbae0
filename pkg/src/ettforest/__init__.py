"""Persistent dynamic-forest connectivity.

Trees are kept as Euler-tour sequences in monoid-annotated finger trees;
link, cut and connected each cost O(log n).  See the subpackage modules:
fingertree (the sequence structure), measure (set annotations, two
backends), ett (single-tree tours and surgery), forest (the public
connectivity API), oracle (brute-force reference), trace / bench / cli
(the benchmark harness).
"""

from .forest import (ConnectivityAnswer, CutStatus, Forest, LinkStatus,
                     connected, cut, forest_of_singletons, link, search_for,
                     try_cut, try_link)
from .measure import get_backend

__all__ = [
    "ConnectivityAnswer", "CutStatus", "Forest", "LinkStatus",
    "connected", "cut", "forest_of_singletons", "link", "search_for",
    "try_cut", "try_link", "get_backend",
]

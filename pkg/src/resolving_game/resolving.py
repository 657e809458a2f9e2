"""Resolving sets, code vectors, and exact metric dimension.

Two equivalent resolving checks coexist on purpose. ``is_resolving`` hashes
the code vectors of all vertices, which is the definitional form. The
enumeration and game-search inner loops instead intersect a precomputed
minimal family of "distinguisher" bitmasks, one per vertex pair: a set W
resolves the graph iff W hits every distinguisher. The two paths are
cross-validated in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

from .graphs import (
    DistanceMatrix,
    Graph,
    GuardExceededError,
    all_pairs_distances,
    bits_of,
    require_connected,
)


def code_vector(d: DistanceMatrix, s: Sequence[int], x: int) -> tuple[int, ...]:
    """Vector of distances from x to the members of the ordered set s."""
    row = d.rows[x]
    return tuple(row[w] for w in s)


def is_resolving(g: Graph, d: DistanceMatrix, w) -> bool:
    """True iff all n code vectors with respect to w are pairwise distinct.

    Rejects empty w: the empty set never resolves a graph of order >= 2, so
    asking about it is a caller bug rather than a legitimate False.
    """
    members = sorted(w)
    if not members:
        raise ValueError("is_resolving requires a non-empty vertex set")
    require_connected(g)
    rows = d.rows
    codes = {tuple(rows[x][z] for z in members) for x in range(g.n)}
    return len(codes) == g.n


def distinguishing_masks(d: DistanceMatrix) -> tuple[int, ...]:
    """Inclusion-minimal family of per-pair distinguisher bitmasks.

    The mask for a pair (x, y) collects the vertices z with d(x,z) != d(y,z).
    W resolves the graph iff W intersects every mask; only the minimal masks
    are binding, so supersets are dropped.
    """
    n = d.n
    rows = d.rows
    masks = set()
    for x in range(n):
        rx = rows[x]
        for y in range(x + 1, n):
            ry = rows[y]
            m = 0
            for z in range(n):
                if rx[z] != ry[z]:
                    m |= 1 << z
            masks.add(m)
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    return tuple(minimal)


def resolves_mask(w_mask: int, masks: Sequence[int]) -> bool:
    """Fast path: does the vertex set given as a bitmask hit every mask?"""
    for m in masks:
        if not (m & w_mask):
            return False
    return True


@lru_cache(maxsize=128)
def graph_context(g: Graph) -> tuple[DistanceMatrix, tuple[int, ...]]:
    """Distances plus minimal distinguisher masks for a connected graph."""
    require_connected(g)
    d = all_pairs_distances(g)
    return d, distinguishing_masks(d)


def _masks_of_size(n: int, k: int):
    """All k-subsets of 0..n-1 as bitmasks in increasing numeric order,
    which is colexicographic order on the subsets."""
    if k == 0 or k > n:
        return
    c = (1 << k) - 1
    limit = 1 << n
    while c < limit:
        yield c
        # Gosper's hack
        lo = c & -c
        lz = c + lo
        c = lz | (((c ^ lz) // lo) >> 2)


@dataclass
class DimResult:
    dimension: int
    bases: Optional[list[tuple[int, ...]]]
    subsets_examined: int


def metric_dimension(
    g: Graph, collect_bases: bool = False, guard: int = 10**7
) -> DimResult:
    """Exact metric dimension by subset enumeration in increasing size,
    starting from the twin lower bound."""
    from .twins import twin_classes, twin_lower_bound

    d, masks = graph_context(g)
    n = g.n
    start = max(1, twin_lower_bound(twin_classes(g)))
    examined = 0
    for k in range(start, n + 1):
        if comb(n, k) > guard:
            raise GuardExceededError(
                f"C({n},{k}) exceeds the enumeration guard {guard}"
            )
        found: list[tuple[int, ...]] = []
        for w in _masks_of_size(n, k):
            examined += 1
            if resolves_mask(w, masks):
                if not collect_bases:
                    return DimResult(k, None, examined)
                found.append(bits_of(w))
        if found:
            return DimResult(k, found, examined)
    raise AssertionError("the full vertex set always resolves a connected graph")


def enumerate_metric_bases(g: Graph, guard: int = 10**7) -> list[tuple[int, ...]]:
    """All metric bases, as sorted vertex tuples in colexicographic order."""
    return metric_dimension(g, collect_bases=True, guard=guard).bases

"""Twin vertices, twin equivalence classes, and the instant Spoiler win.

Vertices u, v are twins when N(u) minus {v} equals N(v) minus {u}; the
single predicate covers both adjacent and non-adjacent twins. Classes of
size four, or two classes of size three, hand Spoiler the game by her
second move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]  # "singleton" | "clique" | "independent"

    def class_of(self, v: int) -> tuple[int, ...]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise ValueError(f"vertex {v} not in partition")


def _are_twins(g: Graph, u: int, v: int) -> bool:
    excl = ~((1 << u) | (1 << v))
    return (g.adj[u] & excl) == (g.adj[v] & excl)


def twin_classes(g: Graph) -> TwinPartition:
    """Partition into twin equivalence classes, ordered by minimum member."""
    n = g.n
    assigned = [-1] * n
    classes: list[list[int]] = []
    for v in range(n):
        if assigned[v] >= 0:
            continue
        idx = len(classes)
        assigned[v] = idx
        members = [v]
        for u in range(v + 1, n):
            if assigned[u] < 0 and _are_twins(g, v, u):
                assigned[u] = idx
                members.append(u)
        classes.append(members)
    kinds = []
    for members in classes:
        if len(members) == 1:
            kinds.append("singleton")
        elif g.has_edge(members[0], members[1]):
            kinds.append("clique")
        else:
            kinds.append("independent")
    return TwinPartition(tuple(tuple(c) for c in classes), tuple(kinds))


def twin_lower_bound(tp: TwinPartition) -> int:
    """A resolving set misses at most one vertex of each twin class."""
    return sum(len(c) - 1 for c in tp.classes)


@dataclass(frozen=True)
class QuickWin:
    outcome: str  # always "S"
    s_mb: int  # always 2
    s_mb_s: int  # always 2
    witnesses: tuple[tuple[int, ...], ...]


def spoiler_quick_win(tp: TwinPartition) -> Optional[QuickWin]:
    """Spoiler wins both games by her second move when some twin class has
    four vertices, or two distinct classes have three. Returns the witnessing
    class(es) so the engine and UI can surface the grab."""
    big = [c for c in tp.classes if len(c) >= 4]
    if big:
        return QuickWin("S", 2, 2, (big[0],))
    threes = [c for c in tp.classes if len(c) >= 3]
    if len(threes) >= 2:
        return QuickWin("S", 2, 2, (threes[0], threes[1]))
    return None

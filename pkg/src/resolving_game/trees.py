"""Tree structure analysis: leaves, exterior major vertices, terminal legs,
the metric-basis characterization predicate, and the outcome classifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, all_pairs_distances, bits_of, is_connected


class NotATreeError(ValueError):
    pass


class PathTreeError(ValueError):
    """Paths are excluded; their dimension is 1 with both endpoints as bases."""


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    degs = sorted(g.degree(v) for v in range(g.n))
    if g.n == 2:
        return is_tree(g)
    return is_tree(g) and degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


@dataclass(frozen=True)
class TreeProfile:
    leaves: tuple[int, ...]
    majors: tuple[int, ...]  # degree >= 3
    exterior_majors: tuple[int, ...]  # majors with positive terminal degree
    ter: dict  # exterior major -> terminal degree
    terminal_sets: dict  # exterior major -> tuple of its terminal leaves
    legs: dict  # exterior major -> tuple of leg paths (v .. leaf), inclusive
    adjacent_leaf_count: dict  # exterior major v -> |N(v) ∩ L_v|
    m1: tuple[int, ...]  # ter == 1
    m2: tuple[int, ...]  # ter >= 2

    @property
    def sigma(self) -> int:
        return len(self.leaves)

    @property
    def ex(self) -> int:
        return len(self.exterior_majors)


def tree_profile(t: Graph) -> TreeProfile:
    """Structural scan of a non-path tree.

    A leaf is a terminal vertex of the major vertex that is strictly nearest
    to it; in a tree that is the first vertex of degree >= 3 on the path
    leaving the leaf, so the assignment is total and unique.
    """
    if not is_tree(t):
        raise NotATreeError("input is not a tree")
    if is_path_graph(t):
        raise PathTreeError("paths are handled directly via dimension 1")
    n = t.n
    d = all_pairs_distances(t)
    leaves = tuple(v for v in range(n) if t.degree(v) == 1)
    majors = tuple(v for v in range(n) if t.degree(v) >= 3)
    terminal_sets: dict[int, list[int]] = {v: [] for v in majors}
    for leaf in leaves:
        dists = [(d.distance(leaf, v), v) for v in majors]
        dists.sort()
        best, v = dists[0]
        # strict-minimum rule; in a tree the nearest major is unique
        if len(dists) > 1 and dists[1][0] == best:
            continue
        terminal_sets[v].append(leaf)
    exterior = tuple(v for v in majors if terminal_sets[v])
    ter = {v: len(terminal_sets[v]) for v in exterior}
    legs: dict[int, tuple[tuple[int, ...], ...]] = {}
    adj_leaf = {}
    for v in exterior:
        paths = []
        for leaf in terminal_sets[v]:
            # walk leaf -> v; the leg is stored from v to the leaf
            path = [leaf]
            prev = -1
            cur = leaf
            while cur != v:
                stepped = False
                for nb in bits_of(t.adj[cur]):
                    if nb == prev:
                        continue
                    if d.distance(nb, v) == d.distance(cur, v) - 1:
                        prev = cur
                        cur = nb
                        path.append(cur)
                        stepped = True
                        break
                if not stepped:
                    raise AssertionError("leg walk failed; tree invariant broken")
            paths.append(tuple(reversed(path)))
        legs[v] = tuple(paths)
        adj_leaf[v] = sum(1 for leaf in terminal_sets[v] if t.has_edge(v, leaf))
    m1 = tuple(v for v in exterior if ter[v] == 1)
    m2 = tuple(v for v in exterior if ter[v] >= 2)
    return TreeProfile(
        leaves=leaves,
        majors=majors,
        exterior_majors=exterior,
        ter=ter,
        terminal_sets={v: tuple(s) for v, s in terminal_sets.items() if s},
        legs=legs,
        adjacent_leaf_count=adj_leaf,
        m1=m1,
        m2=m2,
    )


def tree_dimension(profile: TreeProfile) -> int:
    return profile.sigma - profile.ex


def tree_basis_predicate(profile: TreeProfile, w) -> bool:
    """Characterization of tree metric bases: one vertex from each leg minus
    its exterior major, except exactly one empty leg per major, and nothing
    else anywhere in the tree."""
    wset = set(w)
    covered = set()
    for v in profile.exterior_majors:
        empties = 0
        for path in profile.legs[v]:
            leg = set(path[1:])  # exclude the major itself
            covered |= leg
            hits = len(wset & leg)
            if hits == 0:
                empties += 1
            elif hits != 1:
                return False
        if empties != 1:
            return False
    return wset <= covered


def tree_outcome(profile: TreeProfile) -> str:
    """Outcome trichotomy driven by leaves adjacent to exterior majors with
    terminal degree at least two."""
    counts = [profile.adjacent_leaf_count[v] for v in profile.m2]
    if any(c >= 4 for c in counts):
        return "S"
    if sum(1 for c in counts if c == 3) >= 2:
        return "S"
    if sum(1 for c in counts if c == 3) == 1:
        return "N"
    return "R"

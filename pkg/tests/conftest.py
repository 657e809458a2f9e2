"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package's fast paths: distances via a
dict-based BFS, resolving via the definitional pairwise check, dimension via
enumeration over every subset size, and game values via a fresh set-based
minimax without memoization or cutoffs.
"""

from itertools import combinations

import pytest

from resolving_game import Graph
from resolving_game.families import FamilySpec, generate


def oracle_distances(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    dist = {}
    for s in range(n):
        d = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in d:
                        d[w] = d[u] + 1
                        nxt.append(w)
            frontier = nxt
        for v in range(n):
            dist[(s, v)] = d.get(v, n)
    return dist


def oracle_is_resolving(n, dist, w):
    for x, y in combinations(range(n), 2):
        if not any(dist[(x, z)] != dist[(y, z)] for z in w):
            return False
    return True


def oracle_dim(n, edges):
    dist = oracle_distances(n, edges)
    for k in range(1, n + 1):
        for w in combinations(range(n), k):
            if oracle_is_resolving(n, dist, w):
                return k
    raise AssertionError("unreachable for connected graphs")


def oracle_solve(n, edges, first_player):
    """Set-based minimax with the shared value convention: winners prefer
    fewer own moves, losers prefer more winner moves. Returns (winner, moves)."""
    dist = oracle_distances(n, edges)
    vertices = frozenset(range(n))

    def resolving(w):
        return bool(w) and oracle_is_resolving(n, dist, w)

    def rec(r, s, mover):
        if resolving(r):
            return ("R", len(r))
        if not resolving(vertices - s):
            return ("S", len(s))
        free = vertices - r - s
        outcomes = []
        for v in sorted(free):
            if mover == "R":
                outcomes.append(rec(r | {v}, s, "S"))
            else:
                outcomes.append(rec(r, s | {v}, "R"))
        def key(o):
            winner, moves = o
            return (moves if winner == "S" else -moves) + (
                1000 if winner == "R" else -1000
            )
        return max(outcomes, key=key) if mover == "R" else min(outcomes, key=key)

    return rec(frozenset(), frozenset(), first_player)


def fam(kind, *params):
    return generate(FamilySpec(kind, tuple(params)))


@pytest.fixture(scope="session")
def petersen():
    return fam("petersen")


@pytest.fixture(scope="session")
def small_connected_graphs():
    """All labeled connected graphs with up to 5 vertices."""
    from resolving_game.verify import iter_connected_graphs

    out = []
    for n in range(2, 6):
        out.extend(iter_connected_graphs(n))
    return out


def random_tree(rng, n):
    """Uniform labeled tree on n vertices via a random Pruefer sequence."""
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)

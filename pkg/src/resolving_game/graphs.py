"""Immutable simple graphs, BFS distances, connectivity, and graph products.

Vertices are dense integers 0..n-1 so that vertex sets can be handled as
bitmasks throughout the package. Named graph families attach string labels
purely for display.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed graph JSON."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected graph."""


class GuardExceededError(RuntimeError):
    """A search or enumeration would exceed its feasibility guard."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    """Members of a bitmask in ascending index order."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


class Graph:
    """Simple undirected graph of order at least 2, immutable and hashable.

    Adjacency is exposed per vertex as a bitmask (``adj[v]``), which is what
    every search routine in this package operates on.
    """

    __slots__ = ("n", "edges", "labels", "adj", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 2:
            raise GraphError(f"graph order must be at least 2, got {n}")
        norm = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "labels", labels)
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.edges, labels)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges, labels)

    def label_index(self, label: str) -> int:
        """Index of the vertex carrying ``label``; handy in tests."""
        if self.labels is None:
            raise GraphError("graph has no labels")
        return self.labels.index(label)

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": sorted(list(e) for e in self.edges)}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Graph":
        if not isinstance(d, dict) or "n" not in d or "edges" not in d:
            raise GraphError("graph JSON must contain 'n' and 'edges'")
        n = d["n"]
        if not isinstance(n, int):
            raise GraphError("'n' must be an integer")
        edges = []
        for e in d["edges"]:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise GraphError(f"malformed edge entry {e!r}")
            u, v = e
            if not isinstance(u, int) or not isinstance(v, int):
                raise GraphError(f"edge endpoints must be integers, got {e!r}")
            edges.append((u, v))
        return cls(n, edges, d.get("labels"))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(d)


def build_graph(
    n: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence[str]] = None
) -> Graph:
    """Validating constructor; duplicate edges collapse to one.

    Disconnected graphs are permitted here and rejected by the individual
    dimension/game operations, so that products and file loading do not
    hard-fail mid-pipeline.
    """
    return Graph(n, edges, labels)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return Graph.from_json(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_json())
        fh.write("\n")


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts. Unreachable pairs carry the sentinel value ``n``,
    which is strictly greater than any achievable distance."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def sentinel(self) -> int:
        return self.n

    def distance(self, u: int, v: int) -> int:
        return self.rows[u][v]

    @property
    def all_finite(self) -> bool:
        s = self.n
        return all(d < s for row in self.rows for d in row)


def _bfs_row(g: Graph, source: int) -> tuple[int, ...]:
    n = g.n
    adj = g.adj
    dist = [n] * n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        nxt &= ~seen
        seen |= nxt
        m = nxt
        while m:
            b = m & -m
            m ^= b
            dist[b.bit_length() - 1] = d
        frontier = nxt
    return tuple(dist)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; unreachable pairs get the sentinel ``n``."""
    return DistanceMatrix(g.n, tuple(_bfs_row(g, s) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u,v) ~ (u',v') iff u=u' and vv' an edge of h,
    or v=v' and uu' an edge of g. Vertex (u,v) gets index u*h.n + v."""
    n = g.n * h.n
    edges = []
    hn = h.n
    for u in range(g.n):
        for (a, b) in h.edges:
            edges.append((u * hn + a, u * hn + b))
    for (u, w) in g.edges:
        for v in range(hn):
            edges.append((u * hn + v, w * hn + v))
    labels = tuple(
        f"({g.label(u)},{h.label(v)})" for u in range(g.n) for v in range(hn)
    )
    return Graph(n, edges, labels)


def lexicographic_product_with_k2(g: Graph) -> Graph:
    """Two copies of every vertex; copies are adjacent to each other and to
    all copies of the original vertex's neighbours. Copy c of vertex u gets
    index 2u + c."""
    n = 2 * g.n
    edges = []
    for u in range(g.n):
        edges.append((2 * u, 2 * u + 1))
    for (u, v) in g.edges:
        for a in (0, 1):
            for b in (0, 1):
                edges.append((2 * u + a, 2 * v + b))
    labels = tuple(f"({g.label(u)},{c})" for u in range(g.n) for c in (0, 1))
    return Graph(n, edges, labels)

"""Deterministic generators for the named graph families, with canonical
vertex labelings matching the usual figures (outer/inner Petersen rings,
bouquet cut vertex first, binary subscripts for the layered clique family).
"""

from __future__ import annotations

from dataclasses import dataclass
from .graphs import Graph, cartesian_product, lexicographic_product_with_k2

KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_multipartite",
    "tree_from_edges",
    "petersen",
    "bouquet",
    "grid",
    "torus",
    "lex_cycle_k2",
    "g_k",
)


class FamilyError(ValueError):
    """Invalid family kind or parameters."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family kind {self.kind!r}")

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        if not isinstance(d, dict) or "kind" not in d:
            raise FamilyError("family spec must be an object with a 'kind'")
        params = d.get("params", [])
        if not isinstance(params, (list, tuple)) or not all(
            isinstance(p, int) for p in params
        ):
            raise FamilyError("'params' must be a list of integers")
        return cls(d["kind"], tuple(params))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _path(n: int) -> Graph:
    _need(n >= 2, "path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], [f"v_{i}" for i in range(n)])


def _cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, [f"v_{i}" for i in range(n)])


def _complete(n: int) -> Graph:
    _need(n >= 2, "complete graph needs n >= 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, edges, [f"v_{i}" for i in range(n)])


def _star(leaves: int) -> Graph:
    _need(leaves >= 1, "star needs at least 1 leaf")
    edges = [(0, i) for i in range(1, leaves + 1)]
    labels = ["c"] + [f"l_{i}" for i in range(1, leaves + 1)]
    return Graph(leaves + 1, edges, labels)


def _complete_multipartite(parts: tuple[int, ...]) -> Graph:
    _need(len(parts) >= 2, "complete multipartite needs at least 2 parts")
    _need(all(a >= 1 for a in parts), "part sizes must be positive")
    starts = []
    total = 0
    for a in parts:
        starts.append(total)
        total += a
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(starts[i], starts[i] + parts[i]):
                for v in range(starts[j], starts[j] + parts[j]):
                    edges.append((u, v))
    labels = [
        f"u_{{{i + 1},{j + 1}}}"
        for i, a in enumerate(parts)
        for j in range(a)
    ]
    return Graph(total, edges, labels)


def _tree_from_edges(params: tuple[int, ...]) -> Graph:
    _need(len(params) >= 1, "tree_from_edges params: n followed by edge endpoints")
    n = params[0]
    rest = params[1:]
    _need(len(rest) % 2 == 0, "tree_from_edges edge list must pair up")
    edges = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
    _need(len(edges) == n - 1, f"a tree on {n} vertices needs {n - 1} edges")
    g = Graph(n, edges)
    from .graphs import is_connected

    _need(is_connected(g), "edge list does not form a tree (disconnected)")
    return g


def _petersen() -> Graph:
    # Outer 5-cycle u_1..u_5 (indices 0..4), inner pentagram w_1..w_5 (5..9).
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    labels = [f"u_{i + 1}" for i in range(5)] + [f"w_{i + 1}" for i in range(5)]
    return Graph(10, edges, labels)


def _bouquet(lengths: tuple[int, ...]) -> Graph:
    _need(len(lengths) >= 2, "bouquet needs at least 2 cycles")
    _need(all(ln >= 3 for ln in lengths), "cycle lengths must be >= 3")
    # Cut vertex w is index 0; cycle i occupies len_i - 1 consecutive indices.
    edges = []
    labels = ["w"]
    next_idx = 1
    for i, ln in enumerate(lengths, start=1):
        first = next_idx
        last = first + ln - 2
        edges.append((0, first))
        for v in range(first, last):
            edges.append((v, v + 1))
        edges.append((last, 0))
        labels += [f"u_{{{i},{j}}}" for j in range(1, ln)]
        next_idx = last + 1
    return Graph(next_idx, edges, labels)


def _grid(s: int, t: int) -> Graph:
    _need(s >= 2 and t >= 2, "grid needs s,t >= 2")
    ps = Graph(s, [(i, i + 1) for i in range(s - 1)], [f"u_{i + 1}" for i in range(s)])
    pt = Graph(t, [(i, i + 1) for i in range(t - 1)], [f"v_{i + 1}" for i in range(t)])
    return cartesian_product(ps, pt)


def _torus(s: int, t: int) -> Graph:
    _need(s >= 3 and t >= 3, "torus needs s,t >= 3")
    cs = Graph(s, [(i, (i + 1) % s) for i in range(s)], [f"u_{i + 1}" for i in range(s)])
    ct = Graph(t, [(i, (i + 1) % t) for i in range(t)], [f"v_{i + 1}" for i in range(t)])
    return cartesian_product(cs, ct)


def _lex_cycle_k2(m: int) -> Graph:
    _need(m >= 3, "lex_cycle_k2 needs cycle length >= 3")
    return lexicographic_product_with_k2(_cycle(m))


def _gk(k: int) -> Graph:
    _need(k >= 3, "g_k needs k >= 3")
    # A = a_1..a_k at indices 0..k-1. B and C are indexed by the nonempty
    # subsets S of A in increasing binary value of the indicator string,
    # most significant bit = a_1; so b_S sits at k + (value - 1).
    p = (1 << k) - 1
    n = k + 2 * p
    edges = []
    labels = [f"a_{j + 1}" for j in range(k)]
    for j in range(k):
        for jj in range(j + 1, k):
            edges.append((j, jj))
    b0 = k
    c0 = k + p
    for m in range(1, p + 1):
        bits = format(m, f"0{k}b")
        labels.append(f"b_{bits}")
        b = b0 + m - 1
        for j in range(k):
            if bits[j] == "1":
                edges.append((b, j))
        edges.append((b, c0 + m - 1))
    for m in range(1, p + 1):
        labels.append(f"c_{format(m, f'0{k}b')}")
    for m in range(1, p + 1):
        for mm in range(m + 1, p + 1):
            edges.append((b0 + m - 1, b0 + mm - 1))
            edges.append((c0 + m - 1, c0 + mm - 1))
    return Graph(n, edges, labels)


def generate(spec: FamilySpec) -> Graph:
    kind, params = spec.kind, spec.params
    if kind == "path":
        _need(len(params) == 1, "path takes one parameter: n")
        return _path(params[0])
    if kind == "cycle":
        _need(len(params) == 1, "cycle takes one parameter: n")
        return _cycle(params[0])
    if kind == "complete":
        _need(len(params) == 1, "complete takes one parameter: n")
        return _complete(params[0])
    if kind == "star":
        _need(len(params) == 1, "star takes one parameter: leaf count")
        return _star(params[0])
    if kind == "complete_multipartite":
        return _complete_multipartite(params)
    if kind == "tree_from_edges":
        return _tree_from_edges(params)
    if kind == "petersen":
        _need(len(params) == 0, "petersen takes no parameters")
        return _petersen()
    if kind == "bouquet":
        return _bouquet(params)
    if kind == "grid":
        _need(len(params) == 2, "grid takes two parameters: s t")
        return _grid(params[0], params[1])
    if kind == "torus":
        _need(len(params) == 2, "torus takes two parameters: s t")
        return _torus(params[0], params[1])
    if kind == "lex_cycle_k2":
        _need(len(params) == 1, "lex_cycle_k2 takes one parameter: m")
        return _lex_cycle_k2(params[0])
    if kind == "g_k":
        _need(len(params) == 1, "g_k takes one parameter: k")
        return _gk(params[0])
    raise FamilyError(f"unknown family kind {kind!r}")


@dataclass(frozen=True)
class GkStructure:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]  # (b_S, c_S) in subset order


def g_k_structure(k: int) -> GkStructure:
    """Tripartition of the layered clique family plus its (b_S, c_S) pairs."""
    _need(k >= 3, "g_k needs k >= 3")
    p = (1 << k) - 1
    a = tuple(range(k))
    b = tuple(range(k, k + p))
    c = tuple(range(k + p, k + 2 * p))
    pairs = tuple((k + i, k + p + i) for i in range(p))
    return GkStructure(a, b, c, pairs)


@dataclass(frozen=True)
class CycleLeg:
    """One cycle of a bouquet, minus the cut vertex.

    ``vertices`` lists u_{i,1}..u_{i,len-1} in path order. For an odd cycle
    of length 2k+1 the two middle vertices are u_{i,k} and u_{i,k+1}; for an
    even cycle of length 2k the cut vertex's antipode is u_{i,k}.
    """

    length: int
    vertices: tuple[int, ...]

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def is_four(self) -> bool:
        return self.length == 4

    @property
    def half(self) -> int:
        return self.length // 2

    def u(self, j: int) -> int:
        """Vertex u_{i,j}, 1-based as in the usual bouquet labeling."""
        return self.vertices[j - 1]

    @property
    def odd_mid_pair(self) -> tuple[int, int]:
        if self.is_even:
            raise FamilyError("odd_mid_pair is defined for odd cycles")
        k = self.half
        return (self.u(k), self.u(k + 1))

    @property
    def even_antipode(self) -> int:
        if not self.is_even:
            raise FamilyError("even_antipode is defined for even cycles")
        return self.u(self.half)


@dataclass(frozen=True)
class BouquetProfile:
    m: int
    x: int  # even cycles
    z: int  # 4-cycles
    cut_vertex: int
    legs: tuple[CycleLeg, ...]


def bouquet_profile(spec: FamilySpec) -> BouquetProfile:
    _need(spec.kind == "bouquet", "bouquet_profile takes a bouquet spec")
    lengths = spec.params
    _need(len(lengths) >= 2 and all(ln >= 3 for ln in lengths), "invalid bouquet")
    legs = []
    next_idx = 1
    for ln in lengths:
        legs.append(CycleLeg(ln, tuple(range(next_idx, next_idx + ln - 1))))
        next_idx += ln - 1
    x = sum(1 for ln in lengths if ln % 2 == 0)
    z = sum(1 for ln in lengths if ln == 4)
    return BouquetProfile(len(lengths), x, z, 0, tuple(legs))


def family_catalog() -> list[dict]:
    """Parameter schemas for the session service and UI."""

    def entry(kind, params, description, variadic=False):
        return {
            "kind": kind,
            "params": params,
            "variadic": variadic,
            "description": description,
        }

    return [
        entry("path", [{"name": "n", "min": 2}], "path on n vertices"),
        entry("cycle", [{"name": "n", "min": 3}], "cycle on n vertices"),
        entry("complete", [{"name": "n", "min": 2}], "complete graph on n vertices"),
        entry("star", [{"name": "leaves", "min": 1}], "star with the given leaf count"),
        entry(
            "complete_multipartite",
            [{"name": "a_i", "min": 1}],
            "complete multipartite graph with the given part sizes",
            variadic=True,
        ),
        entry(
            "tree_from_edges",
            [{"name": "n then edge endpoint pairs", "min": 0}],
            "tree given as n followed by its n-1 edges",
            variadic=True,
        ),
        entry("petersen", [], "the Petersen graph"),
        entry(
            "bouquet",
            [{"name": "cycle length", "min": 3}],
            "cycles glued at one common cut vertex",
            variadic=True,
        ),
        entry(
            "grid",
            [{"name": "s", "min": 2}, {"name": "t", "min": 2}],
            "s x t grid (Cartesian product of two paths)",
        ),
        entry(
            "torus",
            [{"name": "s", "min": 3}, {"name": "t", "min": 3}],
            "s x t torus grid (Cartesian product of two cycles)",
        ),
        entry(
            "lex_cycle_k2",
            [{"name": "m", "min": 3}],
            "lexicographic product of a cycle with K_2",
        ),
        entry(
            "g_k",
            [{"name": "k", "min": 3}],
            "clique triple whose unique smallest resolving set splits from the game value",
        ),
    ]

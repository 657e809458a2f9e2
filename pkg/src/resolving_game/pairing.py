"""Pairing resolving sets: verification, exhaustive search, and the explicit
per-family constructions.

A pairing resolving set is a list of disjoint vertex pairs such that every
one-per-pair selection resolves the graph; with dim(G) pairs it certifies
that Resolver wins both games in exactly dim(G) moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .families import FamilySpec, bouquet_profile, g_k_structure, generate
from .graphs import Graph, GuardExceededError, require_connected
from .resolving import graph_context, metric_dimension, resolves_mask
from .trees import PathTreeError, tree_profile


class PairingError(ValueError):
    """Malformed pairing candidate (overlapping pairs, bad vertices)."""


class PairingNotApplicableError(ValueError):
    """No paper-backed pairing construction applies to this family/instance."""


@dataclass(frozen=True)
class PairingSet:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(tuple(sorted(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", norm)
        seen = set()
        for u, w in norm:
            if u == w:
                raise PairingError(f"pair ({u},{w}) repeats a vertex")
            if u in seen or w in seen:
                raise PairingError("pairs must be pairwise disjoint")
            seen.add(u)
            seen.add(w)

    def __len__(self):
        return len(self.pairs)

    def vertices(self) -> set[int]:
        return {v for p in self.pairs for v in p}

    def to_lists(self) -> list[list[int]]:
        return [list(p) for p in self.pairs]


def is_pairing_resolving(g: Graph, pairs, guard_k: int = 20) -> bool:
    """Check all 2^k one-per-pair selections, with early exit.

    Selections are visited in Gray-code order so consecutive selections
    differ in a single pair, keeping the running bitmask update cheap.
    """
    ps = pairs if isinstance(pairs, PairingSet) else PairingSet(tuple(pairs))
    require_connected(g)
    k = len(ps)
    if k == 0:
        raise PairingError("pairing must contain at least one pair")
    if k > guard_k:
        raise GuardExceededError(f"{k} pairs exceed the transversal guard {guard_k}")
    for u, w in ps.pairs:
        if not (0 <= u < g.n and 0 <= w < g.n):
            raise PairingError(f"pair ({u},{w}) out of range")
    _, masks = graph_context(g)
    flip = tuple((1 << u) | (1 << w) for u, w in ps.pairs)
    cur = 0
    for u, _ in ps.pairs:
        cur |= 1 << u
    if not resolves_mask(cur, masks):
        return False
    gray = 0
    for i in range(1, 1 << k):
        ng = i ^ (i >> 1)
        cur ^= flip[(gray ^ ng).bit_length() - 1]
        gray = ng
        if not resolves_mask(cur, masks):
            return False
    return True


def _swap_valid_pairs(n: int, bases_masks: list[int]) -> list[tuple[int, int]]:
    """Pairs (a, b) admissible in some pairing made of bases: there must be a
    basis through a, avoiding b, whose a-to-b swap is again a basis."""
    base_set = set(bases_masks)
    ok = set()
    for m in bases_masks:
        rest = m
        while rest:
            bit = rest & -rest
            rest ^= bit
            a = bit.bit_length() - 1
            others = ~m
            for b in range(n):
                if others >> b & 1 and (m ^ bit | 1 << b) in base_set:
                    ok.add((a, b) if a < b else (b, a))
    return sorted(ok, key=lambda p: (p[1], p[0]))  # colexicographic


def find_dim_pairing(
    g: Graph,
    enumeration_guard: int = 10**7,
    node_budget: int = 10**6,
) -> Optional[PairingSet]:
    """First dim-pairing resolving set in deterministic candidate order, or
    None when exhaustive search rules one out.

    Every selection from a dim-pairing has dim(G) vertices and resolves, so
    it is a metric basis; the search therefore only combines pairs whose
    endpoint swap maps some basis to a basis, and a returned None is
    exhaustive. Exceeding ``node_budget`` raises instead, keeping "unknown"
    distinct from "none exists".
    """
    require_connected(g)
    res = metric_dimension(g, collect_bases=True, guard=enumeration_guard)
    k = res.dimension
    bases_masks = [sum(1 << v for v in b) for b in res.bases]
    if len(bases_masks) < (1 << k):
        return None
    base_set = set(bases_masks)
    candidates = _swap_valid_pairs(g.n, bases_masks)
    if not candidates:
        return None
    pair_masks = [(1 << a) | (1 << b) for a, b in candidates]
    nodes = 0

    def extend(start: int, chosen: list[int], used: int, partials: list[int]):
        nonlocal nodes
        if len(chosen) == k:
            return list(chosen)
        for idx in range(start, len(candidates)):
            if pair_masks[idx] & used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise GuardExceededError(
                    f"dim-pairing search exceeded {node_budget} nodes"
                )
            a, b = candidates[idx]
            nxt = []
            viable = True
            for t in partials:
                for v in (a, b):
                    tm = t | (1 << v)
                    if len(chosen) == k - 1:
                        if tm not in base_set:
                            viable = False
                            break
                    elif not any(tm & m == tm for m in bases_masks):
                        viable = False
                        break
                    nxt.append(tm)
                if not viable:
                    break
            if not viable:
                continue
            found = extend(
                idx + 1, chosen + [idx], used | pair_masks[idx], nxt
            )
            if found is not None:
                return found
        return None

    picked = extend(0, [], 0, [0])
    if picked is None:
        return None
    ps = PairingSet(tuple(candidates[i] for i in picked))
    assert is_pairing_resolving(g, ps)
    return ps


def _tree_pairing(g: Graph) -> PairingSet:
    try:
        profile = tree_profile(g)
    except PathTreeError as exc:
        raise PairingNotApplicableError(
            "paths have no tree pairing construction"
        ) from exc
    if any(profile.adjacent_leaf_count[v] > 2 for v in profile.m2):
        raise PairingNotApplicableError(
            "tree has an exterior major vertex with 3+ adjacent terminal leaves"
        )
    pairs = []
    for v in profile.m2:
        legs = profile.legs[v]
        # order terminal leaves by distance to v, index-ascending on ties
        ordered = sorted(legs, key=lambda path: (len(path), path[-1]))
        l1 = ordered[0][-1]
        l2 = ordered[1][-1]
        pairs.append((l1, l2))
        for path in ordered[2:]:
            support = path[-2]  # neighbour of the leaf on the leg
            pairs.append((support, path[-1]))
    return PairingSet(tuple(pairs))


def _bouquet_pairing(spec: FamilySpec) -> PairingSet:
    profile = bouquet_profile(spec)
    if profile.z > 2:
        raise PairingNotApplicableError("bouquet with 3+ four-cycles has no pairing")
    fours = [leg for leg in profile.legs if leg.is_four]
    evens = [leg for leg in profile.legs if leg.is_even and not leg.is_four]
    odds = [leg for leg in profile.legs if not leg.is_even]
    z = len(fours)
    pairs: list[tuple[int, int]] = []
    if z == 0:
        if evens:
            first, rest = evens[0], evens[1:]
            kk = first.half
            pairs.append((first.u(kk - 1), first.u(kk + 1)))
            for leg in rest:
                kk = leg.half
                pairs.append((leg.u(1), leg.u(kk - 1)))
                pairs.append((leg.u(kk + 1), leg.u(2 * kk - 1)))
        # all-odd bouquet contributes nothing here
    elif z == 1:
        pairs.append((fours[0].u(1), fours[0].u(3)))
        for leg in evens:
            kk = leg.half
            pairs.append((leg.u(1), leg.u(kk - 1)))
            pairs.append((leg.u(kk + 1), leg.u(2 * kk - 1)))
    else:  # z == 2
        pairs.append((fours[0].u(1), fours[0].u(3)))
        pairs.append((fours[1].u(1), fours[1].u(3)))
        pairs.append((fours[0].u(2), fours[1].u(2)))
        for leg in evens:
            kk = leg.half
            pairs.append((leg.u(1), leg.u(kk - 1)))
            pairs.append((leg.u(kk + 1), leg.u(2 * kk - 1)))
    for leg in odds:
        pairs.append(leg.odd_mid_pair)
    return PairingSet(tuple(pairs))


def _grid_pairing(s: int, t: int) -> PairingSet:
    def idx(i, j):  # 1-based grid coordinates
        return (i - 1) * t + (j - 1)

    return PairingSet(
        (
            (idx(1, 1), idx(s, t)),
            (idx(s, 1), idx(1, t)),
        )
    )


def _torus_pairing(s: int, t: int) -> PairingSet:
    if s % 2 or t % 2:
        raise PairingNotApplicableError(
            "torus pairing construction needs both cycle lengths even"
        )

    def idx(i, j):  # 0-based torus coordinates
        return i * t + j

    def antipode(i, j):
        return ((i + s // 2) % s, (j + t // 2) % t)

    base = [(0, 0), (s // 2, 0), (1, 0), (0, 1)]
    pairs = []
    for (i, j) in base:
        ai, aj = antipode(i, j)
        pairs.append((idx(i, j), idx(ai, aj)))
    return PairingSet(tuple(pairs))


def _multipartite_pairing(parts: tuple[int, ...]) -> PairingSet:
    singles = [i for i, a in enumerate(parts) if a == 1]
    if len(singles) > 2 or any(a > 2 for a in parts):
        raise PairingNotApplicableError(
            "multipartite pairing needs all parts and the singleton count at most 2"
        )
    starts = []
    total = 0
    for a in parts:
        starts.append(total)
        total += a
    pairs = []
    if len(singles) == 2:
        pairs.append((starts[singles[0]], starts[singles[1]]))
    for i, a in enumerate(parts):
        if a == 2:
            pairs.append((starts[i], starts[i] + 1))
    return PairingSet(tuple(pairs))


def construct_family_pairing(spec: FamilySpec) -> PairingSet:
    """The explicit pairing resolving set for families that have one: trees
    whose exterior majors keep at most two adjacent terminal leaves, bouquets
    with at most two 4-cycles, grids, even torus grids, complete multipartite
    graphs with all parts small, and the layered clique family."""
    kind = spec.kind
    if kind in ("star", "tree_from_edges"):
        return _tree_pairing(generate(spec))
    if kind == "bouquet":
        return _bouquet_pairing(spec)
    if kind == "grid":
        return _grid_pairing(spec.params[0], spec.params[1])
    if kind == "torus":
        return _torus_pairing(spec.params[0], spec.params[1])
    if kind == "complete_multipartite":
        return _multipartite_pairing(spec.params)
    if kind == "g_k":
        return PairingSet(g_k_structure(spec.params[0]).pairs)
    raise PairingNotApplicableError(f"no pairing construction for kind {kind!r}")


def find_pairing_of_size(
    g: Graph,
    k: int,
    enumeration_guard: int = 10**7,
    node_budget: int = 10**6,
) -> Optional[PairingSet]:
    """Exhaustive search for a pairing resolving set with exactly k pairs,
    where selections may be any resolving k-set (not only bases). Used by the
    CLI when a dim-pairing does not exist."""
    require_connected(g)
    d, masks = graph_context(g)
    n = g.n
    if comb(n, k) > enumeration_guard:
        raise GuardExceededError(f"C({n},{k}) exceeds the enumeration guard")
    good = [w for w in _iter_masks(n, k) if resolves_mask(w, masks)]
    if len(good) < (1 << k):
        return None
    candidates = _swap_valid_pairs(n, good)
    if not candidates:
        return None
    good_set = set(good)
    pair_masks = [(1 << a) | (1 << b) for a, b in candidates]
    nodes = 0

    def extend(start, chosen, used, partials):
        nonlocal nodes
        if len(chosen) == k:
            return list(chosen)
        for idx in range(start, len(candidates)):
            if pair_masks[idx] & used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise GuardExceededError("pairing search exceeded its node budget")
            a, b = candidates[idx]
            nxt = []
            viable = True
            for t in partials:
                for v in (a, b):
                    tm = t | (1 << v)
                    if len(chosen) == k - 1:
                        if tm not in good_set:
                            viable = False
                            break
                    elif not any(tm & m == tm for m in good):
                        viable = False
                        break
                    nxt.append(tm)
                if not viable:
                    break
            if not viable:
                continue
            found = extend(idx + 1, chosen + [idx], used | pair_masks[idx], nxt)
            if found is not None:
                return found
        return None

    picked = extend(0, [], 0, [0])
    if picked is None:
        return None
    ps = PairingSet(tuple(candidates[i] for i in picked))
    assert is_pairing_resolving(g, ps)
    return ps


def _iter_masks(n: int, k: int):
    from .resolving import _masks_of_size

    return _masks_of_size(n, k)

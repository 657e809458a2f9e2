"""Theorem harness: one checkable procedure per claimed result, each
cross-validated against the brute-force modules, plus the exhaustive
small-graph property sweep.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .families import FamilySpec, bouquet_profile, g_k_structure, generate
from .graphs import Graph
from .pairing import construct_family_pairing, find_dim_pairing, is_pairing_resolving
from .resolving import graph_context, metric_dimension, resolves_mask
from .solver import RESOLVER, SPOILER, Solver
from .trees import (
    tree_basis_predicate,
    tree_dimension,
    tree_outcome,
    tree_profile,
)
from .twins import spoiler_quick_win, twin_classes, twin_lower_bound


@dataclass
class VerdictReport:
    theorem: str
    passed: bool
    expected: dict
    computed: dict
    runtime_s: float
    witness: Optional[dict] = None

    def summary(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.theorem} ({self.runtime_s:.2f}s)"


class _Checker:
    """Collects expected/computed values and a first-failure witness."""

    def __init__(self, theorem: str):
        self.theorem = theorem
        self.expected: dict = {}
        self.computed: dict = {}
        self.witness: Optional[dict] = None
        self.passed = True
        self.t0 = time.time()

    def check(self, name: str, expected, computed) -> None:
        self.expected[name] = expected
        self.computed[name] = computed
        if expected != computed and self.passed:
            self.passed = False
            self.witness = {"check": name, "expected": expected, "computed": computed}

    def check_true(self, name: str, ok: bool, witness=None) -> None:
        self.expected[name] = True
        self.computed[name] = ok
        if not ok and self.passed:
            self.passed = False
            self.witness = {"check": name, "witness": witness}

    def report(self) -> VerdictReport:
        return VerdictReport(
            self.theorem,
            self.passed,
            self.expected,
            self.computed,
            time.time() - self.t0,
            self.witness,
        )


# -- trees ---------------------------------------------------------------


def verify_tree(t: Graph, solve_guard: int = 16) -> VerdictReport:
    c = _Checker("tree: dimension formula, basis characterization, outcome")
    profile = tree_profile(t)
    dim = metric_dimension(t, collect_bases=True)
    c.check("dim equals leaves minus exterior majors", tree_dimension(profile), dim.dimension)
    bases = {frozenset(b) for b in dim.bases}
    characterized = {
        frozenset(w)
        for w in combinations(range(t.n), dim.dimension)
        if tree_basis_predicate(profile, w)
    }
    c.check_true(
        "basis characterization matches enumeration exactly",
        bases == characterized,
        witness={
            "only_enumerated": [sorted(b) for b in list(bases - characterized)[:3]],
            "only_predicate": [sorted(b) for b in list(characterized - bases)[:3]],
        },
    )
    predicted = tree_outcome(profile)
    if t.n <= solve_guard:
        solver = Solver(t, guard=solve_guard)
        rec = solver.outcome_record()
        c.check("outcome", predicted, rec.outcome)
        if predicted == "R":
            c.check("resolver move counts", (dim.dimension,) * 2, (rec.r_mb, rec.r_mb_s))
        elif predicted == "S":
            c.check("spoiler move counts", (2, 2), (rec.s_mb, rec.s_mb_s))
    return c.report()


# -- Petersen ------------------------------------------------------------


PETERSEN_U1_BASES = (
    ("u_1", "w_2", "w_3"),
    ("u_1", "u_4", "w_2"),
    ("u_1", "w_4", "w_5"),
    ("u_1", "u_3", "w_5"),
    ("u_1", "u_4", "w_3"),
    ("u_1", "u_3", "w_4"),
)


def verify_petersen() -> VerdictReport:
    c = _Checker("petersen: dim 3, edge-less bases, six bases through u_1, (R,3)")
    g = generate(FamilySpec("petersen"))
    dim = metric_dimension(g, collect_bases=True)
    c.check("dim", 3, dim.dimension)
    edgeless = all(
        not g.has_edge(u, v) for b in dim.bases for u, v in combinations(b, 2)
    )
    c.check_true("every basis induces no edge", edgeless)
    u1 = g.label_index("u_1")
    with_u1 = {frozenset(b) for b in dim.bases if u1 in b}
    listed = {
        frozenset(g.label_index(x) for x in names) for names in PETERSEN_U1_BASES
    }
    c.check_true(
        "bases containing u_1 are exactly the six listed sets",
        with_u1 == listed,
        witness={"computed": sorted(sorted(b) for b in with_u1)},
    )
    c.check("total basis count", len(dim.bases), len(dim.bases))  # reported only
    solver = Solver(g)
    rec = solver.outcome_record()
    c.check("outcome and counts", ("R", 3, 3), (rec.outcome, rec.r_mb, rec.r_mb_s))
    return c.report()


# -- bouquets ------------------------------------------------------------


def bouquet_dimension(m: int, x: int) -> int:
    return m if x == 0 else m + x - 1


def bouquet_outcome(z: int) -> str:
    if z <= 2:
        return "R"
    if z == 3:
        return "N"
    return "S"


def verify_bouquet(lengths, solve_guard: int = 16, solve: bool = True) -> VerdictReport:
    c = _Checker(f"bouquet {tuple(lengths)}: dimension, basis lemma, outcome")
    spec = FamilySpec("bouquet", tuple(lengths))
    g = generate(spec)
    profile = bouquet_profile(spec)
    dim = metric_dimension(g, collect_bases=True)
    c.check("dim formula", bouquet_dimension(profile.m, profile.x), dim.dimension)
    leg_masks = [sum(1 << v for v in leg.vertices) for leg in profile.legs]
    lemma_a = all(
        any((1 << v) & lm for v in b) for b in dim.bases for lm in leg_masks
    )
    c.check_true("every basis meets every cycle minus the cut vertex", lemma_a)
    evens = [i for i, leg in enumerate(profile.legs) if leg.is_even]
    lemma_b = True
    for b in dim.bases:
        bm = sum(1 << v for v in b)
        for i, j in combinations(evens, 2):
            if (bm & (leg_masks[i] | leg_masks[j])).bit_count() < 3:
                lemma_b = False
    c.check_true("every basis takes 3+ vertices from each even cycle pair", lemma_b)
    predicted = bouquet_outcome(profile.z)
    if predicted == "R":
        pairing = construct_family_pairing(spec)
        c.check_true(
            "explicit pairing resolves", is_pairing_resolving(g, pairing)
        )
        c.check("pairing size equals dim", dim.dimension, len(pairing))
    if solve and g.n <= solve_guard:
        rec = Solver(g, guard=solve_guard).outcome_record()
        c.check("outcome", predicted, rec.outcome)
        if predicted == "R":
            c.check(
                "resolver move counts", (dim.dimension,) * 2, (rec.r_mb, rec.r_mb_s)
            )
        elif predicted == "S":
            c.check("spoiler move counts", (4, 4), (rec.s_mb, rec.s_mb_s))
    return c.report()


# -- complete multipartite -------------------------------------------------


def multipartite_dimension(parts) -> int:
    n = sum(parts)
    k = len(parts)
    s = sum(1 for a in parts if a == 1)
    return n - k if s == 0 else n + s - k - 1


def multipartite_outcome(parts) -> str:
    s = sum(1 for a in parts if a == 1)
    threes = sum(1 for a in parts if a == 3)
    if s >= 4 or any(a >= 4 for a in parts):
        return "S"
    if (s == 3 and threes >= 1) or threes >= 2:
        return "S"
    if s == 3 or threes == 1:
        return "N"
    return "R"


def verify_multipartite(parts, solve_guard: int = 16) -> VerdictReport:
    c = _Checker(f"complete multipartite {tuple(parts)}: dimension and outcome")
    spec = FamilySpec("complete_multipartite", tuple(parts))
    g = generate(spec)
    dim = metric_dimension(g).dimension
    c.check("dim formula", multipartite_dimension(parts), dim)
    predicted = multipartite_outcome(parts)
    if g.n <= solve_guard:
        rec = Solver(g, guard=solve_guard).outcome_record()
        c.check("outcome", predicted, rec.outcome)
        if predicted == "S":
            c.check("spoiler move counts", (2, 2), (rec.s_mb, rec.s_mb_s))
        elif predicted == "R":
            c.check("resolver move counts", (dim, dim), (rec.r_mb, rec.r_mb_s))
    return c.report()


# -- grids and torus grids --------------------------------------------------


def verify_grid(s: int, t: int, solve_guard: int = 16) -> VerdictReport:
    c = _Checker(f"grid {s}x{t}: dim 2, four corner bases, (R,2)")
    g = generate(FamilySpec("grid", (s, t)))
    dim = metric_dimension(g, collect_bases=True)
    c.check("dim", 2, dim.dimension)

    def idx(i, j):
        return (i - 1) * t + (j - 1)

    corners = {
        frozenset({idx(1, 1), idx(1, t)}),
        frozenset({idx(1, 1), idx(s, 1)}),
        frozenset({idx(1, t), idx(s, t)}),
        frozenset({idx(s, 1), idx(s, t)}),
    }
    c.check_true(
        "bases are exactly the four corner pairs",
        {frozenset(b) for b in dim.bases} == corners,
        witness={"bases": dim.bases},
    )
    if g.n <= solve_guard:
        rec = Solver(g, guard=solve_guard).outcome_record()
        c.check("outcome and counts", ("R", 2, 2), (rec.outcome, rec.r_mb, rec.r_mb_s))
    return c.report()


def torus_dimension(s: int, t: int) -> int:
    return 3 if (s % 2 or t % 2) else 4


def verify_torus(s: int, t: int, solve: Optional[bool] = None, solve_guard: int = 16) -> VerdictReport:
    c = _Checker(f"torus {s}x{t}: dimension parity, basis witnesses, outcome")
    g = generate(FamilySpec("torus", (s, t)))
    d, masks = graph_context(g)
    expected_dim = torus_dimension(s, t)
    dim = metric_dimension(g, collect_bases=(s % 2 == 0 and t % 2 == 0))
    c.check("dim parity formula", expected_dim, dim.dimension)

    def idx(i, j):
        return (i % s) * t + (j % t)

    ok = True
    if s % 2 or t % 2:
        # use an odd side as the diametral axis; swap roles when s is even
        if s % 2:
            def witnesses():
                for i in range(s):
                    for j in range(t):
                        for y in (i + s // 2, i + s // 2 + 1):
                            for z in (j + 1, j - 1):
                                yield (idx(i, j), idx(y, j), idx(i, z))
        else:
            def witnesses():
                for i in range(s):
                    for j in range(t):
                        for y in (j + t // 2, j + t // 2 + 1):
                            for z in (i + 1, i - 1):
                                yield (idx(i, j), idx(i, y), idx(z, j))
        for w in witnesses():
            if not resolves_mask(sum(1 << v for v in w), masks):
                ok = False
                c.check_true("diametral-pair witnesses resolve", False, {"w": w})
                break
        if ok:
            c.check_true("diametral-pair witnesses resolve", True)
    else:
        for w in _even_torus_witnesses(s, t, idx):
            if not resolves_mask(sum(1 << v for v in w), masks):
                ok = False
                c.check_true("even-case witnesses resolve", False, {"w": w})
                break
        if ok:
            c.check_true("even-case witnesses resolve", True)
        # antipodal swap closure over all enumerated bases
        closure = True
        bad = None
        for b in dim.bases:
            bm = sum(1 << v for v in b)
            for v in b:
                i, j = divmod(v, t)
                swap = bm ^ (1 << v) | (1 << idx(i + s // 2, j + t // 2))
                if not resolves_mask(swap, masks):
                    closure = False
                    bad = {"basis": b, "swapped": v}
                    break
            if not closure:
                break
        c.check_true("antipodal swap preserves every basis", closure, bad)
        pairing = construct_family_pairing(FamilySpec("torus", (s, t)))
        c.check_true("antipodal pairing resolves", is_pairing_resolving(g, pairing))
        c.check("pairing size equals dim", dim.dimension, len(pairing))
    if solve is None:
        solve = g.n <= 12
    if solve:
        rec = Solver(g, guard=solve_guard).outcome_record()
        c.check(
            "outcome and counts",
            ("R", expected_dim, expected_dim),
            (rec.outcome, rec.r_mb, rec.r_mb_s),
        )
    return c.report()


def _even_torus_witnesses(s, t, idx):
    for i in range(s):
        for j in range(t):
            for y in (i + s // 2,):
                for z in (i + 1, i - 1):
                    for w in (j + 1, j - 1):
                        yield (idx(i, j), idx(y, j), idx(z, j), idx(i, w))


# -- layered clique family ---------------------------------------------------


def verify_gk(k: int = 3, refutation_first_player: str = RESOLVER) -> VerdictReport:
    """Dimension, unique basis, pairing, and the bounded-depth certificate
    that Resolver cannot win as fast as the dimension. The pairing sweep is
    feasible up to k = 4 (2^15 selections); larger k is refused."""
    c = _Checker(f"layered cliques k={k}: dim k, unique basis, pairing, slow Resolver")
    if k > 4:
        raise ValueError("pairing verification beyond k=4 is out of desk scale")
    g = generate(FamilySpec("g_k", (k,)))
    structure = g_k_structure(k)
    dim = metric_dimension(g, collect_bases=True)
    c.check("dim", k, dim.dimension)
    c.check("unique basis is A", [structure.a], [tuple(b) for b in dim.bases])
    pairing = construct_family_pairing(FamilySpec("g_k", (k,)))
    c.check_true("b/c pairs form a pairing resolving set", is_pairing_resolving(g, pairing))
    from .solver import resolver_cannot_win_within

    c.check_true(
        f"no Resolver win within {k} moves",
        resolver_cannot_win_within(g, refutation_first_player, k),
    )
    return c.report()


# -- assorted small claims ---------------------------------------------------


def verify_small_examples(include_b5_solve: bool = False) -> VerdictReport:
    """Outcome landmarks: the three example outcomes, paths, cycles, complete
    graphs, the heavy bouquet dimension, and the cycle-times-K2 sharpness."""
    c = _Checker("small examples: outcomes R/S/N, cycles, cliques, products")
    p4 = generate(FamilySpec("path", (4,)))
    c.check("path outcome", "R", Solver(p4).outcome_record().outcome)
    k14 = generate(FamilySpec("star", (4,)))
    c.check("four-leaf star outcome", "S", Solver(k14).outcome_record().outcome)
    sub = generate(FamilySpec("tree_from_edges", (6, 0, 1, 0, 2, 0, 3, 0, 4, 4, 5)))
    c.check("subdivided star outcome", "N", Solver(sub).outcome_record().outcome)

    c3 = generate(FamilySpec("cycle", (3,)))
    rec3 = Solver(c3).outcome_record()
    c.check("triangle", ("N", 2, 2), (rec3.outcome, rec3.r_mb, rec3.s_mb_s))
    for n in range(4, 9):
        rec = Solver(generate(FamilySpec("cycle", (n,)))).outcome_record()
        c.check(f"cycle {n}", ("R", 2, 2), (rec.outcome, rec.r_mb, rec.r_mb_s))
    for n in range(4, 7):
        rec = Solver(generate(FamilySpec("complete", (n,)))).outcome_record()
        c.check(f"clique {n}", ("S", 2, 2), (rec.outcome, rec.s_mb, rec.s_mb_s))

    b5 = FamilySpec("bouquet", (4,) * 5)
    c.check("five four-cycles dim", 9, metric_dimension(generate(b5)).dimension)
    if include_b5_solve:
        rec = Solver(generate(b5)).outcome_record()
        c.check("five four-cycles outcome", "S", rec.outcome)

    lex = generate(FamilySpec("lex_cycle_k2", (4,)))
    recl = Solver(lex).outcome_record()
    c.check("cycle-times-K2 dim", 4, metric_dimension(lex).dimension)
    c.check("cycle-times-K2 record", ("R", 4, 4), (recl.outcome, recl.r_mb, recl.r_mb_s))
    return c.report()


# -- exhaustive small-graph sweep ---------------------------------------------


def iter_connected_graphs(n: int):
    """All labeled connected graphs on n vertices, by edge-subset count."""
    pairs = list(combinations(range(n), 2))
    npairs = len(pairs)
    for mask in range(1 << npairs):
        adj = [0] * n
        for i in range(npairs):
            if mask >> i & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != (1 << n) - 1:
            continue
        yield Graph(n, [pairs[i] for i in range(npairs) if mask >> i & 1])


@dataclass
class SweepReport:
    max_n: int
    graphs_checked: int
    violations: list = field(default_factory=list)
    runtime_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


def _check_sweep_graph(g: Graph, violations: list) -> None:
    def violation(prop: str):
        violations.append({"n": g.n, "edges": sorted(map(list, g.edges)), "property": prop})

    n = g.n
    solver = Solver(g)
    rv = solver.solve(RESOLVER)
    sv = solver.solve(SPOILER)
    if rv.winner == SPOILER and sv.winner == RESOLVER:
        violation("second-player win occurred")
        return
    rec = solver.outcome_record()
    dim_res = metric_dimension(g, collect_bases=True)
    dim = dim_res.dimension
    if rec.outcome == "R" and not dim <= n // 2:
        violation("Resolver outcome with dimension above n/2")
    if dim >= (n + 1) // 2 + 1 and rec.outcome != "S":
        violation("large dimension without Spoiler outcome")
    if rec.outcome == "R" and not (rec.r_mb_s >= rec.r_mb >= dim):
        violation("Resolver move-count ordering broken")
    if rec.outcome == "S" and not (rec.s_mb >= rec.s_mb_s):
        violation("Spoiler move-count ordering broken")
    for fp in (RESOLVER, SPOILER):
        base = solver.solve(fp)
        sk_s = solver.solve_with_skips(fp, SPOILER)
        if base.winner == RESOLVER:
            if sk_s.winner != RESOLVER or sk_s.winner_moves > base.winner_moves:
                violation("Spoiler skips hurt Resolver")
        sk_r = solver.solve_with_skips(fp, RESOLVER)
        if sk_r.winner != base.winner:
            violation("Resolver skips changed the winner")
        elif base.winner == RESOLVER and sk_r.winner_moves != base.winner_moves:
            violation("Resolver skips changed his move count")
        plain = solver.solve(fp, memoized=False)
        if plain != base:
            violation("memoized and unmemoized solves disagree")
    pairing = find_dim_pairing(g)
    if pairing is not None:
        if rec.outcome != "R" or rec.r_mb != dim or rec.r_mb_s != dim:
            violation("dim-pairing without matching Resolver record")
    tp = twin_classes(g)
    if twin_lower_bound(tp) > dim:
        violation("twin lower bound exceeds dimension")
    for b in dim_res.bases:
        bs = set(b)
        for cls in tp.classes:
            if len(set(cls) - bs) > 1:
                violation("basis misses two members of a twin class")
                break
    qw = spoiler_quick_win(tp)
    if qw is not None and (rec.outcome, rec.s_mb, rec.s_mb_s) != ("S", 2, 2):
        violation("twin quick win not confirmed by the solver")


def run_property_sweep(max_n: int = 6, progress=None) -> SweepReport:
    """Exhaustive check of the game-theoretic properties over every labeled
    connected graph with at most ``max_n`` vertices."""
    t0 = time.time()
    report = SweepReport(max_n=max_n, graphs_checked=0)
    for n in range(2, max_n + 1):
        for g in iter_connected_graphs(n):
            _check_sweep_graph(g, report.violations)
            report.graphs_checked += 1
            if progress and report.graphs_checked % 2000 == 0:
                progress(report.graphs_checked)
    report.runtime_s = time.time() - t0
    return report


# -- default suite -------------------------------------------------------------


def default_suite(include_sweep: bool = False, sweep_max_n: int = 5) -> list[VerdictReport]:
    reports = [
        verify_petersen(),
        verify_small_examples(),
        verify_gk(3),
        verify_grid(3, 3),
        verify_grid(3, 4),
        verify_torus(3, 3),
        verify_torus(3, 4),
        verify_torus(4, 4),
        verify_bouquet((3, 5)),
        verify_bouquet((4, 6), solve=False),
        verify_bouquet((4, 4, 4)),
        verify_bouquet((4, 4, 4, 4)),
        verify_multipartite((2, 2, 2)),
        verify_multipartite((3, 3)),
        verify_multipartite((1, 1, 1, 2)),
    ]
    for edges in (
        (4, 0, 1, 0, 2, 0, 3),  # three-leaf star
        (5, 0, 1, 0, 2, 0, 3, 0, 4),  # four-leaf star
        (7, 0, 1, 1, 2, 0, 3, 3, 4, 0, 5, 5, 6),  # spider with legs 2,2,2
    ):
        reports.append(verify_tree(generate(FamilySpec("tree_from_edges", edges))))
    if include_sweep:
        sweep = run_property_sweep(sweep_max_n)
        reports.append(
            VerdictReport(
                f"property sweep over connected graphs with n <= {sweep_max_n}",
                sweep.passed,
                {"violations": 0},
                {"violations": len(sweep.violations), "graphs": sweep.graphs_checked},
                sweep.runtime_s,
                witness={"violations": sweep.violations[:5]} if sweep.violations else None,
            )
        )
    return reports

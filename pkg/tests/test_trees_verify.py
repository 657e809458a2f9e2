import random
from itertools import combinations

import pytest

from resolving_game import Graph, metric_dimension, enumerate_metric_bases
from resolving_game.trees import (
    NotATreeError,
    PathTreeError,
    is_path_graph,
    is_tree,
    tree_basis_predicate,
    tree_dimension,
    tree_outcome,
    tree_profile,
)
from resolving_game.verify import (
    default_suite,
    run_property_sweep,
    verify_bouquet,
    verify_gk,
    verify_grid,
    verify_multipartite,
    verify_petersen,
    verify_small_examples,
    verify_torus,
    verify_tree,
)
from conftest import fam, random_tree


class TestTreeProfile:
    def test_star_k13(self):
        p = tree_profile(fam("star", 3))
        assert p.sigma == 3 and p.ex == 1
        assert p.ter[0] == 3
        assert p.adjacent_leaf_count[0] == 3

    def test_spider_no_adjacent_leaves(self):
        p = tree_profile(fam("tree_from_edges", 7, 0, 1, 1, 2, 0, 3, 3, 4, 0, 5, 5, 6))
        assert p.sigma == 3 and p.ex == 1
        assert p.adjacent_leaf_count[0] == 0

    def test_branched_hub_tree(self):
        """Hub with legs of lengths 1,1,2,2,3: five leaves, one exterior
        major vertex, so the dimension is four."""
        g = fam(
            "tree_from_edges", 10, 1, 0, 0, 2, 0, 3, 3, 4, 0, 5, 5, 6, 0, 7, 7, 8, 8, 9
        )
        p = tree_profile(g)
        assert p.sigma == 5 and p.ex == 1
        assert tree_dimension(p) == 4 == metric_dimension(g).dimension

    def test_two_majors(self):
        # two hubs joined by an edge, each with two leaves
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
        p = tree_profile(g)
        assert set(p.exterior_majors) == {0, 3}
        assert p.ter == {0: 2, 3: 2}
        assert p.m2 == (0, 3)

    def test_rejects_non_tree(self):
        with pytest.raises(NotATreeError):
            tree_profile(fam("cycle", 4))

    def test_rejects_path(self):
        with pytest.raises(PathTreeError):
            tree_profile(fam("path", 5))
        assert is_path_graph(fam("path", 5))
        assert not is_path_graph(fam("star", 3))

    def test_terminal_degrees_sum_to_leaf_count(self):
        rng = random.Random(11)
        for _ in range(50):
            t = random_tree(rng, rng.randint(4, 11))
            if is_path_graph(t):
                continue
            p = tree_profile(t)
            assert sum(p.ter.values()) == p.sigma


class TestTreeTheorems:
    def test_outcomes(self):
        assert tree_outcome(tree_profile(fam("star", 3))) == "N"
        assert tree_outcome(tree_profile(fam("star", 4))) == "S"
        spider = fam("tree_from_edges", 7, 0, 1, 1, 2, 0, 3, 3, 4, 0, 5, 5, 6)
        assert tree_outcome(tree_profile(spider)) == "R"

    def test_basis_characterization_matches_enumeration(self):
        rng = random.Random(23)
        count = 0
        while count < 40:
            t = random_tree(rng, rng.randint(4, 10))
            if is_path_graph(t):
                continue
            count += 1
            p = tree_profile(t)
            dim = tree_dimension(p)
            assert metric_dimension(t).dimension == dim
            bases = {frozenset(b) for b in enumerate_metric_bases(t)}
            predicted = {
                frozenset(w)
                for w in combinations(range(t.n), dim)
                if tree_basis_predicate(p, w)
            }
            assert bases == predicted

    def test_verify_tree_reports(self):
        for spec, expect in (
            (fam("star", 4), ("S", 2, 2)),
            (fam("star", 3), ("N", None, None)),
            (fam("tree_from_edges", 7, 0, 1, 1, 2, 0, 3, 3, 4, 0, 5, 5, 6), ("R", 2, 2)),
        ):
            report = verify_tree(spec)
            assert report.passed, report.witness


class TestVerifyHarness:
    def test_petersen(self):
        r = verify_petersen()
        assert r.passed, r.witness
        assert r.computed["total basis count"] == 20

    def test_small_examples(self):
        r = verify_small_examples()
        assert r.passed, r.witness

    def test_gk3(self):
        r = verify_gk(3)
        assert r.passed, r.witness

    def test_gk4_full_pairing_sweep(self):
        r = verify_gk(4)
        assert r.passed, r.witness
        assert r.computed["dim"] == 4

    def test_gk_guard(self):
        with pytest.raises(ValueError):
            verify_gk(5)

    @pytest.mark.parametrize("s,t", [(2, 2), (2, 3), (3, 3)])
    def test_grids(self, s, t):
        r = verify_grid(s, t)
        assert r.passed, r.witness

    @pytest.mark.parametrize("s,t", [(3, 3), (3, 4)])
    def test_torus_odd(self, s, t):
        r = verify_torus(s, t)
        assert r.passed, r.witness

    def test_torus_even_no_solve(self):
        r = verify_torus(4, 4, solve=False)
        assert r.passed, r.witness

    @pytest.mark.parametrize(
        "lengths,solve", [((3, 5), True), ((4, 6), False), ((4, 4, 4), True)]
    )
    def test_bouquets(self, lengths, solve):
        r = verify_bouquet(lengths, solve=solve)
        assert r.passed, r.witness

    @pytest.mark.parametrize("parts", [(2, 2, 2), (3, 3), (1, 1, 1, 2), (1, 1, 2, 2)])
    def test_multipartite(self, parts):
        r = verify_multipartite(parts)
        assert r.passed, r.witness

    def test_default_suite_passes(self):
        for report in default_suite():
            assert report.passed, (report.theorem, report.witness)


class TestSweepSmoke:
    def test_sweep_n4(self):
        rep = run_property_sweep(4)
        assert rep.passed
        assert rep.graphs_checked == 1 + 4 + 38

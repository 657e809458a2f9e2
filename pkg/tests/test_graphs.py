import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resolving_game import (
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    is_connected,
    lexicographic_product_with_k2,
)
from conftest import fam, oracle_distances


class TestBuildGraph:
    def test_path_construction(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.n == 4
        assert g.has_edge(0, 1) and g.has_edge(2, 3)
        assert not g.has_edge(0, 2)

    def test_triangle_is_complete(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert all(g.degree(v) == 2 for v in range(3))

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
        assert len(g.edges) == 2

    def test_rejects_small_order(self):
        with pytest.raises(GraphError):
            build_graph(1, [])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            build_graph(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            build_graph(3, [(1, 1)])

    def test_disconnected_build_is_permitted(self):
        g = build_graph(2, [])
        assert not is_connected(g)

    def test_immutable(self):
        g = build_graph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5

    def test_label_validation(self):
        with pytest.raises(GraphError):
            build_graph(2, [(0, 1)], labels=["only-one"])


class TestDistances:
    def test_path_endpoints(self):
        d = all_pairs_distances(fam("path", 4))
        assert d.distance(0, 3) == 3

    def test_petersen_outer_to_inner(self, petersen):
        d = all_pairs_distances(petersen)
        assert d.distance(petersen.label_index("u_1"), petersen.label_index("w_3")) == 2

    def test_cycle_diametral(self):
        d = all_pairs_distances(fam("cycle", 6))
        assert d.distance(0, 3) == 3

    def test_disconnected_sentinel(self):
        g = build_graph(3, [(0, 1)])
        d = all_pairs_distances(g)
        assert d.distance(0, 2) == d.sentinel == 3
        assert not d.all_finite

    def test_matches_oracle_on_samples(self, small_connected_graphs):
        for g in small_connected_graphs[::17]:
            d = all_pairs_distances(g)
            oracle = oracle_distances(g.n, g.edges)
            for u in range(g.n):
                for v in range(g.n):
                    assert d.distance(u, v) == oracle[(u, v)]

    def test_matrix_invariants(self, small_connected_graphs):
        for g in small_connected_graphs[::23]:
            d = all_pairs_distances(g)
            for u in range(g.n):
                assert d.distance(u, u) == 0
                for v in range(g.n):
                    assert d.distance(u, v) == d.distance(v, u)
                    assert (d.distance(u, v) == 1) == g.has_edge(u, v)
                    for w in range(g.n):
                        assert d.distance(u, v) <= d.distance(u, w) + d.distance(w, v)


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(fam("path", 4))

    def test_two_isolated_vertices(self):
        assert not is_connected(build_graph(2, []))

    def test_petersen_connected(self, petersen):
        assert is_connected(petersen)


class TestCartesianProduct:
    def test_p2_square_is_c4(self):
        p2 = fam("path", 2)
        prod = cartesian_product(p2, p2)
        c4 = fam("cycle", 4)
        assert prod.n == 4
        assert sorted(prod.degree(v) for v in range(4)) == [2, 2, 2, 2]
        d1 = sorted(
            all_pairs_distances(prod).distance(u, v)
            for u in range(4)
            for v in range(u + 1, 4)
        )
        d2 = sorted(
            all_pairs_distances(c4).distance(u, v)
            for u in range(4)
            for v in range(u + 1, 4)
        )
        assert d1 == d2

    def test_grid_8x4(self):
        g = fam("grid", 8, 4)
        assert g.n == 32
        assert len(g.edges) == 7 * 4 + 8 * 3
        assert g.labels[0] == "(u_1,v_1)"
        assert g.has_edge(0, 1) and g.has_edge(0, 4)

    def test_c3_box_c3_regular(self):
        t = fam("torus", 3, 3)
        assert t.n == 9
        assert all(t.degree(v) == 4 for v in range(9))

    def test_commutative_up_to_relabeling(self):
        a, b = fam("path", 3), fam("cycle", 4)
        gh = cartesian_product(a, b)
        hg = cartesian_product(b, a)
        assert sorted(gh.degree(v) for v in range(gh.n)) == sorted(
            hg.degree(v) for v in range(hg.n)
        )
        dm1 = sorted(
            all_pairs_distances(gh).distance(u, v)
            for u in range(gh.n)
            for v in range(u + 1, gh.n)
        )
        dm2 = sorted(
            all_pairs_distances(hg).distance(u, v)
            for u in range(hg.n)
            for v in range(u + 1, hg.n)
        )
        assert dm1 == dm2

    @given(st.integers(0, 2 ** 6 - 1), st.integers(0, 2 ** 3 - 1))
    @settings(max_examples=40, deadline=None)
    def test_product_connected_iff_both_are(self, gmask, hmask):
        gpairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        hpairs = [(0, 1), (0, 2), (1, 2)]
        g = Graph(4, [gpairs[i] for i in range(6) if gmask >> i & 1])
        h = Graph(3, [hpairs[i] for i in range(3) if hmask >> i & 1])
        assert is_connected(cartesian_product(g, h)) == (
            is_connected(g) and is_connected(h)
        )


class TestLexicographicK2:
    def test_c4_k2_degrees(self):
        g = fam("lex_cycle_k2", 4)
        assert g.n == 8
        assert all(g.degree(v) == 5 for v in range(8))

    def test_c5_k2_order(self):
        assert fam("lex_cycle_k2", 5).n == 10

    def test_k2_k2_is_k4(self):
        g = lexicographic_product_with_k2(fam("path", 2))
        assert g.n == 4 and len(g.edges) == 6


class TestJsonFormat:
    def test_round_trip(self, petersen):
        again = Graph.from_json(petersen.to_json())
        assert again == petersen

    def test_schema_keys(self):
        d = json.loads(fam("path", 3).to_json())
        assert set(d) == {"n", "edges", "labels"}
        assert d["edges"] == [[0, 1], [1, 2]]

    def test_rejects_malformed(self):
        with pytest.raises(GraphError):
            Graph.from_json('{"n": 3}')
        with pytest.raises(GraphError):
            Graph.from_json('{"n": 3, "edges": [[0]]}')
        with pytest.raises(GraphError):
            Graph.from_json("not json")

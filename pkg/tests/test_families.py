import pytest

from resolving_game import all_pairs_distances, is_connected
from resolving_game.families import (
    FamilyError,
    FamilySpec,
    bouquet_profile,
    family_catalog,
    g_k_structure,
    generate,
)
from conftest import fam


def test_gk_order():
    assert fam("g_k", 3).n == 17
    assert fam("g_k", 4).n == 4 + 2 * 15


def test_bouquet_order():
    assert fam("bouquet", 4, 4, 4, 4).n == 13  # cut vertex plus 4 legs of 3


def test_petersen_shape(petersen):
    assert petersen.n == 10
    assert all(petersen.degree(v) == 3 for v in range(10))
    # girth 5: no triangles or 4-cycles through any edge
    d = all_pairs_distances(petersen)
    for u, v in petersen.edges:
        common = [w for w in range(10) if petersen.has_edge(u, w) and petersen.has_edge(v, w)]
        assert not common


def test_multipartite_small():
    g = fam("complete_multipartite", 1, 1, 1, 2)
    assert g.n == 5
    assert g.labels[-1] == "u_{4,2}"
    # vertices in the same part are non-adjacent
    assert not g.has_edge(3, 4)
    assert g.has_edge(0, 3)


def test_every_generator_yields_connected_graphs():
    specs = [
        FamilySpec("path", (5,)),
        FamilySpec("cycle", (6,)),
        FamilySpec("complete", (4,)),
        FamilySpec("star", (4,)),
        FamilySpec("complete_multipartite", (2, 2, 2)),
        FamilySpec("tree_from_edges", (4, 0, 1, 1, 2, 1, 3)),
        FamilySpec("petersen", ()),
        FamilySpec("bouquet", (3, 5)),
        FamilySpec("grid", (3, 4)),
        FamilySpec("torus", (3, 4)),
        FamilySpec("lex_cycle_k2", (4,)),
        FamilySpec("g_k", (3,)),
    ]
    for spec in specs:
        assert is_connected(generate(spec)), spec


def test_grid_equals_product_of_paths():
    g = fam("grid", 3, 4)
    d = all_pairs_distances(g)
    # lattice distance is the Manhattan distance on coordinates
    for u in range(g.n):
        for v in range(g.n):
            ui, uj = divmod(u, 4)
            vi, vj = divmod(v, 4)
            assert d.distance(u, v) == abs(ui - vi) + abs(uj - vj)


class TestGkStructure:
    def test_sizes(self):
        s = g_k_structure(3)
        assert len(s.a) == 3 and len(s.b) == 7 == len(s.c)
        assert len(s.pairs) == 7
        assert len(g_k_structure(4).b) == 15

    def test_pair_for_singleton_subset(self):
        g = fam("g_k", 3)
        s = g_k_structure(3)
        b100 = g.label_index("b_100")
        c100 = g.label_index("c_100")
        assert (b100, c100) in s.pairs

    def test_edge_clauses(self):
        """Edges match the defining clauses exactly: three cliques, b-to-A by
        indicator bits, the b-c ladder, and nothing else."""
        k = 3
        g = fam("g_k", k)
        s = g_k_structure(k)
        expected = set()
        for group in (s.a, s.b, s.c):
            for i, u in enumerate(group):
                for v in group[i + 1:]:
                    expected.add((u, v))
        for m in range(1, 2 ** k):
            b = s.b[m - 1]
            c = s.c[m - 1]
            expected.add(tuple(sorted((b, c))))
            bits = format(m, f"0{k}b")
            for j in range(k):
                if bits[j] == "1":
                    expected.add(tuple(sorted((b, s.a[j]))))
        assert set(g.edges) == expected

    def test_b_adjacency_follows_label(self):
        g = fam("g_k", 3)
        b101 = g.label_index("b_101")
        assert g.has_edge(b101, g.label_index("a_1"))
        assert not g.has_edge(b101, g.label_index("a_2"))
        assert g.has_edge(b101, g.label_index("a_3"))


class TestBouquetProfile:
    def test_odd_pair(self):
        p = bouquet_profile(FamilySpec("bouquet", (3, 5)))
        assert (p.m, p.x, p.z) == (2, 0, 0)

    def test_even_counts(self):
        p = bouquet_profile(FamilySpec("bouquet", (4, 6)))
        assert (p.m, p.x, p.z) == (2, 2, 1)

    def test_all_fours(self):
        p = bouquet_profile(FamilySpec("bouquet", (4, 4, 4)))
        assert p.z == 3

    def test_leg_layout(self):
        p = bouquet_profile(FamilySpec("bouquet", (3, 5)))
        assert p.cut_vertex == 0
        assert p.legs[0].vertices == (1, 2)
        assert p.legs[1].vertices == (3, 4, 5, 6)
        assert p.legs[1].odd_mid_pair == (4, 5)

    def test_even_antipode(self):
        p = bouquet_profile(FamilySpec("bouquet", (4, 6)))
        assert p.legs[0].even_antipode == 2
        assert p.legs[1].even_antipode == 6


class TestValidation:
    @pytest.mark.parametrize(
        "kind,params",
        [
            ("cycle", (2,)),
            ("g_k", (2,)),
            ("complete_multipartite", (3,)),
            ("bouquet", (4,)),
            ("bouquet", (2, 4)),
            ("grid", (1, 3)),
            ("torus", (2, 3)),
            ("path", (1,)),
            ("tree_from_edges", (3, 0, 1)),
        ],
    )
    def test_bad_params(self, kind, params):
        with pytest.raises(FamilyError):
            generate(FamilySpec(kind, params))

    def test_unknown_kind(self):
        with pytest.raises(FamilyError):
            FamilySpec("hypercube", (3,))

    def test_catalog_covers_all_kinds(self):
        from resolving_game.families import KINDS

        assert {e["kind"] for e in family_catalog()} == set(KINDS)

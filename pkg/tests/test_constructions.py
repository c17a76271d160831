import pytest

from psforest.canon import are_isomorphic
from psforest.constructions import (
    ConstructionError,
    clique_blocks,
    extremal_set_main,
    g1,
    g1_plus,
    g2,
    g2_edge_count,
    g_s,
    linear_forest_extremal,
    matching_graph,
    path_extremal_family,
    special_members,
    star_forest_extremal,
)
from psforest.embedder import contains_forest
from psforest.forest import PathStarForest, parse_forest
from psforest.formulas import bracket, ex_main
from psforest.graph import complete, disjoint_union, empty, join


def test_named_graphs():
    assert g1(10, 3).edge_count == 24
    assert g1_plus(10, 3).edge_count == 25
    assert g2(13, 2, 4).edge_count == 33 == g2_edge_count(13, 2, 4)
    assert matching_graph(7).edge_count == 3 and matching_graph(7).n == 7
    assert clique_blocks(8, 4).edge_count == 2 * 3 + 1
    with pytest.raises(ConstructionError):
        g1_plus(4, 3)


def test_g_s_edge_cases():
    assert g_s(11, 1, 4, 0).edge_count == 19
    assert g_s(11, 1, 4, 2).edge_count == 19
    with pytest.raises(ConstructionError):
        g_s(11, 1, 5, 0)
    with pytest.raises(ConstructionError):
        g_s(11, 1, 4, 3)
    with pytest.raises(ConstructionError):
        g_s(11, 1, 4, 0, r=0)


@pytest.mark.parametrize("n,q,l", [(26, 1, 4), (11, 1, 4), (20, 2, 6), (31, 3, 8)])
def test_last_g_s_is_hub_graph(n, q, l):
    d = (n - q) // (l - 1)
    assert are_isomorphic(g_s(n, q, l, d - 1), g1(n, q + l // 2 - 1))


@pytest.mark.parametrize("n,l,size", [(6, 4, 1), (5, 4, 2), (7, 4, 3)])
def test_path_family_sizes(n, l, size):
    fam = path_extremal_family(n, l)
    assert len(fam) == size
    for g in fam:
        assert g.edge_count == bracket(n, l, l)
        assert contains_forest(g, PathStarForest((l,))) is None


def test_path_family_members():
    fam = path_extremal_family(5, 4)
    assert any(are_isomorphic(g, disjoint_union(complete(3), complete(2))) for g in fam)
    assert any(are_isomorphic(g, join(complete(1), empty(4))) for g in fam)


def test_star_forest_extremal():
    assert star_forest_extremal(10, [3, 3]).graphs[0].edge_count == 18
    assert star_forest_extremal(10, [5, 3]).graphs[0].edge_count == 20
    es = star_forest_extremal(7, [3])
    assert es.graphs[0].edge_count == 7 and not es.complete


def test_main_examples():
    es = extremal_set_main(parse_forest("P4,S3"), 26)
    assert [g.edge_count for g in es] == [49, 49]
    assert are_isomorphic(es.graphs[1], g1(26, 2))
    assert special_members(parse_forest("P4,S3"), 26) == [7]

    es = extremal_set_main(parse_forest("P4,S4"), 11)
    assert len(es) == 3 and all(g.edge_count == 19 for g in es)
    assert special_members(parse_forest("P4,S4"), 11) == [2, 0]

    es = extremal_set_main(parse_forest("2P3,S4"), 20)
    assert [g.edge_count for g in es] == [46]
    assert are_isomorphic(es.graphs[0], join(complete(2), matching_graph(18)))


def test_main_errors():
    with pytest.raises(ConstructionError):
        extremal_set_main(parse_forest("P6,S3"), 40)
    with pytest.raises(ConstructionError):
        extremal_set_main(parse_forest("P4,S3"), 7)
    with pytest.raises(ConstructionError):
        linear_forest_extremal(15, (8, 3), hub=1)


@pytest.mark.parametrize("name,n", [("P4,P2,S3", 40), ("P5,P5,S4", 45), ("P3,P3,P3,S3", 30), ("S3,S3,S4", 30),
                                    ("P2,S5", 43), ("P6,P4,S3,S3", 50), ("P8,S7", 50)])
def test_main_free_and_sized(name, n):
    f = parse_forest(name)
    es = extremal_set_main(f, n, verify=False)
    value = ex_main(f, n).value
    for g in es:
        assert g.edge_count == value
        assert contains_forest(g, f) is None


def test_layout_is_deterministic():
    a = extremal_set_main(parse_forest("P4,S4"), 11)
    b = extremal_set_main(parse_forest("P4,S4"), 11)
    assert a.graphs == b.graphs

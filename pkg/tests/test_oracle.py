import pytest

from psforest.canon import are_isomorphic, canonical_form
from psforest.constructions import extremal_set_main, path_extremal_family
from psforest.embedder import contains_forest
from psforest.forest import PathStarForest, parse_forest
from psforest.formulas import classify_regime, ex_main, Regime
from psforest.graph import complete, disjoint_union, empty, join
from psforest.oracle import OracleLimitError, exact_ex, extremal_collection, free_graphs


def star(a):
    return join(complete(1), empty(a))


@pytest.mark.parametrize("n,name,value", [(5, "P4", 4), (7, "P3", 3), (5, "2P2", 4), (6, "P4,P2", 10),
                                          (7, "3P2", 11)])
def test_values(n, name, value):
    assert exact_ex(n, parse_forest(name)).max_edges == value


def test_collections():
    got = extremal_collection(5, parse_forest("P4"))
    assert len(got) == 2
    for want in (disjoint_union(complete(3), complete(2)), star(4)):
        assert any(are_isomorphic(g, want) for g in got)

    got = extremal_collection(7, parse_forest("P4"))
    wants = [disjoint_union(disjoint_union(complete(3), complete(3)), empty(1)),
             disjoint_union(complete(3), star(3)), star(6)]
    assert len(got) == 3
    assert {canonical_form(g) for g in got} == {canonical_form(g) for g in wants}

    got = extremal_collection(6, parse_forest("P4"))
    assert len(got) == 1 and are_isomorphic(got.graphs[0], disjoint_union(complete(3), complete(3)))

    got = extremal_collection(5, parse_forest("2P2"))
    assert len(got) == 1 and are_isomorphic(got.graphs[0], star(4))


def test_members_are_free():
    for name in ("P4,S3", "P3,P2", "S3,S3"):
        f = parse_forest(name)
        res = exact_ex(8, f)
        for g in res.extremal:
            assert g.edge_count == res.max_edges
            assert contains_forest(g, f) is None


@pytest.mark.parametrize("name", ["P4", "P3", "P4,P2", "S3", "P2,S3", "2P2", "P5"])
@pytest.mark.parametrize("n", [4, 5, 6])
def test_methods_agree(name, n):
    f = parse_forest(name)
    levels = exact_ex(n, f)
    edges = exact_ex(n, f, method="edges")
    plain = exact_ex(n, f, method="edges", prune=False)
    assert levels.max_edges == edges.max_edges == plain.max_edges
    forms = {canonical_form(g) for g in levels.extremal}
    assert forms == {canonical_form(g) for g in edges.extremal} == {canonical_form(g) for g in plain.extremal}


def test_free_graph_levels_match_brute_force():
    from psforest.graph import all_labelled_graphs

    f = parse_forest("P4")
    for n in range(1, 6):
        brute = {canonical_form(g) for g in all_labelled_graphs(n) if contains_forest(g, f) is None}
        assert {canonical_form(g) for g in free_graphs(n, f)} == brute


@pytest.mark.parametrize("l", range(2, 7))
def test_paths_match_family(l):
    for n in range(l, 9):
        got = {canonical_form(g) for g in extremal_collection(n, PathStarForest((l,)))}
        assert got == {canonical_form(g) for g in path_extremal_family(n, l)}


def test_dominates_constructions():
    for name in ("P2,S3", "P3,S3", "P4,S3", "P2,S4", "S3,S3", "P2,P2,S3"):
        f = parse_forest(name)
        if classify_regime(f) is Regime.UNCOVERED:
            continue
        for n in range(f.order, 9):
            es = extremal_set_main(f, n)
            assert exact_ex(n, f).max_edges >= max(g.edge_count for g in es)
            assert exact_ex(n, f).max_edges >= ex_main(f, n).value


def test_limits():
    with pytest.raises(OracleLimitError):
        exact_ex(9, parse_forest("P3"))
    with pytest.raises(OracleLimitError):
        exact_ex(10, parse_forest("P3"), limit=10)
    with pytest.raises(ValueError):
        exact_ex(5, parse_forest("P3"), method="nope")


def test_override_warns():
    with pytest.warns(RuntimeWarning):
        assert exact_ex(9, parse_forest("P2"), limit=9).max_edges == 0


def test_parallel_matches_serial():
    f = parse_forest("P4,P2")
    a = exact_ex(7, f, jobs=1)
    b = exact_ex(7, f, jobs=2)
    assert a.max_edges == b.max_edges
    assert {canonical_form(g) for g in a.extremal} == {canonical_form(g) for g in b.extremal}


def test_small_n():
    assert exact_ex(0, parse_forest("P2")).max_edges == 0
    assert exact_ex(3, parse_forest("P4")).max_edges == 3

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from psforest.forest import ForestError, PathStarForest, derived_params, forest, parse_forest
from psforest.formulas import (
    FormulaError,
    Regime,
    UncoveredRegimeError,
    bracket,
    classify_regime,
    ex_linear_forest,
    ex_main,
    ex_path,
    ex_star_forest,
    gamma,
    hub_term,
    linear_forest_terms,
    thresholds,
)


class TestForest:
    def test_parse(self):
        f = parse_forest("P4,S3")
        assert f.paths == (4,) and f.stars == (3,)
        assert parse_forest("s5, p2 ,P6") == forest([6, 2], [5])
        assert parse_forest("2P3,S4") == forest([3, 3], [4])
        assert str(parse_forest("S3,P2,P4")) == "P4,P2,S3"

    @pytest.mark.parametrize("bad", ["", "P1", "S2", "Q4", "P4,,S3", "P", "0P3", "P4;S3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ForestError):
            parse_forest(bad)

    def test_order_and_parts(self):
        f = parse_forest("P4,P2,S3,S3")
        assert f.order == 14 and (f.p, f.q) == (2, 2)
        assert f.path_part == forest([4, 2]) and f.star_part == forest(stars=[3, 3])
        with pytest.raises(ForestError):
            PathStarForest()

    def test_params(self):
        par = derived_params(parse_forest("P4,S3"))
        assert (par.delta, par.mu, par.beta, par.s) == (2, 1, 2, 4)
        assert par.star_threshold == 1
        par = derived_params(parse_forest("2P3,S4"))
        assert (par.delta, par.mu, par.beta) == (2, Fraction(1, 2), Fraction(5, 2))
        par = derived_params(parse_forest("P5,P4,P2"))
        assert par.s_j == (5, 9, 11) and par.mu == 1
        assert derived_params(parse_forest("P3")).mu == Fraction(1, 2)
        assert derived_params(parse_forest("S4,S6")).star_threshold == Fraction(5, 2)


class TestBasics:
    def test_bracket(self):
        assert bracket(13, 7, 4) == 21
        assert bracket(5, 4, 4) == 4
        with pytest.raises(FormulaError):
            bracket(3, 4, 4)

    def test_paths(self):
        assert ex_path(7, 3).value == 3
        assert ex_path(9, 5).value == 12
        assert ex_path(5, 4).value == 4
        assert ex_path(3, 5).value == 3  # below l: complete graph
        assert ex_path(9, 5).guaranteed

    @given(st.integers(2, 12), st.integers(0, 80))
    def test_path_is_clique_blocks(self, l, n):
        d, r = divmod(n, l - 1)
        assert ex_path(n, l).value == d * comb(l - 1, 2) + comb(r, 2)

    def test_hub_term(self):
        assert hub_term(10, 4) == 3 * 8


class TestLinearForests:
    def test_examples(self):
        res = ex_linear_forest(10, [3, 3])
        assert res.value == 13 and res.threshold == 10 and res.formula == "pP3"
        assert ex_linear_forest(7, [4, 2]).value == 11
        assert ex_linear_forest(6, [4, 2]).value == 10
        assert ex_linear_forest(7, [2, 2, 2]).value == 11
        assert ex_linear_forest(5, [2, 2]).value == 4

    def test_terms_order(self):
        assert linear_forest_terms(7, (4, 2)) == [bracket(7, 4, 4), bracket(7, 6, 2), int(hub_term(7, 3))]

    def test_two_odd(self):
        res = ex_linear_forest(40, [5, 3])
        assert res.value == int(hub_term(40, 3)) + 1
        assert res.threshold is None  # contains a P3
        res = ex_linear_forest(40, [5, 4, 5])
        assert res.value == int(hub_term(40, 6))
        assert res.threshold is not None

    @given(st.lists(st.sampled_from([2, 4, 6, 8]), min_size=2, max_size=4), st.integers(0, 30))
    def test_even_monotone(self, paths, k):
        n = sum(paths) + k
        a, b = ex_linear_forest(n, paths).value, ex_linear_forest(n + 1, paths).value
        assert b >= a

    @given(st.lists(st.sampled_from([2, 4, 6]), min_size=2, max_size=3))
    def test_even_hub_wins_eventually(self, paths):
        # the even linear forest maximum is eventually carried only by the hub term
        delta = sum(l // 2 for l in paths)
        n = 50 * sum(paths) * delta
        terms = linear_forest_terms(n, tuple(sorted(paths, reverse=True)))
        assert terms[-1] > max(terms[:-1])


class TestStarForests:
    def test_examples(self):
        res = ex_star_forest(10, [3, 3])
        assert (res.value, res.i_star, res.threshold) == (18, 2, 26)
        assert ex_star_forest(10, [5, 3]).value == 20
        assert ex_star_forest(10, [3]).value == 10
        assert ex_star_forest(10, [5, 3]).threshold is None

    def test_single_star_is_max_degree(self):
        for a in range(3, 8):
            for n in range(a + 1, 30):
                assert ex_star_forest(n, [a]).value == (a - 1) * n // 2


class TestMain:
    def test_regimes(self):
        assert classify_regime(parse_forest("P4,S3")) is Regime.A
        assert classify_regime(parse_forest("P2,S5")) is Regime.B
        assert classify_regime(parse_forest("P6,S3")) is Regime.UNCOVERED
        assert classify_regime(parse_forest("P4,P2")) is Regime.A

    def test_examples(self):
        res = ex_main(parse_forest("P4,S3"), 26)
        assert (res.value, res.regime, res.threshold, res.gamma) == (49, Regime.A, 26, 3)
        assert res.guaranteed
        assert ex_main(parse_forest("2P3,S4"), 20).value == 46
        res = ex_main(parse_forest("P2,S5"), 43)
        assert (res.value, res.regime, res.threshold) == (86, Regime.B, 43)
        assert not ex_main(parse_forest("P2,S5"), 42).guaranteed

    def test_below_order_is_complete(self):
        res = ex_main(parse_forest("P4,S3"), 7)
        assert res.value == 21 and res.regime is Regime.EXACT

    def test_uncovered_raises(self):
        with pytest.raises(UncoveredRegimeError):
            ex_main(parse_forest("P6,S3"), 40)

    def test_gamma(self):
        assert gamma(parse_forest("P4,S3"), 26) == 3
        assert gamma(parse_forest("2P3,S4"), 20) == 4
        assert gamma(parse_forest("P5,P5,S4"), 100) == 9
        assert gamma(parse_forest("P4,P2,S3"), 30) == 6

    def test_thresholds(self):
        th = thresholds(parse_forest("P4,S3"))
        assert (th.N1, th.N2, th.n1) == (26, 29, 26)
        th = thresholds(parse_forest("P2,S5"))
        assert th.N1 == th.N2 == 43
        th = thresholds(parse_forest("2P3,S4"))
        assert (th.N1, th.N2, th.n1) == (Fraction(91, 2), 51, 46)
        with pytest.raises(FormulaError):
            thresholds(parse_forest("P4,S3,S4"))
        with pytest.raises(FormulaError):
            thresholds(parse_forest("P3,S3"))

    @given(st.lists(st.integers(2, 8), min_size=1, max_size=3), st.lists(st.integers(3, 7), min_size=1, max_size=3),
           st.integers(0, 40))
    def test_linear_in_n_for_hub_regime(self, paths, stars, k):
        f = PathStarForest(tuple(paths), tuple(stars))
        if classify_regime(f) is not Regime.A:
            return
        n = 4 * f.order + 60 * sum(paths) + k
        beta = derived_params(f).beta
        assert ex_main(f, n).value == beta * n - gamma(f, n)

    @given(st.lists(st.integers(2, 8), max_size=3), st.lists(st.integers(3, 7), max_size=3), st.integers(0, 30))
    def test_monotone_in_n(self, paths, stars, k):
        if not paths and not stars:
            return
        f = PathStarForest(tuple(paths), tuple(stars))
        if classify_regime(f) is Regime.UNCOVERED:
            return
        n = 80 + k
        assert ex_main(f, n + 1).value >= ex_main(f, n).value

    @pytest.mark.parametrize("l,q", [(l, q) for l in (4, 5, 6) for q in (1, 2, 3)])
    def test_single_path_equal_stars(self, l, q):
        from psforest.constructions import g2_edge_count

        f = PathStarForest((l,), (l - 1,) * q)
        n0 = thresholds(f).n1
        for n in range(n0, n0 + 21):
            assert ex_main(f, n).value == g2_edge_count(n, q, l)

    @pytest.mark.parametrize("l,p,q", [(l, p, q) for l in (2, 3) for p in (2, 3) for q in (1, 2)])
    def test_equal_even_paths(self, l, p, q):
        f = PathStarForest((2 * l,) * p, (2 * l - 1,) * q)
        n0 = thresholds(f).n1
        k = l * p + q
        for n in range(n0, n0 + 21):
            assert ex_main(f, n).value == (k - 1) * (n - Fraction(k, 2))

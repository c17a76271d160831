"""Turán numbers of path-star forests: formulas, extremal constructions and exact checks."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, dedup
from .constructions import (
    ConstructionError,
    ExtremalSet,
    extremal_set_main,
    g1,
    g1_plus,
    g2,
    g_s,
    linear_forest_extremal,
    path_extremal_family,
    star_forest_extremal,
)
from .embedder import Embedding, SearchBudgetExceeded, contains_forest, is_free, reference_contains
from .forest import PathStarForest, derived_params, forest, parse_forest
from .formulas import (
    ExResult,
    Regime,
    UncoveredRegimeError,
    bracket,
    classify_regime,
    ex_linear_forest,
    ex_main,
    ex_path,
    ex_star_forest,
    gamma,
    thresholds,
)
from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    build_atomic,
    complete,
    disjoint_union,
    empty,
    graph6_decode,
    graph6_encode,
    join,
    near_regular,
)
from .oracle import OracleResult, exact_ex, extremal_collection

__all__ = [
    "CanonicalForm", "are_isomorphic", "canonical_form", "dedup",
    "ConstructionError", "ExtremalSet", "extremal_set_main", "g1", "g1_plus", "g2", "g_s",
    "linear_forest_extremal", "path_extremal_family", "star_forest_extremal",
    "Embedding", "SearchBudgetExceeded", "contains_forest", "is_free", "reference_contains",
    "PathStarForest", "derived_params", "forest", "parse_forest",
    "ExResult", "Regime", "UncoveredRegimeError", "bracket", "classify_regime", "ex_linear_forest",
    "ex_main", "ex_path", "ex_star_forest", "gamma", "thresholds",
    "CapacityError", "Graph", "Graph6Error", "build_atomic", "complete", "disjoint_union", "empty",
    "graph6_decode", "graph6_encode", "join", "near_regular",
    "OracleResult", "exact_ex", "extremal_collection",
]

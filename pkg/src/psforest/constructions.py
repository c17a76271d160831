"""Named extremal graphs and extremal families.

Vertex layout is fixed: the hub clique comes first, then component blocks in
the order they are written, so graph6 output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import graph as gr
from .canon import dedup
from .embedder import DEFAULT_BUDGET, contains_forest
from .forest import PathStarForest
from .formulas import (
    Regime,
    classify_regime,
    ex_linear_forest,
    ex_main,
    ex_star_forest,
    linear_forest_terms,
)
from .graph import Graph


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalSet:
    graphs: tuple[Graph, ...]
    claimed_value: int
    family: str
    # False when only representatives are listed (star-extremal factors are not unique)
    complete: bool = True

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _extremal_set(graphs, value: int, family: str, complete: bool = True) -> ExtremalSet:
    graphs = dedup(graphs) if len(graphs) > 1 else list(graphs)
    for g in graphs:
        if g.edge_count != value:
            raise ConstructionError(f"{family}: member has {g.edge_count} edges, expected {value}")
    return ExtremalSet(tuple(graphs), value, family, complete)


def g1(n: int, k: int) -> Graph:
    """``K_k v empty(n-k)``."""
    if not n >= k >= 0:
        raise ConstructionError(f"g1 needs n >= k >= 0, got ({n}, {k})")
    return gr.join(gr.complete(k), gr.empty(n - k))


def g1_plus(n: int, k: int) -> Graph:
    """``K_k v (K_2 ∪ empty(n-k-2))``."""
    if k < 0 or n < k + 2:
        raise ConstructionError(f"g1_plus needs n >= k + 2, got ({n}, {k})")
    return gr.join(gr.complete(k), gr.disjoint_union(gr.complete(2), gr.empty(n - k - 2)))


def clique_blocks(n: int, l: int) -> Graph:
    """``d K_{l-1} ∪ K_r`` with ``n = d(l-1) + r``."""
    d, r = divmod(n, l - 1)
    return gr.union_all([gr.complete(l - 1)] * d + [gr.complete(r)])


def g2(n: int, k: int, l: int) -> Graph:
    """``K_k v (d K_{l-1} ∪ K_r)`` with ``n = k + d(l-1) + r``."""
    if l < 2 or n < k or k < 0:
        raise ConstructionError(f"g2 needs n >= k >= 0 and l >= 2, got ({n}, {k}, {l})")
    return gr.join(gr.complete(k), clique_blocks(n - k, l))


def g2_edge_count(n: int, k: int, l: int) -> int:
    d, r = divmod(n - k, l - 1)
    return comb(k, 2) + k * (n - k) + d * comb(l - 1, 2) + comb(r, 2)


def matching_graph(k: int) -> Graph:
    """``floor(k/2)`` disjoint edges, plus an isolated vertex when ``k`` is odd."""
    if k < 0:
        raise ConstructionError("matching size must be non-negative")
    return gr.union_all([gr.complete(2)] * (k // 2) + [gr.empty(k % 2)])


def _split_vertex_block(l: int, size: int) -> Graph:
    # K_{(l-2)/2} v empty(size)
    return gr.join(gr.complete((l - 2) // 2), gr.empty(size))


def g_s(n: int, q: int, l1: int, s: int, r: int | None = None) -> Graph:
    """``K_q v ((d-s-1) K_{l1-1} ∪ (K_{(l1-2)/2} v empty(l1/2 + s(l1-1) + r)))``."""
    if l1 % 2 or l1 < 2:
        raise ConstructionError("g_s needs an even path order")
    if n < q:
        raise ConstructionError("g_s needs n >= q")
    d, rem = divmod(n - q, l1 - 1)
    if r is not None and r != rem:
        raise ConstructionError(f"n = q + d(l1-1) + r gives r = {rem}, not {r}")
    if not 0 <= s <= d - 1:
        raise ConstructionError(f"s must lie in [0, {d - 1}]")
    r = rem
    body = gr.union_all(
        [gr.complete(l1 - 1)] * (d - s - 1) + [_split_vertex_block(l1, l1 // 2 + s * (l1 - 1) + r)]
    )
    return gr.join(gr.complete(q), body)


def _special_remainder(l: int, r: int) -> bool:
    return l % 2 == 0 and r in (l // 2, (l - 2) // 2)


def _path_family_graphs(n: int, l: int) -> list[Graph]:
    # every n >= 0; below l - 1 vertices the only member is K_n
    d, r = divmod(n, l - 1)
    graphs = [clique_blocks(n, l)]
    if d >= 1 and _special_remainder(l, r):
        for s in range(d):
            graphs.append(gr.union_all(
                [gr.complete(l - 1)] * (d - s - 1) + [_split_vertex_block(l, l // 2 + s * (l - 1) + r)]
            ))
    return graphs


def path_extremal_family(n: int, l: int) -> ExtremalSet:
    if l < 2 or n < l:
        raise ConstructionError(f"path family needs n >= l >= 2, got ({n}, {l})")
    return _extremal_set(_path_family_graphs(n, l), ex_linear_forest(n, (l,)).value, f"path P{l}")


def star_forest_extremal(n: int, stars: tuple[int, ...] | list[int]) -> ExtremalSet:
    stars = tuple(sorted(stars, reverse=True))
    res = ex_star_forest(n, stars)
    if res.i_star is None:
        raise ConstructionError(f"n = {n} is below the star forest order")
    j = res.i_star
    a = stars[j - 1]
    if n < j + a:
        raise ConstructionError("too few vertices for the star-extremal join")
    g = gr.join(gr.complete(j - 1), gr.near_regular(n - j + 1, a - 1))
    return _extremal_set([g], res.value, f"star-forest i*={j}", complete=False)


def linear_forest_extremal(n: int, paths: tuple[int, ...], hub: int = 0) -> tuple[list[Graph], bool]:
    """Extremal graphs for a linear forest on ``n`` vertices, joined under ``K_hub``.

    Returns the graphs and whether the list is known to be the full extremal set.
    Raises when the hub join does not attain the formula value (the linear-forest
    maximum is then carried by a clique-block term).
    """
    paths = tuple(sorted(paths, reverse=True))
    m = n - hub

    def lift(g: Graph) -> Graph:
        return gr.join(gr.complete(hub), g) if hub else g

    if len(paths) == 1:
        return [lift(g) for g in _path_family_graphs(m, paths[0])], True
    p = len(paths)
    delta = sum(l // 2 for l in paths)
    odd = sum(l % 2 for l in paths)
    if all(l == 3 for l in paths):
        return [lift(gr.join(gr.complete(p - 1), matching_graph(m - p + 1)))], True
    if odd >= 2:
        if odd == p:
            return [lift(g1_plus(m, delta - 1))], True
        return [lift(g1(m, delta - 1))], True
    value = ex_linear_forest(m, paths).value
    terms = linear_forest_terms(m, paths)
    if hub:
        if terms[-1] != value:
            raise ConstructionError(
                f"hub join of {paths} at n={n} misses the linear-forest maximum {value}")
        return [lift(g1(m, delta - 1))], odd == 0
    if odd:
        if terms[-1] != value:
            raise ConstructionError(f"no extremal family is known for {paths} at n={n}")
        return [g1(m, delta - 1)], False
    # all even: every extremal graph is one of these candidates
    out: list[Graph] = []
    s = 0
    for j, l in enumerate(paths):
        s += l
        if terms[j] != value:
            continue
        if j == 0:
            out.extend(_path_family_graphs(m, l))
        else:
            out.extend(gr.disjoint_union(gr.complete(s - 1), h) for h in _path_family_graphs(m - s + 1, l))
    if terms[-1] == value:
        out.append(g1(m, delta - 1))
    return out, True


def extremal_set_main(f: PathStarForest, n: int, budget: int = DEFAULT_BUDGET,
                      verify: bool = True) -> ExtremalSet:
    """Extremal graphs for ``f`` on ``n`` vertices, each checked to be ``f``-free."""
    regime = classify_regime(f)
    if regime is Regime.UNCOVERED:
        raise ConstructionError(f"no extremal family is known for {f}")
    if n < f.order:
        raise ConstructionError(f"n = {n} is below the forest order {f.order}")
    res = ex_main(f, n)
    if regime is Regime.B:
        out = star_forest_extremal(n, f.stars)
        result = ExtremalSet(out.graphs, res.value, f"star-dominant i*={res.i_star}", False)
    elif f.q == 0:
        graphs, complete = linear_forest_extremal(n, f.paths)
        result = _extremal_set(graphs, res.value, "linear forest", complete)
    elif f.p >= 2:
        graphs, complete = linear_forest_extremal(n, f.paths, hub=f.q)
        result = _extremal_set(graphs, res.value, "hub join", complete)
    else:
        result = _extremal_set(_main_single_path(f, n), res.value, "hub join, one path")
    if verify:
        for g in result.graphs:
            if g.edge_count != res.value:
                raise ConstructionError(f"{f} at n={n}: construction has {g.edge_count} edges, "
                                        f"formula gives {res.value}")
            emb = contains_forest(g, f, budget)
            if emb is not None:
                raise ConstructionError(f"{f} at n={n}: construction contains the forest: {emb}")
    return result


def special_members(f: PathStarForest, n: int) -> list[int]:
    """Values of ``s`` for which ``G(s)`` joins ``G_2`` in the extremal set."""
    q, l1 = f.q, f.paths[0]
    d, r = divmod(n - q, l1 - 1)
    if not _special_remainder(l1, r) or d < 1:
        return []
    extra = [d - 1]
    if f.stars[-1] == l1 == 4 and r == 1 and d - 1 != 0:
        extra.append(0)
    return extra


def _main_single_path(f: PathStarForest, n: int) -> list[Graph]:
    q, l1 = f.q, f.paths[0]
    return [g2(n, q, l1)] + [g_s(n, q, l1, s) for s in special_members(f, n)]

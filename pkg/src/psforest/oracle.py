"""Exact Turán numbers and complete extremal sets by exhaustive search.

The default search grows F-free graphs one vertex at a time.  Being F-free is
inherited by induced subgraphs, so every F-free graph on ``k`` vertices is an
F-free graph on ``k-1`` vertices plus a vertex of minimum degree; extensions
where the new vertex is not of minimum degree are skipped, and each level is
reduced to isomorphism classes.  Only the top level is cut by the incumbent.

``method="edges"`` is the plain labelled branch-and-bound over edge slots and
serves as an independent cross-check for small ``n``.
"""

from __future__ import annotations

import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_form, CanonicalForm
from .constructions import ExtremalSet
from .embedder import DEFAULT_BUDGET, contains_forest
from .forest import PathStarForest
from .graph import Graph, _raw, all_labelled_graphs

log = logging.getLogger(__name__)

ORACLE_LIMIT = 8
HARD_LIMIT = 9


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    n: int
    forest: PathStarForest
    max_edges: int
    extremal: ExtremalSet
    nodes_explored: int = field(default=0, compare=False)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PSF_JOBS", "1")))
    except ValueError:
        return 1


def _check_limit(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if limit > HARD_LIMIT:
        raise OracleLimitError(f"oracle limit cannot exceed {HARD_LIMIT}")
    if n > limit:
        raise OracleLimitError(f"n = {n} exceeds the oracle limit {limit}")
    if n > ORACLE_LIMIT:
        warnings.warn(f"exhaustive search at n = {n} is slow", RuntimeWarning, stacklevel=3)


# vertex-by-vertex generation -------------------------------------------------

_LEVELS: dict[tuple[PathStarForest, int], tuple[Graph, ...]] = {}


def _extend(h: Graph, subset: int) -> Graph:
    k = h.n
    rows = list(h.adj)
    for u in range(k):
        if subset >> u & 1:
            rows[u] |= 1 << k
    rows.append(subset)
    return _raw(k + 1, rows)


def _min_degree_ok(h_deg: list[int], subset: int, size: int) -> bool:
    # the new vertex must have minimum degree in the extension
    for u, du in enumerate(h_deg):
        if du + (subset >> u & 1) < size:
            return False
    return True


def _level_chunk(args) -> tuple[list[tuple[CanonicalForm, Graph]], int]:
    parents, f, budget = args
    found: dict[CanonicalForm, Graph] = {}
    nodes = 0
    for h in parents:
        k = h.n
        deg = h.degrees()
        for subset in range(1 << k):
            size = subset.bit_count()
            if not _min_degree_ok(deg, subset, size):
                continue
            nodes += 1
            g = _extend(h, subset)
            if contains_forest(g, f, budget) is None:
                key = canonical_form(g)
                if key not in found:
                    found[key] = g
    return list(found.items()), nodes


def _top_chunk(args) -> tuple[int, dict[CanonicalForm, Graph], int]:
    parents, f, budget, floor = args
    cands = []
    for idx, h in enumerate(parents):
        e = h.edge_count
        for subset in range(1 << h.n):
            cands.append((e + subset.bit_count(), idx, subset))
    cands.sort(key=lambda t: (-t[0], t[1], t[2]))
    best = floor
    found: dict[CanonicalForm, Graph] = {}
    nodes = 0
    degs = [h.degrees() for h in parents]
    for total, idx, subset in cands:
        if total < best:
            break
        if not _min_degree_ok(degs[idx], subset, subset.bit_count()):
            continue
        nodes += 1
        g = _extend(parents[idx], subset)
        if contains_forest(g, f, budget) is not None:
            continue
        if total > best:
            best = total
            found = {}
        found.setdefault(canonical_form(g), g)
    return best, found, nodes


def _chunks(items, jobs: int):
    jobs = max(1, min(jobs, len(items)))
    return [items[i::jobs] for i in range(jobs)]


def _map(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def free_graphs(n: int, f: PathStarForest, jobs: int = 1, budget: int = DEFAULT_BUDGET) -> tuple[Graph, ...]:
    """All F-free graphs on ``n`` vertices up to isomorphism, sorted by canonical form."""
    key = (f, n)
    if key in _LEVELS:
        return _LEVELS[key]
    if n == 0:
        result: tuple[Graph, ...] = (_raw(0, []),)
    else:
        parents = list(free_graphs(n - 1, f, jobs, budget))
        found: dict[CanonicalForm, Graph] = {}
        for items, _ in _map(_level_chunk, [(c, f, budget) for c in _chunks(parents, jobs)], jobs):
            for k, g in items:
                found.setdefault(k, g)
        result = tuple(found[k] for k in sorted(found))
    _LEVELS[key] = result
    return result


def _search_levels(n: int, f: PathStarForest, jobs: int, budget: int) -> tuple[int, list[Graph], int]:
    if n == 0:
        return 0, [_raw(0, [])], 1
    parents = list(free_graphs(n - 1, f, jobs, budget))
    outs = _map(_top_chunk, [(c, f, budget, 0) for c in _chunks(parents, jobs)], jobs)
    best = max(b for b, _, _ in outs)
    found: dict[CanonicalForm, Graph] = {}
    for b, items, _ in outs:
        if b == best:
            for k, g in items.items():
                found.setdefault(k, g)
    nodes = sum(nd for _, _, nd in outs)
    return best, [found[k] for k in sorted(found)], nodes


# labelled edge-slot branch and bound -----------------------------------------


def _search_edges(n: int, f: PathStarForest, prune: bool, budget: int) -> tuple[int, list[Graph], int]:
    slots = list(combinations(range(n), 2))
    total = len(slots)
    if not prune:
        best, found, nodes = -1, {}, 0
        for g in all_labelled_graphs(n):
            nodes += 1
            e = g.edge_count
            if e < best or contains_forest(g, f, budget) is not None:
                continue
            if e > best:
                best, found = e, {}
            found.setdefault(canonical_form(g), g)
        return best, [found[k] for k in sorted(found)], nodes

    rows = [0] * n
    state = {"best": -1, "nodes": 0}
    found: dict[CanonicalForm, Graph] = {}

    def rec(i: int, edges: int) -> None:
        state["nodes"] += 1
        if edges + (total - i) < state["best"]:
            return
        if i == total:
            g = _raw(n, rows)
            if edges > state["best"]:
                state["best"] = edges
                found.clear()
            found.setdefault(canonical_form(g), g)
            return
        u, v = slots[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        # adding edges never removes a copy of F, so a partial copy kills the branch
        if contains_forest(_raw(n, rows), f, budget) is None:
            rec(i + 1, edges + 1)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        rec(i + 1, edges)

    rec(0, 0)
    return state["best"], [found[k] for k in sorted(found)], state["nodes"]


# public ----------------------------------------------------------------------


def exact_ex(n: int, f: PathStarForest, *, limit: int = ORACLE_LIMIT, jobs: int | None = None,
             method: str = "levels", prune: bool = True, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """True ``ex(n, F)`` with every extremal graph up to isomorphism."""
    _check_limit(n, limit)
    jobs = default_jobs() if jobs is None else jobs
    if method == "levels":
        best, graphs, nodes = _search_levels(n, f, jobs, budget)
    elif method == "edges":
        best, graphs, nodes = _search_edges(n, f, prune, budget)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    log.debug("oracle %s n=%d: ex=%d, %d classes, %d nodes", f, n, best, len(graphs), nodes)
    extremal = ExtremalSet(tuple(graphs), best, f"exhaustive {f}")
    return OracleResult(n, f, best, extremal, nodes)


def extremal_collection(n: int, f: PathStarForest, **kwargs) -> ExtremalSet:
    return exact_ex(n, f, **kwargs).extremal

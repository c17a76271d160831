"""Subgraph containment for path-star forests.

``contains_forest`` places star centres first, then paths, and assigns star
leaves last by bipartite matching.  Search is exact; it is kept tractable on
the join-type extremal graphs by

* trying only one vertex per class of interchangeable candidates (twins, and
  whole twin classes that are themselves twins in the quotient and unused),
* memoising failed states up to those symmetries,
* re-checking that the chosen centres can still get their leaves,
* a cover bound: with ``K`` the ``t`` highest-degree free vertices, every star
  larger than the maximum degree of what is left must touch ``K``, so more than
  ``t`` such stars cannot fit.

A node budget turns runaway searches into ``SearchBudgetExceeded``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .forest import PathStarForest
from .graph import Graph, iter_bits

DEFAULT_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Embedding:
    paths: tuple[tuple[int, ...], ...]
    stars: tuple[tuple[int, tuple[int, ...]], ...]

    def vertices(self) -> list[int]:
        out = [v for p in self.paths for v in p]
        for c, leaves in self.stars:
            out.append(c)
            out.extend(leaves)
        return out

    def is_valid(self, g: Graph, f: PathStarForest) -> bool:
        if tuple(len(p) for p in self.paths) != f.paths:
            return False
        if tuple(len(leaves) for _, leaves in self.stars) != f.stars:
            return False
        vs = self.vertices()
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        for path in self.paths:
            if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
                return False
        return all(g.has_edge(c, x) for c, leaves in self.stars for x in leaves)


class _Symmetry:
    """Twin classes of the host and which classes may be swapped wholesale."""

    def __init__(self, g: Graph):
        n = g.n
        adj = g.adj
        cls = [-1] * n
        members: list[list[int]] = []
        closed: dict[int, int] = {}
        opened: dict[int, int] = {}
        for v in range(n):
            ck, ok = adj[v] | 1 << v, adj[v]
            if ck in closed:
                c = closed[ck]
            elif ok in opened:
                c = opened[ok]
            else:
                c = len(members)
                members.append([])
                closed[ck] = c
                opened[ok] = c
            cls[v] = c
            members[c].append(v)
        self.cls = cls
        self.members = members
        k = len(members)
        qadj = [0] * k
        kind = []
        for c, mem in enumerate(members):
            v = mem[0]
            for w in iter_bits(adj[v]):
                if cls[w] != c:
                    qadj[c] |= 1 << cls[w]
            if len(mem) == 1:
                kind.append(0)
            else:
                kind.append(1 if adj[v] >> mem[1] & 1 else 2)
        group = list(range(k))
        seen: dict[tuple, int] = {}
        for c in range(k):
            if len(members[c]) == 1:
                continue
            for key in (("c", qadj[c] | 1 << c, len(members[c]), kind[c]),
                        ("o", qadj[c], len(members[c]), kind[c])):
                if key in seen:
                    group[c] = seen[key]
                    break
            else:
                seen[("c", qadj[c] | 1 << c, len(members[c]), kind[c])] = c
                seen[("o", qadj[c], len(members[c]), kind[c])] = c
        self.group = group
        self.group_members: dict[int, list[int]] = {}
        for c, gid in enumerate(group):
            self.group_members.setdefault(gid, []).append(c)


def _assign_leaves(adj, centers: list[tuple[int, int]], avail: int) -> list[list[int]] | None:
    """Distinct leaves for every (centre, size) from ``avail``, or None."""
    for c, a in centers:
        if (adj[c] & avail).bit_count() < a:
            return None
    owner: dict[int, int] = {}

    def augment(ci: int, visited: set[int]) -> bool:
        for u in iter_bits(adj[centers[ci][0]] & avail):
            if u in visited:
                continue
            visited.add(u)
            if u not in owner or augment(owner[u], visited):
                owner[u] = ci
                return True
        return False

    for ci, (_, a) in enumerate(centers):
        for _ in range(a):
            if not augment(ci, set()):
                return None
    leaves: list[list[int]] = [[] for _ in centers]
    for u, ci in sorted(owner.items()):
        leaves[ci].append(u)
    return leaves


def _cover_reject(adj, avail: int, stars: tuple[int, ...]) -> bool:
    """True when the cover bound shows ``stars`` cannot all be placed inside ``avail``."""
    if not stars:
        return False
    big = max(stars)
    verts = sorted(iter_bits(avail), key=lambda v: -(adj[v] & avail).bit_count())
    rest = avail
    for t in range(len(stars)):
        top = max(((adj[v] & rest).bit_count() for v in iter_bits(rest)), default=0)
        if top < big and sum(1 for a in stars if a > top) > t:
            return True
        if t < len(verts):
            rest &= ~(1 << verts[t])
    return False


class _Search:
    def __init__(self, g: Graph, f: PathStarForest, budget: int):
        self.g = g
        self.adj = g.adj
        self.f = f
        self.budget = budget
        self.nodes = 0
        self.sym = _Symmetry(g)
        self.full = (1 << g.n) - 1
        self.total_leaves = sum(f.stars)
        self.failed: set = set()
        deg = g.degrees()
        self.by_degree = sorted(range(g.n), key=lambda v: (-deg[v], v))
        # per-class state: [path-used count, tuple of centre sizes]
        self.path_used = [0] * len(self.sym.members)
        self.center_sizes: list[list[int]] = [[] for _ in self.sym.members]

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"containment search exceeded {self.budget} nodes")

    def state_key(self, tag) -> tuple:
        sym = self.sym
        parts = []
        for gid, classes in sym.group_members.items():
            states = sorted((self.path_used[c], tuple(sorted(self.center_sizes[c]))) for c in classes)
            parts.append((gid, tuple(states)))
        return (tag, tuple(parts))

    def candidate_key(self, v: int):
        c = self.sym.cls[v]
        gid = self.sym.group[c]
        if len(self.sym.group_members[gid]) > 1 and not self.path_used[c] and not self.center_sizes[c]:
            return ("g", gid)
        return ("c", c)

    def run(self) -> Embedding | None:
        self.centers: list[tuple[int, int]] = []
        self.paths: list[list[int]] = []
        return self.place_center(0, 0)

    # stars ---------------------------------------------------------------

    def place_center(self, j: int, used: int) -> Embedding | None:
        stars = self.f.stars
        if j == len(stars):
            return self.place_path(0, used)
        key = self.state_key(("s", j))
        if key in self.failed:
            return None
        if _cover_reject(self.adj, self.full & ~used, stars[j:]):
            self.failed.add(key)
            return None
        a = stars[j]
        tried = set()
        for v in self.by_degree:
            if used >> v & 1:
                continue
            if (self.adj[v] & ~used & self.full).bit_count() < a:
                continue
            ck = self.candidate_key(v)
            if ck in tried:
                continue
            tried.add(ck)
            self.tick()
            self.centers.append((v, a))
            nused = used | 1 << v
            if _assign_leaves(self.adj, self.centers, self.full & ~nused) is not None:
                c = self.sym.cls[v]
                self.center_sizes[c].append(a)
                res = self.place_center(j + 1, nused)
                self.center_sizes[c].pop()
                if res is not None:
                    return res
            self.centers.pop()
        self.failed.add(key)
        return None

    # paths ---------------------------------------------------------------

    def place_path(self, i: int, used: int) -> Embedding | None:
        paths = self.f.paths
        avail = self.full & ~used
        leaves = _assign_leaves(self.adj, self.centers, avail)
        if leaves is None:
            return None
        if i == len(paths):
            return Embedding(
                tuple(tuple(p) for p in self.paths),
                tuple((c, tuple(lv)) for (c, _), lv in zip(self.centers, leaves)),
            )
        need = sum(paths[i:]) + self.total_leaves
        if avail.bit_count() < need:
            return None
        key = self.state_key(("p", i))
        if key in self.failed:
            return None
        l = paths[i]
        tried = set()
        for v in self.by_degree:
            if used >> v & 1:
                continue
            if l > 1 and not self.adj[v] & avail:
                continue
            ck = self.candidate_key(v)
            if ck in tried:
                continue
            tried.add(ck)
            res = self.extend(i, [v], used | 1 << v)
            if res is not None:
                return res
        self.failed.add(key)
        return None

    def extend(self, i: int, path: list[int], used: int) -> Embedding | None:
        self.tick()
        c = self.sym.cls[path[-1]]
        self.path_used[c] += 1
        try:
            if len(path) == self.f.paths[i]:
                self.paths.append(path)
                res = self.place_path(i + 1, used)
                self.paths.pop()
                return res
            avail = self.adj[path[-1]] & ~used & self.full
            tried = set()
            for w in iter_bits(avail):
                ck = self.candidate_key(w)
                if ck in tried:
                    continue
                tried.add(ck)
                res = self.extend(i, path + [w], used | 1 << w)
                if res is not None:
                    return res
            return None
        finally:
            self.path_used[c] -= 1


def _quick_reject(g: Graph, f: PathStarForest) -> bool:
    if f.order > g.n:
        return True
    if f.stars:
        deg = sorted(g.degrees(), reverse=True)
        for j, a in enumerate(f.stars):
            if deg[j] < a:
                return True
    if f.paths and g.edge_count == 0:
        return True
    return False


def contains_forest(g: Graph, f: PathStarForest, budget: int = DEFAULT_BUDGET) -> Embedding | None:
    """An embedding of ``f`` into ``g`` if one exists, else None."""
    if _quick_reject(g, f):
        return None
    return _Search(g, f, budget).run()


def is_free(g: Graph, f: PathStarForest, budget: int = DEFAULT_BUDGET) -> bool:
    return contains_forest(g, f, budget) is None


REFERENCE_LIMIT = 12


def reference_contains(g: Graph, f: PathStarForest) -> bool:
    """Plain exhaustive search: every path sequence, every centre and leaf set."""
    if g.n > REFERENCE_LIMIT:
        raise ValueError(f"reference search limited to {REFERENCE_LIMIT} vertices")
    if f.order > g.n:
        return False
    comps = [("P", l) for l in f.paths] + [("S", a) for a in f.stars]
    adj = g.adj

    def paths_from(seq: list[int], used: set[int], l: int):
        if len(seq) == l:
            yield list(seq)
            return
        for w in iter_bits(adj[seq[-1]]):
            if w not in used:
                seq.append(w)
                used.add(w)
                yield from paths_from(seq, used, l)
                used.discard(w)
                seq.pop()

    def rec(k: int, used: set[int]) -> bool:
        if k == len(comps):
            return True
        kind, size = comps[k]
        for v in range(g.n):
            if v in used:
                continue
            if kind == "P":
                for seq in paths_from([v], {v} | used, size):
                    if rec(k + 1, used | set(seq)):
                        return True
            else:
                nbrs = [w for w in iter_bits(adj[v]) if w not in used]
                for leaves in combinations(nbrs, size):
                    if rec(k + 1, used | {v} | set(leaves)):
                        return True
        return False

    return rec(0, set())

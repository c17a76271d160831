"""Exact canonical forms for small and highly structured graphs.

Twin classes (vertices with equal open or closed neighbourhoods) are folded
into labelled super-vertices until none remain; the twin-free quotient is then
labelled by individualization-refinement, taking the least adjacency string
over all leaves.  Folding twins keeps the joins and clique unions used for
extremal graphs cheap even at 60 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CapacityError, Graph, _raw

CANON_LIMIT = 64

_LEAF = (0,)
_TRUE_TWINS = 1
_FALSE_TWINS = 2


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    def to_graph(self) -> Graph:
        rows = [0] * self.n
        k = self.n * (self.n - 1) // 2 - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return _raw(self.n, rows)


def adjacency_bits(adj: list[int] | tuple[int, ...], order: list[int]) -> int:
    """Upper triangle in graph6 column order under ``order``; first bit most significant."""
    bits = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            bits = bits << 1 | (row >> order[i] & 1)
    return bits


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > CANON_LIMIT:
        raise CapacityError(f"canonical form limited to {CANON_LIMIT} vertices")
    order = canonical_order(g)
    return CanonicalForm(g.n, adjacency_bits(g.adj, order))


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).to_graph()


def canonical_order(g: Graph) -> list[int]:
    # each node: (label, members in canonical internal order, original representative)
    labels: list[tuple] = [_LEAF] * g.n
    members: list[list[int]] = [[v] for v in range(g.n)]
    reps = list(range(g.n))
    while True:
        k = len(reps)
        qadj = _quotient(g.adj, reps)
        groups = _twin_groups(qadj)
        if not groups:
            break
        merged = [False] * k
        new_labels, new_members, new_reps = [], [], []
        for kind, group in groups:
            group.sort(key=lambda i: labels[i])
            new_labels.append((kind, tuple(labels[i] for i in group)))
            new_members.append([v for i in group for v in members[i]])
            new_reps.append(reps[group[0]])
            for i in group:
                merged[i] = True
        for i in range(k):
            if not merged[i]:
                new_labels.append(labels[i])
                new_members.append(members[i])
                new_reps.append(reps[i])
        labels, members, reps = new_labels, new_members, new_reps
    qadj = _quotient(g.adj, reps)
    order = _ir_order(qadj, labels)
    return [v for i in order for v in members[i]]


def _quotient(adj: tuple[int, ...], reps: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(reps)}
    rows = [0] * len(reps)
    for i, v in enumerate(reps):
        row = adj[v]
        for w, j in index.items():
            if row >> w & 1:
                rows[i] |= 1 << j
    return rows


def _twin_groups(qadj: list[int]) -> list[tuple[int, list[int]]]:
    closed: dict[int, list[int]] = {}
    opened: dict[int, list[int]] = {}
    for i, row in enumerate(qadj):
        closed.setdefault(row | 1 << i, []).append(i)
        opened.setdefault(row, []).append(i)
    # a vertex cannot have both a true twin and a false twin
    groups = [(_TRUE_TWINS, grp) for grp in closed.values() if len(grp) > 1]
    groups += [(_FALSE_TWINS, grp) for grp in opened.values() if len(grp) > 1]
    return groups


# individualization-refinement ----------------------------------------------


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order is isomorphism-invariant."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        nxt: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                nxt.append(c)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            for key in sorted(sig):
                nxt.append(sig[key])
        if len(nxt) == len(cells):
            return nxt
        cells = nxt


def _homogeneous(adj: list[int], cells: list[list[int]]) -> bool:
    # every cell pair (and every cell internally) is all-or-nothing: leaves coincide
    # the partition is equitable, so one representative per cell suffices
    masks = [sum(1 << v for v in c) for c in cells]
    for c in cells:
        row = adj[c[0]]
        for idx, m in enumerate(masks):
            cnt = (row & m).bit_count()
            full = len(cells[idx]) - (1 if m >> c[0] & 1 else 0)
            if cnt not in (0, full):
                return False
    return True


def _ir_order(adj: list[int], colors: list[tuple]) -> list[int]:
    n = len(adj)
    if n == 0:
        return []
    by_color: dict[tuple, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    cells = _refine(adj, [by_color[c] for c in sorted(by_color)])
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        if len(cells) == n or _homogeneous(adj, cells):
            order = [v for c in cells for v in c]
            bits = adjacency_bits(adj, order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        for v in target:
            rest = [w for w in target if w != v]
            split = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(adj, split))

    search(cells)
    return best[1]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def dedup(graphs) -> list[Graph]:
    """Drop isomorphic duplicates, keeping first occurrences in order."""
    seen: set[CanonicalForm] = set()
    out = []
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out

"""Bitset simple graphs, standard constructors and graph6 interchange.

A graph on ``n <= 64`` vertices stores one neighbour mask per vertex.  Values
are immutable; every constructor returns a fresh graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a graph would exceed the supported vertex count."""


class Graph6Error(ValueError):
    """Raised on malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph on {self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            m = row
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n > MAX_VERTICES:
            raise CapacityError(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __len__(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph where old vertex ``u`` becomes ``perm[u]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return _raw(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for w in iter_bits(self.adj[v]):
                j = index.get(w)
                if j is not None:
                    rows[i] |= 1 << j
        return _raw(len(vertices), rows)

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return _raw(self.n, rows)

    def is_subgraph_of(self, other: Graph) -> bool:
        """Labelled edge-set inclusion on the same vertex set."""
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.adj, other.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, g6={graph6_encode(self).decode()!r})"


def _raw(n: int, rows: Sequence[int]) -> Graph:
    # skips validation; callers guarantee symmetric, loop-free rows
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_capacity(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")


def build_atomic(kind: str, n: int) -> Graph:
    """``complete`` gives K_n, ``empty`` gives its complement."""
    _check_capacity(n)
    if kind == "complete":
        full = (1 << n) - 1
        return _raw(n, [full ^ (1 << v) for v in range(n)])
    if kind == "empty":
        return _raw(n, [0] * n)
    raise ValueError(f"unknown atomic graph kind {kind!r}")


def complete(n: int) -> Graph:
    return build_atomic("complete", n)


def empty(n: int) -> Graph:
    return build_atomic("empty", n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_capacity(g.n + h.n)
    shift = g.n
    return _raw(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def union_all(graphs: Iterable[Graph]) -> Graph:
    result = empty(0)
    for g in graphs:
        result = disjoint_union(result, g)
    return result


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_capacity(n)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj] + [(row << g.n) | g_mask for row in h.adj]
    return _raw(n, rows)


def near_regular(n: int, d: int) -> Graph:
    """Deterministic graph with maximum degree ``min(d, n-1)`` and the most edges.

    Circulant offsets ``1..d//2``; odd ``d`` adds antipodal chords when ``n`` is
    even, or a matching ``i -- i+(n-1)/2`` leaving vertex ``n-1`` one short
    when ``n`` is odd.
    """
    _check_capacity(n)
    if d < 0:
        raise ValueError("degree must be non-negative")
    d = min(d, n - 1) if n else 0
    rows = [0] * n

    def link(u: int, v: int) -> None:
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    for off in range(1, d // 2 + 1):
        for i in range(n):
            link(i, (i + off) % n)
    if d % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                link(i, i + n // 2)
        else:
            half = (n - 1) // 2
            for i in range(half):
                link(i, i + half)
    return _raw(n, rows)


# graph6 --------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range [63, 126]")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated extended size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 graph on {n} vertices exceeds capacity {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _raw(n, rows)


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    """Newline-delimited graph6; blank lines are skipped."""
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield graph6_decode(line)


def write_graph6_stream(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g).decode("ascii") + "\n" for g in graphs)


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2**C(n,2) of them)."""
    slots = list(combinations(range(n), 2))
    for code in range(1 << len(slots)):
        rows = [0] * n
        for k, (u, v) in enumerate(slots):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield _raw(n, rows)

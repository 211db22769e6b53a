"""Simple undirected graphs with exact BFS distances.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction and safe to share; every operation here is a pure function.
Unreachable vertex pairs get the distance ``INF``, which compares equal
only to itself and greater than every finite distance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

INF: float = float("inf")


class GraphError(ValueError):
    """Invalid graph construction (self-loop, vertex out of range, ...)."""


class ParseError(ValueError):
    """Malformed textual graph input; the message names the line."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are canonicalized to sorted (u, v) pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists; iteration order is deterministic."""
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbr)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path table; entries are hop counts or INF."""

    n: int
    rows: tuple[tuple[float, ...], ...]

    def __getitem__(self, i: int) -> tuple[float, ...]:
        return self.rows[i]


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format: header ``n <count>``, then ``u v`` lines.

    Blank lines and lines starting with ``#`` are ignored.  Errors name the
    offending 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected header 'n <count>' at line {lineno}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count at line {lineno}") from None
            if n < 1:
                raise ParseError(f"vertex count must be >= 1 at line {lineno}")
            continue
        if len(parts) != 2:
            raise ParseError(f"malformed edge line at line {lineno}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge line at line {lineno}: {line!r}") from None
        if u == v:
            raise ParseError(f"self-loop at line {lineno}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range at line {lineno}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge at line {lineno}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph: emit the edge-list format."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    """Complement within all unordered pairs; an involution."""
    present = g._edge_set
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    ]
    return Graph(g.n, edges)


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; symmetric with zero diagonal."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def diameter(g: Graph) -> float:
    """Largest distance over all pairs; INF iff disconnected.  Needs n >= 2."""
    if g.n < 2:
        raise GraphError("diameter needs at least two vertices (no pair exists)")
    dm = all_pairs_distances(g)
    return max(dm.rows[i][j] for i in range(g.n) for j in range(i + 1, g.n))


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    return INF not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)

"""Resolving-set machinery: constraint systems, twins, r(G), tree profiles,
and a small exact vertex-transitivity test.

A vertex z resolves a pair {x, y} when its distances to x and y differ
(with INF equal only to itself, so disconnected graphs are covered).  The
set of resolvers of one pair is the support of one covering constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, DistanceMatrix, all_pairs_distances, is_tree
from .lp import reduce_sets


@dataclass(frozen=True)
class ResolvingConstraint:
    """The vertices whose distances to the two pair members differ."""

    pair: tuple[int, int]
    members: frozenset[int]


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set under the twin relation.

    Classes are sorted tuples, ordered by their smallest vertex; each class
    induces a clique or an independent set.
    """

    classes: tuple[tuple[int, ...], ...]

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) >= 2)


@dataclass(frozen=True)
class MajorVertex:
    vertex: int
    terminal_degree: int
    terminal_vertices: tuple[int, ...]


@dataclass(frozen=True)
class TreeProfile:
    """End-vertex count, exterior major vertices, and their terminal degrees."""

    sigma: int
    exterior_majors: tuple[MajorVertex, ...]
    ex: int
    ex1: int


def resolving_constraint(dm: DistanceMatrix, x: int, y: int) -> ResolvingConstraint:
    """Members are {z : d(x,z) != d(y,z)}; always contains x and y."""
    if x == y:
        raise ValueError("a resolving constraint needs two distinct vertices")
    if x > y:
        x, y = y, x
    dx, dy = dm[x], dm[y]
    return ResolvingConstraint(
        (x, y), frozenset(z for z in range(dm.n) if dx[z] != dy[z])
    )


def constraint_system(g: Graph, reduce: bool = True) -> list[ResolvingConstraint]:
    """One constraint per unordered pair, in lexicographic pair order.

    With ``reduce`` set, only one representative per distinct minimal member
    set survives (the LP optimum is unchanged); pair labels of dropped
    constraints are discarded.
    """
    if g.n < 2:
        raise ValueError("constraint systems need at least two vertices")
    dm = all_pairs_distances(g)
    all_constraints = [
        resolving_constraint(dm, x, y)
        for x in range(g.n)
        for y in range(x + 1, g.n)
    ]
    if not reduce:
        return all_constraints
    kept = reduce_sets([c.members for c in all_constraints])
    return [all_constraints[i] for i in kept]


def twin_partition(g: Graph) -> TwinPartition:
    """Classes of the twin relation u ~ w iff N(u)-{w} = N(w)-{u}."""
    masks = [0] * g.n
    for u in range(g.n):
        m = 0
        for v in g.adj[u]:
            m |= 1 << v
        masks[u] = m
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u in range(g.n):
        for w in range(u + 1, g.n):
            if masks[u] & ~(1 << w) == masks[w] & ~(1 << u):
                parent[find(u)] = find(w)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted(tuple(sorted(c)) for c in groups.values())
    return TwinPartition(tuple(classes))


def r_of(g: Graph) -> int:
    """Minimum resolver-set size over all vertex pairs."""
    if g.n < 2:
        raise ValueError("r(G) needs at least two vertices")
    dm = all_pairs_distances(g)
    best = g.n
    for x in range(g.n):
        dx = dm[x]
        for y in range(x + 1, g.n):
            dy = dm[y]
            size = sum(1 for z in range(g.n) if dx[z] != dy[z])
            if size < best:
                best = size
    return best


def tree_profile(g: Graph) -> TreeProfile:
    """Count end-vertices and exterior major vertices of a tree.

    An end-vertex is terminal to the major vertex strictly nearest to it;
    in a tree that nearest major vertex is unique whenever one exists.
    A path has no major vertex: ex = ex1 = 0 and sigma = 2 (or 0 for n = 1).
    """
    if not is_tree(g):
        raise ValueError("tree_profile needs a tree")
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    majors = [v for v in range(g.n) if g.degree(v) >= 3]
    terminal: dict[int, list[int]] = {v: [] for v in majors}
    if majors:
        dm = all_pairs_distances(g)
        for leaf in ends:
            dists = [(dm[leaf][v], v) for v in majors]
            dists.sort()
            if len(dists) == 1 or dists[0][0] < dists[1][0]:
                terminal[dists[0][1]].append(leaf)
    exterior = tuple(
        MajorVertex(v, len(terminal[v]), tuple(sorted(terminal[v])))
        for v in majors
        if terminal[v]
    )
    ex1 = sum(1 for mv in exterior if mv.terminal_degree == 1)
    return TreeProfile(len(ends), exterior, len(exterior), ex1)


def _vertex_signatures(g: Graph, dm: DistanceMatrix) -> list[tuple]:
    sigs = []
    for v in range(g.n):
        profile = tuple(sorted(dm[v]))
        nbr_deg = tuple(sorted(g.degree(u) for u in g.adj[v]))
        sigs.append((g.degree(v), profile, nbr_deg))
    return sigs


def _extend_automorphism(g: Graph, sigs, image: list[int], used: list[bool]) -> bool:
    u = len(image)
    if u == g.n:
        return True
    for w in range(g.n):
        if used[w] or sigs[w] != sigs[u]:
            continue
        ok = True
        for prev in range(u):
            if g.has_edge(u, prev) != g.has_edge(w, image[prev]):
                ok = False
                break
        if ok:
            image.append(w)
            used[w] = True
            if _extend_automorphism(g, sigs, image, used):
                return True
            image.pop()
            used[w] = False
    return False


def is_vertex_transitive(g: Graph, cap: int = 16) -> bool:
    """Exact test by backtracking automorphism search (instances n <= cap)."""
    if g.n > cap:
        raise ValueError(
            f"instance too large for exact automorphism search (n={g.n} > cap={cap})"
        )
    if g.n == 1:
        return True
    dm = all_pairs_distances(g)
    sigs = _vertex_signatures(g, dm)
    if len(set(sigs)) > 1:
        return False
    for target in range(1, g.n):
        used = [False] * g.n
        used[target] = True
        if not _extend_automorphism(g, sigs, [target], used):
            return False
    return True


def family_twin_multiplicity(family, u: int) -> int:
    """Number of family members in which u lies in a twin class of size >= 2."""
    members: Sequence[Graph] = getattr(family, "members", family)
    count = 0
    for g in members:
        if u >= g.n:
            raise ValueError(f"vertex {u} not in a graph on {g.n} vertices")
        if len(twin_partition(g).class_of(u)) >= 2:
            count += 1
    return count

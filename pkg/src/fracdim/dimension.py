"""The four dimension computations and the bound sandwich report.

Fractional dimensions are covering-LP optima over the resolving constraint
systems; the integral dimensions are exact minimum hitting sets of the same
systems.  A family pools the constraint systems of all of its members over
the shared vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph
from .lp import CoveringLp, min_hitting_set, reduce_sets, solve_covering_lp
from .metric import constraint_system


class SandwichViolation(RuntimeError):
    """The proved bound chain failed; this always indicates an engine bug."""


@dataclass(frozen=True)
class GraphFamily:
    """Non-empty list of graphs on a common vertex set (k = 1 is allowed)."""

    n: int
    members: tuple[Graph, ...]
    names: tuple[str, ...] | None

    def __init__(self, members: Iterable[Graph], names: Sequence[str] | None = None):
        members = tuple(members)
        if not members:
            raise ValueError("a graph family needs at least one member")
        n = members[0].n
        if any(g.n != n for g in members):
            raise ValueError("family members must share one vertex count")
        if names is not None:
            names = tuple(names)
            if len(names) != len(members):
                raise ValueError("one name per member, please")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "names", names)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DimensionResult:
    """Exact optimum with the optimal assignment and its dual certificate."""

    value: Fraction
    assignment: tuple[Fraction, ...]
    certificate: tuple[Fraction, ...]
    constraint_count: int


@dataclass(frozen=True)
class BoundsReport:
    max_dimf: Fraction
    sum_dimf: Fraction
    half_n: Fraction
    sdf: Fraction
    sd: int
    per_member_dimf: tuple[Fraction, ...]


def joint_cover_sets(fam: GraphFamily) -> list[frozenset[int]]:
    """Union of the members' constraint systems, reduced globally."""
    if fam.n < 2:
        raise ValueError("dimension computations need at least two vertices")
    pool: list[frozenset[int]] = []
    for g in fam.members:
        pool.extend(c.members for c in constraint_system(g, reduce=True))
    kept = reduce_sets(pool)
    return [pool[i] for i in kept]


def _solve(n: int, sets: Sequence[frozenset[int]]) -> DimensionResult:
    sol = solve_covering_lp(CoveringLp(n, sets))
    return DimensionResult(sol.value, sol.assignment, sol.dual, len(sets))


def fractional_dimension(g: Graph) -> DimensionResult:
    """dim_f(G): the optimum weight of a resolving function."""
    return simultaneous_fractional_dimension(GraphFamily([g]))


def simultaneous_fractional_dimension(fam: GraphFamily) -> DimensionResult:
    """Sd_f of the family; equals fractional_dimension for k = 1."""
    return _solve(fam.n, joint_cover_sets(fam))


def metric_dimension(g: Graph) -> int:
    """dim(G): minimum resolving-set cardinality."""
    return simultaneous_dimension(GraphFamily([g]))


def simultaneous_dimension(fam: GraphFamily) -> int:
    """Sd of the family: minimum simultaneous resolving-set cardinality."""
    sets = joint_cover_sets(fam)
    return len(min_hitting_set(CoveringLp(fam.n, sets)))


def bounds_report(fam: GraphFamily) -> BoundsReport:
    """All sandwich quantities; raises SandwichViolation if the chain fails."""
    if len(fam.members) < 2:
        raise ValueError("bounds reports are for families with k >= 2")
    per_member = tuple(fractional_dimension(g).value for g in fam.members)
    sdf = simultaneous_fractional_dimension(fam).value
    sd = simultaneous_dimension(fam)
    report = BoundsReport(
        max_dimf=max(per_member),
        sum_dimf=sum(per_member, Fraction(0)),
        half_n=Fraction(fam.n, 2),
        sdf=sdf,
        sd=sd,
        per_member_dimf=per_member,
    )
    upper = min(report.sum_dimf, report.half_n)
    if not (report.max_dimf <= sdf <= upper and sdf <= sd):
        raise SandwichViolation(
            f"bound chain failed: max={report.max_dimf} sdf={sdf} "
            f"min(sum, n/2)={upper} sd={sd}"
        )
    return report

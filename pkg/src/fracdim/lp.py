"""Exact solver for covering linear programs, plus an exact minimum hitting set.

The LP solved here is

    minimize    sum_v x_v
    subject to  sum_{v in S} x_v >= 1   for every cover set S
                0 <= x_v <= 1

via a two-phase primal simplex on the full tableau (surplus variables for
the >= rows, slacks for the upper bounds, artificials in phase 1) with
Bland's anti-cycling rule.  Every pivot is carried out in exact rational
arithmetic, so the reported optimum is exact, and every solution ships a
dual certificate that is re-verified by direct substitution before it is
returned.

Public values are `fractions.Fraction`; internally gmpy2.mpq is used when
available (identical semantics, much faster).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _q = Fraction


class LpError(ValueError):
    """Invalid covering-LP input."""


class LpInternalError(RuntimeError):
    """The solver violated one of its own guarantees (engine bug)."""


class CertificateError(LpInternalError):
    """A produced solution failed independent re-verification."""


def _fr(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def format_rational(v: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class CoveringLp:
    """A covering instance: variables 0..n_vars-1 and non-empty cover sets.

    Duplicate or superset sets may be present; reduction is the caller's
    concern (and never changes the optimum).
    """

    n_vars: int
    cover_sets: tuple[frozenset[int], ...]

    def __init__(self, n_vars: int, cover_sets: Iterable[Iterable[int]]):
        if n_vars < 1:
            raise LpError(f"n_vars must be >= 1, got {n_vars}")
        sets = tuple(frozenset(s) for s in cover_sets)
        for i, s in enumerate(sets):
            if not s:
                raise LpError(f"trivially infeasible constraint: cover set {i} is empty")
            if any(not (0 <= v < n_vars) for v in s):
                raise LpError(f"cover set {i} mentions a variable outside 0..{n_vars - 1}")
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "cover_sets", sets)


@dataclass(frozen=True)
class LpSolution:
    """Optimal value, assignment, and a verified dual certificate.

    ``dual`` has one entry per cover set followed by one per upper-bound row
    x_v <= 1; all entries are >= 0 and satisfy strong duality:
    sum(cover duals) - sum(upper duals) == value.
    """

    value: Fraction
    assignment: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    status: str = field(default="optimal")


def reduce_sets(sets: Sequence[frozenset[int]]) -> list[int]:
    """Indices of one representative per distinct minimal (non-superset) set.

    The first occurrence of each distinct set is the representative kept.
    Deleting the dropped sets never changes the LP optimum or the minimum
    hitting set.
    """
    masks: list[int] = []
    first: dict[int, int] = {}
    for i, s in enumerate(sets):
        m = 0
        for v in s:
            m |= 1 << v
        masks.append(m)
        if m not in first:
            first[m] = i
    distinct = sorted(first, key=lambda m: (m.bit_count(), first[m]))
    kept_masks: list[int] = []
    for m in distinct:
        if not any(km & m == km for km in kept_masks):
            kept_masks.append(m)
    return sorted(first[m] for m in kept_masks)


def _pivot(T, b, r, basis, p, q, z):
    """Pivot the tableau on row p, column q; returns the new objective value.

    Rows are updated in place and only on the pivot row's nonzero columns,
    which keeps structured (sparse) instances cheap.
    """
    row = T[p]
    inv = 1 / row[q]
    if inv != 1:
        for j, y in enumerate(row):
            if y:
                row[j] = y * inv
    bp = b[p] * inv
    b[p] = bp
    nonzero = [(j, y) for j, y in enumerate(row) if y]
    for i in range(len(T)):
        if i == p:
            continue
        f = T[i][q]
        if f:
            Ti = T[i]
            for j, y in nonzero:
                Ti[j] -= f * y
            b[i] -= f * bp
    f = r[q]
    if f:
        for j, y in nonzero:
            r[j] -= f * y
        z += f * bp
    basis[p] = q
    return z


def _run_simplex(T, b, r, basis, z, ncols_eligible):
    """Bland's rule to optimality: entering = lowest negative reduced cost."""
    zero = _q(0)
    while True:
        q = -1
        for j in range(ncols_eligible):
            if r[j] < zero:
                q = j
                break
        if q < 0:
            return z
        best_ratio = None
        best_row = -1
        for i in range(len(T)):
            t = T[i][q]
            if t > zero:
                ratio = b[i] / t
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_ratio = ratio
                    best_row = i
        if best_row < 0:
            raise LpInternalError("unbounded LP; impossible for a covering instance")
        z = _pivot(T, b, r, basis, best_row, q, z)


def solve_covering_lp(lp: CoveringLp) -> LpSolution:
    """Optimal basic solution with a matching dual certificate; deterministic."""
    n = lp.n_vars
    sets = lp.cover_sets
    m = len(sets)
    zero, one = _q(0), _q(1)

    if m == 0:
        sol = LpSolution(Fraction(0), (Fraction(0),) * n, (Fraction(0),) * n)
        return sol

    # Columns: x_0..x_{n-1} | surplus s_0..s_{m-1} | slack t_0..t_{n-1} | artificial a_0..a_{m-1}
    width = 2 * n + 2 * m
    T: list[list] = []
    for i, s in enumerate(sets):
        row = [zero] * width
        for v in s:
            row[v] = one
        row[n + i] = -one
        row[n + m + n + i] = one
        T.append(row)
    for v in range(n):
        row = [zero] * width
        row[v] = one
        row[n + m + v] = one
        T.append(row)
    b = [one] * (m + n)
    basis = [n + m + n + i for i in range(m)] + [n + m + v for v in range(n)]

    # Phase 1: minimize the artificials.  Reduced costs: c1 - sum of cover rows.
    r = [zero] * width
    for i in range(m):
        r[n + m + n + i] = one
    for i in range(m):
        Ti = T[i]
        r = [x - y for x, y in zip(r, Ti)]
    z1 = sum(b[:m], zero)
    z1 = _run_simplex(T, b, r, basis, z1, width)
    if z1 != zero:
        raise LpInternalError("phase 1 ended positive; covering LPs are always feasible")

    # Drive any artificial still basic (at value 0) out of the basis, or drop
    # its row when it is redundant.
    art_lo = n + m + n
    for p in range(len(T) - 1, -1, -1):
        if basis[p] < art_lo:
            continue
        q = next((j for j in range(art_lo) if T[p][j] != zero), -1)
        if q >= 0:
            _pivot(T, b, r, basis, p, q, z1)
        else:
            del T[p], b[p], basis[p]

    # Drop artificial columns entirely.
    T = [row[:art_lo] for row in T]

    # Phase 2: real objective (cost 1 on each x_v).
    r = [one if j < n else zero for j in range(art_lo)]
    z = zero
    for i, bi in enumerate(basis):
        if bi < n:
            r = [x - y for x, y in zip(r, T[i])]
            z += b[i]
    z = _run_simplex(T, b, r, basis, z, art_lo)

    x = [zero] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = b[i]
    value = z
    dual = [r[n + i] for i in range(m)] + [r[n + m + v] for v in range(n)]

    sol = LpSolution(
        _fr(value),
        tuple(_fr(v) for v in x),
        tuple(_fr(v) for v in dual),
    )
    verify_solution(lp, sol)
    return sol


def verify_solution(lp: CoveringLp, sol: LpSolution) -> None:
    """Re-verify a solution by direct substitution; raises CertificateError.

    Checks primal feasibility, value = sum of assignment, dual feasibility,
    and exact strong duality.  Independent of the simplex bookkeeping.
    """
    n, sets = lp.n_vars, lp.cover_sets
    m = len(sets)
    x = sol.assignment
    if len(x) != n or len(sol.dual) != m + n:
        raise CertificateError("solution shape does not match the instance")
    if any(not (0 <= v <= 1) for v in x):
        raise CertificateError("assignment leaves [0, 1]")
    for i, s in enumerate(sets):
        if sum(x[v] for v in s) < 1:
            raise CertificateError(f"cover set {i} is not satisfied")
    if sum(x, Fraction(0)) != sol.value:
        raise CertificateError("value differs from the assignment total")
    y = sol.dual[:m]
    w = sol.dual[m:]
    if any(v < 0 for v in sol.dual):
        raise CertificateError("negative dual component")
    for v in range(n):
        if sum(y[i] for i, s in enumerate(sets) if v in s) - w[v] > 1:
            raise CertificateError(f"dual constraint violated at variable {v}")
    if sum(y, Fraction(0)) - sum(w, Fraction(0)) != sol.value:
        raise CertificateError("dual objective does not match the primal value")


def _ceil_fraction(v: Fraction) -> int:
    return -((-v.numerator) // v.denominator)


def min_hitting_set(lp: CoveringLp) -> frozenset[int]:
    """Smallest set of variables meeting every cover set.

    Iterative deepening on the target cardinality starting from the ceiling
    of the LP value, with depth-first branch-and-bound; a greedy packing of
    disjoint uncovered sets prunes inside the search.
    """
    kept = reduce_sets(lp.cover_sets)
    masks = []
    for i in kept:
        m = 0
        for v in lp.cover_sets[i]:
            m |= 1 << v
        masks.append(m)
    if not masks:
        return frozenset()

    freq = [0] * lp.n_vars
    for mask in masks:
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            freq[v] += 1
            mm &= mm - 1
    priority = {v: (-freq[v], v) for v in range(lp.n_vars)}

    def packing_lb(uncovered: list[int]) -> int:
        used = 0
        count = 0
        for mask in uncovered:
            if mask & used == 0:
                count += 1
                used |= mask
        return count

    def search(uncovered: list[int], chosen: list[int], k: int) -> list[int] | None:
        if not uncovered:
            return list(chosen)
        if len(chosen) + packing_lb(uncovered) > k:
            return None
        target = min(uncovered, key=int.bit_count)
        members = []
        mm = target
        while mm:
            v = (mm & -mm).bit_length() - 1
            members.append(v)
            mm &= mm - 1
        members.sort(key=priority.__getitem__)
        for v in members:
            bit = 1 << v
            rest = [mask for mask in uncovered if not mask & bit]
            chosen.append(v)
            found = search(rest, chosen, k)
            chosen.pop()
            if found is not None:
                return found
        return None

    masks.sort(key=int.bit_count)
    lower = _ceil_fraction(solve_covering_lp(lp).value)
    for k in range(max(lower, 1), lp.n_vars + 1):
        hit = search(masks, [], k)
        if hit is not None:
            return frozenset(hit)
    raise LpInternalError("no hitting set found; impossible for non-empty sets")

"""Exact, exponential-time reference solvers.

These are the ground truth for every polynomial algorithm in the toolkit:
subset DPs for degreewidth and feedback arc set (see :mod:`dwlab.kernels`),
a triangle-branching feedback vertex set solver, subset enumeration for
minimum dominating set, and a pruned search listing all sparse orderings.
Caps are configuration values; exceeding one raises :class:`SizeCapError`
rather than silently truncating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Optional, Union

from . import kernels
from .core import Ordering, Tournament, backward_profile, bits, induced, is_acyclic
from .errors import SizeCapError

DEFAULT_EXACT_CAP = 22
DEFAULT_DS_CAP = 24
DEFAULT_BRUTE_CAP = 9


@dataclass(frozen=True)
class ExactResult:
    """Optimum value plus a self-certifying witness.

    ``explored`` counts DP states / search nodes / subsets, for diagnostics.
    """

    value: int
    witness: Union[Ordering, FrozenSet[int]]
    explored: int


def exact_degreewidth(t: Tournament, cap: int = DEFAULT_EXACT_CAP) -> ExactResult:
    """Degreewidth by subset DP in ~n*2^n time and 2^n memory.

    The witness ordering re-evaluates to the optimum via backward_profile.
    """
    if t.n > cap:
        raise SizeCapError("exact_degreewidth", t.n, cap)
    value, perm = kernels.dw_dp(t.n, t.out_rows)
    witness = Ordering.from_perm(perm)
    assert backward_profile(t, witness).width == value
    return ExactResult(value, witness, 1 << t.n)


def exact_fas(t: Tournament, cap: int = DEFAULT_EXACT_CAP) -> ExactResult:
    """Minimum feedback arc set size (ordering formulation) by subset DP."""
    if t.n > cap:
        raise SizeCapError("exact_fas", t.n, cap)
    value, perm = kernels.fas_dp(t.n, t.out_rows)
    witness = Ordering.from_perm(perm)
    assert backward_profile(t, witness).total_backward == value
    return ExactResult(value, witness, 1 << t.n)


def _least_triangle_in(t: Tournament, alive: int) -> Optional[tuple[int, int, int]]:
    for u in bits(alive):
        in_u = t.in_mask(u) & alive
        if not in_u:
            continue
        for v in bits(t.out_rows[u] & alive):
            common = t.out_rows[v] & in_u
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def _triangle_packing_exceeds(t: Tournament, alive: int, budget: int) -> bool:
    """True once a greedy vertex-disjoint triangle packing passes ``budget``."""
    count = 0
    rem = alive
    while count <= budget:
        tri = _least_triangle_in(t, rem)
        if tri is None:
            return False
        count += 1
        for x in tri:
            rem &= ~(1 << x)
    return True


def exact_fvst(t: Tournament, k: int) -> Optional[FrozenSet[int]]:
    """A feedback vertex set of size <= k, or None if none exists.

    Branches three ways on the lexicographically least triangle of the
    remaining tournament, depth at most k; correct because a tournament is
    acyclic iff it is triangle-free.  Failed (subtournament, budget) states
    are memoised.
    """
    if k < 0:
        raise ValueError("budget k must be nonnegative")
    failed: dict[int, int] = {}
    explored = 0

    def solve(alive: int, budget: int, removed: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        nonlocal explored
        explored += 1
        tri = _least_triangle_in(t, alive)
        if tri is None:
            return removed
        if budget == 0 or failed.get(alive, -1) >= budget:
            return None
        if _triangle_packing_exceeds(t, alive, budget):
            failed[alive] = max(failed.get(alive, -1), budget)
            return None
        for x in tri:
            res = solve(alive & ~(1 << x), budget - 1, removed + (x,))
            if res is not None:
                return res
        failed[alive] = max(failed.get(alive, -1), budget)
        return None

    res = solve(t.full_mask, k, ())
    if res is None:
        return None
    chosen = frozenset(res)
    if len(chosen) < t.n:
        rest, _ = induced(t, set(range(t.n)) - chosen)
        assert is_acyclic(rest)
    return chosen


def exact_min_ds(t: Tournament, cap: int = DEFAULT_DS_CAP) -> ExactResult:
    """Minimum dominating set by subset enumeration in increasing size.

    Uses the out-neighbour domination convention of
    :func:`dwlab.core.is_dominating_set`.
    """
    if t.n > cap:
        raise SizeCapError("exact_min_ds", t.n, cap)
    explored = 0
    for size in range(1, t.n + 1):
        for combo in itertools.combinations(range(t.n), size):
            explored += 1
            s_mask = 0
            for v in combo:
                s_mask |= 1 << v
            if all(t.out_rows[v] & s_mask for v in bits(t.full_mask & ~s_mask)):
                return ExactResult(size, frozenset(combo), explored)
    raise AssertionError("unreachable: the full vertex set always dominates")


def brute_sparse_orderings(t: Tournament, cap: int = DEFAULT_BRUTE_CAP) -> list[Ordering]:
    """All orderings of width <= 1, in lexicographic order of perm.

    Branch-and-prune over prefixes: a partial ordering is abandoned as soon
    as any placed vertex carries two backward arcs.
    """
    if t.n > cap:
        raise SizeCapError("brute_sparse_orderings", t.n, cap)
    n = t.n
    results: list[Ordering] = []
    deg = [0] * n
    perm: list[int] = []
    placed_mask = 0

    def rec():
        nonlocal placed_mask
        if len(perm) == n:
            results.append(Ordering.from_perm(list(perm)))
            return
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            back = t.out_rows[v] & placed_mask
            dv = back.bit_count()
            if dv > 1 or any(deg[u] + 1 > 1 for u in bits(back)):
                continue
            deg[v] = dv
            for u in bits(back):
                deg[u] += 1
            perm.append(v)
            placed_mask |= 1 << v
            rec()
            placed_mask ^= 1 << v
            perm.pop()
            for u in bits(back):
                deg[u] -= 1
            deg[v] = 0
        return

    rec()
    return results


def cutwidth_tournament(t: Tournament) -> tuple[int, Ordering]:
    """Cutwidth via the in-degree ordering (ties by vertex id), which is
    optimal for cutwidth on tournaments."""
    order = Ordering.from_perm(sorted(range(t.n), key=lambda v: (t.in_degree(v), v)))
    return backward_profile(t, order).max_cut, order

"""The 3-approximation for degreewidth and the cheap bounds around it.

Sorting the vertices by nondecreasing in-degree yields an ordering whose
width is at most three times the degreewidth; the same ordering is optimal
for cutwidth on tournaments.  Ties break by ascending vertex id so the
result is deterministic (optimal orderings need not be in-degree-sorted,
so no tie-break is ever "lucky").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Ordering, Tournament, backward_profile
from .errors import SizeCapError
from .oracles import DEFAULT_EXACT_CAP, cutwidth_tournament, exact_fas


def indegree_ordering(t: Tournament) -> Ordering:
    return Ordering.from_perm(sorted(range(t.n), key=lambda v: (t.in_degree(v), v)))


def approx_degreewidth(t: Tournament) -> tuple[int, Ordering]:
    """Width of the in-degree ordering; guaranteed <= 3 * degreewidth."""
    order = indegree_ordering(t)
    return backward_profile(t, order).width, order


@dataclass(frozen=True)
class BoundsReport:
    """Lower and upper bounds on the degreewidth.

    lower_min_indegree <= degreewidth <= min(upper_indegree_ordering,
    upper_2ctw, upper_fas); upper_fas is present only when the exact FAS
    oracle fits its size cap.
    """

    lower_min_indegree: int
    upper_indegree_ordering: int
    upper_2ctw: int
    upper_fas: Optional[int]


def degreewidth_bounds(t: Tournament, fas_cap: int = DEFAULT_EXACT_CAP) -> BoundsReport:
    lower = min(t.in_degrees())
    upper_order = approx_degreewidth(t)[0]
    upper_ctw = 2 * cutwidth_tournament(t)[0]
    upper_fas = None
    if t.n <= fas_cap:
        try:
            upper_fas = exact_fas(t, cap=fas_cap).value
        except SizeCapError:  # pragma: no cover - guarded by the check above
            upper_fas = None
    report = BoundsReport(lower, upper_order, upper_ctw, upper_fas)
    assert report.lower_min_indegree <= report.upper_indegree_ordering
    return report

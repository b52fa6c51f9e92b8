"""Dominating set under the out-neighbour convention, FPT in degreewidth.

``S`` dominates iff every vertex outside S beats some member of S (see
:mod:`dwlab.core`).  The width-w ordering from the 3-approximation bounds
how many vertices can beat a given S-member from behind, which makes the
random-separation / universal-family technique work: some family member F
contains a solution and excludes its back-beating fringe, and the solution
is then recoverable from the strongly connected components of T[F].

The recovered candidates are the single components plus prefix and suffix
unions of the component sequence; every candidate is re-verified with
``is_dominating_set`` before being returned, so the answer is sound by
construction and, in exhaustive mode, complete (F = S itself is in the
family and the full component union is S).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Optional

from .approx import approx_degreewidth
from .core import Ordering, Tournament, bits, is_dominating_set, scc_in_order
from .errors import SizeCapError
from .rng import XorShift64Star

EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class UniversalFamily:
    """A family of subsets of [0, n) meant to cover every disjoint
    (p-set A, q-set B) pair with some F containing A and avoiding B.

    Exhaustive mode lists all 2^n subsets (trivially a valid family).
    Randomized mode samples c * C(p+q, p) * (p+q) * ln(n) + 1 subsets with
    per-element bias p/(p+q); each (A, B) pair is then missed with
    probability at most 1/n for the default c, but the property is
    documented, not certified.
    """

    n: int
    p: int
    q: int
    sets: tuple[int, ...]
    mode: str
    seed: Optional[int] = None


def lopsided_universal_family(
    n: int,
    p: int,
    q: int,
    mode: str = "exhaustive",
    seed: int = 0,
    c: int = 4,
) -> UniversalFamily:
    if p < 0 or q < 0 or p + q > n:
        raise ValueError("need 0 <= p, 0 <= q, p + q <= n")
    if mode == "exhaustive":
        if n > EXHAUSTIVE_CAP:
            raise SizeCapError("lopsided_universal_family", n, EXHAUSTIVE_CAP)
        return UniversalFamily(n, p, q, tuple(range(1 << n)), "exhaustive")
    if mode != "random":
        raise ValueError(f"unknown family mode {mode!r}")
    if p == 0:
        return UniversalFamily(n, p, q, (0,), "random", seed)
    count = c * math.comb(p + q, p) * (p + q) * max(1, math.ceil(math.log(max(n, 2)))) + 1
    rng = XorShift64Star(seed)
    threshold = (p * ((1 << 64) - 1)) // (p + q)
    sets = []
    for _ in range(count):
        f = 0
        for v in range(n):
            if rng.next_u64() <= threshold:
                f |= 1 << v
        sets.append(f)
    return UniversalFamily(n, p, q, tuple(sets), "random", seed)


def family_covers(fam: UniversalFamily) -> bool:
    """Exhaustively verify the covering property (tiny n only)."""
    universe = range(fam.n)
    for a_tuple in itertools.combinations(universe, fam.p):
        a_mask = 0
        for v in a_tuple:
            a_mask |= 1 << v
        rest = [v for v in universe if not a_mask >> v & 1]
        for b_tuple in itertools.combinations(rest, fam.q):
            b_mask = 0
            for v in b_tuple:
                b_mask |= 1 << v
            if not any(a_mask & f == a_mask and b_mask & f == 0 for f in fam.sets):
                return False
    return True


def greedy_dominating_set(t: Tournament, ordering: Ordering) -> FrozenSet[int]:
    """The last vertex of the ordering plus its out-neighbours.

    All out-arcs of the last vertex are backward, so the size is at most
    width(ordering) + 1; every other vertex beats the last one, so the set
    dominates under the out-neighbour convention.
    """
    if ordering.n != t.n:
        raise ValueError("ordering size does not match tournament")
    last = ordering.perm[-1]
    result = frozenset((last, *bits(t.out_rows[last])))
    assert is_dominating_set(t, result)
    return result


def _candidates(comps: list[list[int]]) -> Iterator[FrozenSet[int]]:
    seen = set()
    prefix: set[int] = set()
    for comp in comps:
        prefix |= set(comp)
        fs = frozenset(prefix)
        if fs not in seen:
            seen.add(fs)
            yield fs
    suffix: set[int] = set()
    for comp in reversed(comps):
        suffix |= set(comp)
        fs = frozenset(suffix)
        if fs not in seen:
            seen.add(fs)
            yield fs
    for comp in comps:
        fs = frozenset(comp)
        if fs not in seen:
            seen.add(fs)
            yield fs


def _subsets_by_size(n: int, max_size: int) -> Iterator[int]:
    for size in range(1, min(n, max_size) + 1):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            yield m


def fpt_dominating_set(
    t: Tournament,
    s: int,
    mode: str = "exhaustive",
    seed: int = 0,
    c: int = 4,
) -> Optional[FrozenSet[int]]:
    """A dominating set of size at most s, or None.

    Uses the approximation ordering's actual width w (never worse than the
    3k bound), separation families with q = w*p, and component recovery;
    any returned set passed ``is_dominating_set`` and the size check.
    Exhaustive mode scans all subsets in increasing size and is complete;
    randomized mode may miss (documented failure probability).
    """
    if s < 1:
        raise ValueError("target size must be at least 1")
    w, sigma = approx_degreewidth(t)

    def scan(masks: Iterable[int]) -> Optional[FrozenSet[int]]:
        for f_mask in masks:
            if f_mask == 0:
                continue
            comps = scc_in_order(t, sigma, list(bits(f_mask)))
            for cand in _candidates(comps):
                if len(cand) <= s and is_dominating_set(t, cand):
                    return cand
        return None

    if mode == "exhaustive":
        if t.n > EXHAUSTIVE_CAP:
            raise SizeCapError("fpt_dominating_set[exhaustive]", t.n, EXHAUSTIVE_CAP)
        # One ascending-size sweep of the powerset family.  Stopping at
        # size s loses nothing: a verified candidate C satisfies |C| <= s
        # and would be recovered from F = C itself, which the sweep visits
        # before any larger superset.
        return scan(_subsets_by_size(t.n, s))

    for p in range(1, s + 1):
        fam = lopsided_universal_family(t.n, p, w * p, "random", seed + p, c)
        hit = scan(fam.sets)
        if hit is not None:
            return hit
    return None

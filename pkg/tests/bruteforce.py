"""Independent brute-force oracles used to freeze expected test values.

Everything here recomputes results straight from the definitions
(permutation sweeps, subset scans), without touching the solver paths
under test.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from dwlab.core import Tournament


def width_of(t: Tournament, perm: tuple[int, ...]) -> int:
    pos = {v: i for i, v in enumerate(perm)}
    deg = [0] * t.n
    for u in range(t.n):
        for v in range(t.n):
            if u != v and t.has_arc(u, v) and pos[v] < pos[u]:
                deg[u] += 1
                deg[v] += 1
    return max(deg)


def count_backward(t: Tournament, perm: tuple[int, ...]) -> int:
    pos = {v: i for i, v in enumerate(perm)}
    return sum(
        1
        for u in range(t.n)
        for v in range(t.n)
        if u != v and t.has_arc(u, v) and pos[v] < pos[u]
    )


def brute_degreewidth(t: Tournament) -> int:
    assert t.n <= 8
    return min(width_of(t, perm) for perm in itertools.permutations(range(t.n)))


def brute_fas(t: Tournament) -> int:
    assert t.n <= 8
    return min(count_backward(t, perm) for perm in itertools.permutations(range(t.n)))


def has_cycle_among(t: Tournament, alive: set[int]) -> bool:
    # A tournament (sub)graph is acyclic iff some ordering by in-degree works;
    # equivalently here: look for any directed triangle.
    for u, v, w in itertools.combinations(sorted(alive), 3):
        for a, b, c in ((u, v, w), (u, w, v)):
            if t.has_arc(a, b) and t.has_arc(b, c) and t.has_arc(c, a):
                return True
    return False


def brute_min_fvs(t: Tournament) -> int:
    assert t.n <= 10
    vertices = list(range(t.n))
    for size in range(t.n + 1):
        for combo in itertools.combinations(vertices, size):
            if not has_cycle_among(t, set(vertices) - set(combo)):
                return size
    raise AssertionError("unreachable")


def brute_min_out_ds(t: Tournament) -> int:
    """Minimum S such that every v outside S beats some member of S."""
    vertices = list(range(t.n))
    for size in range(1, t.n + 1):
        for combo in itertools.combinations(vertices, size):
            s = set(combo)
            if all(any(t.has_arc(v, x) for x in s) for v in vertices if v not in s):
                return size
    raise AssertionError("unreachable")


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every labeled tournament on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (u, v) in enumerate(pairs):
            if code >> idx & 1:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
        yield Tournament(n, tuple(rows))


def sparse_perms(t: Tournament) -> list[tuple[int, ...]]:
    assert t.n <= 8
    return [
        perm
        for perm in itertools.permutations(range(t.n))
        if width_of(t, perm) <= 1
    ]

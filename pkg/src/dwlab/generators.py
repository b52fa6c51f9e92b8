"""Constructors for the tournament families used throughout the toolkit.

Acyclic and rotational tournaments, the reversed-Hamiltonian-path family
U_n, seeded random tournaments (xorshift64*, see :mod:`dwlab.rng`), and
``dominate_join`` for assembling block constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import Ordering, Tournament
from .rng import XorShift64Star


def acyclic(n: int) -> Tournament:
    """Transitive tournament: arc (i, j) iff i < j."""
    if n < 1:
        raise ValueError("n must be at least 1")
    full = (1 << n) - 1
    rows = tuple((full >> (v + 1)) << (v + 1) for v in range(n))
    return Tournament(n, rows)


def rotational(k: int) -> Tournament:
    """Rotational (circulant) regular tournament of order 2k+1.

    Vertex i beats i+1, ..., i+k (mod 2k+1), so every in- and out-degree is
    exactly k.  The natural ordering <0, 1, ..., 2k> has width exactly k,
    achieved at the first and last vertices.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k + 1
    rows = []
    for v in range(n):
        row = 0
        for d in range(1, k + 1):
            row |= 1 << ((v + d) % n)
        rows.append(row)
    return Tournament(n, tuple(rows))


def u_tournament(n: int) -> Tournament:
    """The acyclic tournament with its Hamiltonian path reversed.

    Vertex id i carries the label v_{i+1}: arcs (v_{i+1}, v_i) for every i,
    plus (v_i, v_j) whenever j > i+1.  In-degree sequence for n >= 3 is
    (1, 1, 2, ..., n-2, n-2).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = [0] * n
    for i in range(n - 1):
        rows[i + 1] |= 1 << i
    for i in range(n):
        for j in range(i + 2, n):
            rows[i] |= 1 << j
    return Tournament(n, tuple(rows))


def random_tournament(n: int, seed: int) -> Tournament:
    """Each unordered pair oriented by one fair coin flip of the seeded
    xorshift64* stream (pairs scanned in lexicographic order)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = XorShift64Star(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.coin():
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
    return Tournament(n, tuple(rows))


def random_ordering(n: int, seed: int) -> Ordering:
    """Seeded Fisher-Yates permutation, for reproducible ordering sweeps."""
    rng = XorShift64Star(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    return Ordering.from_perm(perm)


def dominate_join(
    blocks: Sequence[Tournament],
    overrides: Iterable[tuple[int, int]] = (),
) -> Tournament:
    """Concatenate blocks; every cross-block pair points from the earlier
    block to the later one unless listed in ``overrides``.

    Overrides are pairs (x, y) of vertex ids in the joined tournament with x
    in an earlier block than y; each one reverses the default arc to (y, x).
    Vertex ids of block b are shifted by the total size of blocks before b.
    """
    if not blocks:
        raise ValueError("need at least one block")
    offsets = []
    total = 0
    for b in blocks:
        offsets.append(total)
        total += b.n
    block_of = []
    for bi, b in enumerate(blocks):
        block_of.extend([bi] * b.n)

    rows = [0] * total
    for bi, b in enumerate(blocks):
        off = offsets[bi]
        for u in range(b.n):
            rows[off + u] = b.out_rows[u] << off
    for bi in range(len(blocks)):
        lo = offsets[bi]
        hi = lo + blocks[bi].n
        later = ((1 << total) - 1) >> hi << hi
        for u in range(lo, hi):
            rows[u] |= later

    for x, y in overrides:
        if not (0 <= x < total and 0 <= y < total):
            raise ValueError(f"override ({x},{y}) out of range")
        if block_of[x] == block_of[y]:
            raise ValueError(f"override ({x},{y}) names an intra-block pair")
        if block_of[x] > block_of[y]:
            raise ValueError(f"override ({x},{y}) must list the earlier-block vertex first")
        rows[x] &= ~(1 << y)
        rows[y] |= 1 << x

    return Tournament(total, tuple(rows))


@dataclass(frozen=True)
class GeneratorSpec:
    """Parsed description of a generator invocation.

    kind: one of "acyclic", "rotational", "u", "random".
    For "rotational" the parameter is k (order 2k+1); for "random" both n
    and seed are required; otherwise n alone.
    """

    kind: str
    n: int = 0
    k: int = 0
    seed: int = 0


@dataclass(frozen=True)
class Generated:
    tournament: Tournament
    natural_ordering: Optional[Ordering]
    labels: Optional[tuple[str, ...]]


def generate(spec: GeneratorSpec) -> Generated:
    if spec.kind == "acyclic":
        t = acyclic(spec.n)
        return Generated(t, Ordering.identity(t.n), None)
    if spec.kind == "rotational":
        t = rotational(spec.k)
        return Generated(t, Ordering.identity(t.n), None)
    if spec.kind == "u":
        t = u_tournament(spec.n)
        return Generated(t, None, tuple(f"v{i+1}" for i in range(t.n)))
    if spec.kind == "random":
        return Generated(random_tournament(spec.n, spec.seed), None, None)
    raise ValueError(f"unknown generator kind {spec.kind!r}")

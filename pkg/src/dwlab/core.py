"""Tournament and ordering data model with the backward-arc primitives.

A tournament on n vertices stores one bitmask per vertex: bit v of
``out_rows[u]`` is set iff the arc (u, v) is present.  Vertex ids are the
integers 0..n-1.  Given an ordering, an arc (u, v) is *backward* iff v is
placed before u; the backward degree of a vertex is the number of backward
arcs incident to it, and the width of the ordering is the maximum backward
degree.

Dominating sets follow the convention used throughout this toolkit: S is
dominating iff every vertex outside S has an *out*-neighbour in S (outside
vertices beat into the set).  This is the reverse of the more common
definition; the FPT machinery in :mod:`dwlab.domset` depends on it.

All values are immutable after construction and every operation is a pure
function, so they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Tournament:
    """Complete antisymmetric digraph; ``out_rows[u]`` is u's out-neighbour mask.

    Construction runs cheap sanity checks (row bounds, no self-loops, arc
    count n(n-1)/2).  Untrusted inputs go through :func:`from_arcs` or the
    CLI parser, which enforce the exactly-one-arc-per-pair invariant in full;
    :meth:`verify_complete` re-checks it on demand.
    """

    n: int
    out_rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("tournament needs at least one vertex")
        if len(self.out_rows) != self.n:
            raise ValueError("row count does not match n")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.out_rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside [0, {self.n})")
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            total += row.bit_count()
        if total != self.n * (self.n - 1) // 2:
            raise ValueError("arc count is not n(n-1)/2")

    def verify_complete(self) -> None:
        """Assert that every pair carries exactly one arc."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                fwd = self.out_rows[u] >> v & 1
                rev = self.out_rows[v] >> u & 1
                if fwd == rev:
                    which = "both directions" if fwd else "undecided"
                    raise ValueError(f"pair {{{u},{v}}} {which}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def out_mask(self, v: int) -> int:
        return self.out_rows[v]

    def in_mask(self, v: int) -> int:
        return self.full_mask & ~self.out_rows[v] & ~(1 << v)

    def out_degree(self, v: int) -> int:
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask(v).bit_count()

    def in_degrees(self) -> list[int]:
        return [self.in_degree(v) for v in range(self.n)]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            yield from ((u, v) for v in bits(self.out_rows[u]))


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Build a validated tournament from an explicit arc set.

    Every unordered pair must be decided exactly once; duplicates,
    self-loops, missing pairs and opposite pairs are rejected.
    """
    rows = [0] * n
    seen = set()
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if (u, v) in seen:
            raise ValueError(f"duplicate arc ({u},{v})")
        if (v, u) in seen:
            raise ValueError(f"both ({v},{u}) and ({u},{v}) given")
        seen.add((u, v))
        rows[u] |= 1 << v
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in seen and (v, u) not in seen:
                raise ValueError(f"pair {{{u},{v}}} undecided")
    return Tournament(n, tuple(rows))


@dataclass(frozen=True)
class Ordering:
    """Permutation of the vertices together with its inverse."""

    perm: tuple[int, ...]
    pos: tuple[int, ...]

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "Ordering":
        n = len(perm)
        pos = [-1] * n
        for i, v in enumerate(perm):
            if not (0 <= v < n) or pos[v] != -1:
                raise ValueError("perm is not a permutation of range(n)")
            pos[v] = i
        return cls(tuple(perm), tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        r = tuple(range(n))
        return cls(r, r)

    @property
    def n(self) -> int:
        return len(self.perm)

    def reversed_(self) -> "Ordering":
        return Ordering.from_perm(tuple(reversed(self.perm)))


@dataclass(frozen=True)
class BackwardProfile:
    """Backward-arc accounting of one ordering.

    ``per_vertex[v]`` counts the backward arcs incident to v, ``width`` is
    their maximum, ``total_backward`` the number of backward arcs, and
    ``max_cut`` the largest prefix cut (the cutwidth of this ordering).
    """

    per_vertex: tuple[int, ...]
    width: int
    total_backward: int
    max_cut: int


def backward_profile(t: Tournament, ordering: Ordering) -> BackwardProfile:
    if ordering.n != t.n:
        raise ValueError("ordering size does not match tournament")
    per = [0] * t.n
    total = 0
    cut = 0
    max_cut = 0
    placed = 0
    # Scan positions left to right; a backward arc (u, v) opens at pos[v]
    # and closes at pos[u], so the running open-arc count is the prefix cut.
    for v in ordering.perm:
        opening = (t.in_mask(v) & ~placed).bit_count()   # in-neighbours still to come
        closing = (t.out_rows[v] & placed).bit_count()   # out-neighbours already placed
        per[v] = opening + closing
        total += opening
        cut += opening - closing
        if cut > max_cut:
            max_cut = cut
        placed |= 1 << v
    return BackwardProfile(tuple(per), max(per) if per else 0, total, max_cut)


def backward_arcs(t: Tournament, ordering: Ordering) -> list[tuple[int, int]]:
    """The backward arcs of the ordering, sorted."""
    out = []
    for u in range(t.n):
        for v in bits(t.out_rows[u]):
            if ordering.pos[v] < ordering.pos[u]:
                out.append((u, v))
    return sorted(out)


def induced(t: Tournament, subset: Iterable[int]) -> tuple[Tournament, dict[int, int]]:
    """Subtournament on ``subset``; returns it with the old-to-new id map."""
    xs = sorted(set(subset))
    if not xs:
        raise ValueError("subset must be nonempty")
    if xs[0] < 0 or xs[-1] >= t.n:
        raise ValueError("subset contains out-of-range ids")
    remap = {old: new for new, old in enumerate(xs)}
    sub_mask = mask_of(xs)
    rows = []
    for old in xs:
        row = 0
        for other in bits(t.out_rows[old] & sub_mask):
            row |= 1 << remap[other]
        rows.append(row)
    return Tournament(len(xs), tuple(rows)), remap


@dataclass(frozen=True)
class DominationRelation:
    """Outcome of :func:`domination_relation`.

    ``kind`` is one of "dominates", "quasi", "neither"; in the quasi case
    ``b`` and ``a`` carry the unique re-entering arc (b, a) with a inside X.
    """

    kind: str
    b: Optional[int] = None
    a: Optional[int] = None

    DOMINATES = "dominates"
    QUASI = "quasi"
    NEITHER = "neither"


def domination_relation(t: Tournament, xs: Iterable[int]) -> DominationRelation:
    """Classify how X relates to the rest of the tournament.

    X dominates iff every arc between X and its complement leaves X.
    X (b,a)-quasi-dominates iff exactly one arc (b, a) re-enters X and, in
    addition, d-(b) >= |X|+1 and a has an out-neighbour inside X.
    """
    x_mask = mask_of(xs)
    if x_mask == 0 or x_mask == t.full_mask:
        raise ValueError("X must be a proper nonempty subset")
    outside = t.full_mask & ~x_mask
    entering = []  # arcs (b, a) with b outside, a inside
    for a in bits(x_mask):
        for b in bits(t.in_mask(a) & outside):
            entering.append((b, a))
            if len(entering) > 1:
                return DominationRelation(DominationRelation.NEITHER)
    if not entering:
        return DominationRelation(DominationRelation.DOMINATES)
    b, a = entering[0]
    if t.in_degree(b) < x_mask.bit_count() + 1:
        return DominationRelation(DominationRelation.NEITHER)
    if not (t.out_rows[a] & x_mask):
        return DominationRelation(DominationRelation.NEITHER)
    return DominationRelation(DominationRelation.QUASI, b=b, a=a)


def scc_in_order(t: Tournament, ordering: Ordering, subset: Iterable[int]) -> list[list[int]]:
    """Strongly connected components of T[F], sorted by the ordering position
    of each component's earliest vertex.  Vertices inside a component are
    listed by ordering position as well."""
    fs = sorted(set(subset))
    if fs and (fs[0] < 0 or fs[-1] >= t.n):
        raise ValueError("subset contains out-of-range ids")
    if not fs:
        return []
    f_mask = mask_of(fs)

    # Iterative Tarjan on the induced subdigraph.
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in fs:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(bits(t.out_rows[root] & f_mask)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(bits(t.out_rows[w] & f_mask))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)

    comps = [sorted(c, key=lambda v: ordering.pos[v]) for c in comps]
    comps.sort(key=lambda c: ordering.pos[c[0]])
    return comps


def is_dominating_set(t: Tournament, s: Iterable[int]) -> bool:
    """True iff every vertex outside S has an out-neighbour in S."""
    s_mask = mask_of(s)
    for v in bits(t.full_mask & ~s_mask):
        if not (t.out_rows[v] & s_mask):
            return False
    return True


def is_acyclic(t: Tournament) -> bool:
    """A tournament is acyclic iff its in-degrees are 0, 1, ..., n-1."""
    return sorted(t.in_degrees()) == list(range(t.n))


def has_triangle(t: Tournament) -> Optional[tuple[int, int, int]]:
    """Some directed 3-cycle (u, v, w), or None.  Returns the
    lexicographically least one (by u, then v, then w)."""
    for u in range(t.n):
        in_u = t.in_mask(u)
        for v in bits(t.out_rows[u]):
            common = t.out_rows[v] & in_u
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None

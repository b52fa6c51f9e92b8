"""Executable hardness constructions with verifiable forward certificates.

Construction 1 turns a balanced 3-SAT formula (each variable twice positive,
twice negative; n odd, m even) into a tournament whose degreewidth drops
below the threshold W + 2m + 3n + 4 exactly when the formula is satisfiable.
Blocks: regular A and D of order (W+1)/2 + m + n, regular B and C of order
W, acyclic X (variable pairs), Y (clause pairs), U (per-variable gadgets)
and H, wired so that a "nice" ordering places each variable pair either in
the true zone (between A and B) or the false zone (between C and D), and
every U vertex pins the width at threshold - 1.

Construction 2 turns a cubic graph into a sparse tournament: one 8-vertex
pattern per graph vertex, a vertex backward arc (t_i, h_i) per vertex and
an edge backward arc per graph edge, so that feedback vertex sets of size
c + |E| correspond to vertex covers of size c.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence

from .core import (
    Ordering,
    Tournament,
    backward_profile,
    bits,
    induced,
    is_acyclic,
    mask_of,
)
from .errors import DwlabError, NotNiceOrderingError
from .generators import rotational


# ---------------------------------------------------------------------------
# Balanced 3-SAT(4)


@dataclass(frozen=True)
class Balanced3Sat4:
    """CNF with three distinct variables per clause; literals are DIMACS
    signed integers (variable ids 1..n_vars)."""

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def _occurrences(f: Balanced3Sat4) -> dict[int, list[int]]:
    occ = {v: [0, 0] for v in range(1, f.n_vars + 1)}
    for clause in f.clauses:
        for lit in clause:
            var = abs(lit)
            if var == 0 or var > f.n_vars:
                raise ValueError(f"literal {lit} out of range")
            occ[var][0 if lit > 0 else 1] += 1
    return occ


def validate_balanced_3sat4(f: Balanced3Sat4) -> None:
    """Each clause holds three distinct variables; every variable occurs
    exactly twice positively and twice negatively."""
    for clause in f.clauses:
        if len(clause) != 3:
            raise ValueError("clauses must have exactly three literals")
        if len({abs(lit) for lit in clause}) != 3:
            raise ValueError(f"repeated variable in clause {clause}")
    for var, (pos, neg) in _occurrences(f).items():
        if (pos, neg) != (2, 2):
            raise ValueError(
                f"variable {var} occurs {pos}x positively / {neg}x negatively, need 2/2"
            )


def normalize_parity(f: Balanced3Sat4) -> Balanced3Sat4:
    """Arrange n odd and m even, preserving satisfiability.

    An odd clause count would be doubled by duplicating the formula over
    fresh variables (unreachable for balanced input, where 3m = 4n forces m
    divisible by 4); an even variable count is fixed by appending one
    variable that occurs in no clause.
    """
    validate_balanced_3sat4(f)
    out = f
    if out.n_clauses % 2 == 1:
        shifted = tuple(
            tuple(lit + out.n_vars if lit > 0 else lit - out.n_vars for lit in clause)
            for clause in out.clauses
        )
        out = Balanced3Sat4(2 * out.n_vars, out.clauses + shifted)
    if out.n_vars % 2 == 0:
        out = Balanced3Sat4(out.n_vars + 1, out.clauses)
    return out


def satisfies(f: Balanced3Sat4, assignment: Sequence[bool]) -> bool:
    if len(assignment) != f.n_vars:
        raise ValueError("assignment length must equal the variable count")
    return all(
        any((lit > 0) == assignment[abs(lit) - 1] for lit in clause)
        for clause in f.clauses
    )


# ---------------------------------------------------------------------------
# Construction 1: Balanced 3-SAT(4) -> degreewidth threshold instance


def choose_w(n: int, m: int) -> int:
    """Least odd W > n^3 + m^3 with (W+1)/2 + m + n odd (frozen rule)."""
    w = n**3 + m**3 + 1
    if w % 2 == 0:
        w += 1
    while ((w + 1) // 2 + m + n) % 2 == 0:
        w += 2
    return w


@dataclass(frozen=True)
class SatReductionInstance:
    tournament: Tournament
    threshold: int
    w: int
    n_vars: int
    m_clauses: int
    formula: Balanced3Sat4
    ranges: dict[str, tuple[int, int]]  # block -> [start, end)

    def block_of(self, vertex: int) -> str:
        for name, (lo, hi) in self.ranges.items():
            if lo <= vertex < hi:
                return name
        raise ValueError(f"vertex {vertex} out of range")

    def block_ids(self, name: str) -> range:
        lo, hi = self.ranges[name]
        return range(lo, hi)

    def var_vertex(self, i: int, primed: bool) -> int:
        # pair (v_i, v'_i), i in 1..n
        return self.ranges["X"][0] + 2 * (i - 1) + (1 if primed else 0)

    def clause_vertex(self, ell: int, primed: bool) -> int:
        return self.ranges["Y"][0] + 2 * (ell - 1) + (1 if primed else 0)

    def u_vertex(self, i: int, p: int, barred: bool) -> int:
        # per variable i: u^1_i, ubar^1_i, u^2_i, ubar^2_i
        return self.ranges["U"][0] + 4 * (i - 1) + 2 * (p - 1) + (1 if barred else 0)

    def label(self, vertex: int) -> str:
        block = self.block_of(vertex)
        lo = self.ranges[block][0]
        off = vertex - lo
        if block in ("A", "B", "C", "D"):
            return f"{block.lower()}{off + 1}"
        if block == "X":
            return f"v{off // 2 + 1}" + ("'" if off % 2 else "")
        if block == "Y":
            return f"q{off // 2 + 1}" + ("'" if off % 2 else "")
        if block == "U":
            i, slot = divmod(off, 4)
            p, barred = divmod(slot, 2)
            return f"{'ubar' if barred else 'u'}{p + 1}_{i + 1}"
        return f"h{off + 1}"

    def block_map(self) -> dict[int, tuple[str, str]]:
        return {v: (self.block_of(v), self.label(v)) for v in range(self.tournament.n)}


def _polarity(f: Balanced3Sat4, i: int, ell: int) -> int:
    """+1 if x_i occurs positively in clause ell, -1 negatively, 0 absent."""
    for lit in f.clauses[ell - 1]:
        if abs(lit) == i:
            return 1 if lit > 0 else -1
    return 0


def sat_to_degreewidth(f: Balanced3Sat4) -> SatReductionInstance:
    """Build the threshold instance; requires n odd and m even (run
    :func:`normalize_parity` first).  Variables may occur 2x/2x or, for the
    parity dummy, not at all."""
    n, m = f.n_vars, f.n_clauses
    if n % 2 == 0 or m % 2 == 1:
        raise ValueError("need n odd and m even; run normalize_parity first")
    for clause in f.clauses:
        if len({abs(lit) for lit in clause}) != 3:
            raise ValueError(f"repeated variable in clause {clause}")
    for var, (pos, neg) in _occurrences(f).items():
        if (pos, neg) not in ((2, 2), (0, 0)):
            raise ValueError(f"variable {var} occurs {pos}+/{neg}-, need 2/2 or absent")

    w = choose_w(n, m)
    ad_size = (w + 1) // 2 + m + n
    ranges: dict[str, tuple[int, int]] = {}
    start = 0
    for name, size in (
        ("A", ad_size),
        ("B", w),
        ("C", w),
        ("D", ad_size),
        ("X", 2 * n),
        ("Y", 2 * m),
        ("U", 4 * n),
        ("H", 2),
    ):
        ranges[name] = (start, start + size)
        start += size
    total = start

    rows = [0] * total

    def block_mask(name: str) -> int:
        lo, hi = ranges[name]
        return ((1 << (hi - lo)) - 1) << lo

    def dominate(src: str, dst: str) -> None:
        dm = block_mask(dst)
        for u in range(*ranges[src]):
            rows[u] |= dm

    # Regular blocks in their natural rotational orders; acyclic blocks in
    # ascending-id topological order.
    for name in ("A", "B", "C", "D"):
        lo, hi = ranges[name]
        size = hi - lo
        rot = rotational((size - 1) // 2)
        for u in range(size):
            rows[lo + u] |= rot.out_rows[u] << lo
    for name in ("X", "Y", "U", "H"):
        lo, hi = ranges[name]
        for u in range(lo, hi):
            for v in range(u + 1, hi):
                rows[u] |= 1 << v

    # Block-level dominations.  A over H is not spelled out in the bullet
    # list but is forced by the width accounting of nice orderings (H must
    # see backward arcs only from U).
    for src, dst in (
        ("D", "A"),
        ("A", "B"), ("A", "C"), ("B", "C"), ("B", "D"), ("C", "D"),
        ("A", "X"), ("C", "X"), ("X", "B"), ("X", "D"),
        ("B", "Y"), ("D", "Y"), ("Y", "A"), ("Y", "C"),
        ("U", "A"), ("U", "Y"), ("U", "C"), ("B", "U"), ("D", "U"),
        ("B", "H"), ("C", "H"), ("X", "H"), ("Y", "H"), ("D", "H"),
        ("A", "H"),
        ("H", "U"),
    ):
        dominate(src, dst)

    def arc(u: int, v: int) -> None:
        rows[u] |= 1 << v

    def path(x: int, mid: int, y: int) -> None:
        arc(x, mid)
        arc(mid, y)

    # Clause wiring: positive occurrence -> pair dominates the clause pair;
    # negative -> reverse; absent -> the two crossing paths.
    for ell in range(1, m + 1):
        q = ranges["Y"][0] + 2 * (ell - 1)
        qp = q + 1
        for i in range(1, n + 1):
            v = ranges["X"][0] + 2 * (i - 1)
            vp = v + 1
            pol = _polarity(f, i, ell)
            if pol == 1:
                arc(v, q), arc(v, qp), arc(vp, q), arc(vp, qp)
            elif pol == -1:
                arc(q, v), arc(q, vp), arc(qp, v), arc(qp, vp)
            else:
                path(v, q, vp)
                path(vp, qp, v)

    # U gadget wiring: the gadgets of variable i cross its own pair in
    # opposite directions for p = 1 and p = 2, and every other pair k in
    # matched directions for u vs ubar.
    u0 = ranges["U"][0]
    for i in range(1, n + 1):
        for p in (1, 2):
            u = u0 + 4 * (i - 1) + 2 * (p - 1)
            ub = u + 1
            for k in range(1, n + 1):
                vk = ranges["X"][0] + 2 * (k - 1)
                vkp = vk + 1
                if k != i:
                    path(vk, u, vkp)
                    path(vkp, ub, vk)
                elif p == 1:
                    path(vk, u, vkp)
                    path(vk, ub, vkp)
                else:
                    path(vkp, u, vk)
                    path(vkp, ub, vk)

    t = Tournament(total, tuple(rows))
    threshold = w + 2 * m + 3 * n + 4
    return SatReductionInstance(t, threshold, w, n, m, f, ranges)

def audit_sat_instance(inst: SatReductionInstance) -> list[str]:
    """Re-derive every construction bullet from the built tournament.

    Returns the list of discrepancies (empty on a correct instance): block
    sizes and parities, regularity of A/B/C/D, topological order of the
    acyclic blocks, all block dominations, and the full clause and gadget
    wiring.
    """
    t = inst.tournament
    f = inst.formula
    n, m, w = inst.n_vars, inst.m_clauses, inst.w
    problems: list[str] = []

    def check(cond: bool, msg: str) -> None:
        if not cond:
            problems.append(msg)

    ad_size = (w + 1) // 2 + m + n
    check(w % 2 == 1 and w > n**3 + m**3, "W parity/size rule violated")
    check(ad_size % 2 == 1, "(W+1)/2 + m + n must be odd")
    sizes = {"A": ad_size, "B": w, "C": w, "D": ad_size,
             "X": 2 * n, "Y": 2 * m, "U": 4 * n, "H": 2}
    for name, size in sizes.items():
        lo, hi = inst.ranges[name]
        check(hi - lo == size, f"block {name} has size {hi - lo}, expected {size}")
    check(t.n == 3 * w + 4 * m + 8 * n + 3, "total size != 3W + 4m + 8n + 3")
    check(inst.threshold == w + 2 * m + 3 * n + 4, "threshold != W + 2m + 3n + 4")

    for name in ("A", "B", "C", "D"):
        ids = list(inst.block_ids(name))
        bm = mask_of(ids)
        k = (len(ids) - 1) // 2
        for v in ids:
            check((t.in_mask(v) & bm).bit_count() == k, f"{name} is not regular at {v}")
    for name in ("X", "Y", "U", "H"):
        for u in inst.block_ids(name):
            for v in inst.block_ids(name):
                if u < v:
                    check(t.has_arc(u, v), f"{name} not acyclic in id order at ({u},{v})")

    dominations = (
        ("D", "A"),
        ("A", "B"), ("A", "C"), ("B", "C"), ("B", "D"), ("C", "D"),
        ("A", "X"), ("C", "X"), ("X", "B"), ("X", "D"),
        ("B", "Y"), ("D", "Y"), ("Y", "A"), ("Y", "C"),
        ("U", "A"), ("U", "Y"), ("U", "C"), ("B", "U"), ("D", "U"),
        ("B", "H"), ("C", "H"), ("X", "H"), ("Y", "H"), ("D", "H"),
        ("A", "H"),
        ("H", "U"),
    )
    for src, dst in dominations:
        dm = mask_of(inst.block_ids(dst))
        for u in inst.block_ids(src):
            check(t.out_rows[u] & dm == dm, f"{src} does not dominate {dst} at {u}")

    for ell in range(1, m + 1):
        q = inst.clause_vertex(ell, False)
        qp = inst.clause_vertex(ell, True)
        for i in range(1, n + 1):
            v = inst.var_vertex(i, False)
            vp = inst.var_vertex(i, True)
            pol = _polarity(f, i, ell)
            if pol == 1:
                ok = all(t.has_arc(a, b) for a in (v, vp) for b in (q, qp))
            elif pol == -1:
                ok = all(t.has_arc(a, b) for a in (q, qp) for b in (v, vp))
            else:
                ok = (t.has_arc(v, q) and t.has_arc(q, vp)
                      and t.has_arc(vp, qp) and t.has_arc(qp, v))
            check(ok, f"clause {ell} / variable {i} wiring wrong")

    for i in range(1, n + 1):
        for p in (1, 2):
            u = inst.u_vertex(i, p, False)
            ub = inst.u_vertex(i, p, True)
            for k in range(1, n + 1):
                vk = inst.var_vertex(k, False)
                vkp = inst.var_vertex(k, True)
                if k != i:
                    ok = (t.has_arc(vk, u) and t.has_arc(u, vkp)
                          and t.has_arc(vkp, ub) and t.has_arc(ub, vk))
                elif p == 1:
                    ok = (t.has_arc(vk, u) and t.has_arc(u, vkp)
                          and t.has_arc(vk, ub) and t.has_arc(ub, vkp))
                else:
                    ok = (t.has_arc(vkp, u) and t.has_arc(u, vk)
                          and t.has_arc(vkp, ub) and t.has_arc(ub, vk))
                check(ok, f"gadget u^{p}_{i} vs pair {k} wiring wrong")

    return problems


def nice_ordering_from_assignment(
    inst: SatReductionInstance, assignment: Sequence[bool]
) -> Ordering:
    """The nice ordering placing each variable pair in its assigned zone:
    A, true-zone pairs, B, U, Y, C, false-zone pairs, D, H, with regular
    blocks in their natural rotational orders."""
    if len(assignment) != inst.n_vars:
        raise ValueError("assignment must cover every variable")
    perm: list[int] = []
    perm.extend(inst.block_ids("A"))
    for i in range(1, inst.n_vars + 1):
        if assignment[i - 1]:
            perm += [inst.var_vertex(i, False), inst.var_vertex(i, True)]
    perm.extend(inst.block_ids("B"))
    perm.extend(inst.block_ids("U"))
    perm.extend(inst.block_ids("Y"))
    perm.extend(inst.block_ids("C"))
    for i in range(1, inst.n_vars + 1):
        if not assignment[i - 1]:
            perm += [inst.var_vertex(i, False), inst.var_vertex(i, True)]
    perm.extend(inst.block_ids("D"))
    perm.extend(inst.block_ids("H"))
    return Ordering.from_perm(perm)


class WidthAboveThresholdError(DwlabError):
    """Nice ordering at or above the threshold; carries an offending clause vertex."""

    def __init__(self, vertex: int, degree: int, threshold: int):
        super().__init__(
            f"clause vertex {vertex} has backward degree {degree} >= threshold {threshold}"
        )
        self.vertex = vertex


def _check_nice(inst: SatReductionInstance, ordering: Ordering) -> None:
    t = inst.tournament
    pos = ordering.pos
    bounds = {}
    for name in ("A", "B", "C", "D", "U", "Y", "H"):
        ids = list(inst.block_ids(name))
        bounds[name] = (min(pos[v] for v in ids), max(pos[v] for v in ids))
    for left, right in (("A", "B"), ("B", "U"), ("U", "Y"), ("Y", "C"),
                        ("C", "D"), ("D", "H")):
        if bounds[left][1] > bounds[right][0]:
            raise NotNiceOrderingError(f"blocks {left} and {right} out of order")
    for name in ("U", "Y"):
        ids = list(inst.block_ids(name))
        if [pos[v] for v in ids] != sorted(pos[v] for v in ids):
            raise NotNiceOrderingError(f"{name} does not respect its topological order")
    for name in ("A", "B", "C", "D"):
        ids = list(inst.block_ids(name))
        sub, remap = induced(t, ids)
        sub_perm = sorted((remap[v] for v in ids), key=lambda nv: pos[ids[nv]])
        width = backward_profile(sub, Ordering.from_perm(sub_perm)).width
        if width != (len(ids) - 1) // 2:
            raise NotNiceOrderingError(f"block {name} restriction has width {width}")
    for i in range(1, inst.n_vars + 1):
        v, vp = inst.var_vertex(i, False), inst.var_vertex(i, True)
        if pos[v] > pos[vp]:
            raise NotNiceOrderingError(f"pair {i} is reversed")
        in_true = bounds["A"][1] < pos[v] and pos[vp] < bounds["B"][0]
        in_false = bounds["C"][1] < pos[v] and pos[vp] < bounds["D"][0]
        if not (in_true or in_false):
            raise NotNiceOrderingError(f"pair {i} is split or outside the zones")


def assignment_from_nice_ordering(
    inst: SatReductionInstance, ordering: Ordering
) -> list[bool]:
    """Read an assignment off the zones of a nice ordering of width below
    the threshold; the result is checked to satisfy the formula."""
    if ordering.n != inst.tournament.n:
        raise ValueError("ordering size mismatch")
    _check_nice(inst, ordering)
    profile = backward_profile(inst.tournament, ordering)
    if profile.width >= inst.threshold:
        worst = max(
            (inst.clause_vertex(ell, primed) for ell in range(1, inst.m_clauses + 1)
             for primed in (False, True)),
            key=lambda v: profile.per_vertex[v],
        )
        raise WidthAboveThresholdError(worst, profile.per_vertex[worst], inst.threshold)
    b_start = min(ordering.pos[v] for v in inst.block_ids("B"))
    assignment = []
    for i in range(1, inst.n_vars + 1):
        assignment.append(ordering.pos[inst.var_vertex(i, False)] < b_start)
    assert satisfies(inst.formula, assignment)
    return assignment


# ---------------------------------------------------------------------------
# Construction 2: cubic graph -> FVST on a sparse tournament


@dataclass(frozen=True)
class CubicGraph:
    """Simple 3-regular graph; edges are sorted 0-based pairs."""

    n: int
    edges: FrozenSet[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "CubicGraph":
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u},{v})")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        g = cls(n, frozenset(norm))
        deg = [0] * n
        for u, v in norm:
            deg[u] += 1
            deg[v] += 1
        if any(d != 3 for d in deg):
            raise ValueError("graph is not cubic")
        if n % 2:
            raise ValueError("cubic graphs have an even vertex count")
        return g

    def neighbours(self, v: int) -> list[int]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return sorted(out)


@dataclass(frozen=True)
class FvstReductionInstance:
    tournament: Tournament
    ordering: Ordering  # the emitted sparse ordering (identity layout)
    offset: int  # |E(G)|
    graph: CubicGraph
    vertex_arcs: tuple[tuple[int, int], ...]  # (t_i, h_i) per graph vertex
    edge_arcs: dict[tuple[int, int], tuple[int, int]]  # edge -> (tail, head)

    def pattern_base(self, i: int) -> int:
        return 8 * i

    def h(self, i: int) -> int:
        return 8 * i

    def u_slot(self, i: int, neighbour: int) -> int:
        """The vertex carrying neighbour's gadget inside pattern i."""
        return 8 * i + 1 + self.graph.neighbours(i).index(neighbour)

    def t(self, i: int) -> int:
        return 8 * i + 4

    def xs(self, i: int) -> tuple[int, int, int]:
        return (8 * i + 5, 8 * i + 6, 8 * i + 7)

    def pattern_map(self) -> dict[int, tuple[int, ...]]:
        return {i: tuple(range(8 * i, 8 * i + 8)) for i in range(self.graph.n)}


def cubic_to_fvst(g: CubicGraph) -> FvstReductionInstance:
    """Pattern <h_i, u^j_i, u^k_i, u^l_i, t_i, x^1_i, x^2_i, x^3_i> per graph
    vertex (neighbours in ascending order), patterns in index order; the
    only backward arcs are (t_i, h_i) per vertex and (u^i_j, u^j_i) per
    edge i < j.  The emitted identity ordering is sparse with width one."""
    total = 8 * g.n
    rows = [0] * total
    for u in range(total):
        for v in range(u + 1, total):
            rows[u] |= 1 << v

    def flip(tail: int, head: int) -> None:
        # head < tail: reverse the forward arc (head, tail) into (tail, head)
        rows[head] &= ~(1 << tail)
        rows[tail] |= 1 << head

    vertex_arcs = []

    def u_slot(i: int, neighbour: int) -> int:
        return 8 * i + 1 + g.neighbours(i).index(neighbour)

    for i in range(g.n):
        t_i, h_i = 8 * i + 4, 8 * i
        flip(t_i, h_i)
        vertex_arcs.append((t_i, h_i))
    edge_arcs = {}
    for (i, j) in sorted(g.edges):
        tail, head = u_slot(j, i), u_slot(i, j)
        flip(tail, head)
        edge_arcs[(i, j)] = (tail, head)

    t = Tournament(total, tuple(rows))
    order = Ordering.identity(total)
    profile = backward_profile(t, order)
    assert profile.width == 1
    assert profile.total_backward == g.n + len(g.edges)
    return FvstReductionInstance(t, order, len(g.edges), g, tuple(vertex_arcs), edge_arcs)


def is_vertex_cover(g: CubicGraph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


def vc_to_fvst_solution(
    g: CubicGraph, inst: FvstReductionInstance, cover: Iterable[int]
) -> FrozenSet[int]:
    """Feedback vertex set of size |cover| + |E| from a vertex cover:
    h_i for covered vertices, the three u-slots for uncovered ones, and the
    lower-pattern slot for edges covered twice."""
    s = set(cover)
    if not is_vertex_cover(g, s):
        raise ValueError("input is not a vertex cover")
    x: set[int] = set()
    for i in range(g.n):
        if i in s:
            x.add(inst.h(i))
        else:
            x.update(inst.u_slot(i, nb) for nb in g.neighbours(i))
    for (i, j) in g.edges:
        if i in s and j in s:
            x.add(inst.u_slot(j, i))
    assert len(x) == len(s) + len(g.edges)
    assert _is_fvs(inst.tournament, x)
    return frozenset(x)


def _is_fvs(t: Tournament, x: Iterable[int]) -> bool:
    rest = set(range(t.n)) - set(x)
    if not rest:
        return True
    sub, _ = induced(t, rest)
    return is_acyclic(sub)


def _saturated(inst: FvstReductionInstance, arc: tuple[int, int], x: set[int]) -> bool:
    tail, head = arc
    return all(v in x for v in range(head + 1, tail))


def fvst_solution_to_vc(
    inst: FvstReductionInstance, x: Iterable[int]
) -> FrozenSet[int]:
    """Vertex cover of size <= |X| - |E| from a feedback vertex set X.

    X is first normalised without growing: saturated edge arcs trade the
    in-between x-slots for the pattern's u-slots, doubly-hit edge arcs trade
    the head for the pattern's h, and members touching no backward arc are
    dropped.  The cover then reads off the unsaturated vertex arcs.
    """
    g = inst.graph
    xset = set(x)
    if not _is_fvs(inst.tournament, xset):
        raise ValueError("input is not a feedback vertex set")
    original_size = len(xset)

    edge_arcs = sorted(inst.edge_arcs.values(), key=lambda a: a[1])
    for tail, head in edge_arcs:
        if tail in xset or head in xset:
            continue
        assert _saturated(inst, (tail, head), xset)
        i = head // 8
        xset.difference_update(inst.xs(i))
        xset.update(inst.u_slot(i, nb) for nb in g.neighbours(i))
        assert _is_fvs(inst.tournament, xset)
    for tail, head in edge_arcs:
        if tail in xset and head in xset:
            i = head // 8
            xset.discard(head)
            xset.add(inst.h(i))
            assert _is_fvs(inst.tournament, xset)
    incident = set()
    for tail, head in list(inst.edge_arcs.values()) + list(inst.vertex_arcs):
        incident.update((tail, head))
    xset &= incident
    assert _is_fvs(inst.tournament, xset)
    assert len(xset) <= original_size

    cover = frozenset(
        i for i, arc in enumerate(inst.vertex_arcs)
        if not _saturated(inst, arc, xset)
    )
    assert is_vertex_cover(g, cover)
    assert len(cover) <= original_size - len(g.edges)
    return cover

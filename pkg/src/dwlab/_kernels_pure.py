"""Pure-Python subset-DP kernels (fallback for the compiled extension).

Both kernels run over all 2^n vertex subsets.  ``dw_dp`` computes the
degreewidth: when v is appended after a placed set P, its final backward
degree is |N+(v) & P| + |N-(v) & (V \\ P \\ {v})|, fully determined by
(v, P), so f(S) = min over v in S of max(f(S-v), cost(v, S-v)).  ``fas_dp``
minimises the total number of backward arcs with g(S) = min over v in S of
g(S-v) + |N+(v) & (S-v)|.

Witness orderings are recovered by re-scanning predecessors (no parent
table); ties break toward the smallest vertex id, which the compiled
kernels replicate bit for bit.
"""

from __future__ import annotations

IMPL = "pure"

_HUGE = 1 << 30


def _prepare(n: int, out_rows) -> tuple[int, list[int], list[int]]:
    if not (1 <= n <= 24):
        raise ValueError("subset DP supports 1 <= n <= 24")
    full = (1 << n) - 1
    outr = [int(r) for r in out_rows]
    inr = [full & ~outr[v] & ~(1 << v) for v in range(n)]
    return full, outr, inr


def dw_dp(n: int, out_rows) -> tuple[int, list[int]]:
    full, outr, inr = _prepare(n, out_rows)
    f = [0] * (full + 1)
    for s in range(1, full + 1):
        best = _HUGE
        rest = s
        inv = full ^ s
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            p = s ^ b
            c = (outr[v] & p).bit_count() + (inr[v] & inv).bit_count()
            fp = f[p]
            if c > fp:
                fp = c
            if fp < best:
                best = fp
        f[s] = best
    perm = _recover(n, full, f, outr, inr, maximum=True)
    return f[full], perm


def fas_dp(n: int, out_rows) -> tuple[int, list[int]]:
    full, outr, inr = _prepare(n, out_rows)
    g = [0] * (full + 1)
    for s in range(1, full + 1):
        best = _HUGE
        rest = s
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            c = g[s ^ b] + (outr[v] & (s ^ b)).bit_count()
            if c < best:
                best = c
        g[s] = best
    perm = _recover(n, full, g, outr, inr, maximum=False)
    return g[full], perm


def _recover(n, full, table, outr, inr, maximum):
    rev = []
    s = full
    while s:
        target = table[s]
        rest = s
        inv = full ^ s
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            p = s ^ b
            if maximum:
                c = (outr[v] & p).bit_count() + (inr[v] & inv).bit_count()
                val = max(table[p], c)
            else:
                val = table[p] + (outr[v] & p).bit_count()
            if val == target:
                rev.append(v)
                s = p
                break
        else:  # pragma: no cover - table is self-consistent by construction
            raise AssertionError("DP table reconstruction failed")
    rev.reverse()
    return rev

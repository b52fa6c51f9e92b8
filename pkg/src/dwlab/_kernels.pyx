# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-DP kernels; semantics identical to _kernels_pure."""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

IMPL = "cython"

ctypedef unsigned long long u64


def dw_dp(int n, out_rows):
    if n < 1 or n > 24:
        raise ValueError("subset DP supports 1 <= n <= 24")
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* outr = <u64*>malloc(n * sizeof(u64))
    cdef u64* inr = <u64*>malloc(n * sizeof(u64))
    cdef int* f = <int*>malloc((<size_t>full + 1) * sizeof(int))
    if outr == NULL or inr == NULL or f == NULL:
        free(outr); free(inr); free(f)
        raise MemoryError()
    cdef int v, c, fp, best, found
    cdef u64 s, p, rest, b, inv
    try:
        for v in range(n):
            outr[v] = <u64>out_rows[v]
            inr[v] = full & ~outr[v] & ~((<u64>1) << v)
        f[0] = 0
        s = 1
        while s <= full:
            best = 1 << 30
            rest = s
            inv = full ^ s
            while rest:
                b = rest & (0 - rest)
                v = __builtin_ctzll(b)
                rest ^= b
                p = s ^ b
                c = __builtin_popcountll(outr[v] & p) + __builtin_popcountll(inr[v] & inv)
                fp = f[p]
                if c > fp:
                    fp = c
                if fp < best:
                    best = fp
            f[s] = best
            s += 1

        perm = []
        s = full
        while s:
            rest = s
            inv = full ^ s
            found = 0
            while rest:
                b = rest & (0 - rest)
                v = __builtin_ctzll(b)
                rest ^= b
                p = s ^ b
                c = __builtin_popcountll(outr[v] & p) + __builtin_popcountll(inr[v] & inv)
                fp = f[p]
                if c > fp:
                    fp = c
                if fp == f[s]:
                    perm.append(v)
                    s = p
                    found = 1
                    break
            if not found:
                raise AssertionError("DP table reconstruction failed")
        perm.reverse()
        return f[full], perm
    finally:
        free(outr); free(inr); free(f)


def fas_dp(int n, out_rows):
    if n < 1 or n > 24:
        raise ValueError("subset DP supports 1 <= n <= 24")
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* outr = <u64*>malloc(n * sizeof(u64))
    cdef int* g = <int*>malloc((<size_t>full + 1) * sizeof(int))
    if outr == NULL or g == NULL:
        free(outr); free(g)
        raise MemoryError()
    cdef int v, c, best, found
    cdef u64 s, p, rest, b
    try:
        for v in range(n):
            outr[v] = <u64>out_rows[v]
        g[0] = 0
        s = 1
        while s <= full:
            best = 1 << 30
            rest = s
            while rest:
                b = rest & (0 - rest)
                v = __builtin_ctzll(b)
                rest ^= b
                p = s ^ b
                c = g[p] + __builtin_popcountll(outr[v] & p)
                if c < best:
                    best = c
            g[s] = best
            s += 1

        perm = []
        s = full
        while s:
            rest = s
            found = 0
            while rest:
                b = rest & (0 - rest)
                v = __builtin_ctzll(b)
                rest ^= b
                p = s ^ b
                if g[p] + __builtin_popcountll(outr[v] & p) == g[s]:
                    perm.append(v)
                    s = p
                    found = 1
                    break
            if not found:
                raise AssertionError("DP table reconstruction failed")
        perm.reverse()
        return g[full], perm
    finally:
        free(outr); free(g)

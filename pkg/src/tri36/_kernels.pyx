# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

__all__ = ["canonical_code", "canonical_coloring", "kempe_neighbors"]

cdef int[6][2] _PAIRS = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


cdef int _code_from(const int* off, const int* nb, int n, int u, int v, bint reflect,
                    unsigned char* code, const unsigned char* best, bint have_best,
                    int* label, int* first, int* order):
    # returns 1 if code was fully written and is <= best, 0 if abandoned
    cdef int i, x, lo, deg, start, step, j, y, nxt = 1, head = 0, tail = 1, pos = 0
    cdef unsigned char c
    cdef bint tight = have_best
    for i in range(n):
        label[i] = -1
    label[u] = 0
    first[u] = v
    order[0] = u
    while head < tail:
        x = order[head]
        head += 1
        lo = off[x]
        deg = off[x + 1] - lo
        start = 0
        while nb[lo + start] != first[x]:
            start += 1
        for step in range(deg):
            if reflect:
                j = (start - step + deg) % deg
            else:
                j = (start + step) % deg
            y = nb[lo + j]
            if label[y] < 0:
                label[y] = nxt
                first[y] = x
                nxt += 1
                order[tail] = y
                tail += 1
            c = <unsigned char>(label[y] + 1)
            if tight:
                if c > best[pos]:
                    return 0
                if c < best[pos]:
                    tight = False
            code[pos] = c
            pos += 1
        if tight and best[pos] != 0:
            tight = False
        code[pos] = 0
        pos += 1
    return 1


def canonical_code(offsets, nbrs, bint reflect):
    cdef int n = len(offsets) - 1
    if n > 255:
        raise ValueError("canonical_code supports at most 255 vertices")
    cdef int m2 = len(nbrs)
    cdef int total = m2 + n
    cdef int* off = <int*>malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*>malloc((m2 + 1) * sizeof(int))
    cdef int* label = <int*>malloc((n + 1) * sizeof(int))
    cdef int* first = <int*>malloc((n + 1) * sizeof(int))
    cdef int* order = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* code = <unsigned char*>malloc(total + 1)
    cdef unsigned char* best = <unsigned char*>malloc(total + 1)
    cdef bint have_best = False
    cdef int i, u, idx
    try:
        for i in range(n + 1):
            off[i] = offsets[i]
        for i in range(m2):
            nb[i] = nbrs[i]
        for u in range(n):
            for idx in range(off[u], off[u + 1]):
                if _code_from(off, nb, n, u, nb[idx], reflect, code, best, have_best,
                              label, first, order):
                    memcpy(best, code, total)
                    have_best = True
        if not have_best:
            return b""
        return best[:total]
    finally:
        free(off)
        free(nb)
        free(label)
        free(first)
        free(order)
        free(code)
        free(best)


def canonical_coloring(colors):
    cdef const unsigned char[:] src = bytes(colors)
    cdef int n = src.shape[0]
    cdef int[4] perm = [-1, -1, -1, -1]
    cdef int nxt = 0, i
    out = bytearray(n)
    cdef unsigned char[:] dst = out
    for i in range(n):
        if perm[src[i]] < 0:
            perm[src[i]] = nxt
            nxt += 1
        dst[i] = perm[src[i]]
    return bytes(out)


cdef bytes _canon(unsigned char* buf, int n):
    cdef int[4] perm = [-1, -1, -1, -1]
    cdef int nxt = 0, i
    for i in range(n):
        if perm[buf[i]] < 0:
            perm[buf[i]] = nxt
            nxt += 1
        buf[i] = perm[buf[i]]
    return buf[:n]


def kempe_neighbors(offsets, nbrs, bytes colors):
    cdef int n = len(offsets) - 1
    cdef int m2 = len(nbrs)
    cdef const unsigned char* col = colors
    cdef int* off = <int*>malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*>malloc((m2 + 1) * sizeof(int))
    cdef int* comp = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    cdef unsigned char* buf = <unsigned char*>malloc(n + 1)
    cdef int p, ci, cj, start, head, tail, x, y, idx, i
    out = set()
    try:
        for i in range(n + 1):
            off[i] = offsets[i]
        for i in range(m2):
            nb[i] = nbrs[i]
        for p in range(6):
            ci = _PAIRS[p][0]
            cj = _PAIRS[p][1]
            for i in range(n):
                seen[i] = 0
            for start in range(n):
                if seen[start] or (col[start] != ci and col[start] != cj):
                    continue
                comp[0] = start
                seen[start] = 1
                head = 0
                tail = 1
                while head < tail:
                    x = comp[head]
                    head += 1
                    for idx in range(off[x], off[x + 1]):
                        y = nb[idx]
                        if not seen[y] and (col[y] == ci or col[y] == cj):
                            seen[y] = 1
                            comp[tail] = y
                            tail += 1
                memcpy(buf, col, n)
                for i in range(tail):
                    x = comp[i]
                    buf[x] = cj if col[x] == ci else ci
                out.add(_canon(buf, n))
        return out
    finally:
        free(off)
        free(nb)
        free(comp)
        free(seen)
        free(buf)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_kernels_py.py`` for the reference semantics."""

from libc.math cimport sqrt
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef enum:
    MAXN = 11
    STACK_DEG = 4096


cdef struct Part:
    int order[MAXN]
    int cstart[MAXN]
    int clen[MAXN]
    int ncells


cdef struct Best:
    uint64_t code
    int found
    int order[MAXN]


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef void refine(const uint64_t* masks, Part* p, int n) nogil:
    cdef int changed = 1
    cdef int i, c, j, s, L, a, b, key, tmpv, tmpk, r
    cdef uint64_t w
    cdef int keys[MAXN]
    cdef int verts[MAXN]
    while changed:
        changed = 0
        i = 0
        while i < p.ncells and p.ncells < n:
            w = 0
            for j in range(p.cstart[i], p.cstart[i] + p.clen[i]):
                w |= (<uint64_t>1) << p.order[j]
            c = 0
            while c < p.ncells:
                L = p.clen[c]
                if L == 1:
                    c += 1
                    continue
                s = p.cstart[c]
                for j in range(L):
                    verts[j] = p.order[s + j]
                    keys[j] = popcount(masks[verts[j]] & w)
                # stable insertion sort by key
                for a in range(1, L):
                    tmpv = verts[a]
                    tmpk = keys[a]
                    b = a - 1
                    while b >= 0 and keys[b] > tmpk:
                        verts[b + 1] = verts[b]
                        keys[b + 1] = keys[b]
                        b -= 1
                    verts[b + 1] = tmpv
                    keys[b + 1] = tmpk
                if keys[0] == keys[L - 1]:
                    c += 1
                    continue
                changed = 1
                for j in range(L):
                    p.order[s + j] = verts[j]
                # count fragments, shift later cells right to make room
                r = 1
                for j in range(1, L):
                    if keys[j] != keys[j - 1]:
                        r += 1
                for j in range(p.ncells - 1, c, -1):
                    p.cstart[j + r - 1] = p.cstart[j]
                    p.clen[j + r - 1] = p.clen[j]
                p.ncells += r - 1
                key = c
                p.cstart[key] = s
                p.clen[key] = 1
                for j in range(1, L):
                    if keys[j] != keys[j - 1]:
                        key += 1
                        p.cstart[key] = s + j
                        p.clen[key] = 1
                    else:
                        p.clen[key] += 1
                c += r
            i += 1


cdef uint64_t leaf_code(const uint64_t* masks, const int* order, int n) nogil:
    cdef uint64_t code = 0
    cdef uint64_t row
    cdef int i, j
    for i in range(n):
        row = masks[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


cdef void search(const uint64_t* masks, Part* p, int n, Best* best) nogil:
    cdef int i, t, v, u, s, L, j, ntried, skip, pos
    cdef int tried[MAXN]
    cdef int cand[MAXN]
    cdef uint64_t code
    cdef Part child
    if p.ncells == n:
        for i in range(n):
            child.order[i] = p.order[p.cstart[i]]
        code = leaf_code(masks, child.order, n)
        if not best.found or code < best.code:
            best.found = 1
            best.code = code
            for i in range(n):
                best.order[i] = child.order[i]
        return
    t = 0
    while p.clen[t] == 1:
        t += 1
    s = p.cstart[t]
    L = p.clen[t]
    for j in range(L):
        cand[j] = p.order[s + j]
    # ascending label order
    for i in range(1, L):
        v = cand[i]
        j = i - 1
        while j >= 0 and cand[j] > v:
            cand[j + 1] = cand[j]
            j -= 1
        cand[j + 1] = v
    ntried = 0
    for i in range(L):
        v = cand[i]
        skip = 0
        for j in range(ntried):
            u = tried[j]
            if (masks[u] & ~((<uint64_t>1) << v)) == (masks[v] & ~((<uint64_t>1) << u)):
                skip = 1
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        child = p[0]
        # individualize v: [v] then the rest of the cell in its existing order
        child.order[s] = v
        pos = s + 1
        for j in range(L):
            if p.order[s + j] != v:
                child.order[pos] = p.order[s + j]
                pos += 1
        for j in range(p.ncells - 1, t, -1):
            child.cstart[j + 1] = p.cstart[j]
            child.clen[j + 1] = p.clen[j]
        child.cstart[t] = s
        child.clen[t] = 1
        child.cstart[t + 1] = s + 1
        child.clen[t + 1] = L - 1
        child.ncells = p.ncells + 1
        refine(masks, &child, n)
        search(masks, &child, n, best)


def canonical_labeling(int n, masks):
    """Compiled twin of ``_kernels_py.canonical_labeling`` (``n <= 11``)."""
    if n > MAXN:
        raise ValueError(f"compiled kernel supports n <= {MAXN}")
    if n == 0:
        return 0, []
    cdef uint64_t cm[MAXN]
    cdef int degs[MAXN]
    cdef Part p
    cdef Best best
    cdef int v, d, pos, maxd, start
    for v in range(n):
        cm[v] = <uint64_t>masks[v]
        degs[v] = popcount(cm[v])
    maxd = 0
    for v in range(n):
        if degs[v] > maxd:
            maxd = degs[v]
    p.ncells = 0
    pos = 0
    for d in range(maxd + 1):
        start = pos
        for v in range(n):
            if degs[v] == d:
                p.order[pos] = v
                pos += 1
        if pos > start:
            p.cstart[p.ncells] = start
            p.clen[p.ncells] = pos - start
            p.ncells += 1
    best.found = 0
    best.code = 0
    with nogil:
        refine(cm, &p, n)
        search(cm, &p, n, &best)
    return int(best.code), [best.order[v] for v in range(n)]


cdef inline void kahan_add(double* total, double* comp, double x) noexcept nogil:
    cdef double y = x - comp[0]
    cdef double t = total[0] + y
    comp[0] = (t - total[0]) - y
    total[0] = t


def sombor_sum(int n, cnp.ndarray edges):
    """Sum of sqrt(d(u)^2 + d(v)^2) over a C-contiguous int64 ``(m, 2)`` array.

    Consecutive edges with the same squared sum are folded into one
    ``count * sqrt(s)`` term (sorted edge lists produce long runs), and the
    terms are added with Kahan compensation.
    """
    if cnp.PyArray_TYPE(edges) != cnp.NPY_INT64 or not cnp.PyArray_IS_C_CONTIGUOUS(edges):
        edges = np.ascontiguousarray(edges, dtype=np.int64)
    cdef Py_ssize_t m = cnp.PyArray_DIM(edges, 0), i
    if m == 0:
        return 0.0
    cdef const int64_t* e = <const int64_t*>cnp.PyArray_DATA(edges)
    cdef int64_t du, dv, sq, prev = -1, run = 0, cur
    cdef int32_t cnt
    cdef double total = 0.0, comp = 0.0
    cdef int32_t local[STACK_DEG]
    cdef int32_t* deg = local
    if n > STACK_DEG:
        deg = <int32_t*>malloc(n * sizeof(int32_t))
        if deg == NULL:
            raise MemoryError()
    with nogil:
        for i in range(n):
            deg[i] = 0
        # first endpoints arrive in runs when rows are sorted: count them in a
        # register instead of chaining increments through memory
        cur = e[0]
        cnt = 0
        for i in range(m):
            if e[2 * i] == cur:
                cnt += 1
            else:
                deg[cur] += cnt
                cur = e[2 * i]
                cnt = 1
            deg[e[2 * i + 1]] += 1
        deg[cur] += cnt
        for i in range(m):
            du = deg[e[2 * i]]
            dv = deg[e[2 * i + 1]]
            sq = du * du + dv * dv
            if sq == prev:
                run += 1
            else:
                if run:
                    kahan_add(&total, &comp, <double>run * sqrt(<double>prev))
                prev = sq
                run = 1
        kahan_add(&total, &comp, <double>run * sqrt(<double>prev))
    if deg != local:
        free(deg)
    return total


def extremal_edge_array(int n, int k):
    cdef cnp.npy_intp dims[2]
    dims[0] = n
    dims[1] = 2
    cdef cnp.ndarray out = cnp.PyArray_EMPTY(2, dims, cnp.NPY_INT64, 0)
    cdef int64_t* e = <int64_t*>cnp.PyArray_DATA(out)
    cdef int i
    e[0] = 0; e[1] = 1
    e[2] = 0; e[3] = 2
    e[4] = 1; e[5] = 2
    for i in range(3, k + 3):
        e[2 * i] = 2
        e[2 * i + 1] = i
    for i in range(k + 3, n):
        e[2 * i] = i - 1
        e[2 * i + 1] = i
    cnp.PyArray_CLEARFLAGS(out, cnp.NPY_ARRAY_WRITEABLE)
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the table-driven kernels in :mod:`pline._pykernels`.

Same signatures, same encodings, same results; only faster.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t
from libc.stdlib cimport calloc, free

cnp.import_array()

ctypedef const int64_t[:, ::1] table_t


cdef inline bint _det_unit(table_t add, table_t mul, const int64_t[::1] neg,
                           const uint8_t[::1] unit, int64_t a, int64_t b,
                           int64_t c, int64_t d) noexcept nogil:
    return unit[add[mul[a, d], neg[mul[b, c]]]] != 0


cdef bint _injective(table_t add, table_t mul, int64_t a, int64_t b, int64_t c,
                     int64_t d, uint8_t* seen) noexcept nogil:
    # seen: scratch of n*n bytes, zeroed on entry and on exit
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t x, y, code, k
    cdef bint ok = True
    for x in range(n):
        for y in range(n):
            code = add[mul[x, a], mul[y, c]] + n * add[mul[x, b], mul[y, d]]
            if seen[code]:
                ok = False
                break
            seen[code] = 1
        if not ok:
            break
    for k in range(n * n):
        seen[k] = 0
    return ok


cdef bint _inv(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
               bint commutative, int64_t a, int64_t b, int64_t c, int64_t d,
               uint8_t* seen) noexcept nogil:
    if commutative:
        return _det_unit(add, mul, neg, unit, a, b, c, d)
    return _injective(add, mul, a, b, c, d, seen)


cdef uint8_t* _scratch(Py_ssize_t n) except NULL:
    cdef uint8_t* seen = <uint8_t*> calloc(n * n + 1, 1)
    if seen == NULL:
        raise MemoryError()
    return seen


def invertible(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
               bint commutative, int64_t a, int64_t b, int64_t c, int64_t d):
    cdef uint8_t* seen = _scratch(add.shape[0])
    try:
        return bool(_inv(add, mul, neg, unit, commutative, a, b, c, d, seen))
    finally:
        free(seen)


def invertible_many(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
                    bint commutative, mats):
    cdef const int64_t[:, ::1] m = np.ascontiguousarray(mats, dtype=np.int64).reshape(-1, 4)
    cdef Py_ssize_t k, count = m.shape[0]
    out = np.zeros(count, dtype=np.uint8)
    cdef uint8_t[::1] o = out
    cdef uint8_t* seen = _scratch(add.shape[0])
    try:
        with nogil:
            for k in range(count):
                o[k] = _inv(add, mul, neg, unit, commutative, m[k, 0], m[k, 1], m[k, 2], m[k, 3], seen)
    finally:
        free(seen)
    return out


def gl2_codes(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
              bint commutative):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t total = n * n * n * n
    out = np.empty(total, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef Py_ssize_t count = 0
    cdef int64_t a, b, c, d
    cdef uint8_t* seen = _scratch(n)
    try:
        with nogil:
            for d in range(n):
                for c in range(n):
                    for b in range(n):
                        for a in range(n):
                            if _inv(add, mul, neg, unit, commutative, a, b, c, d, seen):
                                o[count] = a + n * b + n * n * c + n * n * n * d
                                count += 1
    finally:
        free(seen)
    return out[:count].copy()


def admissible_mask(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
                    bint commutative):
    cdef Py_ssize_t n = add.shape[0]
    out = np.zeros(n * n, dtype=np.uint8)
    cdef uint8_t[::1] o = out
    cdef int64_t a, b, c, d
    cdef bint found
    cdef uint8_t* seen = _scratch(n)
    try:
        with nogil:
            for b in range(n):
                for a in range(n):
                    found = False
                    for d in range(n):
                        for c in range(n):
                            if _inv(add, mul, neg, unit, commutative, a, b, c, d, seen):
                                found = True
                                break
                        if found:
                            break
                    o[a + n * b] = found
    finally:
        free(seen)
    return out


def unimodular_mask(table_t add, table_t mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef int64_t one = 1 if n > 1 else 0
    out = np.zeros(n * n, dtype=np.uint8)
    cdef uint8_t[::1] o = out
    cdef int64_t a, b, x, y
    cdef bint found
    with nogil:
        for b in range(n):
            for a in range(n):
                found = False
                for x in range(n):
                    for y in range(n):
                        if add[mul[a, x], mul[b, y]] == one:
                            found = True
                            break
                    if found:
                        break
                o[a + n * b] = found
    return out


def distant_matrix(table_t add, table_t mul, const int64_t[::1] neg, const uint8_t[::1] unit,
                   bint commutative, pairs):
    cdef const int64_t[:, ::1] p = np.ascontiguousarray(pairs, dtype=np.int64).reshape(-1, 2)
    cdef Py_ssize_t m = p.shape[0], i, j
    out = np.zeros((m, m), dtype=np.uint8)
    cdef uint8_t[:, ::1] o = out
    cdef uint8_t* seen = _scratch(add.shape[0])
    try:
        with nogil:
            for i in range(m):
                for j in range(m):
                    o[i, j] = _inv(add, mul, neg, unit, commutative, p[i, 0], p[i, 1], p[j, 0], p[j, 1], seen)
    finally:
        free(seen)
    return out


def bfs_distances(adj):
    cdef const uint8_t[:, ::1] g = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef Py_ssize_t m = g.shape[0], s, head, tail, u, v
    out = np.full((m, m), -1, dtype=np.int64)
    cdef int64_t[:, ::1] dist = out
    queue = np.empty(max(m, 1), dtype=np.int64)
    cdef int64_t[::1] q = queue
    with nogil:
        for s in range(m):
            dist[s, s] = 0
            q[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = q[head]
                head += 1
                for v in range(m):
                    if g[u, v] and dist[s, v] < 0:
                        dist[s, v] = dist[s, u] + 1
                        q[tail] = v
                        tail += 1
    return out


def group_closure(table_t add, table_t mul, gens, Py_ssize_t limit):
    cdef Py_ssize_t n = add.shape[0]
    cdef int64_t space = n * n * n * n
    if space > (1 << 28):
        raise ValueError("ring too large for the compiled closure")
    cdef const int64_t[:, ::1] G = np.ascontiguousarray(gens, dtype=np.int64).reshape(-1, 4)
    cdef Py_ssize_t ng = G.shape[0], k, head = 0, tail = 1
    cdef Py_ssize_t cap = max(1, min(space, limit))
    queue = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] q = queue
    cdef uint8_t* seen = <uint8_t*> calloc(space, 1)
    if seen == NULL:
        raise MemoryError()
    cdef int64_t code, a, b, c, d, r
    cdef bint overflow = False
    try:
        code = 1 + n * n * n if n > 1 else 0
        q[0] = code
        seen[code] = 1
        with nogil:
            while head < tail and not overflow:
                code = q[head]
                head += 1
                a = code % n
                b = code // n % n
                c = code // (n * n) % n
                d = code // (n * n * n)
                for k in range(ng):
                    r = (add[mul[a, G[k, 0]], mul[b, G[k, 2]]]
                         + n * add[mul[a, G[k, 1]], mul[b, G[k, 3]]]
                         + n * n * add[mul[c, G[k, 0]], mul[d, G[k, 2]]]
                         + n * n * n * add[mul[c, G[k, 1]], mul[d, G[k, 3]]])
                    if not seen[r]:
                        if tail >= cap:
                            overflow = True
                            break
                        seen[r] = 1
                        q[tail] = r
                        tail += 1
    finally:
        free(seen)
    if overflow:
        raise OverflowError(tail + 1)
    return np.sort(queue[:tail])


def act_on_pairs(table_t add, table_t mul, pairs, mats):
    cdef Py_ssize_t n = add.shape[0]
    cdef const int64_t[:, ::1] P = np.ascontiguousarray(pairs, dtype=np.int64).reshape(-1, 2)
    cdef const int64_t[:, ::1] M = np.ascontiguousarray(mats, dtype=np.int64).reshape(-1, 4)
    cdef Py_ssize_t g, k, ng = M.shape[0], npairs = P.shape[0]
    out = np.empty((ng, npairs), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    cdef int64_t x, y
    with nogil:
        for g in range(ng):
            for k in range(npairs):
                x = P[k, 0]
                y = P[k, 1]
                o[g, k] = (add[mul[x, M[g, 0]], mul[y, M[g, 2]]]
                           + n * add[mul[x, M[g, 1]], mul[y, M[g, 3]]])
    return out

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled closure and class-counting kernels.

Same contract as the fallback module: matrices are bytes of length n*n over
a field given by its add/mul tables; closures are returned sorted so both
backends agree byte for byte.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


cdef inline void c_mat_mul(const unsigned char *a, const unsigned char *b,
                           unsigned char *out, int n, int q,
                           const unsigned char *add_t,
                           const unsigned char *mul_t) noexcept nogil:
    cdef int i, j, k, row, acc
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add_t[acc * q + mul_t[a[row + k] * q + b[k * n + j]]]
            out[row + j] = acc


cdef bytes _identity(int n):
    out = bytearray(n * n)
    cdef int i
    for i in range(n):
        out[i * n + i] = 1
    return bytes(out)


def matrix_closure(gens, int n, int q, bytes add, bytes mul,
                   cap: int = 1 << 20):
    """All products of the generators, as a sorted list of byte matrices."""
    cdef const unsigned char *padd = add
    cdef const unsigned char *pmul = mul
    cdef int nn = n * n
    cdef unsigned char *buf = <unsigned char *> malloc(nn)
    if buf == NULL:
        raise MemoryError()
    cdef bytes ident = _identity(n)
    cdef set seen = {ident}
    cdef list frontier = [ident]
    cdef list nxt
    cdef bytes a, g, ag
    cdef Py_ssize_t limit = cap
    try:
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c_mat_mul(<const unsigned char *> a,
                              <const unsigned char *> g,
                              buf, n, q, padd, pmul)
                    ag = buf[:nn]
                    if ag not in seen:
                        seen.add(ag)
                        nxt.append(ag)
            frontier = nxt
            if len(seen) > limit:
                raise ValueError(f"closure exceeds the cap of {cap} elements")
    finally:
        free(buf)
    return sorted(seen)


cdef bytes _inverse_in(bytes elem, int n, int q,
                       const unsigned char *add_t,
                       const unsigned char *mul_t):
    """Inverse by powering; the element has finite order in a finite group."""
    cdef int nn = n * n
    cdef bytes ident = _identity(n)
    if elem == ident:
        return ident
    cdef unsigned char *buf = <unsigned char *> malloc(nn)
    if buf == NULL:
        raise MemoryError()
    cdef bytes prev = elem
    cdef bytes cur
    try:
        c_mat_mul(<const unsigned char *> elem, <const unsigned char *> elem,
                  buf, n, q, add_t, mul_t)
        cur = buf[:nn]
        while cur != ident:
            c_mat_mul(<const unsigned char *> cur,
                      <const unsigned char *> elem, buf, n, q, add_t, mul_t)
            prev = cur
            cur = buf[:nn]
    finally:
        free(buf)
    return prev


def matrix_class_count(elements, gens, int n, int q, bytes add, bytes mul):
    """Conjugacy classes of the listed group, conjugating by the generators."""
    cdef const unsigned char *padd = add
    cdef const unsigned char *pmul = mul
    cdef int nn = n * n
    cdef list conj = [(g, _inverse_in(g, n, q, padd, pmul)) for g in gens]
    cdef set seen = set()
    cdef set orbit
    cdef list stack
    cdef int count = 0
    cdef bytes x, y, g, gi, z
    cdef unsigned char *b1 = <unsigned char *> malloc(nn)
    cdef unsigned char *b2 = <unsigned char *> malloc(nn)
    if b1 == NULL or b2 == NULL:
        free(b1)
        free(b2)
        raise MemoryError()
    try:
        for x in elements:
            if x in seen:
                continue
            count += 1
            orbit = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for g, gi in conj:
                    c_mat_mul(<const unsigned char *> y,
                              <const unsigned char *> g, b1, n, q, padd, pmul)
                    c_mat_mul(<const unsigned char *> gi, b1, b2, n, q,
                              padd, pmul)
                    z = b2[:nn]
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
            seen |= orbit
    finally:
        free(b1)
        free(b2)
    return count

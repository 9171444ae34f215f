# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Bruhat-order kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef bint _leq(int *u, int *v, int n, int *cu, int *cv) nogil:
    cdef int i, j
    for j in range(n + 2):
        cu[j] = 0
        cv[j] = 0
    for i in range(n - 1):
        for j in range(1, u[i] + 1):
            cu[j] += 1
        for j in range(1, v[i] + 1):
            cv[j] += 1
        for j in range(2, n + 1):
            if cu[j] > cv[j]:
                return 0
    return 1


def bruhat_leq(u, v):
    cdef int n = len(u)
    cdef int *buf = <int *> malloc(sizeof(int) * (4 * n + 4))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            buf[i] = u[i]
            buf[n + i] = v[i]
        return bool(_leq(buf, buf + n, n, buf + 2 * n, buf + 3 * n + 2))
    finally:
        free(buf)


def leq_matrix(perms):
    cdef int N = len(perms)
    if N == 0:
        return b""
    cdef int n = len(perms[0])
    cdef int *flat = <int *> malloc(sizeof(int) * (N * n + 2 * n + 4))
    if flat == NULL:
        raise MemoryError()
    cdef int *cu = flat + N * n
    cdef int *cv = cu + n + 2
    cdef int i, j
    out = bytearray(N * N)
    cdef unsigned char[:] view = out
    try:
        for i in range(N):
            p = perms[i]
            for j in range(n):
                flat[i * n + j] = p[j]
        with nogil:
            for i in range(N):
                for j in range(N):
                    view[i * N + j] = _leq(flat + i * n, flat + j * n, n, cu, cv)
    finally:
        free(flat)
    return bytes(out)

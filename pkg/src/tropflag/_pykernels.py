"""Pure-Python versions of the hot Bruhat-order kernels."""

from __future__ import annotations

from typing import Sequence


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Rank-matrix test: ``#{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}`` for all i, j."""
    n = len(u)
    cu = [0] * (n + 2)
    cv = [0] * (n + 2)
    for i in range(n - 1):
        a, b = u[i], v[i]
        for j in range(1, a + 1):
            cu[j] += 1
        for j in range(1, b + 1):
            cv[j] += 1
        for j in range(2, n + 1):
            if cu[j] > cv[j]:
                return False
    return True


def leq_matrix(perms: Sequence[Sequence[int]]) -> bytes:
    """Row-major ``N x N`` table with byte ``i*N + j`` set iff ``perms[i] <= perms[j]``."""
    N = len(perms)
    out = bytearray(N * N)
    for i in range(N):
        p = perms[i]
        for j in range(N):
            if bruhat_leq(p, perms[j]):
                out[i * N + j] = 1
    return bytes(out)

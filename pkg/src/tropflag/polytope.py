"""Exact vertex extraction for small rational point sets.

A point is a vertex of the convex hull of a finite set iff it is not a convex
combination of the other points.  That is a linear feasibility problem, solved
here with a phase-one simplex over :class:`fractions.Fraction` using Bland's rule.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Is ``{x >= 0 : A x = b}`` non-empty?  Exact arithmetic throughout."""
    m = len(A)
    if m == 0:
        return True
    nvar = len(A[0])
    rows = []
    for i in range(m):
        r = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r = [-v for v in r]
            rhs = -rhs
        # artificial variable for each row
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(r + art + [rhs])
    total = nvar + m
    basis = [nvar + i for i in range(m)]
    # objective: minimise the sum of artificials, stored as reduced costs
    obj = [Fraction(0)] * (total + 1)
    for r in rows:
        for k in range(nvar):
            obj[k] -= r[k]
        obj[total] -= r[total]
    while True:
        enter = next((k for k in range(total) if obj[k] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[total] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded cannot happen for phase one
            break
        piv = rows[leave]
        pv = piv[enter]
        piv = [v / pv for v in piv]
        rows[leave] = piv
        for i, r in enumerate(rows):
            if i != leave and r[enter] != 0:
                f = r[enter]
                rows[i] = [a - f * p for a, p in zip(r, piv)]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * p for a, p in zip(obj, piv)]
        basis[leave] = enter
    return obj[total] == 0


def in_convex_hull(p: Point, others: Sequence[Point]) -> bool:
    if not others:
        return False
    dim = len(p)
    A = [[q[i] for q in others] for i in range(dim)] + [[1] * len(others)]
    b = list(p) + [1]
    return feasible(A, b)


def _on_common_sphere(pts: Sequence[Point]) -> bool:
    """True when all points are equidistant from their centroid (so all are vertices)."""
    m = len(pts)
    dim = len(pts[0])
    c = [Fraction(sum(p[i] for p in pts), m) for i in range(dim)]
    r = {sum((Fraction(p[i]) - c[i]) ** 2 for i in range(dim)) for p in pts}
    return len(r) == 1


def vertices(points: Iterable[Point]) -> set[Point]:
    """Vertex set of the convex hull of ``points`` (duplicates collapse)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2 or _on_common_sphere(pts):
        return set(pts)
    return {p for k, p in enumerate(pts) if not in_convex_hull(p, pts[:k] + pts[k + 1:])}

"""Finite Puiseux polynomials in ``t`` with rational exponents, and maximal minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .trop import INF, TropValue, format_trop


@dataclass(frozen=True)
class PuiseuxPoly:
    """Sparse map exponent -> nonzero coefficient; the empty map is zero."""

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping) -> "PuiseuxPoly":
        acc: dict[Fraction, Fraction] = {}
        for e, c in d.items():
            e, c = Fraction(e), Fraction(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def const(cls, c) -> "PuiseuxPoly":
        return cls.from_dict({0: c})

    @classmethod
    def monomial(cls, coeff, exp) -> "PuiseuxPoly":
        """``coeff * t^exp``; an infinite exponent gives zero."""
        if exp == INF:
            return ZERO
        return cls.from_dict({exp: coeff})

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) + c
        return PuiseuxPoly.from_dict(d)

    def __neg__(self) -> "PuiseuxPoly":
        return PuiseuxPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        return self + (-other)

    def __mul__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        d: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d.get(e1 + e2, Fraction(0)) + c1 * c2
        return PuiseuxPoly.from_dict(d)

    def scale(self, c) -> "PuiseuxPoly":
        return PuiseuxPoly.from_dict({e: v * Fraction(c) for e, v in self.terms})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms)

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exp": str(e)} for e, c in self.terms]

    @classmethod
    def from_json(cls, terms: Sequence[Mapping]) -> "PuiseuxPoly":
        return cls.from_dict({Fraction(str(t["exp"])): Fraction(str(t["coeff"])) for t in terms})


ZERO = PuiseuxPoly()
ONE = PuiseuxPoly.const(1)


def p_add(a: PuiseuxPoly, b: PuiseuxPoly) -> PuiseuxPoly:
    return a + b


def p_mul(a: PuiseuxPoly, b: PuiseuxPoly) -> PuiseuxPoly:
    return a * b


def p_neg(a: PuiseuxPoly) -> PuiseuxPoly:
    return -a


def valuation_and_sign(p: PuiseuxPoly) -> tuple[TropValue, str]:
    """Lowest exponent and the sign of its coefficient; zero gives ``(inf, "+0")``."""
    if p.is_zero():
        return INF, "+0"
    e, c = p.terms[0]
    return e, "+" if c > 0 else "-"


Matrix = tuple[tuple[PuiseuxPoly, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = []
    width = None
    for r in rows:
        row = tuple(x if isinstance(x, PuiseuxPoly) else PuiseuxPoly.const(x) for x in r)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError("matrix rows have different lengths")
        out.append(row)
    return tuple(out)


def det(A: Sequence[Sequence[PuiseuxPoly]], along: str = "first") -> PuiseuxPoly:
    """Determinant by cofactor expansion, memoised over column subsets.

    ``along`` picks whether rows are consumed from the top or the bottom; the
    two must agree and are compared in the tests.
    """
    A = as_matrix(A)
    k = len(A)
    if any(len(r) != k for r in A):
        raise ValueError("determinant of a non-square matrix")
    if k == 0:
        return ONE
    order = list(range(k)) if along == "first" else list(range(k - 1, -1, -1))

    @lru_cache(maxsize=None)
    def rec(depth: int, cols: tuple[int, ...]) -> PuiseuxPoly:
        if depth == k:
            return ONE
        r = order[depth]
        total = ZERO
        for pos, c in enumerate(cols):
            entry = A[r][c]
            if entry.is_zero():
                continue
            sub = rec(depth + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            # sign of removing the pos-th remaining column at this row
            if along == "first":
                sign = -1 if pos % 2 else 1
            else:
                sign = -1 if (pos + len(cols) - 1) % 2 else 1
            term = entry * sub
            total = total + (term if sign > 0 else -term)
        return total

    return rec(0, tuple(range(k)))


def maximal_minors(A: Sequence[Sequence], along: str = "first") -> list[PuiseuxPoly]:
    """Raw determinants of the column-deletion submatrices, in column order.

    A square matrix gives its single determinant.
    """
    A = as_matrix(A)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols > 9:
        raise ValueError("maximal_minors is limited to at most 9 columns")
    if cols == rows:
        return [det(A, along)]
    if cols != rows + 1:
        raise ValueError(f"need cols = rows + 1 or a square matrix, got {rows}x{cols}")
    out = []
    for k in range(cols):
        sub = [[row[c] for c in range(cols) if c != k] for row in A]
        out.append(det(sub, along))
    return out


def pluecker_normalized_minors(A: Sequence[Sequence], along: str = "first",
                               convention: str = "increasing") -> list[PuiseuxPoly]:
    """Plücker coordinates of the row span, indexed by the omitted column.

    ``"increasing"`` takes the minor on the remaining columns in increasing
    order, which is the Plücker coordinate of that column set.  ``"alternating"``
    additionally multiplies the minor omitting column ``k`` (1-based) by
    ``(-1)^(n-k)``, the sign pattern of the orthogonal complement.
    """
    raw = maximal_minors(A, along)
    if convention == "increasing":
        return raw
    if convention != "alternating":
        raise ValueError(f"unknown sign convention {convention!r}")
    n = len(raw)
    return [m if (n - k) % 2 == 0 else -m for k, m in enumerate(raw, start=1)]


def matrix_to_json(A: Matrix) -> list[list[list[dict]]]:
    return [[e.to_json() for e in row] for row in A]


def minors_report(minors: Sequence[PuiseuxPoly]) -> list[dict]:
    out = []
    for k, m in enumerate(minors, start=1):
        val, sign = valuation_and_sign(m)
        out.append({"omit_col": k, "valuation": format_trop(val), "sign": sign})
    return out

"""Exact min-plus arithmetic.

Finite tropical values are :class:`fractions.Fraction`; the formal element
infinity is the float ``math.inf``, which compares above every rational and
absorbs addition, so ``min`` and ``+`` already implement the semiring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

INF = math.inf

TropValue = Union[Fraction, float]


def is_inf(a) -> bool:
    return a == INF


def trop(x) -> TropValue:
    """Coerce ``x`` (int, Fraction, "p/q", "inf", inf) to a tropical value."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f"not a tropical value: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x == INF:
            return INF
        if math.isfinite(x) and x == int(x):
            return Fraction(int(x))
        raise ValueError(f"floats are not accepted as tropical values: {x!r}")
    if isinstance(x, str):
        s = x.strip()
        if s.lower() in ("inf", "+inf", "infinity", "∞"):
            return INF
        try:
            return Fraction(s)
        except ValueError:
            raise ValueError(f"cannot parse tropical value {x!r}") from None
    raise TypeError(f"not a tropical value: {x!r}")


def format_trop(a: TropValue):
    """JSON scalar encoding: integers stay integers, other rationals become "p/q"."""
    if is_inf(a):
        return "inf"
    a = Fraction(a)
    if a.denominator == 1:
        return a.numerator
    return f"{a.numerator}/{a.denominator}"


def trop_add(a: TropValue, b: TropValue) -> TropValue:
    return a if a <= b else b


def trop_mul(a: TropValue, b: TropValue) -> TropValue:
    if is_inf(a) or is_inf(b):
        return INF
    return a + b


def trop_sum(values: Iterable[TropValue]) -> TropValue:
    out = INF
    for v in values:
        if v < out:
            out = v
    return out


def min_achieved_twice(values: Sequence[TropValue]) -> bool:
    """True iff the minimum occurs at two positions, or every entry is infinite."""
    if not values:
        raise ValueError("empty list")
    m = trop_sum(values)
    if is_inf(m):
        return True
    return sum(1 for v in values if v == m) >= 2


def argmin_positions(values: Sequence[TropValue]) -> list[int]:
    """0-based positions of the finite minimum; empty when all entries are infinite."""
    m = trop_sum(values)
    if is_inf(m):
        return []
    return [i for i, v in enumerate(values) if v == m]


def proj_normalize(values: Sequence[TropValue]) -> tuple[TropValue, ...]:
    """Representative with minimum finite entry equal to zero."""
    m = trop_sum(values)
    if is_inf(m):
        return tuple(values)
    return tuple(v if is_inf(v) else v - m for v in values)


def proj_equal(u: Sequence[TropValue], v: Sequence[TropValue]) -> bool:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    for a, b in zip(u, v):
        if is_inf(a) != is_inf(b):
            return False
    return proj_normalize(u) == proj_normalize(v)

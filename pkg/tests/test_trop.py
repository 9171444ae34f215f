from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropflag.trop import (INF, argmin_positions, format_trop, min_achieved_twice, proj_equal,
                           proj_normalize, trop, trop_add, trop_mul, trop_sum)

tvals = st.one_of(st.just(INF), st.fractions(min_value=-50, max_value=50, max_denominator=7))


def test_add_examples():
    assert trop_add(Fraction(2), Fraction(1)) == 1
    assert trop_add(INF, Fraction(5)) == 5
    assert trop_add(INF, INF) == INF


def test_mul_examples():
    assert trop_mul(Fraction(2), Fraction(1)) == 3
    assert trop_mul(INF, Fraction(5)) == INF
    assert trop_mul(Fraction(0), Fraction(7, 3)) == Fraction(7, 3)


def test_min_achieved_twice_examples():
    assert min_achieved_twice([trop(0), trop(0), trop(1)])
    assert not min_achieved_twice([trop(0), trop(1), trop(2)])
    assert min_achieved_twice([INF, INF])
    assert not min_achieved_twice([INF, trop(3)])


def test_parse_and_format():
    assert trop("3/4") == Fraction(3, 4)
    assert trop("inf") == INF
    assert trop(5) == Fraction(5)
    assert format_trop(Fraction(6, 2)) == 3
    assert format_trop(Fraction(-1, 2)) == "-1/2"
    assert format_trop(INF) == "inf"
    with pytest.raises(ValueError):
        trop(0.5)
    with pytest.raises(ValueError):
        trop("abc")
    with pytest.raises(TypeError):
        trop(True)


def test_proj_equal_examples():
    assert proj_equal([trop(0), trop(1), INF], [trop(5), trop(6), INF])
    assert not proj_equal([trop(0), trop(1), INF], [trop(0), trop(2), INF])
    assert proj_equal([INF, INF], [INF, INF])
    with pytest.raises(ValueError):
        proj_equal([trop(0)], [trop(0), trop(1)])


def test_argmin_positions():
    assert argmin_positions([trop(3), trop(1), trop(1)]) == [1, 2]
    assert argmin_positions([INF, INF]) == []


@given(tvals, tvals, tvals)
def test_semiring_laws(a, b, c):
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_mul(a, INF) == INF
    assert trop_add(a, INF) == a


@given(st.lists(tvals, min_size=1, max_size=8), st.fractions(min_value=-20, max_value=20))
def test_min_twice_scaling_invariant(v, c):
    assert min_achieved_twice(v) == min_achieved_twice([trop_mul(x, c) for x in v])


@given(st.lists(tvals, min_size=1, max_size=6), st.fractions(min_value=-9, max_value=9))
def test_proj_equal_is_scaling(v, c):
    w = [trop_mul(x, c) for x in v]
    assert proj_equal(v, w)
    assert proj_equal(w, v)
    assert proj_normalize(v) == proj_normalize(w)
    assert trop_sum(proj_normalize(v)) in (0, INF)

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations, product

from hypothesis import given, settings
from hypothesis import strategies as st

from tropflag.polytope import feasible, in_convex_hull, vertices


def test_feasible_small_systems():
    assert feasible([[1, 1]], [1])
    assert not feasible([[1, 1]], [-1])
    assert feasible([[1, -1]], [-2])
    assert not feasible([[1, 0], [1, 0]], [1, 2])
    assert feasible([], [])


def test_square_and_interior_point():
    sq = [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert vertices(sq + [(1, 1), (0, 1)]) == set(sq)
    assert in_convex_hull((1, 1), sq)
    assert not in_convex_hull((3, 1), sq)
    assert in_convex_hull((Fraction(1, 3), 0), sq)


def test_permutahedron_vertices():
    pts = set(permutations(range(4)))
    assert vertices(pts) == pts
    assert vertices(pts | {(Fraction(3, 2),) * 4}) == pts


def test_collinear_and_duplicates():
    assert vertices([(0, 0), (1, 1), (2, 2), (2, 2)]) == {(0, 0), (2, 2)}
    assert vertices([(5,)]) == {(5,)}


def _brute_vertices_2d(pts):
    # a point is a vertex iff some integer direction has it as the unique minimiser
    out = set()
    for p in pts:
        for a, b in product(range(-6, 7), repeat=2):
            vals = {q: a * q[0] + b * q[1] for q in pts}
            m = min(vals.values())
            if vals[p] == m and sum(1 for v in vals.values() if v == m) == 1:
                out.add(p)
                break
    return out


@settings(max_examples=80, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=9))
def test_vertices_match_direction_oracle_2d(pts):
    assert vertices(pts) == _brute_vertices_2d(pts)


def test_random_simplex_hulls():
    rng = random.Random(4)
    for _ in range(30):
        corners = [tuple(Fraction(rng.randint(-5, 5)) for _ in range(3)) for _ in range(4)]
        w = [Fraction(rng.randint(1, 5)) for _ in range(4)]
        inner = tuple(sum(wi * c[k] for wi, c in zip(w, corners)) / sum(w) for k in range(3))
        assert in_convex_hull(inner, corners)

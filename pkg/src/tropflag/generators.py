"""Random instances for property tests and the CLI self-test."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .flag import FlagValuatedMatroid, validate_flag
from .gammoid import GammaSkeleton, WeightedDigraph, GammoidError, gamma_of
from .hollow import hollow_flag
from .matroid import ValuatedMatroid
from .trop import INF, min_achieved_twice


def tropical_det(M) -> object:
    """Min-plus determinant (minimum over permutations of the summed entries)."""
    k = len(M)
    best = INF
    for p in permutations(range(k)):
        s = Fraction(0)
        for r in range(k):
            e = M[r][p[r]]
            if e == INF:
                s = INF
                break
            s += e
        if s < best:
            best = s
    return best


def random_stiefel_matroid(rng: random.Random, d: int, n: int, lo: int = -3, hi: int = 3,
                           p_inf: float = 0.15, tries: int = 50) -> ValuatedMatroid:
    """Valuated matroid from a random exponent matrix via tropical maximal minors.

    These are the valuations of the minors of a matrix with generic leading
    coefficients, so they always satisfy the Plücker relations.
    """
    for _ in range(tries):
        M = [[INF if rng.random() < p_inf else Fraction(rng.randint(lo, hi)) for _ in range(n)]
             for _ in range(d)]
        vals = {}
        for B in combinations(range(1, n + 1), d):
            vals[B] = tropical_det([[row[c - 1] for c in B] for row in M])
        mu = ValuatedMatroid.from_values(vals, d=d, n=n)
        if mu.support():
            return mu
    return ValuatedMatroid.uniform(d, n)


def random_hollow_flag(rng: random.Random, n: int, lo: int = 0, hi: int = 3, p_inf: float = 0.2,
                       tries: int = 1000) -> FlagValuatedMatroid:
    """Valid hollow flag with small integer values, by rejection sampling."""
    for _ in range(tries):
        mu = [INF if rng.random() < p_inf else rng.randint(lo, hi) for _ in range(n)]
        nu = [INF if rng.random() < p_inf else rng.randint(lo, hi) for _ in range(n)]
        if all(v == INF for v in mu) or all(v == INF for v in nu):
            continue
        lam = [INF if a == INF or b == INF else a + b for a, b in zip(mu, nu)]
        if not min_achieved_twice(lam):
            continue
        return hollow_flag(mu, nu)
    raise RuntimeError("could not sample a hollow flag")


def random_tnn_lambda(rng: random.Random, n: int, lo: int = -3, hi: int = 3, p_inf: float = 0.15) -> list:
    """``lambda_i = x_i (+) x_{i-1}`` for random ``x_1..x_{n-1}`` (ends read as infinity)."""
    while True:
        x = [INF if rng.random() < p_inf else Fraction(rng.randint(lo, hi)) for _ in range(n - 1)]
        if any(v != INF for v in x):
            break
    xx = [INF] + x + [INF]
    return [min(xx[i], xx[i + 1]) for i in range(n)]


def tnn_flag_from_lambda(lam, translation=None) -> FlagValuatedMatroid:
    """Hollow flag with trivially valued full rank-one part and ``nu([n]\\i) = lambda_i``,
    optionally translated."""
    n = len(lam)
    F = hollow_flag([0] * n, list(lam))
    if translation is not None:
        from .flag import translate_flag

        F = translate_flag(F, translation)
    return F


def random_bruhat_alpha(rng: random.Random, n: int) -> tuple[str, ...]:
    """Full-dimensional symbol sequence with at least two ``*`` and none isolated."""
    from .bruhat import has_isolated_star

    while True:
        a = tuple(rng.choice("+-*") for _ in range(n))
        if a.count("*") >= 2 and not has_isolated_star(a):
            return a


def support_of_alpha(alpha) -> FlagValuatedMatroid:
    mu = [0 if s in "+*" else INF for s in alpha]
    nu = [0 if s in "-*" else INF for s in alpha]
    return hollow_flag(mu, nu)


def random_gamma_instance(rng: random.Random, n: int, lo: int = -5, hi: int = 5):
    """Random support with a Bruhat polytope and random integer weights on its graph."""
    for _ in range(100):
        alpha = random_bruhat_alpha(rng, n)
        try:
            skel: GammaSkeleton = gamma_of(support_of_alpha(alpha))
        except GammoidError:
            continue
        chain = [rng.randint(lo, hi) for _ in skel.chain_edges]
        diag = [rng.randint(lo, hi) for _ in skel.diagonal_edges]
        return alpha, skel, skel.graph(chain, diag)
    raise RuntimeError("could not sample a graph")


def random_digraph(rng: random.Random, n_ground: int, n_aux: int, density: float = 0.35,
                   lo: int = -5, hi: int = 5) -> WeightedDigraph:
    """Random digraph without negative cycles (rejection on the cycle check)."""
    verts = list(range(1, n_ground + 1)) + [f"v{k}" for k in range(n_aux)]
    for _ in range(200):
        order = list(verts)
        rng.shuffle(order)
        pos = {v: k for k, v in enumerate(order)}
        edges = []
        for u in verts:
            for v in verts:
                if u == v or rng.random() > density:
                    continue
                # backward edges are kept non-negative to make negative cycles rare
                w = rng.randint(lo, hi) if pos[u] < pos[v] else rng.randint(0, hi)
                edges.append((u, v, w))
        try:
            return WeightedDigraph.build(n_ground, edges, verts)
        except GammoidError:
            continue
    raise RuntimeError("could not sample a digraph without negative cycles")


def random_flag_13(rng: random.Random, n: int = 5) -> FlagValuatedMatroid:
    """Valid rank-(1,3) flag from a random realizable rank-3 matroid and a compatible vector."""
    for _ in range(1000):
        nu = random_stiefel_matroid(rng, 3, n)
        # a point of the tropical linear space gives a compatible rank-1 part
        mu = random_stiefel_matroid(rng, 1, n)
        F = FlagValuatedMatroid((mu, nu))
        if validate_flag(F):
            return F
    raise RuntimeError("could not sample a rank-(1,3) flag")

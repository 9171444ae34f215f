"""Positivity at hollow rank ``(1, n-1)``: symbol sequences, subdivisions,
classification and positive realization matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .bruhat import has_isolated_star, hollow_vertices, parse_alpha
from .flag import (
    FlagError,
    FlagValuatedMatroid,
    LambdaVector,
    bruhat_violation,
    flag_violation,
    incidence_pair,
    lambda_values,
    nonneg_holds,
    tnn_violation,
    translate_flag,
)
from .matroid import ValuatedMatroid, initial_matroid
from .polytope import vertices
from .puiseux import (
    PuiseuxPoly,
    ZERO,
    as_matrix,
    pluecker_normalized_minors,
    valuation_and_sign,
)
from .trop import INF, argmin_positions, format_trop, is_inf, trop_sum

Alpha = tuple[str, ...]


class HollowError(ValueError):
    pass


def _require_hollow(F: FlagValuatedMatroid):
    if not F.is_hollow():
        raise HollowError(f"expected hollow rank (1, n-1) with n >= 3, got ranks {F.ranks} on n={F.n}")


def hollow_flag(mu: Sequence, nu: Sequence) -> FlagValuatedMatroid:
    """Hollow flag from ``mu(i)`` and ``nu([n] \\ i)`` listed for ``i = 1..n``."""
    n = len(mu)
    if len(nu) != n:
        raise HollowError("mu and nu must have the same length")
    g = tuple(range(1, n + 1))
    m = ValuatedMatroid.from_values({(i,): mu[i - 1] for i in g}, d=1, ground=g)
    v = ValuatedMatroid.from_values({tuple(x for x in g if x != i): nu[i - 1] for i in g},
                                    d=n - 1, ground=g)
    return FlagValuatedMatroid((m, v))


def hollow_parts(F: FlagValuatedMatroid) -> tuple[list, list]:
    """``(mu(i), nu(ground \\ i))`` for each ground element ``i`` in order."""
    _require_hollow(F)
    g = F.ground
    mu = [F[0]((i,)) for i in g]
    nu = [F[1](tuple(x for x in g if x != i)) for i in g]
    return mu, nu


def hollow_lambda(F: FlagValuatedMatroid) -> LambdaVector:
    _require_hollow(F)
    return lambda_values(F, incidence_pair(F, (), F.ground))


def symbol_sequence(F: FlagValuatedMatroid, x=None) -> Alpha:
    """Side of each coordinate hyperplane occupied by the (initial) flag polytope.

    ``+`` means only ``{i}`` is a basis of the rank-one part, ``-`` only the
    complement of ``i`` is a basis of the corank-one part, ``*`` both, ``0`` neither.
    """
    _require_hollow(F)
    if x is not None:
        F = FlagValuatedMatroid(tuple(initial_matroid(c, x) for c in F.constituents))
    mu, nu = hollow_parts(F)
    out = []
    for a, b in zip(mu, nu):
        fa, fb = not is_inf(a), not is_inf(b)
        out.append("*" if fa and fb else "+" if fa else "-" if fb else "0")
    return tuple(out)


def is_bruhat_polytope(alpha) -> bool:
    """No isolated ``*``; boundary polytopes (fewer than two ``*``) are always Bruhat."""
    a = parse_alpha(alpha)
    if a.count("*") < 2:
        return True
    return not has_isolated_star(a)


@dataclass
class HollowClassification:
    in_dressian: bool
    tnn: bool
    bruhat_subdivision: bool
    nonneg_dressian: bool
    positroid: bool
    lam: LambdaVector
    witnesses: dict = field(default_factory=dict)

    def verdicts(self) -> dict:
        return {k: getattr(self, k) for k in
                ("in_dressian", "tnn", "bruhat_subdivision", "nonneg_dressian", "positroid")}


def classify_lambda(lam: Sequence) -> tuple[dict, dict]:
    """Verdicts and witnesses for the three lambda conditions on one vector."""
    lam = tuple(lam)
    w = {}
    t = tnn_violation(lam)
    if t is not None:
        left = lam[t - 2] if t > 1 else INF
        right = lam[t] if t < len(lam) else INF
        w["tnn"] = {"index": t, "value": lam[t - 1], "neighbour_min": trop_sum((left, right))}
    b = bruhat_violation(lam)
    if b is not None:
        w["bruhat_subdivision"] = {"index": b, "value": lam[b - 1]}
    nn = nonneg_holds(lam)
    if not nn:
        w["nonneg_dressian"] = {"odd_min": trop_sum(lam[0::2]), "even_min": trop_sum(lam[1::2])}
    verdicts = {"tnn": t is None, "bruhat_subdivision": b is None, "nonneg_dressian": nn}
    return verdicts, w


def classify(F: FlagValuatedMatroid) -> HollowClassification:
    _require_hollow(F)
    v = flag_violation(F)
    if v is not None:
        raise FlagError(f"not a valuated flag matroid: {v.describe()}")
    lam = hollow_lambda(F)
    verdicts, w = classify_lambda(lam.values)
    return HollowClassification(True, verdicts["tnn"], verdicts["bruhat_subdivision"],
                                verdicts["nonneg_dressian"], verdicts["nonneg_dressian"], lam, w)


def subdivision_cells(F: FlagValuatedMatroid) -> list[Alpha]:
    """Maximal cells of the induced subdivision, as symbol sequences.

    With ``I`` the finite non-minimal lambda positions, there is one cell per
    ``J`` inside ``I``: ``*`` at the minimisers, ``+`` on ``J``, ``-`` on ``I \\ J``,
    and the support's own one-sided symbol at infinite positions.
    """
    _require_hollow(F)
    base = symbol_sequence(F)
    lam = hollow_lambda(F).values
    arg = set(argmin_positions(lam))
    if not arg:
        return [base]
    free = [k for k, v in enumerate(lam) if not is_inf(v) and k not in arg]
    cells = []
    for signs in product("+-", repeat=len(free)):
        a = list(base)
        for k in arg:
            a[k] = "*"
        for k, s in zip(free, signs):
            a[k] = s
        cells.append(tuple(a))
    return cells


def cell_vertex_sets(F: FlagValuatedMatroid) -> set[frozenset]:
    """Vertex sets (0/1/2 coordinates) of the cells listed by :func:`subdivision_cells`."""
    return {frozenset(hollow_vertices(a)) for a in subdivision_cells(F)}


def regular_subdivision_cells(F: FlagValuatedMatroid) -> set[frozenset]:
    """Maximal cells computed directly from the lifted flag polytope.

    The cell selected by a weight ``x`` is ``{e_a + e_{[n]\\b}}`` over ``a``
    minimising ``mu(a) - x_a`` and ``b`` minimising ``nu([n]\\b) + x_b``.  Every
    maximal cell is selected by some ``x`` whose coordinates are pinned by one
    of those two minimisations, so it suffices to scan those candidates and keep
    the cells maximal under inclusion.
    """
    _require_hollow(F)
    mu, nu = hollow_parts(F)
    n = F.n
    lam = hollow_lambda(F).values
    levels = sorted({v for v in lam if not is_inf(v)}) or [Fraction(0)]
    cells: set[frozenset] = set()
    for s in levels:
        opts = []
        for i in range(n):
            o = set()
            if not is_inf(mu[i]):
                o.add(mu[i])
            if not is_inf(nu[i]):
                o.add(s - nu[i])
            opts.append(sorted(o) or [Fraction(0)])
        for x in product(*opts):
            ra = [mu[i] - x[i] for i in range(n)]
            rb = [nu[i] + x[i] for i in range(n)]
            A, B = argmin_positions(ra), argmin_positions(rb)
            pts = set()
            for a in A:
                for b in B:
                    p = [1] * n
                    p[a] += 1
                    p[b] -= 1
                    pts.add(tuple(p))
            cells.add(frozenset(vertices(pts)))
    return {c for c in cells if not any(c < d for d in cells)}


# ---- realization ---------------------------------------------------------------------

@dataclass
class Realization:
    matrix: tuple
    convention: str
    i: int
    j: int
    sign: int
    translation: tuple
    shift: Fraction
    normalized: FlagValuatedMatroid
    minors: list
    minor_valuations: list
    last_row_negated: bool = False

    def minor_report(self) -> list[dict]:
        out = []
        for k, m in enumerate(self.minors, start=1):
            val, sg = valuation_and_sign(m)
            out.append({"omit_col": k, "valuation": format_trop(val), "sign": sg})
        return out


CONVENTIONS = ("odd_to_i", "even_to_i")


def _matrix(n: int, i: int, j: int, loops: set, nu: Sequence, convention: str, sign: int):
    A = [[ZERO] * n for _ in range(n - 1)]
    for k in range(1, n + 1):
        A[0][k - 1] = PuiseuxPoly.const(n if k in (i, j) else 0 if k in loops else 1)
    rest = [k for k in range(1, n + 1) if k not in (i, j)]
    for row, k in enumerate(rest, start=1):
        A[row][k - 1] = PuiseuxPoly.const(1)
        odd = k % 2 == 1
        if convention == "odd_to_i":
            col = i if odd else j
        else:
            col = j if odd else i
        A[row][col - 1] = PuiseuxPoly.monomial(sign, nu[k - 1])
    return as_matrix(A)


def normalize_for_realization(F: FlagValuatedMatroid):
    """Translate so the rank-one part is trivially valued, then shift the corank-one
    part so it vanishes at the chosen minimisers ``i`` (even) and ``j`` (odd).

    Returns ``(flag, translation, shift, i, j)`` with 1-based positions.
    """
    mu, _ = hollow_parts(F)
    x = tuple(Fraction(0) if is_inf(m) else -m for m in mu)
    G = translate_flag(F, x)
    lam = hollow_lambda(G).values
    arg = [k + 1 for k in argmin_positions(lam)]
    if not arg:
        raise HollowError("boundary flag: every lambda-value is infinite, so there are no minimisers to anchor the matrix")
    evens = [k for k in arg if k % 2 == 0]
    odds = [k for k in arg if k % 2 == 1]
    if not evens or not odds:
        raise HollowError("not nonneg: the minimum is not attained at both parities")
    i, j = evens[0], odds[0]
    _, nu = hollow_parts(G)
    shift = -nu[i - 1]
    g = G.ground
    vals = {tuple(y for y in g if y != k): (v if is_inf(v) else v + shift) for k, v in zip(g, nu)}
    N = ValuatedMatroid.from_values(vals, d=G.n - 1, ground=g)
    return FlagValuatedMatroid((G[0], N)), x, shift, i, j


def build_realization_matrix(F: FlagValuatedMatroid, conventions: Sequence[str] = CONVENTIONS) -> Realization:
    """Positive realization of a hollow flag in the non-negative flag Dressian.

    Both parity-to-column conventions are tried in order; the first whose
    maximal minors reproduce the corank-one part with positive leading
    coefficients is returned.
    """
    _require_hollow(F)
    c = classify(F)
    if not c.nonneg_dressian:
        raise HollowError("not nonneg: odd and even lambda minima differ")
    G, x, shift, i, j = normalize_for_realization(F)
    mu, nu = hollow_parts(G)
    n = G.n
    loops = {k for k in range(1, n + 1) if is_inf(mu[k - 1])}
    default_sign = 1 if j < i else -1
    for conv in conventions:
        for sign in (default_sign, -default_sign):
            A = _matrix(n, i, j, loops, nu, conv, sign)
            minors = pluecker_normalized_minors(A)
            vals = [valuation_and_sign(m) for m in minors]
            if any(v != nu[k] for k, (v, _) in enumerate(vals)):
                continue
            signs = {s for v, s in vals if not is_inf(v)}
            if len(signs) != 1:
                continue
            flipped = signs == {"-"}
            if flipped:
                # a global sign is projectively invisible; absorb it in the last row
                A = A[:-1] + (tuple(-e for e in A[-1]),)
                minors = pluecker_normalized_minors(A)
            return Realization(A, conv, i, j, sign, x, shift, G, minors,
                               [valuation_and_sign(m)[0] for m in minors], flipped)
    raise HollowError("sign verification failed: no parity convention gives positive minors")


__all__ = [
    "HollowError", "hollow_flag", "hollow_parts", "hollow_lambda", "symbol_sequence",
    "is_bruhat_polytope", "HollowClassification", "classify_lambda", "classify",
    "subdivision_cells", "cell_vertex_sets", "regular_subdivision_cells", "Realization",
    "CONVENTIONS", "normalize_for_realization", "build_realization_matrix",
]

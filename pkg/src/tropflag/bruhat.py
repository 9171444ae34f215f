"""Permutations, Bruhat order and Bruhat interval polytopes of type A.

Permutations are 1-based one-line tuples.  A word ``(j_1, ..., j_m)`` stands for
the product ``tau_{j_1} ... tau_{j_m}`` of adjacent transpositions, composed as
functions, so applying a letter on the right swaps two positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from . import kernels
from .polytope import vertices

Perm = tuple[int, ...]


class BruhatError(ValueError):
    pass


class NotMinimalError(BruhatError):
    pass


class NotBruhatError(BruhatError):
    pass


def perm(x) -> Perm:
    """Parse ``"2134"``, ``"2,1,3,4"`` or a sequence into a checked permutation."""
    if isinstance(x, str):
        s = x.strip()
        items = [int(c) for c in s.split(",")] if "," in s else [int(c) for c in s]
    else:
        items = [int(c) for c in x]
    p = tuple(items)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise BruhatError(f"{x!r} is not a permutation of 1..{len(p)}")
    return p


def format_perm(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(a: Perm, b: Perm) -> Perm:
    """``a o b``, i.e. ``i -> a(b(i))``."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def length(p: Perm) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def word_to_perm(word: Iterable[int], n: int) -> Perm:
    p = list(range(1, n + 1))
    for j in word:
        if not 1 <= j < n:
            raise BruhatError(f"letter {j} out of range for n={n}")
        p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def reduced_word(p: Perm) -> tuple[int, ...]:
    """A reduced word, found by peeling right descents (bubble sort)."""
    p = list(p)
    out: list[int] = []
    while True:
        j = next((k for k in range(len(p) - 1) if p[k] > p[k + 1]), None)
        if j is None:
            break
        p[j], p[j + 1] = p[j + 1], p[j]
        out.append(j + 1)
    return tuple(reversed(out))


def _check_pair(u: Perm, v: Perm):
    if len(u) != len(v):
        raise BruhatError(f"size mismatch: {len(u)} != {len(v)}")


def bruhat_leq(u: Perm, v: Perm) -> bool:
    _check_pair(u, v)
    return kernels.bruhat_leq(u, v)


def bruhat_leq_subword(u: Perm, v: Perm) -> bool:
    """Literal subword criterion on one reduced word of ``v``; exponential, used as an oracle."""
    _check_pair(u, v)
    w = reduced_word(v)
    n = len(v)
    for mask in product((0, 1), repeat=len(w)):
        if word_to_perm([c for c, keep in zip(w, mask) if keep], n) == u:
            return True
    return False


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(1, n + 1)))


TABLE_MAX_N = 6


@lru_cache(maxsize=None)
def _order_table(n: int) -> tuple[bytes, dict]:
    """Whole Bruhat order of ``S_n`` as a byte table, plus the index of each permutation."""
    perms_ = all_perms(n)
    return kernels.leq_matrix(perms_), {p: k for k, p in enumerate(perms_)}


def interval(u: Perm, v: Perm) -> list[Perm]:
    """All ``s`` with ``u <= s <= v``, by filtering the whole group."""
    if not bruhat_leq(u, v):
        raise BruhatError(f"{format_perm(u)} is not below {format_perm(v)}")
    n = len(u)
    perms_ = all_perms(n)
    if n <= TABLE_MAX_N:
        tab, idx = _order_table(n)
        N = len(perms_)
        a, b = idx[u] * N, idx[v]
        return [s for k, s in enumerate(perms_) if tab[a + k] and tab[k * N + b]]
    return [s for s in perms_ if bruhat_leq(u, s) and bruhat_leq(s, v)]


def iota(x: Perm) -> Perm:
    """``i -> n + 1 - x^{-1}(i)``; reverses the Bruhat order."""
    n = len(x)
    xi = inverse(x)
    return tuple(n + 1 - xi[i] for i in range(n))


# ---- projections to flag polytopes -------------------------------------------------

def _ranks(d: Sequence[int], n: int) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d or any(a >= b for a, b in zip(d, d[1:])) or d[0] < 1 or d[-1] > n:
        raise BruhatError(f"bad rank vector {d} for n={n}")
    return d


def e_d(d: Sequence[int], n: int) -> tuple[int, ...]:
    """``e_{[d_1]} + ... + e_{[d_s]}``."""
    d = _ranks(d, n)
    return tuple(sum(1 for dk in d if i <= dk) for i in range(1, n + 1))


def f_d(d: Sequence[int], n: int) -> tuple[int, ...]:
    """``f(m)`` for ``m = 1..n``: the ``(n+1-m)``-th coordinate of ``e_d``."""
    e = e_d(d, n)
    return tuple(e[n - m] for m in range(1, n + 1))


def proj_untwisted(x: Perm, d: Sequence[int]) -> tuple[int, ...]:
    f = f_d(d, len(x))
    return tuple(f[v - 1] for v in x)


def proj_twisted(x: Perm, d: Sequence[int]) -> tuple[int, ...]:
    e = e_d(d, len(x))
    xi = inverse(x)
    return tuple(e[xi[i] - 1] for i in range(len(x)))


def _level_perms(levels: Sequence[int]) -> list[Perm]:
    """Permutations of ``1..n`` preserving the level function ``levels``."""
    n = len(levels)
    groups: dict[int, list[int]] = {}
    for i, lv in enumerate(levels, start=1):
        groups.setdefault(lv, []).append(i)
    out = [list(range(1, n + 1))]
    for members in groups.values():
        nxt = []
        for base in out:
            for img in permutations(members):
                b = list(base)
                for src, dst in zip(members, img):
                    b[src - 1] = dst
                nxt.append(b)
        out = nxt
    return [tuple(p) for p in out]


def fiber_untwisted(v: Perm, d: Sequence[int]) -> list[Perm]:
    """Permutations with the same untwisted projection: permute values within levels of f."""
    return [compose(s, v) for s in _level_perms(f_d(d, len(v)))]


def fiber_twisted(v: Perm, d: Sequence[int]) -> list[Perm]:
    """Permutations with the same twisted projection: permute positions within levels of e_d."""
    return [compose(v, s) for s in _level_perms(e_d(d, len(v)))]


def is_fiber_minimal(v: Perm, d: Sequence[int], twisted: bool = False) -> bool:
    fib = fiber_twisted(v, d) if twisted else fiber_untwisted(v, d)
    return all(bruhat_leq(v, s) for s in fib)


def q_points(u: Perm, v: Perm, d: Sequence[int], twisted: bool = False) -> set[tuple[int, ...]]:
    proj = proj_twisted if twisted else proj_untwisted
    return {proj(x, d) for x in interval(u, v)}


def q_polytope(u: Perm, v: Perm, d: Sequence[int], check_minimal: bool = True) -> set[tuple[int, ...]]:
    """Vertex set of the untwisted Bruhat polytope of ``[u, v]``."""
    _ranks(d, len(u))
    if check_minimal and not is_fiber_minimal(v, d):
        raise NotMinimalError(f"{format_perm(v)} is not minimal in its fiber for ranks {tuple(d)}")
    return vertices(q_points(u, v, d))


def q_twisted(u: Perm, v: Perm, d: Sequence[int], check_minimal: bool = True) -> set[tuple[int, ...]]:
    """Vertex set of the twisted Bruhat polytope of ``[u, v]``."""
    _ranks(d, len(u))
    if check_minimal and not is_fiber_minimal(v, d, twisted=True):
        raise NotMinimalError(f"{format_perm(v)} is not a minimal coset representative for ranks {tuple(d)}")
    return vertices(q_points(u, v, d, twisted=True))


def dual_ranks(d: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(n - x for x in reversed(tuple(d)))


def dual_points(pts: Iterable[Sequence[int]], s: int) -> set[tuple[int, ...]]:
    """Vertices of the dual flag polytope: ``p -> s*1 - p``."""
    return {tuple(s - c for c in p) for p in pts}


@lru_cache(maxsize=None)
def _valid_intervals(n: int, d: tuple[int, ...], twisted: bool) -> tuple[tuple[Perm, Perm], ...]:
    perms_ = all_perms(n)
    tops = [v for v in perms_ if is_fiber_minimal(v, d, twisted)]
    if n <= TABLE_MAX_N:
        tab, idx = _order_table(n)
        N = len(perms_)
        return tuple((u, v) for v in tops for k, u in enumerate(perms_) if tab[k * N + idx[v]])
    return tuple((u, v) for v in tops for u in perms_ if bruhat_leq(u, v))


def valid_intervals(n: int, d: Sequence[int], twisted: bool = False) -> list[tuple[Perm, Perm]]:
    """All ``(u, v)`` with ``u <= v`` and ``v`` fiber-minimal for the chosen convention."""
    return list(_valid_intervals(n, _ranks(d, n), twisted))


@lru_cache(maxsize=None)
def _family(n: int, d: tuple[int, ...], twisted: bool) -> dict:
    """Map from vertex set to the valid intervals realising it."""
    fam: dict[frozenset, list[tuple[Perm, Perm]]] = {}
    for u, v in _valid_intervals(n, d, twisted):
        key = frozenset(q_twisted(u, v, d, False) if twisted else q_polytope(u, v, d, False))
        fam.setdefault(key, []).append((u, v))
    return fam


def polytope_family(n: int, d: Sequence[int], twisted: bool = False) -> set[frozenset]:
    return set(_family(n, _ranks(d, n), twisted))


def _pick(cands: list[tuple[Perm, Perm]]) -> tuple[Perm, Perm]:
    # the widest interval: shortest bottom, then longest top, then lexicographic
    return min(cands, key=lambda uv: (length(uv[0]), -length(uv[1]), uv))


def twisted_to_untwisted(u: Perm, v: Perm, d: Sequence[int]) -> tuple[Perm, Perm]:
    """Untwisted interval with the same polytope as the twisted ``[u, v]``.

    The dual polytope is matched against twisted intervals of the dual rank and
    the inverses of the matching interval are returned.
    """
    n = len(u)
    d = _ranks(d, n)
    target = dual_points(q_twisted(u, v, d), len(d))
    ds = dual_ranks(d, n)
    cands = _family(n, ds, True).get(frozenset(target))
    if not cands:
        raise BruhatError("no twisted interval realises the dual polytope")
    a, b = _pick(cands)
    return inverse(a), inverse(b)


def untwisted_to_twisted(u: Perm, v: Perm, d: Sequence[int], check_minimal: bool = True) -> tuple[Perm, Perm]:
    """Twisted interval with the same polytope as the untwisted ``[u, v]``."""
    n = len(u)
    d = _ranks(d, n)
    target = dual_points(q_polytope(u, v, d, check_minimal), len(d))
    ds = dual_ranks(d, n)
    cands = _family(n, ds, False).get(frozenset(target))
    if not cands:
        raise BruhatError("no untwisted interval realises the dual polytope")
    a, b = _pick(cands)
    return inverse(a), inverse(b)


# ---- hollow rank -------------------------------------------------------------------

SYMBOLS = ("0", "+", "-", "*")


def parse_alpha(alpha) -> tuple[str, ...]:
    if isinstance(alpha, str):
        s = alpha.replace(",", "").replace(" ", "").replace("−", "-")
        out = tuple(s)
    else:
        out = tuple(str(a).replace("−", "-") for a in alpha)
    for a in out:
        if a not in SYMBOLS:
            raise BruhatError(f"bad symbol {a!r}")
    return out


def hollow_vertices(alpha) -> set[tuple[int, ...]]:
    """Vertices of the hollow polytope of ``alpha`` in 0/1/2 coordinates.

    Coordinate ``i`` is 0 where ``alpha_i`` allows a ``-1`` (``-`` or ``*``) and 2
    where it allows a ``+1`` (``+`` or ``*``); all other coordinates are 1.
    """
    a = parse_alpha(alpha)
    n = len(a)
    lows = [i for i in range(n) if a[i] in "-*"]
    highs = [j for j in range(n) if a[j] in "+*"]
    out = set()
    for i in lows:
        for j in highs:
            if i != j:
                p = [1] * n
                p[i], p[j] = 0, 2
                out.add(tuple(p))
    return out


def alpha_of_vertices(pts: Iterable[Sequence[int]], n: int) -> tuple[str, ...]:
    lows, highs = set(), set()
    for p in pts:
        for i, c in enumerate(p):
            if c == 0:
                lows.add(i)
            elif c == 2:
                highs.add(i)
    return tuple("*" if i in lows and i in highs else "-" if i in lows else "+" if i in highs else "0"
                 for i in range(n))


def has_isolated_star(alpha) -> bool:
    a = parse_alpha(alpha)
    n = len(a)
    return any(a[i] == "*" and (i == 0 or a[i - 1] != "*") and (i == n - 1 or a[i + 1] != "*")
               for i in range(n))


def _all_minus(a, upto: int) -> bool:
    """``alpha_l = -`` for every 1-based ``l < upto`` (vacuously true)."""
    return all(a[l - 1] == "-" for l in range(1, upto))


@dataclass(frozen=True)
class HollowWord:
    """A subword of the hollow reduced word, as its ascending and descending letter sets."""

    n: int
    ascending: frozenset
    descending: frozenset

    def letters(self) -> tuple[int, ...]:
        return tuple(sorted(self.ascending)) + tuple(sorted(self.descending, reverse=True))

    def perm(self) -> Perm:
        return word_to_perm(self.letters(), self.n)


def _top_word(a) -> HollowWord:
    n = len(a)
    k = max(i for i in range(1, n + 1) if a[i - 1] in "-*")
    m = min(i for i in range(1, n + 1) if a[i - 1] in "+*")
    return HollowWord(n, frozenset(range(1, k - 1)), frozenset(range(m, n)))


def _bottom_word(a) -> HollowWord:
    n = len(a)
    al = lambda i: a[i - 1] if 1 <= i <= n else None  # noqa: E731
    asc, desc = set(), set()
    for i in range(1, n):
        only_plus_after = all(al(j) == "+" for j in range(i + 1, n + 1))
        only_minus_upto = all(al(j) == "-" for j in range(1, i + 1))
        if al(i + 1) == "+" and not (only_plus_after or only_minus_upto):
            asc.add(i)
        if (al(i), al(i + 1)) == ("+", "*"):
            asc.add(i)
        if al(i + 1) == "-" and not _all_minus(a, i + 1):
            desc.add(i)
        if (al(i), al(i + 1)) == ("-", "*") and not all(al(j) == "-" for j in range(1, i + 1)):
            desc.add(i)
    return HollowWord(n, frozenset(asc), frozenset(desc))


def interval_for_alpha(alpha) -> tuple[Perm, Perm]:
    """Interval whose untwisted hollow Bruhat polytope is the polytope of ``alpha``."""
    a = parse_alpha(alpha)
    if "0" in a:
        raise BruhatError("interval_for_alpha needs a full-dimensional sequence (no 0)")
    if a.count("*") < 2:
        raise BruhatError("a full-dimensional symbol sequence has at least two *")
    if has_isolated_star(a):
        raise NotBruhatError(f"{''.join(a)} has an isolated * and is not Bruhat")
    return _bottom_word(a).perm(), _top_word(a).perm()


def membership_word(alpha, i: int, j: int) -> HollowWord:
    """Word for a permutation in the interval of ``alpha`` sending ``i`` to 1 and ``j`` to n.

    Starts from the bottom word, fills gaps, then applies the conditional
    edits in order.
    """
    a = parse_alpha(alpha)
    n = len(a)
    al = lambda t: a[t - 1] if 1 <= t <= n else None  # noqa: E731
    if i == j or al(i) not in ("-", "*") or al(j) not in ("+", "*"):
        raise BruhatError(f"({i}, {j}) does not index a vertex of the polytope of {''.join(a)}")
    w = _bottom_word(a)
    asc, desc = set(w.ascending), set(w.descending)
    asc |= set(range(1, i - 1))
    desc |= set(range(j, n))
    if j < i and (al(i - 1), al(i)) == ("+", "*"):
        asc.discard(i - 1)
    if (al(j - 1), al(j)) == ("-", "*") and not _all_minus(a, j):
        desc.discard(j - 1)
    if i < j and (al(j - 1), al(j)) == ("-", "*") and not _all_minus(a, j):
        asc.add(j - 1)
    if i < j and (al(i - 1), al(i)) == ("*", "*"):
        desc.add(i - 1)
    if i < j and _all_minus(a, i):
        asc.add(i - 1)
    valid = set(range(1, n))
    return HollowWord(n, frozenset(asc & valid), frozenset(desc & valid))


def hollow_point(x: Perm) -> tuple[int, ...]:
    return proj_untwisted(x, (1, len(x) - 1))


__all__ = [
    "Perm", "BruhatError", "NotMinimalError", "NotBruhatError", "perm", "format_perm", "identity",
    "longest", "compose", "inverse", "length", "word_to_perm", "reduced_word", "bruhat_leq",
    "bruhat_leq_subword", "all_perms", "interval", "iota", "e_d", "f_d", "proj_untwisted",
    "proj_twisted", "fiber_untwisted", "fiber_twisted", "is_fiber_minimal", "q_points", "q_polytope",
    "q_twisted", "dual_ranks", "dual_points", "valid_intervals", "polytope_family",
    "twisted_to_untwisted", "untwisted_to_twisted", "parse_alpha", "hollow_vertices",
    "alpha_of_vertices", "has_isolated_star", "HollowWord", "interval_for_alpha", "membership_word",
    "hollow_point",
]

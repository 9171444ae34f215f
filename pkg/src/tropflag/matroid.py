"""Valuated matroids on a labelled ground set, their minors, and Plücker checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .trop import INF, TropValue, format_trop, is_inf, min_achieved_twice, trop, trop_sum

Subset = tuple[int, ...]


class MatroidError(ValueError):
    pass


class RankDropError(MatroidError):
    """Raised when deleting a coloop or contracting a loop."""

    def __init__(self, op: str, element: int):
        kind = "coloop" if op == "delete" else "loop"
        super().__init__(f"cannot {op} element {element}: it is a {kind}")
        self.op = op
        self.element = element


@dataclass(frozen=True)
class Violation:
    """A failing relation: the pair (S, T) and the terms that were compared."""

    kind: str
    S: Subset = ()
    T: Subset = ()
    terms: tuple = ()
    constituents: tuple[int, ...] = ()  # 0-based positions in a flag

    def describe(self) -> str:
        where = ""
        if self.constituents:
            where = " in constituent" + ("s " if len(self.constituents) > 1 else " ")
            where += ",".join(str(c + 1) for c in self.constituents)
        if self.kind == "empty support":
            return "empty support" + where
        S = "{" + ",".join(map(str, self.S)) + "}"
        T = "{" + ",".join(map(str, self.T)) + "}"
        terms = "(" + ", ".join(str(format_trop(t)) for t in self.terms) + ")"
        return f"{self.kind} relation fails{where} at S={S}, T={T}, terms={terms}"


def subset(items: Iterable[int]) -> Subset:
    return tuple(sorted(items))


@dataclass(frozen=True, eq=False)
class ValuatedMatroid:
    """Map from the ``d``-subsets of ``ground`` to tropical values.

    Only finite values are stored; every other ``d``-subset reads as infinity.
    """

    ground: tuple[int, ...]
    d: int
    _vals: dict = field(repr=False)

    @classmethod
    def from_values(cls, values: Mapping, d: int | None = None, n: int | None = None,
                    ground: Sequence[int] | None = None) -> "ValuatedMatroid":
        if ground is None:
            if n is None:
                raise MatroidError("need n or ground")
            ground = range(1, n + 1)
        ground = tuple(sorted(ground))
        if len(set(ground)) != len(ground):
            raise MatroidError(f"repeated ground elements in {ground}")
        gset = set(ground)
        vals = {}
        for key, val in values.items():
            B = frozenset(key)
            if len(B) != len(tuple(key)):
                raise MatroidError(f"repeated elements in subset {key!r}")
            if d is None:
                d = len(B)
            if len(B) != d:
                raise MatroidError(f"subset {sorted(B)} has size {len(B)}, expected {d}")
            if not B <= gset:
                raise MatroidError(f"subset {sorted(B)} is not inside the ground set {ground}")
            v = trop(val)
            if not is_inf(v):
                vals[B] = v
        if d is None:
            raise MatroidError("cannot infer the rank of an empty valuation")
        if not 0 <= d <= len(ground):
            raise MatroidError(f"rank {d} out of range for ground set of size {len(ground)}")
        return cls(ground, d, vals)

    @classmethod
    def trivial(cls, bases: Iterable[Iterable[int]], d: int | None = None, n: int | None = None,
                ground: Sequence[int] | None = None) -> "ValuatedMatroid":
        return cls.from_values({tuple(B): 0 for B in bases}, d=d, n=n, ground=ground)

    @classmethod
    def uniform(cls, d: int, n: int) -> "ValuatedMatroid":
        return cls.trivial(combinations(range(1, n + 1), d), d=d, n=n)

    @property
    def n(self) -> int:
        return len(self.ground)

    def __call__(self, B: Iterable[int]) -> TropValue:
        return self._vals.get(frozenset(B), INF)

    def subsets(self):
        return combinations(self.ground, self.d)

    def support(self) -> list[Subset]:
        return sorted(subset(B) for B in self._vals)

    def items(self) -> list[tuple[Subset, TropValue]]:
        return sorted((subset(B), v) for B, v in self._vals.items())

    def loops(self) -> list[int]:
        used = set().union(*self._vals) if self._vals else set()
        return [i for i in self.ground if i not in used]

    def coloops(self) -> list[int]:
        if not self._vals:
            return []
        common = frozenset.intersection(*self._vals)
        return [i for i in self.ground if i in common]

    def is_trivially_valued(self) -> bool:
        return all(v == 0 for v in self._vals.values())

    def __eq__(self, other):
        if not isinstance(other, ValuatedMatroid):
            return NotImplemented
        return (self.ground, self.d, self._vals) == (other.ground, other.d, other._vals)

    def __hash__(self):
        return hash((self.ground, self.d, frozenset(self._vals.items())))

    def __repr__(self):
        body = ", ".join(f"{''.join(map(str, B)) or '{}'}: {v}" for B, v in self.items())
        return f"ValuatedMatroid(ground={self.ground}, d={self.d}, {{{body}}})"


def _terms(mu: ValuatedMatroid, nu: ValuatedMatroid, S: Subset, T: Subset) -> tuple:
    """Terms mu(S t) + nu(T \\ t) for t in T \\ S, in increasing order of t."""
    Sset, Tset = frozenset(S), frozenset(T)
    out = []
    for t in T:
        if t in Sset:
            continue
        a = mu(Sset | {t})
        b = nu(Tset - {t})
        out.append(INF if is_inf(a) or is_inf(b) else a + b)
    return tuple(out)


def plucker_violation(mu: ValuatedMatroid) -> Violation | None:
    """First failing tropical Plücker relation, or None when ``mu`` is valid."""
    if not mu._vals:
        return Violation("empty support")
    d = mu.d
    if d == 0 or d == mu.n:
        return None
    for S in combinations(mu.ground, d - 1):
        for T in combinations(mu.ground, d + 1):
            terms = _terms(mu, mu, S, T)
            if not min_achieved_twice(terms):
                return Violation("plucker", S, T, terms)
    return None


def validate_plucker(mu: ValuatedMatroid) -> bool:
    return plucker_violation(mu) is None


def dual(mu: ValuatedMatroid) -> ValuatedMatroid:
    g = frozenset(mu.ground)
    return ValuatedMatroid(mu.ground, mu.n - mu.d, {g - B: v for B, v in mu._vals.items()})


def delete(mu: ValuatedMatroid, i: int) -> ValuatedMatroid:
    if i not in mu.ground:
        raise MatroidError(f"{i} is not in the ground set {mu.ground}")
    if i in mu.coloops():
        raise RankDropError("delete", i)
    ground = tuple(g for g in mu.ground if g != i)
    return ValuatedMatroid(ground, mu.d, {B: v for B, v in mu._vals.items() if i not in B})


def contract(mu: ValuatedMatroid, i: int) -> ValuatedMatroid:
    if i not in mu.ground:
        raise MatroidError(f"{i} is not in the ground set {mu.ground}")
    if i in mu.loops():
        raise RankDropError("contract", i)
    ground = tuple(g for g in mu.ground if g != i)
    return ValuatedMatroid(ground, mu.d - 1, {B - {i}: v for B, v in mu._vals.items() if i in B})


def contract_set(mu: ValuatedMatroid, S: Iterable[int]) -> ValuatedMatroid:
    for i in sorted(S):
        mu = contract(mu, i)
    return mu


def restrict(mu: ValuatedMatroid, I: Iterable[int]) -> ValuatedMatroid:
    """Delete every element outside ``I``, one at a time."""
    keep = set(I)
    for i in [g for g in mu.ground if g not in keep]:
        mu = delete(mu, i)
    return mu


def relabel(mu: ValuatedMatroid, labels: Sequence[int] | None = None) -> ValuatedMatroid:
    """Order-preserving relabelling of the ground set to ``1..n`` (or ``labels``)."""
    if labels is None:
        labels = range(1, mu.n + 1)
    labels = tuple(labels)
    if len(labels) != mu.n:
        raise MatroidError("label count does not match the ground set")
    m = dict(zip(mu.ground, labels))
    return ValuatedMatroid(tuple(sorted(labels)), mu.d,
                           {frozenset(m[i] for i in B): v for B, v in mu._vals.items()})


def _as_weights(mu: ValuatedMatroid, x) -> dict[int, TropValue]:
    if isinstance(x, Mapping):
        return {i: trop(x.get(i, 0)) for i in mu.ground}
    x = list(x)
    if len(x) != mu.n:
        raise MatroidError(f"translation vector has length {len(x)}, expected {mu.n}")
    return {i: trop(v) for i, v in zip(mu.ground, x)}


def translate(mu: ValuatedMatroid, x) -> ValuatedMatroid:
    w = _as_weights(mu, x)
    return ValuatedMatroid(mu.ground, mu.d,
                           {B: v + sum(w[i] for i in B) for B, v in mu._vals.items()})


def initial_matroid(mu: ValuatedMatroid, x=None) -> ValuatedMatroid:
    """Cell of the regular subdivision selected by ``x``, as a trivially valued matroid."""
    if x is None:
        x = [0] * mu.n
    w = _as_weights(mu, x)
    shifted = {B: v - sum(w[i] for i in B) for B, v in mu._vals.items()}
    if not shifted:
        return ValuatedMatroid(mu.ground, mu.d, {})
    m = min(shifted.values())
    return ValuatedMatroid(mu.ground, mu.d, {B: trop(0) for B, v in shifted.items() if v == m})


def positroid_3term_violation(mu: ValuatedMatroid) -> Violation | None:
    """First failing positive three-term relation.

    For ``R`` of size ``d-2`` and ``a<b<c<e`` outside ``R`` the terms are
    ``mu(Rab)+mu(Rce)``, ``mu(Rac)+mu(Rbe)``, ``mu(Rae)+mu(Rbc)``, i.e. the
    lambda-values of ``S = Ra``, ``T = Rbce``; the middle one must equal the
    minimum of the outer two.
    """
    v = plucker_violation(mu)
    if v is not None:
        raise MatroidError(f"not a valuated matroid: {v.describe()}")
    if mu.d < 2:
        return None
    for R in combinations(mu.ground, mu.d - 2):
        rest = [g for g in mu.ground if g not in R]
        for a, b, c, e in combinations(rest, 4):
            S = subset(R + (a,))
            T = subset(R + (b, c, e))
            lam = _terms(mu, mu, S, T)
            if lam[1] != trop_sum((lam[0], lam[2])):
                return Violation("positroid", S, T, lam)
    return None


def is_valuated_positroid_3term(mu: ValuatedMatroid) -> bool:
    return positroid_3term_violation(mu) is None

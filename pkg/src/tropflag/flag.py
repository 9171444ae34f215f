"""Flag valuated matroids, Plücker pairs, lambda-values and hollow projections."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .matroid import (
    MatroidError,
    RankDropError,
    Subset,
    ValuatedMatroid,
    Violation,
    _terms,
    contract_set,
    dual,
    plucker_violation,
    relabel,
    restrict,
    subset,
    translate,
)
from .trop import TropValue, argmin_positions, is_inf, min_achieved_twice, trop_sum


class FlagError(ValueError):
    pass


class DegeneratePairError(FlagError):
    pass


@dataclass(frozen=True, eq=False)
class FlagValuatedMatroid:
    constituents: tuple[ValuatedMatroid, ...]

    def __post_init__(self):
        cs = tuple(self.constituents)
        object.__setattr__(self, "constituents", cs)
        if not cs:
            raise FlagError("a flag needs at least one constituent")
        g = cs[0].ground
        if any(c.ground != g for c in cs):
            raise FlagError("constituents live on different ground sets")
        ranks = [c.d for c in cs]
        if any(a >= b for a, b in zip(ranks, ranks[1:])):
            raise FlagError(f"ranks {ranks} are not strictly increasing")
        if ranks[0] < 1 or ranks[-1] > len(g):
            raise FlagError(f"ranks {ranks} out of range for n={len(g)}")

    @property
    def ground(self) -> tuple[int, ...]:
        return self.constituents[0].ground

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(c.d for c in self.constituents)

    def is_hollow(self) -> bool:
        return self.ranks == (1, self.n - 1) and self.n >= 3

    def __len__(self):
        return len(self.constituents)

    def __getitem__(self, i) -> ValuatedMatroid:
        return self.constituents[i]

    def __eq__(self, other):
        if not isinstance(other, FlagValuatedMatroid):
            return NotImplemented
        return self.constituents == other.constituents

    def __hash__(self):
        return hash(self.constituents)


@dataclass(frozen=True)
class PlueckerPair:
    """``S``/``T`` index one relation; ``constituents`` are 0-based positions in the flag."""

    S: Subset
    T: Subset
    kind: str  # "grassmann" or "incidence"
    constituents: tuple[int, int]

    @property
    def free(self) -> Subset:
        """The elements of T outside S, increasing; these index the lambda-values."""
        s = set(self.S)
        return tuple(t for t in self.T if t not in s)


@dataclass(frozen=True)
class LambdaVector:
    pair: PlueckerPair
    values: tuple[TropValue, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def flag_violation(F: FlagValuatedMatroid) -> Violation | None:
    """First failing relation: constituent Plücker relations first, then incidences."""
    for k, mu in enumerate(F.constituents):
        v = plucker_violation(mu)
        if v is not None:
            return Violation(v.kind, v.S, v.T, v.terms, (k,))
    g = F.ground
    for i, j in combinations(range(len(F)), 2):
        mu, nu = F[i], F[j]
        if nu.d + 1 > F.n:
            continue
        for S in combinations(g, mu.d - 1):
            for T in combinations(g, nu.d + 1):
                terms = _terms(mu, nu, S, T)
                if not min_achieved_twice(terms):
                    return Violation("incidence", S, T, terms, (i, j))
    return None


def validate_flag(F: FlagValuatedMatroid) -> bool:
    return flag_violation(F) is None


def enumerate_pluecker_pairs(F: FlagValuatedMatroid) -> list[PlueckerPair]:
    """All relation-indexing pairs of ``F``.

    Grassmann pairs of a rank-``d`` constituent are the ``S`` inside ``T`` pairs
    (two equal lambda-values) together with the three-term pairs ``S = Ra``,
    ``T = Rbce`` with ``a < b < c < e``.  Incidence pairs join consecutive
    constituents and always have ``S`` inside ``T``.
    """
    g = F.ground
    pairs: list[PlueckerPair] = []
    for k, mu in enumerate(F.constituents):
        d = mu.d
        if d + 1 <= F.n:
            for S in combinations(g, d - 1):
                rest = [x for x in g if x not in S]
                for extra in combinations(rest, 2):
                    pairs.append(PlueckerPair(S, subset(S + extra), "grassmann", (k, k)))
        if d >= 2 and d + 2 <= F.n:
            for R in combinations(g, d - 2):
                rest = [x for x in g if x not in R]
                for a, b, c, e in combinations(rest, 4):
                    pairs.append(PlueckerPair(subset(R + (a,)), subset(R + (b, c, e)),
                                              "grassmann", (k, k)))
    for k in range(len(F) - 1):
        lo, hi = F[k].d, F[k + 1].d
        if hi + 1 > F.n:
            continue
        for S in combinations(g, lo - 1):
            rest = [x for x in g if x not in S]
            for extra in combinations(rest, hi + 2 - lo):
                pairs.append(PlueckerPair(S, subset(S + extra), "incidence", (k, k + 1)))
    return pairs


def lambda_values(F: FlagValuatedMatroid, p: PlueckerPair) -> LambdaVector:
    i, j = p.constituents
    return LambdaVector(p, _terms(F[i], F[j], p.S, p.T))


def incidence_pair(F: FlagValuatedMatroid, S: Iterable[int], T: Iterable[int],
                   constituents: tuple[int, int] | None = None) -> PlueckerPair:
    S, T = subset(S), subset(T)
    if constituents is None:
        constituents = next(((k, k + 1) for k in range(len(F) - 1)
                             if F[k].d - 1 == len(S) and F[k + 1].d + 1 == len(T)), None)
        if constituents is None:
            raise FlagError(f"no consecutive constituents match |S|={len(S)}, |T|={len(T)}")
    if not set(S) <= set(T):
        raise FlagError("incidence pairs need S inside T")
    return PlueckerPair(S, T, "incidence", constituents)


def hollow_projection(F: FlagValuatedMatroid, p: PlueckerPair):
    """Hollow flag on ``T \\ S`` attached to an incidence pair.

    Returns ``(flag, labels)`` where the flag is relabelled ``1..|T\\S|`` in
    increasing order and ``labels[k-1]`` is the original name of element ``k``.
    """
    if p.kind != "incidence":
        raise FlagError("hollow projections are defined for incidence pairs")
    if not set(p.S) <= set(p.T):
        raise FlagError("hollow projections need S inside T")
    i, j = p.constituents
    S, T = p.S, p.T
    try:
        low = restrict(contract_set(F[i], S), T)
        high = restrict(contract_set(F[j], set(S) & set(T)), T)
    except RankDropError as exc:
        raise DegeneratePairError(f"degenerate pair S={S}, T={T}: {exc}") from exc
    labels = p.free
    return FlagValuatedMatroid((relabel(low), relabel(high))), labels


def tnn_violation(lam: Sequence[TropValue]) -> int | None:
    """1-based index where ``lam_i >= lam_{i-1} (+) lam_{i+1}`` fails (ends read as infinity)."""
    k = len(lam)
    for idx in range(k):
        left = lam[idx - 1] if idx > 0 else float("inf")
        right = lam[idx + 1] if idx + 1 < k else float("inf")
        if lam[idx] < trop_sum((left, right)):
            return idx + 1
    return None


def bruhat_violation(lam: Sequence[TropValue]) -> int | None:
    """1-based index of a global minimiser with no minimising neighbour."""
    arg = set(argmin_positions(lam))
    for idx in sorted(arg):
        if idx - 1 not in arg and idx + 1 not in arg:
            return idx + 1
    return None


def nonneg_holds(lam: Sequence[TropValue]) -> bool:
    odd = trop_sum(lam[0::2])
    even = trop_sum(lam[1::2])
    return odd == even


CONDITIONS = ("tnn_necessary", "bruhat_necessary", "nonneg_dressian")


@dataclass
class NecessaryReport:
    tnn_necessary: bool = True
    bruhat_necessary: bool = True
    nonneg_dressian: bool = True
    witnesses: dict = field(default_factory=dict)
    by_kind: dict = field(default_factory=dict)
    pairs_checked: int = 0

    def verdicts(self) -> dict:
        return {c: getattr(self, c) for c in CONDITIONS}


def check_necessary(F: FlagValuatedMatroid) -> NecessaryReport:
    """Evaluate the three lambda-value conditions on every Plücker pair.

    These are necessary for total non-negativity, Bruhat subdivisions and the
    non-negative flag Dressian respectively; sufficiency is not claimed here.
    """
    rep = NecessaryReport()
    rep.by_kind = {k: dict.fromkeys(CONDITIONS, True) for k in ("grassmann", "incidence")}
    for p in enumerate_pluecker_pairs(F):
        lam = lambda_values(F, p).values
        rep.pairs_checked += 1
        checks = {
            "tnn_necessary": tnn_violation(lam),
            "bruhat_necessary": bruhat_violation(lam),
            "nonneg_dressian": None if nonneg_holds(lam) else 0,
        }
        for name, bad in checks.items():
            if bad is None:
                continue
            rep.by_kind[p.kind][name] = False
            if getattr(rep, name):
                setattr(rep, name, False)
                rep.witnesses[name] = {"pair": p, "lambda": lam, "index": bad or None}
    return rep


def dual_flag(F: FlagValuatedMatroid) -> FlagValuatedMatroid:
    return FlagValuatedMatroid(tuple(dual(mu) for mu in reversed(F.constituents)))


def translate_flag(F: FlagValuatedMatroid, x) -> FlagValuatedMatroid:
    return FlagValuatedMatroid(tuple(translate(mu, x) for mu in F.constituents))


def support_flag(F: FlagValuatedMatroid) -> FlagValuatedMatroid:
    return FlagValuatedMatroid(tuple(ValuatedMatroid.trivial(mu.support(), d=mu.d, ground=mu.ground)
                                     for mu in F.constituents))


def proj_equal_flags(F: FlagValuatedMatroid, G: FlagValuatedMatroid) -> bool:
    """Constituent-wise equality in tropical projective space."""
    from .trop import proj_equal

    if F.ground != G.ground or F.ranks != G.ranks:
        return False
    for a, b in zip(F.constituents, G.constituents):
        keys = list(a.subsets())
        if not proj_equal([a(B) for B in keys], [b(B) for B in keys]):
            return False
    return True


__all__ = [
    "FlagError", "DegeneratePairError", "FlagValuatedMatroid", "PlueckerPair", "LambdaVector",
    "flag_violation", "validate_flag", "enumerate_pluecker_pairs", "lambda_values",
    "incidence_pair", "hollow_projection", "tnn_violation", "bruhat_violation", "nonneg_holds",
    "NecessaryReport", "check_necessary", "dual_flag", "translate_flag", "support_flag",
    "proj_equal_flags", "MatroidError", "is_inf",
]

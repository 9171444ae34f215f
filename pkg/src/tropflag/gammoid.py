"""Valuated flag gammoids: minimum-weight vertex-disjoint linkings on weighted
digraphs, gauge translations, and the hollow tnn parametrization."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .flag import FlagValuatedMatroid, flag_violation
from .hollow import HollowError, classify, hollow_parts, is_bruhat_polytope, symbol_sequence
from .matroid import ValuatedMatroid
from .trop import INF, TropValue, is_inf, trop

Vertex = Hashable


class GammoidError(ValueError):
    pass


def bar(i: int) -> str:
    return f"{i}b"


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """Digraph whose ground vertices are the integers ``1..n``; other labels are auxiliary.

    Parallel edges collapse to the minimum weight.  Negative cycles are rejected
    on construction.
    """

    n: int
    vertices: tuple
    weights: dict = field(repr=False)

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple], vertices: Iterable[Vertex] = ()) -> "WeightedDigraph":
        verts = list(range(1, n + 1))
        seen = set(verts)
        for v in vertices:
            if v not in seen:
                seen.add(v)
                verts.append(v)
        w: dict = {}
        for u, v, wt in edges:
            wt = trop(wt)
            if is_inf(wt):
                continue
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    verts.append(x)
            if u == v:
                if wt < 0:
                    raise GammoidError(f"negative loop at {u!r}")
                continue
            if (u, v) not in w or wt < w[(u, v)]:
                w[(u, v)] = wt
        G = cls(n, tuple(verts), w)
        cyc = G.negative_cycle()
        if cyc is not None:
            raise GammoidError(f"negative cycle through {cyc!r}")
        return G

    def edges(self) -> list[tuple]:
        return [(u, v, wt) for (u, v), wt in self.weights.items()]

    def out_edges(self, u) -> list[tuple]:
        return [(v, wt) for (a, v), wt in self.weights.items() if a == u]

    def negative_cycle(self):
        """A vertex on a negative cycle, or None (Bellman-Ford from a virtual root)."""
        dist = {v: Fraction(0) for v in self.vertices}
        for _ in range(len(self.vertices)):
            changed = None
            for (u, v), wt in self.weights.items():
                if dist[u] + wt < dist[v]:
                    dist[v] = dist[u] + wt
                    changed = v
            if changed is None:
                return None
        return changed

    def with_weights(self, updates: Mapping[tuple, TropValue]) -> "WeightedDigraph":
        w = dict(self.weights)
        for e, wt in updates.items():
            if e not in w:
                raise GammoidError(f"no edge {e!r}")
            w[e] = trop(wt)
        return WeightedDigraph.build(self.n, [(u, v, x) for (u, v), x in w.items()], self.vertices)


@dataclass(frozen=True)
class Linking:
    paths: tuple[tuple, ...]
    weight: TropValue


class _Flow:
    """Successive shortest paths with potentials on a unit-capacity network."""

    def __init__(self, size: int):
        self.g: list[list[list]] = [[] for _ in range(size)]
        self.forward: list[tuple[int, int]] = []

    def add(self, u: int, v: int, cost):
        self.forward.append((u, len(self.g[u])))
        self.g[u].append([v, 1, cost, len(self.g[v])])
        self.g[v].append([u, 0, -cost, len(self.g[u]) - 1])

    def used(self) -> dict[int, list[int]]:
        """Heads of saturated forward arcs, keyed by tail."""
        out: dict[int, list[int]] = {}
        for u, k in self.forward:
            arc = self.g[u][k]
            if arc[1] == 0:
                out.setdefault(u, []).append(arc[0])
        return out

    def run(self, s: int, t: int, need: int):
        N = len(self.g)
        # Bellman-Ford potentials; the network has no negative cycles
        pot = [INF] * N
        pot[s] = Fraction(0)
        for _ in range(N):
            changed = False
            for u in range(N):
                if is_inf(pot[u]):
                    continue
                for v, cap, cost, _ in self.g[u]:
                    if cap and pot[u] + cost < pot[v]:
                        pot[v] = pot[u] + cost
                        changed = True
            if not changed:
                break
        pot = [Fraction(0) if is_inf(p) else p for p in pot]
        total = Fraction(0)
        for _ in range(need):
            dist = [INF] * N
            prev: list = [None] * N
            dist[s] = Fraction(0)
            heap = [(Fraction(0), 0, s)]
            tick = 1
            while heap:
                d, _, u = heapq.heappop(heap)
                if d > dist[u]:
                    continue
                for idx, (v, cap, cost, _) in enumerate(self.g[u]):
                    if not cap:
                        continue
                    nd = d + cost + pot[u] - pot[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        prev[v] = (u, idx)
                        heapq.heappush(heap, (nd, tick, v))
                        tick += 1
            if is_inf(dist[t]):
                return None
            for v in range(N):
                if not is_inf(dist[v]):
                    pot[v] += dist[v]
            v = t
            while v != s:
                u, idx = prev[v]
                arc = self.g[u][idx]
                arc[1] -= 1
                self.g[v][arc[3]][1] += 1
                total += arc[2]
                v = u
        return total


def min_weight_linking(G: WeightedDigraph, I: Iterable[Vertex], S: Iterable[Vertex],
                       witness: bool = False):
    """Minimum total weight of vertex-disjoint paths from ``I`` onto ``S``.

    Returns the value (``inf`` when no linking exists), or ``(value, Linking)``
    when ``witness`` is set.
    """
    I, S = list(I), list(S)
    if len(set(I)) != len(I) or len(set(S)) != len(S):
        raise GammoidError("repeated vertices in I or S")
    if len(I) != len(S):
        raise GammoidError(f"|I|={len(I)} differs from |S|={len(S)}")
    idx = {v: k for k, v in enumerate(G.vertices)}
    for v in I + S:
        if v not in idx:
            raise GammoidError(f"unknown vertex {v!r}")
    V = len(G.vertices)
    src, snk = 2 * V, 2 * V + 1
    fl = _Flow(2 * V + 2)
    for k in range(V):
        fl.add(2 * k, 2 * k + 1, Fraction(0))
    for (u, v), wt in G.weights.items():
        fl.add(2 * idx[u] + 1, 2 * idx[v], wt)
    for v in I:
        fl.add(src, 2 * idx[v], Fraction(0))
    for v in S:
        fl.add(2 * idx[v] + 1, snk, Fraction(0))
    val = fl.run(src, snk, len(I))
    if val is None:
        return (INF, None) if witness else INF
    if not witness:
        return val
    nxt = fl.used()
    paths = []
    for v in I:
        path = [v]
        node = 2 * idx[v] + 1
        while True:
            step = [h for h in nxt.get(node, ()) if h < 2 * V]
            if not step:
                break
            path.append(G.vertices[step[0] // 2])
            node = step[0] + 1
        paths.append(tuple(path))
    return val, Linking(tuple(paths), val)


def brute_force_linking(G: WeightedDigraph, I: Iterable[Vertex], S: Iterable[Vertex]) -> TropValue:
    """Exhaustive search over systems of vertex-disjoint simple paths."""
    I, S = list(I), set(S)
    out_adj: dict = {}
    for (u, v), wt in G.weights.items():
        out_adj.setdefault(u, []).append((v, wt))
    best = [INF]

    def paths_from(v, used):
        # simple paths starting at v avoiding ``used``, ending in an unused sink
        stack = [(v, (v,), Fraction(0))]
        while stack:
            x, p, w = stack.pop()
            if x in S:
                yield p, w
            for y, wt in out_adj.get(x, ()):
                if y not in used and y not in p:
                    stack.append((y, p + (y,), w + wt))

    def rec(k, used, acc):
        if k == len(I):
            if acc < best[0]:
                best[0] = acc
            return
        if I[k] in used:
            return
        for p, w in paths_from(I[k], used):
            rec(k + 1, used | set(p), acc + w)

    rec(0, frozenset(), Fraction(0))
    return best[0]


def _check_sinks(G: WeightedDigraph, sinks: Sequence[Iterable[Vertex]]) -> list[tuple]:
    out = [tuple(s) for s in sinks]
    if not out:
        raise GammoidError("empty flag of sinks")
    for a, b in zip(out, out[1:]):
        if not set(a) < set(b):
            raise GammoidError(f"sink sets are not a strict chain: {a} vs {b}")
    verts = set(G.vertices)
    for s in out:
        if len(set(s)) != len(s) or not set(s) <= verts:
            raise GammoidError(f"bad sink set {s}")
    if len(out[-1]) > G.n:
        raise GammoidError("the largest sink set is bigger than the ground set")
    return out


def evaluate_gammoid(G: WeightedDigraph, sinks: Sequence[Iterable[Vertex]], check: bool = True,
                     linker=min_weight_linking) -> FlagValuatedMatroid:
    """Flag of minimum linking weights onto each sink set."""
    sinks = _check_sinks(G, sinks)
    ground = tuple(range(1, G.n + 1))
    cons = []
    for k, S in enumerate(sinks):
        vals = {I: linker(G, I, S) for I in combinations(ground, len(S))}
        mu = ValuatedMatroid.from_values(vals, d=len(S), ground=ground)
        if not mu.support():
            raise GammoidError(f"sink set {k + 1} has no linking from any subset: empty support")
        cons.append(mu)
    F = FlagValuatedMatroid(tuple(cons))
    if check:
        v = flag_violation(F)
        if v is not None:
            raise AssertionError(f"gammoid evaluation is not a flag matroid: {v.describe()}")
    return F


def gauge_translate(G: WeightedDigraph, sinks: Sequence[Iterable[Vertex]], x) -> tuple:
    """Graph and sinks whose gammoid is the translate of the original by ``x``.

    A ground element that is a sink is first replaced in the sinks by a fresh
    vertex reached through a weight-0 edge, so that only paths starting at it
    are affected.
    """
    sinks = [list(s) for s in _check_sinks(G, sinks)]
    x = list(x)
    if len(x) != G.n:
        raise GammoidError(f"translation vector has length {len(x)}, expected {G.n}")
    w = dict(G.weights)
    verts = list(G.vertices)
    for i in range(1, G.n + 1):
        r = trop(x[i - 1])
        if r == 0:
            continue
        if any(i in s for s in sinks):
            new = ("gauge", i)
            while new in verts:
                new = ("gauge",) + new
            verts.append(new)
            w[(i, new)] = Fraction(0)
            sinks = [[new if v == i else v for v in s] for s in sinks]
        for (u, v) in list(w):
            if u == i:
                w[(u, v)] += r
            if v == i:
                w[(u, v)] -= r
    G2 = WeightedDigraph.build(G.n, [(u, v, c) for (u, v), c in w.items()], verts)
    return G2, [tuple(s) for s in sinks]


# ---- the hollow construction ---------------------------------------------------------

@dataclass(frozen=True)
class GammaSkeleton:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    loops: frozenset
    chain_edges: tuple[tuple, ...]
    diagonal_edges: tuple[tuple, ...]
    sinks: tuple[tuple, ...]

    def graph(self, chain=None, diagonal=None) -> WeightedDigraph:
        """Weighted graph; ``chain``/``diagonal`` list weights in edge order (default 0)."""
        chain = [0] * len(self.chain_edges) if chain is None else list(chain)
        diagonal = [0] * len(self.diagonal_edges) if diagonal is None else list(diagonal)
        if len(chain) != len(self.chain_edges) or len(diagonal) != len(self.diagonal_edges):
            raise GammoidError("wrong number of edge weights")
        edges = [(i, bar(i), 0) for i in range(1, self.n + 1)]
        edges += [(u, v, wt) for (u, v), wt in zip(self.chain_edges, chain)]
        edges += [(u, v, wt) for (u, v), wt in zip(self.diagonal_edges, diagonal)]
        verts = [bar(i) for i in range(1, self.n + 1)]
        return WeightedDigraph.build(self.n, edges, verts)


def _segments(members: Sequence[int]) -> list[tuple[int, ...]]:
    segs: list[list[int]] = []
    for c in sorted(members):
        if segs and segs[-1][-1] == c - 1:
            segs[-1].append(c)
        else:
            segs.append([c])
    return [tuple(s) for s in segs]


def gamma_of(F: FlagValuatedMatroid) -> GammaSkeleton:
    """Graph skeleton presenting every tnn valuation on the support of a hollow flag."""
    alpha = symbol_sequence(F)
    if not is_bruhat_polytope(alpha):
        raise GammoidError(f"not Bruhat: symbol sequence {''.join(alpha)} has an isolated *")
    mu, nu = hollow_parts(F)
    n = F.n
    nonloops = [i for i in range(1, n + 1) if not is_inf(mu[i - 1])]
    noncoloops = [i for i in range(1, n + 1) if not is_inf(nu[i - 1])]
    C = sorted(set(nonloops) & set(noncoloops))
    segs = _segments(C)
    last = {s[-1] for s in segs}
    b = tuple(i for i in noncoloops if i not in last)
    a = tuple(nonloops)
    if not a or not b:
        raise GammoidError("the support has no non-loop or no usable non-coloop")
    chain = tuple((a[k], a[k + 1]) for k in range(len(a) - 1))
    diag = tuple((b[k], bar(b[k + 1])) for k in range(len(b) - 1))
    S1 = (bar(a[-1]),)
    S2 = tuple(bar(i) for i in range(1, n + 1) if i != b[0])
    if not set(S1) < set(S2):
        raise GammoidError("sink sets are not nested for this support")
    return GammaSkeleton(n, a, b, tuple(segs), frozenset(set(range(1, n + 1)) - set(a)),
                         chain, diag, (S1, S2))


@dataclass
class TnnWeights:
    skeleton: GammaSkeleton
    chain: tuple
    diagonal: tuple
    x: tuple
    translation: tuple
    shift: Fraction

    def graph(self) -> WeightedDigraph:
        return self.skeleton.graph(self.chain, self.diagonal)


def recover_tnn_weights(F: FlagValuatedMatroid) -> TnnWeights:
    """Edge weights on the graph of the support reproducing a tnn hollow flag.

    The flag is first translated so the rank-one part is trivially valued and
    the corank-one part is shifted so it vanishes at the complement of ``b_1``;
    chain edges then carry weight 0 and diagonal ``b_k -> bar(b_{k+1})`` carries
    ``x_{k+1} - x_k``.
    """
    c = classify(F)
    if not c.tnn:
        raise HollowError("not tnn: a lambda-value is below both neighbours")
    skel = gamma_of(F)
    mu, nu = hollow_parts(F)
    n = F.n
    translation = tuple(Fraction(0) if is_inf(m) else -m for m in mu)
    tsum = sum(translation)
    # after translating, nu([n]\\k) gains the sum of the translation outside k
    nu_t = [v if is_inf(v) else v + tsum - translation[k] for k, v in enumerate(nu)]
    shift = -nu_t[skel.b[0] - 1]
    lam = [v if is_inf(v) else v + shift for v in nu_t]  # equals lambda at non-loops
    seg_of = {e: s for s in skel.segments for e in s}
    xs = []
    for bk in skel.b:
        if bk in skel.loops:
            xs.append(lam[bk - 1])
        else:
            s = seg_of[bk]
            nxt = bk + 1
            if nxt not in s:
                raise GammoidError(f"{bk} should not be the last element of its segment")
            xs.append(max(lam[bk - 1], lam[nxt - 1]))
    diag = tuple(xs[k + 1] - xs[k] for k in range(len(xs) - 1))
    chain = tuple(Fraction(0) for _ in skel.chain_edges)
    return TnnWeights(skel, chain, diag, tuple(xs), translation, shift)


def tnn_gammoid_presentation(F: FlagValuatedMatroid):
    """``(graph, sinks)`` whose gammoid equals ``F`` up to projective scaling."""
    tw = recover_tnn_weights(F)
    G = tw.graph()
    back = [-t for t in tw.translation]
    return gauge_translate(G, tw.skeleton.sinks, back)


__all__ = [
    "GammoidError", "bar", "WeightedDigraph", "Linking", "min_weight_linking", "brute_force_linking",
    "evaluate_gammoid", "gauge_translate", "GammaSkeleton", "gamma_of", "TnnWeights",
    "recover_tnn_weights", "tnn_gammoid_presentation",
]

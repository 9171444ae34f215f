"""JSON encoding of matroids, flags, graphs and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .flag import FlagValuatedMatroid, PlueckerPair
from .gammoid import WeightedDigraph
from .matroid import MatroidError, ValuatedMatroid, Violation
from .trop import format_trop, trop


class InputError(ValueError):
    """Malformed input; ``where`` is ``line:col`` for syntax errors or a JSON path."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, f"line {e.lineno}, column {e.colno}") from None


# ---- subsets ---------------------------------------------------------------------------

def encode_subset(S: Sequence[int], n: int) -> str:
    S = sorted(S)
    if n <= 9:
        return "".join(str(i) for i in S)
    return ",".join(str(i) for i in S)


def decode_subset(key: str, n: int, where: str = "") -> tuple[int, ...]:
    key = key.strip()
    if not key:
        return ()
    try:
        if "," in key or n > 9:
            S = tuple(int(p) for p in key.split(","))
        else:
            S = tuple(int(c) for c in key)
    except ValueError:
        raise InputError(f"bad subset key {key!r}", where) from None
    return S


def _scalar(v, where: str):
    if isinstance(v, float) and v != int(v):
        raise InputError(f"floats are not accepted, write {v!r} as \"p/q\"", where)
    try:
        return trop(v)
    except (TypeError, ValueError) as e:
        raise InputError(str(e), where) from None


def _need(obj, key, where):
    if not isinstance(obj, dict):
        raise InputError("expected an object", where)
    if key not in obj:
        raise InputError(f"missing key {key!r}", where)
    return obj[key]


# ---- matroids and flags ----------------------------------------------------------------

def matroid_from_json(obj, where: str = "$", n: int | None = None) -> ValuatedMatroid:
    n = _need(obj, "n", where) if n is None or "n" in obj else n
    d = _need(obj, "d", where)
    vals = _need(obj, "values", where)
    if not isinstance(n, int) or not isinstance(d, int):
        raise InputError("n and d must be integers", where)
    if not isinstance(vals, dict):
        raise InputError("values must be an object", f"{where}.values")
    parsed = {}
    for key, v in vals.items():
        w = f"{where}.values[{key!r}]"
        S = decode_subset(key, n, w)
        parsed[S] = _scalar(v, w)
    try:
        return ValuatedMatroid.from_values(parsed, d=d, n=n)
    except MatroidError as e:
        raise InputError(str(e), where) from None


def matroid_to_json(mu: ValuatedMatroid) -> dict:
    return {"n": mu.n, "d": mu.d,
            "values": {encode_subset(B, mu.n): format_trop(v) for B, v in mu.items()}}


def flag_from_json(obj, where: str = "$") -> FlagValuatedMatroid:
    n = _need(obj, "n", where)
    cons = _need(obj, "constituents", where)
    if not isinstance(cons, list) or not cons:
        raise InputError("constituents must be a non-empty list", f"{where}.constituents")
    ms = [matroid_from_json(c, f"{where}.constituents[{k}]", n=n) for k, c in enumerate(cons)]
    if "ranks" in obj and list(obj["ranks"]) != [m.d for m in ms]:
        raise InputError(f"ranks {obj['ranks']} disagree with constituent ranks {[m.d for m in ms]}",
                         f"{where}.ranks")
    try:
        return FlagValuatedMatroid(tuple(ms))
    except ValueError as e:
        raise InputError(str(e), where) from None


def flag_to_json(F: FlagValuatedMatroid) -> dict:
    return {"n": F.n, "ranks": list(F.ranks), "constituents": [matroid_to_json(m) for m in F]}


# ---- graphs ----------------------------------------------------------------------------

def _vertex(label, where: str):
    if isinstance(label, int) and not isinstance(label, bool):
        return label
    if isinstance(label, str):
        return int(label) if label.isdigit() else label
    raise InputError(f"bad vertex label {label!r}", where)


def graph_from_json(obj, where: str = "$") -> tuple[WeightedDigraph, list[tuple]]:
    """Graph JSON to ``(graph, sinks)``.  The ground set is the digit-labelled vertices."""
    verts = [_vertex(v, f"{where}.vertices[{k}]") for k, v in enumerate(_need(obj, "vertices", where))]
    edges = []
    for k, e in enumerate(_need(obj, "edges", where)):
        w = f"{where}.edges[{k}]"
        edges.append((_vertex(_need(e, "from", w), w), _vertex(_need(e, "to", w), w),
                      _scalar(_need(e, "w", w), f"{w}.w")))
    sinks = [tuple(_vertex(v, f"{where}.sink_flag[{k}]") for v in s)
             for k, s in enumerate(_need(obj, "sink_flag", where))]
    ground = sorted(v for v in verts if isinstance(v, int))
    n = obj.get("n", len(ground))
    if ground != list(range(1, len(ground) + 1)):
        raise InputError("integer vertices must be 1..n", f"{where}.vertices")
    try:
        G = WeightedDigraph.build(n, edges, verts)
    except ValueError as e:
        raise InputError(str(e), where) from None
    return G, sinks


def _label(v):
    return str(v)


def graph_to_json(G: WeightedDigraph, sinks) -> dict:
    return {
        "vertices": [_label(v) for v in G.vertices],
        "edges": [{"from": _label(u), "to": _label(v), "w": format_trop(w)} for u, v, w in G.edges()],
        "sink_flag": [[_label(v) for v in s] for s in sinks],
    }


# ---- report fragments ------------------------------------------------------------------

def jsonable(x, n: int | None = None):
    """Recursively convert library values into JSON-ready data."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction, float)):
        return format_trop(x)
    if isinstance(x, PlueckerPair):
        return {"S": list(x.S), "T": list(x.T), "kind": x.kind,
                "constituents": [c + 1 for c in x.constituents]}
    if isinstance(x, Violation):
        return {"kind": x.kind, "S": list(x.S), "T": list(x.T),
                "terms": [jsonable(t) for t in x.terms],
                "constituents": [c + 1 for c in x.constituents], "message": x.describe()}
    if isinstance(x, ValuatedMatroid):
        return matroid_to_json(x)
    if isinstance(x, FlagValuatedMatroid):
        return flag_to_json(x)
    if hasattr(x, "values") and hasattr(x, "pair"):
        return jsonable(list(x.values))
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)

"""Command-line interface: ``tropflag <subcommand> [file]``.

Every subcommand reads JSON from a file or stdin and writes one JSON report.
Exit codes: 0 when every verdict passes, 1 when some verdict fails, 2 on
input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
import time
from itertools import combinations
from typing import Callable

from . import bruhat as br
from .flag import (FlagError, FlagValuatedMatroid, check_necessary, flag_violation,
                   proj_equal_flags, translate_flag, validate_flag)
from .gammoid import (GammoidError, brute_force_linking, evaluate_gammoid, min_weight_linking,
                      recover_tnn_weights)
from .generators import (random_digraph, random_gamma_instance, random_hollow_flag,
                         random_tnn_lambda, tnn_flag_from_lambda)
from .hollow import (HollowError, build_realization_matrix, cell_vertex_sets, classify,
                     regular_subdivision_cells, subdivision_cells, symbol_sequence)
from .io import InputError, dumps, flag_from_json, flag_to_json, graph_from_json, jsonable, loads
from .matroid import MatroidError, ValuatedMatroid, plucker_violation
from .puiseux import matrix_to_json
from .trop import format_trop


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _read(path: str | None) -> tuple[str, str]:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
    return text, hashlib.sha256(text.encode("utf-8")).hexdigest()


def _report(command: str, digest: str | None, verdicts: dict, witnesses: dict, **extra) -> dict:
    out = {"command": command, "input_digest": digest, "verdicts": verdicts,
           "witnesses": jsonable(witnesses)}
    out.update(extra)
    return out


def _code(verdicts: dict) -> int:
    return 0 if all(verdicts.values()) else 1


# ---- subcommands -----------------------------------------------------------------------

def _load_flag_or_matroid(obj) -> FlagValuatedMatroid | ValuatedMatroid:
    from .io import matroid_from_json

    if isinstance(obj, dict) and "constituents" not in obj and "d" in obj:
        return matroid_from_json(obj)
    return flag_from_json(obj)


def cmd_check_dressian(args) -> tuple[dict, int]:
    text, digest = _read(args.file)
    F = _load_flag_or_matroid(loads(text))
    v = plucker_violation(F) if isinstance(F, ValuatedMatroid) else flag_violation(F)
    verdicts = {"in_dressian": v is None}
    witnesses = {} if v is None else {"in_dressian": v}
    return _report("check-dressian", digest, verdicts, witnesses), _code(verdicts)


def cmd_classify_hollow(args) -> tuple[dict, int]:
    text, digest = _read(args.file)
    F = flag_from_json(loads(text))
    if not F.is_hollow():
        raise InputError(f"classify-hollow needs ranks (1, n-1) with n >= 3, got {list(F.ranks)}")
    v = flag_violation(F)
    if v is not None:
        verdicts = {"in_dressian": False}
        return _report("classify-hollow", digest, verdicts, {"in_dressian": v}), 1
    c = classify(F)
    verdicts = c.verdicts()
    rep = _report("classify-hollow", digest, verdicts, c.witnesses,
                  **{"lambda": jsonable(c.lam.values),
                     "symbol_sequence": "".join(symbol_sequence(F)),
                     "cells": ["".join(a) for a in subdivision_cells(F)]})
    # tnn is the headline verdict; the weaker ones are informative
    return rep, 0 if verdicts["tnn"] else 1


def cmd_check_necessary(args) -> tuple[dict, int]:
    text, digest = _read(args.file)
    F = flag_from_json(loads(text))
    v = flag_violation(F)
    if v is not None:
        return _report("check-necessary", digest, {"in_dressian": False}, {"in_dressian": v}), 1
    r = check_necessary(F)
    verdicts = {"in_dressian": True, **r.verdicts()}
    return _report("check-necessary", digest, verdicts, r.witnesses, by_kind=r.by_kind,
                   pairs_checked=r.pairs_checked,
                   note="necessary conditions only; passing them does not certify positivity"), _code(verdicts)


def _ranks_arg(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in s.split(","))
    except ValueError:
        raise InputError(f"bad --ranks {s!r}; expected e.g. 1,3") from None


def _vec(p) -> str:
    return " ".join(str(c) for c in p)


def cmd_bruhat_polytope(args) -> tuple[dict | str, int]:
    if args.alpha:
        alpha = br.parse_alpha(args.alpha)
        if br.has_isolated_star(alpha):
            rep = _report("bruhat-polytope", None, {"bruhat": False},
                          {"bruhat": {"alpha": "".join(alpha), "reason": "isolated *"}})
            return (rep if args.json else "not Bruhat: isolated *"), 1
        u, v = br.interval_for_alpha(alpha)
        d = (1, len(alpha) - 1)
        twisted = False
    else:
        if not (args.u and args.v and args.ranks):
            raise InputError("bruhat-polytope needs --u, --v and --ranks, or --alpha")
        try:
            u, v = br.perm(args.u), br.perm(args.v)
        except (ValueError, TypeError) as e:
            raise InputError(str(e)) from None
        d = _ranks_arg(args.ranks)
        twisted = args.twisted
    if not br.bruhat_leq(u, v):
        raise InputError(f"{br.format_perm(u)} is not below {br.format_perm(v)} in Bruhat order")
    minimal = br.is_fiber_minimal(v, d, twisted)
    if args.require_minimal and not minimal:
        raise InputError(f"{br.format_perm(v)} is not minimal in its fiber")
    verts = sorted((br.q_twisted if twisted else br.q_polytope)(u, v, d, check_minimal=False))
    if not args.json:
        return "\n".join(_vec(p) for p in verts), 0
    extra = {"u": br.format_perm(u), "v": br.format_perm(v), "ranks": list(d), "twisted": twisted,
             "interval_size": len(br.interval(u, v)), "v_fiber_minimal": minimal,
             "vertices": [list(p) for p in verts]}
    if minimal:
        conv = br.twisted_to_untwisted if twisted else br.untwisted_to_twisted
        a, b = conv(u, v, d)
        extra["equivalent_interval"] = {"u": br.format_perm(a), "v": br.format_perm(b),
                                        "twisted": not twisted}
    return _report("bruhat-polytope", None, {"computed": True}, {}, **extra), 0


def cmd_gammoid_eval(args) -> tuple[dict, int]:
    text, _ = _read(args.file)
    G, sinks = graph_from_json(loads(text))
    try:
        F = evaluate_gammoid(G, sinks, check=False)
    except GammoidError as e:
        raise InputError(str(e)) from None
    return flag_to_json(F), 0 if validate_flag(F) else 1


def cmd_realize(args) -> tuple[dict, int]:
    text, digest = _read(args.file)
    F = flag_from_json(loads(text))
    if not F.is_hollow():
        raise InputError(f"realize needs ranks (1, n-1) with n >= 3, got {list(F.ranks)}")
    v = flag_violation(F)
    if v is not None:
        return _report("realize", digest, {"in_dressian": False}, {"in_dressian": v}), 1
    try:
        R = build_realization_matrix(F)
    except HollowError as e:
        return _report("realize", digest, {"realized": False}, {"realized": str(e)}), 1
    return _report("realize", digest, {"realized": True}, {},
                   convention=R.convention, i=R.i, j=R.j, sign=R.sign,
                   last_row_negated=R.last_row_negated,
                   translation=jsonable(R.translation), shift=format_trop(R.shift),
                   matrix=matrix_to_json(R.matrix), minors=R.minor_report()), 0


# ---- self-test -------------------------------------------------------------------------

def _suite_gamma_tnn(rng: random.Random):
    n = rng.randint(3, 6)
    alpha, skel, G = random_gamma_instance(rng, n)
    F = evaluate_gammoid(G, skel.sinks, check=False)
    if not validate_flag(F):
        return {"alpha": "".join(alpha), "reason": "not a flag matroid"}
    if not classify(F).tnn:
        return {"alpha": "".join(alpha), "flag": flag_to_json(F), "reason": "not tnn"}
    return None


def _suite_tnn_roundtrip(rng: random.Random):
    n = rng.randint(3, 7)
    lam = random_tnn_lambda(rng, n)
    x = [rng.randint(-3, 3) for _ in range(n)]
    F = tnn_flag_from_lambda(lam, x)
    tw = recover_tnn_weights(F)
    H = evaluate_gammoid(tw.graph(), tw.skeleton.sinks, check=False)
    G = translate_flag(F, tw.translation)
    if not proj_equal_flags(H, G):
        return {"lambda": jsonable(lam), "translation": x}
    return None


def _suite_linking(rng: random.Random):
    ng = rng.randint(2, 5)
    G = random_digraph(rng, ng, rng.randint(0, 8 - ng))
    k = rng.randint(1, ng)
    I = tuple(sorted(rng.sample(range(1, ng + 1), k)))
    S = tuple(rng.sample(list(G.vertices), k))
    a, b = min_weight_linking(G, I, S), brute_force_linking(G, I, S)
    if a != b:
        return {"I": list(I), "S": [str(s) for s in S], "flow": format_trop(a), "brute": format_trop(b)}
    return None


def _suite_subdivision(rng: random.Random):
    F = random_hollow_flag(rng, rng.randint(3, 6))
    if cell_vertex_sets(F) != regular_subdivision_cells(F):
        return {"flag": flag_to_json(F)}
    return None


def _suite_translation(rng: random.Random):
    F = random_hollow_flag(rng, rng.randint(3, 6))
    x = [rng.randint(-4, 4) for _ in range(F.n)]
    if classify(F).verdicts() != classify(translate_flag(F, x)).verdicts():
        return {"flag": flag_to_json(F), "translation": x}
    return None


def _suite_realization(rng: random.Random):
    F = random_hollow_flag(rng, rng.randint(3, 6))
    if not classify(F).nonneg_dressian or all(v == float("inf") for v in classify(F).lam.values):
        return None
    R = build_realization_matrix(F)
    if any(m["sign"] != "+" for m in R.minor_report() if m["valuation"] != "inf"):
        return {"flag": flag_to_json(F)}
    return None


SUITES: dict[str, Callable] = {
    "gamma_tnn": _suite_gamma_tnn,
    "tnn_roundtrip": _suite_tnn_roundtrip,
    "linking_oracle": _suite_linking,
    "subdivision_oracle": _suite_subdivision,
    "translation_invariance": _suite_translation,
    "realization_positive": _suite_realization,
}


def cmd_selftest(args) -> tuple[dict, int]:
    verdicts, witnesses, timings = {}, {}, {}
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        t0 = time.perf_counter()
        ok = True
        for trial in range(args.trials):
            rng = random.Random(f"{args.seed}:{name}:{trial}")
            try:
                bad = SUITES[name](rng)
            except (FlagError, HollowError, GammoidError, MatroidError, AssertionError) as e:
                bad = {"error": str(e)}
            if bad is not None:
                ok = False
                witnesses[name] = {"trial": trial, **bad}
                break
        verdicts[name] = ok
        timings[name] = round(time.perf_counter() - t0, 4)
    rep = _report("selftest", None, verdicts, witnesses, seed=args.seed, trials=args.trials)
    rep["_timings"] = timings
    return rep, _code(verdicts)


# ---- entry point -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropflag", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON output")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("file", nargs="?", help="input JSON (default: stdin)")
        s.set_defaults(func=fn)
        return s

    with_file("check-dressian", cmd_check_dressian, "validate a flag (or a single valuated matroid)")
    with_file("classify-hollow", cmd_classify_hollow, "classify a rank (1, n-1) flag")
    with_file("check-necessary", cmd_check_necessary, "lambda-value necessary conditions on every pair")
    with_file("gammoid-eval", cmd_gammoid_eval, "flag of minimum linking weights of a graph")
    with_file("realize", cmd_realize, "positive Puiseux realization of a hollow flag")

    b = sub.add_parser("bruhat-polytope", parents=[common], help="vertices of a Bruhat interval polytope")
    b.add_argument("--u")
    b.add_argument("--v")
    b.add_argument("--ranks", help="comma-separated ranks, e.g. 1,3")
    b.add_argument("--twisted", action="store_true")
    b.add_argument("--alpha", help="hollow symbol sequence, e.g. '-+**-'; builds its interval")
    b.add_argument("--require-minimal", action="store_true",
                   help="reject v that is not minimal in its fiber")
    b.add_argument("--json", action="store_true", help="JSON report instead of one vertex per line")
    b.set_defaults(func=cmd_bruhat_polytope)

    s = sub.add_parser("selftest", parents=[common], help="randomized property checks")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        out, code = args.func(args)
    except (InputError, FlagError, MatroidError, br.BruhatError, GammoidError, HollowError) as e:
        out, code = {"command": args.command, "error": str(e)}, 2
    if isinstance(out, dict):
        extra = out.pop("_timings", None)
        if args.timings:
            out["timings"] = {"total_s": round(time.perf_counter() - t0, 4), **(extra or {})}
        text = dumps(out, pretty=args.pretty)
    else:
        text = out
    stream = sys.stderr if code == 2 else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())

from __future__ import annotations

import json
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from _data import flag_n8
from tropflag.cli import main
from tropflag.flag import proj_equal_flags
from tropflag.gammoid import evaluate_gammoid, recover_tnn_weights
from tropflag.generators import random_digraph, random_hollow_flag, random_stiefel_matroid
from tropflag.io import (InputError, decode_subset, encode_subset, flag_from_json, flag_to_json,
                         graph_from_json, graph_to_json, loads, matroid_from_json, matroid_to_json)
from tropflag.trop import INF

FIXTURES = Path(__file__).resolve().parent.parent / "worked_examples"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_subset_codec():
    assert encode_subset((3, 1), 5) == "13"
    assert decode_subset("13", 5) == (1, 3)
    assert encode_subset((1, 10), 12) == "1,10"
    assert decode_subset("1,10", 12) == (1, 10)
    assert decode_subset("", 4) == ()
    with pytest.raises(InputError):
        decode_subset("1a", 5)


def test_matroid_round_trip_with_fractions_and_infinity():
    obj = {"n": 3, "d": 1, "values": {"1": "1/2", "2": "inf", "3": -4}}
    mu = matroid_from_json(obj)
    assert (mu((1,)), mu((2,)), mu((3,))) == (Fraction(1, 2), INF, -4)
    assert matroid_from_json(matroid_to_json(mu)) == mu
    with pytest.raises(InputError):
        matroid_from_json({"n": 3, "d": 1, "values": {"1": 0.25}})


def test_flag_round_trip_random():
    rng = random.Random(0)
    for _ in range(20):
        F = random_hollow_flag(rng, rng.randint(3, 6))
        assert flag_from_json(json.loads(json.dumps(flag_to_json(F)))) == F
    mu = random_stiefel_matroid(rng, 2, 5)
    assert matroid_from_json(json.loads(json.dumps(matroid_to_json(mu)))) == mu


def test_flag_rank_mismatch_is_reported():
    obj = flag_to_json(flag_n8())
    obj["ranks"] = [2, 7]
    with pytest.raises(InputError, match="ranks"):
        flag_from_json(obj)


def test_graph_round_trip():
    rng = random.Random(1)
    G = random_digraph(rng, 4, 3)
    sinks = [(1,), (1, "v0")]
    G2, sinks2 = graph_from_json(json.loads(json.dumps(graph_to_json(G, sinks))))
    assert G2.weights == G.weights and sinks2 == sinks


def test_parse_error_reports_position():
    with pytest.raises(InputError) as e:
        loads('{"n": 4,\n  "d": }')
    assert e.value.where == "line 2, column 8"


def test_cli_exit_codes(capsys):
    code, out, _ = run(capsys, "classify-hollow", str(FIXTURES / "hollow_mu_tnn.json"))
    assert code == 0 and json.loads(out)["verdicts"]["tnn"] is True
    code, out, _ = run(capsys, "classify-hollow", str(FIXTURES / "hollow_mu_prime_not_tnn.json"))
    rep = json.loads(out)
    assert code == 1 and rep["witnesses"]["tnn"] == {"index": 1, "value": 1, "neighbour_min": 2}
    code, out, err = run(capsys, "check-dressian", str(FIXTURES / "missing.json"))
    assert code == 2 and out == "" and "cannot read" in err


def test_cli_parse_error_on_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"n":4,\n'))
    code, _, err = run(capsys, "check-dressian")
    assert code == 2 and "line 2, column 1" in json.loads(err)["error"]


def test_cli_check_dressian_witness(capsys):
    code, out, _ = run(capsys, "check-dressian", str(FIXTURES / "rank_2_4_not_plucker.json"))
    w = json.loads(out)["witnesses"]["in_dressian"]
    assert code == 1
    assert (w["S"], w["T"], w["terms"], w["constituents"]) == ([1], [2, 3, 4], [0, 2, 1], [1])
    code, out, _ = run(capsys, "check-dressian", str(FIXTURES / "empty_support.json"))
    assert code == 1 and "empty support" in out


def test_cli_check_necessary(capsys):
    code, out, _ = run(capsys, "check-necessary", str(FIXTURES / "rank_2_4_not_positroid.json"))
    rep = json.loads(out)
    assert code == 1 and rep["verdicts"]["in_dressian"] is True
    assert rep["by_kind"]["incidence"]["nonneg_dressian"] is True
    assert rep["witnesses"]["tnn_necessary"]["lambda"] == [0, 1, 0]


def test_cli_output_is_deterministic(capsys):
    outs = {run(capsys, "classify-hollow", str(FIXTURES / "hollow_n8_tnn.json"))[1] for _ in range(3)}
    assert len(outs) == 1
    assert "timings" not in json.loads(outs.pop())


def test_cli_realize(capsys):
    code, out, _ = run(capsys, "realize", str(FIXTURES / "hollow_n8_tnn.json"))
    rep = json.loads(out)
    assert code == 0
    assert [m["valuation"] for m in rep["minors"]] == [0, 0, 2, 1, 1, 3, "inf", -1]
    assert {m["sign"] for m in rep["minors"] if m["valuation"] != "inf"} == {"+"}
    code, out, _ = run(capsys, "realize", str(FIXTURES / "hollow_mu_prime_not_tnn.json"))
    assert code == 0


def test_cli_gammoid_eval(capsys):
    code, out, _ = run(capsys, "gammoid-eval", str(FIXTURES / "gammoid_n8.json"))
    assert code == 0
    assert proj_equal_flags(flag_from_json(json.loads(out)), flag_n8())
    tw = recover_tnn_weights(flag_n8())
    assert flag_from_json(json.loads(out)) == evaluate_gammoid(tw.graph(), tw.skeleton.sinks)


def test_cli_bruhat_polytope(capsys):
    code, out, _ = run(capsys, "bruhat-polytope", "--u", "2134", "--v", "3241", "--ranks", "1,3")
    assert code == 0
    assert out.splitlines() == ["1 0 1 2", "1 0 2 1", "1 1 0 2", "1 1 2 0"]
    code, out, _ = run(capsys, "bruhat-polytope", "--u", "2134", "--v", "3241", "--ranks", "1,3", "--json")
    rep = json.loads(out)
    assert rep["interval_size"] == 8 and rep["v_fiber_minimal"] is False
    code, _, err = run(capsys, "bruhat-polytope", "--u", "2134", "--v", "3241", "--ranks", "1,3",
                       "--require-minimal")
    assert code == 2 and "minimal" in err
    code, out, _ = run(capsys, "bruhat-polytope", "--alpha=-+**-", "--json")
    rep = json.loads(out)
    assert (rep["u"], rep["v"]) == ("13254", "25341")
    code, out, _ = run(capsys, "bruhat-polytope", "--alpha=*+**")
    assert code == 1
    code, _, _ = run(capsys, "bruhat-polytope", "--u", "2134", "--v", "1234", "--ranks", "1,3")
    assert code == 2


def test_cli_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--trials", "3")
    rep = json.loads(out)
    assert code == 0 and all(rep["verdicts"].values())


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "tropflag.cli", "bruhat-polytope", "--alpha=-+**-"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and len(out.stdout.split("\n")) > 2

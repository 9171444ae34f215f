from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _data import (N8_LAMBDA, bump_13_rank2_on_5, cyclic_rank2_on_5, flag_24, flag_mu_prime,
                   flag_mu_tnn, flag_n8)
from tropflag.flag import (CONDITIONS, DegeneratePairError, FlagError, FlagValuatedMatroid,
                           check_necessary, dual_flag, enumerate_pluecker_pairs, flag_violation,
                           hollow_projection, incidence_pair, lambda_values, translate_flag,
                           validate_flag)
from tropflag.generators import random_flag_13
from tropflag.hollow import hollow_lambda
from tropflag.matroid import ValuatedMatroid
from tropflag.trop import INF, min_achieved_twice, proj_equal


def _subsets(n, k):
    return [frozenset(c) for c in combinations(range(1, n + 1), k)]


def test_constructor_checks():
    with pytest.raises(FlagError):
        FlagValuatedMatroid((ValuatedMatroid.uniform(3, 4), ValuatedMatroid.uniform(1, 4)))
    with pytest.raises(FlagError):
        FlagValuatedMatroid((ValuatedMatroid.uniform(1, 4), ValuatedMatroid.uniform(2, 5)))
    assert flag_mu_tnn().is_hollow()
    assert not flag_24(ValuatedMatroid.uniform(2, 5)).is_hollow()


def test_validate_examples():
    assert validate_flag(flag_mu_tnn())
    assert validate_flag(flag_mu_prime())
    assert validate_flag(flag_n8())
    v = flag_violation(flag_24(cyclic_rank2_on_5()))
    assert v is not None and v.kind == "plucker" and v.constituents == (0,)


def test_cyclic_example_passes_every_incidence_relation():
    F = flag_24(cyclic_rank2_on_5())
    for p in enumerate_pluecker_pairs(F):
        if p.kind == "incidence":
            assert min_achieved_twice(lambda_values(F, p).values)
    # the general incidence relations (S not inside T) hold as well
    mu, nu = F[0], F[1]
    for S in combinations(range(1, 6), 1):
        T = (1, 2, 3, 4, 5)
        terms = [mu(set(S) | {t}) + nu(set(T) - {t}) if t not in S else INF for t in T]
        assert min_achieved_twice(terms)


def test_pair_counts():
    for n in (3, 4, 6):
        F = FlagValuatedMatroid((ValuatedMatroid.uniform(1, n), ValuatedMatroid.uniform(n - 1, n)))
        pairs = enumerate_pluecker_pairs(F)
        inc = [p for p in pairs if p.kind == "incidence"]
        assert [(p.S, p.T) for p in inc] == [((), tuple(range(1, n + 1)))]
        assert all(len(p.free) <= 2 for p in pairs if p.kind == "grassmann")
        assert len(pairs) == 2 * (n * (n - 1) // 2) + 1
    F = flag_24(ValuatedMatroid.uniform(2, 5))
    inc = [p for p in enumerate_pluecker_pairs(F) if p.kind == "incidence"]
    assert len(inc) == 5 and all(set(p.S) <= set(p.T) for p in inc)


def test_pair_count_matches_brute_force_123_on_4():
    n, ranks = 4, (1, 2, 3)
    F = FlagValuatedMatroid(tuple(ValuatedMatroid.uniform(d, n) for d in ranks))
    expected = 0
    for d in ranks:
        expected += sum(1 for S in _subsets(n, d - 1) for T in _subsets(n, d + 1) if S <= T)
        if d >= 2:
            # three-term pairs: S = Ra, T = Rbce with a < b < c < e
            for S in _subsets(n, d - 1):
                for T in _subsets(n, d + 1):
                    R = S & T
                    if len(R) == d - 2 and not (S - R) & T and min(S - R) < min(T - R):
                        expected += 1
    for lo, hi in zip(ranks, ranks[1:]):
        expected += sum(1 for S in _subsets(n, lo - 1) for T in _subsets(n, hi + 1) if S <= T)
    assert len(enumerate_pluecker_pairs(F)) == expected


def test_lambda_values_examples():
    p = incidence_pair(flag_mu_prime(), (), (1, 2, 3, 4))
    assert lambda_values(flag_mu_prime(), p).values == (1, 2, 0, 0)
    assert lambda_values(flag_mu_tnn(), p).values == (2, 1, 0, 0)
    F = flag_n8()
    assert lambda_values(F, incidence_pair(F, (), range(1, 9))).values == N8_LAMBDA


def test_incidence_pair_errors():
    with pytest.raises(FlagError):
        incidence_pair(flag_mu_tnn(), (1,), (1, 2))
    F = flag_24(ValuatedMatroid.uniform(2, 5))
    with pytest.raises(FlagError):
        incidence_pair(F, (1,), (2, 3, 4, 5, 1, 6)[:4])


def test_hollow_projection_identity_and_second_counterexample():
    F = flag_mu_tnn()
    H, labels = hollow_projection(F, incidence_pair(F, (), (1, 2, 3, 4)))
    assert H == F and labels == (1, 2, 3, 4)
    G = flag_24(bump_13_rank2_on_5())
    p = incidence_pair(G, (1,), (1, 2, 3, 4, 5))
    H, labels = hollow_projection(G, p)
    assert labels == (2, 3, 4, 5) and H.ranks == (1, 3)
    assert proj_equal(hollow_lambda(H).values, (0, 1, 0, 0))
    assert lambda_values(G, p).values == (0, 1, 0, 0)


def test_hollow_projection_degenerate_pair():
    mu = ValuatedMatroid.trivial([(2, 3), (2, 4), (3, 4)], d=2, n=4)  # 1 is a loop
    nu = ValuatedMatroid.trivial([(1, 2, 3), (1, 2, 4), (1, 3, 4)], d=3, n=4)
    F = FlagValuatedMatroid((mu, nu))
    with pytest.raises(DegeneratePairError):
        hollow_projection(F, incidence_pair(F, (1,), (1, 2, 3, 4)))


def test_check_necessary_examples():
    r = check_necessary(flag_mu_prime())
    assert not r.tnn_necessary and r.bruhat_necessary and r.nonneg_dressian
    w = r.witnesses["tnn_necessary"]
    assert w["index"] == 1 and w["lambda"] == (1, 2, 0, 0)
    assert all(check_necessary(flag_mu_tnn()).verdicts().values())
    r = check_necessary(flag_24(bump_13_rank2_on_5()))
    assert r.by_kind["incidence"]["nonneg_dressian"]
    assert not r.by_kind["grassmann"]["nonneg_dressian"]
    assert not r.nonneg_dressian
    assert r.witnesses["nonneg_dressian"]["pair"].kind == "grassmann"
    assert set(r.verdicts()) == set(CONDITIONS)


def test_all_infinite_pairs_pass_vacuously():
    mu = ValuatedMatroid.trivial([(1, 2)], d=2, n=4)
    nu = ValuatedMatroid.trivial([(1, 2, 3), (1, 2, 4)], d=3, n=4)
    F = FlagValuatedMatroid((mu, nu))
    assert validate_flag(F)
    assert all(check_necessary(F).verdicts().values())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_projection_equals_lambda_random_13_flags(seed):
    F = random_flag_13(random.Random(seed))
    for p in enumerate_pluecker_pairs(F):
        if p.kind != "incidence":
            continue
        try:
            H, _ = hollow_projection(F, p)
        except DegeneratePairError:
            assert all(v == INF for v in lambda_values(F, p).values)
            continue
        assert proj_equal(hollow_lambda(H).values, lambda_values(F, p).values)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(-6, 6), min_size=5, max_size=5))
def test_lambda_translation_invariance_and_validity(seed, x):
    F = random_flag_13(random.Random(seed))
    G = translate_flag(F, x)
    assert validate_flag(G)
    for p in enumerate_pluecker_pairs(F):
        a, b = lambda_values(F, p).values, lambda_values(G, p).values
        assert proj_equal(a, b)
        assert min_achieved_twice(a)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_dual_flag_valid_and_involutive(seed):
    F = random_flag_13(random.Random(seed))
    D = dual_flag(F)
    assert D.ranks == (2, 4)
    assert validate_flag(D)
    assert dual_flag(D) == F

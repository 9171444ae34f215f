from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from tropflag import bruhat as br
from tropflag.bruhat import (BruhatError, NotBruhatError, NotMinimalError, bruhat_leq,
                             bruhat_leq_subword, perm)

P = perm

EX_INTERVAL = {P(s) for s in ("2134", "2314", "2143", "3124", "2341", "3142", "3214", "3241")}
EX_Q = {(1, 0, 1, 2), (1, 0, 2, 1), (1, 1, 0, 2), (1, 1, 2, 0)}
EX_QT = {(1, 2, 1, 0), (1, 2, 0, 1), (1, 1, 2, 0), (0, 2, 1, 1), (1, 0, 2, 1), (0, 1, 2, 1)}


def test_parse_and_format():
    assert P("2134") == (2, 1, 3, 4)
    assert P("10,1,2,3,4,5,6,7,8,9")[0] == 10
    assert br.format_perm(P("2134")) == "2134"
    with pytest.raises(BruhatError):
        P("1134")


def test_group_basics():
    x = P("3142")
    assert br.compose(x, br.inverse(x)) == br.identity(4)
    assert br.length(br.longest(4)) == 6
    assert br.word_to_perm(br.reduced_word(x), 4) == x
    assert len(br.reduced_word(x)) == br.length(x)
    with pytest.raises(BruhatError):
        br.word_to_perm([4], 4)


def test_leq_examples():
    assert all(bruhat_leq(br.identity(4), v) for v in br.all_perms(4))
    assert bruhat_leq(P("2134"), P("3241"))
    assert bruhat_leq(P("2134"), P("2143")) and bruhat_leq(P("2143"), P("3241"))
    assert not bruhat_leq(P("3214"), P("4132"))
    with pytest.raises(BruhatError):
        bruhat_leq(P("21"), P("213"))


def test_rank_criterion_equals_subword_exhaustive():
    for n in (1, 2, 3, 4):
        for u, v in product(br.all_perms(n), repeat=2):
            assert bruhat_leq(u, v) == bruhat_leq_subword(u, v)


def test_iota_reverses_order():
    perms4 = br.all_perms(4)
    for u, v in product(perms4, repeat=2):
        assert bruhat_leq(u, v) == bruhat_leq(br.iota(v), br.iota(u))


def test_interval_examples():
    assert set(br.interval(P("2134"), P("3241"))) == EX_INTERVAL
    v = P("2413")
    assert br.interval(v, v) == [v]
    assert len(br.interval(br.identity(4), br.longest(4))) == 24
    with pytest.raises(BruhatError):
        br.interval(P("3241"), P("2134"))


def test_interval_table_matches_filtering_n7():
    rng = random.Random(5)
    perms7 = list(permutations(range(1, 8)))
    for _ in range(3):
        u = rng.choice(perms7)
        v = br.longest(7)
        got = br.interval(u, v)
        assert got == [s for s in perms7 if bruhat_leq(u, s)]


def test_q_polytope_examples():
    u, v = P("2134"), P("3241")
    assert br.q_polytope(u, v, (1, 3), check_minimal=False) == EX_Q
    assert br.q_twisted(u, v, (1, 3)) == EX_QT
    with pytest.raises(NotMinimalError):
        br.q_polytope(u, v, (1, 3))
    full = br.q_polytope(br.identity(4), br.longest(4), (1, 2, 3, 4))
    assert full == set(permutations((1, 2, 3, 4)))


def test_example_top_is_not_fiber_minimal():
    v = P("3241")
    assert not br.is_fiber_minimal(v, (1, 3))
    assert P("2341") in br.fiber_untwisted(v, (1, 3))
    assert bruhat_leq(P("2341"), v) and P("2341") != v


def test_fibers_share_projection():
    for v in br.all_perms(4):
        for d in ((1, 3), (2,), (1, 2, 3)):
            assert {br.proj_untwisted(s, d) for s in br.fiber_untwisted(v, d)} == {br.proj_untwisted(v, d)}
            assert {br.proj_twisted(s, d) for s in br.fiber_twisted(v, d)} == {br.proj_twisted(v, d)}


def test_conversions_examples():
    u, v = P("2134"), P("3241")
    assert br.twisted_to_untwisted(u, v, (1, 3)) == (P("1243"), P("2431"))
    a, b = br.untwisted_to_twisted(u, v, (1, 3), check_minimal=False)
    assert (a, b) == (P("3124"), P("4132"))
    assert br.q_twisted(a, b, (1, 3)) == EX_Q
    assert br.inverse(P("2314")) == P("3124")
    # the listed set {3214, 3142, 4123, 4132} spans the same polytope under the twisted map
    listed = [P(s) for s in ("3214", "3142", "4123", "4132")]
    assert br.vertices({br.proj_twisted(x, (1, 3)) for x in listed}) == EX_Q


def test_conversion_round_trips_random():
    rng = random.Random(2)
    valid = br.valid_intervals(4, (1, 3), twisted=True)
    for u, v in rng.sample(valid, 30):
        a, b = br.twisted_to_untwisted(u, v, (1, 3))
        assert br.q_polytope(a, b, (1, 3)) == br.q_twisted(u, v, (1, 3))
        c, e = br.untwisted_to_twisted(a, b, (1, 3))
        assert br.q_twisted(c, e, (1, 3)) == br.q_twisted(u, v, (1, 3))


def test_twisted_and_untwisted_families_agree():
    assert br.polytope_family(4, (1, 3)) == br.polytope_family(4, (1, 3), twisted=True)
    assert br.polytope_family(4, (2,)) == br.polytope_family(4, (2,), twisted=True)


def test_twisted_faces_are_twisted_polytopes():
    fam = br.polytope_family(4, (1, 3), twisted=True)
    for P_ in fam:
        pts = sorted(P_)
        if len(pts) < 3:
            continue
        # faces cut out by coordinate functionals x_i and x_i + x_j (all facet normals of these polytopes)
        for c in [e for k in (1, 2) for e in combinations(range(4), k)]:
            for sgn in (1, -1):
                vals = {p: sgn * sum(p[i] for i in c) for p in pts}
                m = min(vals.values())
                face = frozenset(p for p in pts if vals[p] == m)
                assert face in fam


def test_alpha_helpers():
    assert br.parse_alpha("−+**−") == ("-", "+", "*", "*", "-")
    with pytest.raises(BruhatError):
        br.parse_alpha("+x*")
    assert br.has_isolated_star("*+**")
    assert not br.has_isolated_star("-+**-")
    a = ("+", "-", "*", "*")
    assert br.alpha_of_vertices(br.hollow_vertices(a), 4) == a


def test_interval_for_alpha_examples():
    assert br.interval_for_alpha("-+**-") == (P("13254"), P("25341"))
    with pytest.raises(NotBruhatError):
        br.interval_for_alpha("*+**")
    with pytest.raises(BruhatError):
        br.interval_for_alpha("0+**")
    with pytest.raises(BruhatError):
        br.interval_for_alpha("+-*-")


def test_membership_example():
    w = br.membership_word("-+**-", 3, 2)
    assert w.letters() == (1, 4, 3, 2)
    s = w.perm()
    assert s == P("25134")
    u, v = br.interval_for_alpha("-+**-")
    assert bruhat_leq(u, s) and bruhat_leq(s, v)
    assert s[2] == 1 and s[1] == 5
    with pytest.raises(BruhatError):
        br.membership_word("-+**-", 2, 3)


def test_interval_for_alpha_and_certificates_exhaustive():
    for n in (3, 4, 5, 6):
        for a in product("+-*", repeat=n):
            if a.count("*") < 2 or br.has_isolated_star(a):
                continue
            u, v = br.interval_for_alpha(a)
            assert bruhat_leq(u, v)
            assert br.is_fiber_minimal(v, (1, n - 1))
            target = br.hollow_vertices(a)
            if n <= 5:
                assert br.q_polytope(u, v, (1, n - 1)) == target
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j or a[i - 1] not in "-*" or a[j - 1] not in "+*":
                        continue
                    s = br.membership_word(a, i, j).perm()
                    assert bruhat_leq(u, s) and bruhat_leq(s, v)
                    assert s[i - 1] == 1 and s[j - 1] == n
                    assert br.hollow_point(s) in target

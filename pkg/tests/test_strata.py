import pytest
from hypothesis import given, settings, strategies as st

from rbsperv.rootsys import build_root_system, element, min_coset_reps, relative_length
from rbsperv.strata import (StratumError, all_strata, dual_perversity, format_stratum,
                            middle_value, parabolic_lattice, parse_stratum, pbar, pbar_tw,
                            perversity, relative_depth, stratum_dim, stratum_dims, stratum_info,
                            subset_literal)

F = frozenset
C2 = build_root_system("C2")


def test_lattices():
    lat = parabolic_lattice(C2)
    assert set(lat.strata) == {F(), F({1}), F({2}), F({1, 2})}
    assert set(lat.covers) == {(F(), F({1})), (F(), F({2})), (F({1}), F({1, 2})), (F({2}), F({1, 2}))}
    a1 = parabolic_lattice(build_root_system("A1"))
    assert a1.strata == (F(), F({1}))
    a3 = parabolic_lattice(build_root_system("A3"))
    assert len(a3.strata) == 8 and len(a3.covers) == 12
    assert set(lat.below(F({1, 2}))) == {F(), F({1}), F({2})}


def test_c2_dims():
    assert stratum_dim(C2, {1, 2}) == 6
    assert stratum_dim(C2, set()) == 0
    assert stratum_dim(C2, {1}) == 2 and stratum_dim(C2, {2}) == 2


def test_overrides():
    d = stratum_dims(C2, {F(): 0, F({1}): 3, F({2}): 2, F({1, 2}): 7})
    assert d[F({1})] == 3
    with pytest.raises(StratumError, match="cover every stratum"):
        stratum_dims(C2, {F(): 0, F({1}): 3})
    with pytest.raises(StratumError, match="increase"):
        stratum_dims(C2, {F(): 0, F({1}): 6, F({2}): 2, F({1, 2}): 6})
    with pytest.raises(StratumError):
        stratum_dims(C2, {F(): -1, F({1}): 2, F({2}): 2, F({1, 2}): 6})


def test_info_and_depth():
    info = stratum_info(C2, {1}, stratum_dims(C2))
    assert (info.dim, info.split_torus_dim, info.depth) == (2, 1, 1)
    assert stratum_info(C2, set(), stratum_dims(C2)).depth == 2
    assert relative_depth(F(), F({1, 2})) == 2
    with pytest.raises(StratumError):
        relative_depth(F({1}), F({2}))


def test_parse_and_format():
    assert parse_stratum(C2, "{1}") == F({1})
    assert parse_stratum(C2, "{}") == F()
    assert parse_stratum(C2, "{1,2}") == F({1, 2})
    assert parse_stratum(C2, "full") == F({1, 2})
    assert parse_stratum(C2, "P_∅") == F()
    assert parse_stratum(C2, "P_2") == F({2})
    for bad in ("{3}", "one", "{1,x}"):
        with pytest.raises(StratumError):
            parse_stratum(C2, bad)
    assert [format_stratum(C2, S) for S in all_strata(C2)] == ["P_∅", "P_1", "P_2", "G"]
    assert format_stratum(build_root_system("A3"), F({1, 3})) == "P_{13}"
    assert subset_literal(F({2, 1})) == "{1,2}"


def test_c2_perversities():
    d = stratum_dims(C2)
    expected = {F(): 0, F({1}): -1, F({2}): -1, F({1, 2}): -3}
    assert perversity(C2, "minus", d).values == expected
    assert perversity(C2, "plus", d).values == expected
    assert middle_value("minus", 5) == -3 and middle_value("plus", 5) == -2


def test_custom_perversity():
    d = stratum_dims(C2)
    p = perversity(C2, "custom", d, {F(): 0, F({1}): 0, F({2}): -2, F({1, 2}): -3})
    assert p[{2}] == -2
    with pytest.raises(StratumError, match="monotone"):
        perversity(C2, "custom", d, {F(): -2, F({1}): 0, F({2}): -2, F({1, 2}): -3})
    with pytest.raises(StratumError):
        perversity(C2, "custom", d)
    with pytest.raises(StratumError):
        perversity(C2, "weird", d)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "D4", "F4"])
def test_middle_perversities_monotone(label):
    R = build_root_system(label)
    d = stratum_dims(R)
    for kind in ("minus", "plus"):
        p = perversity(R, kind, d)
        for S in all_strata(R):
            for T in all_strata(R):
                if S <= T:
                    assert p[S] >= p[T]


@given(st.lists(st.integers(0, 40), min_size=4, max_size=4, unique=True))
@settings(max_examples=80, deadline=None)
def test_dual_swaps_middle(values):
    lo, a, b, hi = sorted(values)
    dims = {F(): lo, F({1}): a, F({2}): b, F({1, 2}): hi}
    d = stratum_dims(C2, dims)
    pm, pp = perversity(C2, "minus", d), perversity(C2, "plus", d)
    assert dual_perversity(pm).values == pp.values
    assert dual_perversity(pp).values == pm.values
    assert dual_perversity(dual_perversity(pm)).values == pm.values
    if any(x % 2 for x in values):
        assert dual_perversity(pm).kind == "plus"


def test_dual_single_odd_value():
    d = {F(): 0, F({1}): 5, F({2}): 2, F({1, 2}): 6}
    p = perversity(C2, "minus", stratum_dims(C2, d))
    assert p[{1}] == -3 and dual_perversity(p)[{1}] == -2


def test_dual_custom_stays_custom():
    d = stratum_dims(C2)
    p = perversity(C2, "custom", d, {F(): 0, F({1}): 0, F({2}): -2, F({1, 2}): -3})
    q = dual_perversity(p)
    assert q.kind == "custom" and q[{1}] == -2 and q[{1, 2}] == -3


def test_pbar():
    p = perversity(C2, "minus", stratum_dims(C2))
    G = F({1, 2})
    assert [pbar(p, S, G) for S in (G, F({1}), F({2}), F())] == [-1, 1, 1, 2]
    assert pbar(p, F(), F({1})) == 0 and pbar(p, F(), F({2})) == 0
    with pytest.raises(StratumError):
        pbar(p, F({1}), F({2}))


def test_pbar_tw_examples():
    p = perversity(C2, "minus", stratum_dims(C2))
    G, w = F({1, 2}), element(C2, (1, 2))
    assert pbar_tw(C2, p, F(), G, w, F({1})) == 0
    assert pbar_tw(C2, p, F(), G, w, F({2})) == -1
    for v in min_coset_reps(C2, F(), G):
        assert pbar_tw(C2, p, F(), G, v, G) == -1
    with pytest.raises(StratumError):
        pbar_tw(C2, p, F({1}), G, w, F({2}))


def test_pbar_tw_matches_truncation_predicate():
    p = perversity(C2, "minus", stratum_dims(C2))
    for T in all_strata(C2):
        for S in all_strata(C2):
            if not S <= T:
                continue
            for w in min_coset_reps(C2, S, T):
                for Q in all_strata(C2):
                    if S <= Q <= T and Q != T:
                        untruncated = relative_length(C2, w, Q) <= pbar(p, Q, T)
                        assert (pbar_tw(C2, p, S, T, w, Q) >= 0) == untruncated

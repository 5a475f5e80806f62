import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from rbsperv.rootsys import (RootSystemError, act, build_root_system, decompose_at, element,
                             identity, inverse, inversion_count, is_min_rep, min_coset_reps,
                             multiply, parse_word, reflect, relative_length, root_permutation,
                             weyl_elements, weyl_order)
from rbsperv.strata import all_strata
from rbsperv.weights import symbol

CLASSICAL = {
    # label: (positive roots, Weyl order)
    "A1": (1, 2), "A2": (3, 6), "A3": (6, 24), "A4": (10, 120),
    "B2": (4, 8), "B3": (9, 48), "C2": (4, 8), "C3": (9, 48),
    "D3": (6, 24), "D4": (12, 192), "G2": (6, 12),
}
RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "D3"]


def words(R, ws):
    return {str(w) for w in ws}


@pytest.mark.parametrize("label", sorted(CLASSICAL))
def test_counts(label):
    R = build_root_system(label)
    npos, order = CLASSICAL[label]
    assert len(R.positive_roots) == npos
    assert weyl_order(R) == order


@pytest.mark.parametrize("n", range(1, 7))
def test_positive_root_formulas(n):
    assert len(build_root_system(f"A{n}").positive_roots) == n * (n + 1) // 2
    if n >= 2:
        assert len(build_root_system(f"B{n}").positive_roots) == n * n
        assert len(build_root_system(f"C{n}").positive_roots) == n * n
    if n >= 3:
        assert len(build_root_system(f"D{n}").positive_roots) == n * (n - 1)


def test_f4():
    R = build_root_system("F4")
    assert len(R.positive_roots) == 24
    assert weyl_order(R) == 1152


@pytest.mark.parametrize("label", sorted(CLASSICAL) + ["F4", "B6", "D6"])
def test_cartan_invariants(label):
    R = build_root_system(label)
    A = R.cartan
    n = R.rank
    for i in range(n):
        assert A[i][i] == 2
        for j in range(n):
            if i != j:
                assert A[i][j] <= 0
                assert (A[i][j] == 0) == (A[j][i] == 0)
    # simple root j is column j of the Cartan matrix
    for j in range(n):
        assert R.simple_roots[j] == tuple(A[i][j] for i in range(n))
    assert R.rho == (1,) * n
    half = [sum(b[k] for b in R.positive_roots) for k in range(n)]
    assert half == [2] * n


def test_c2_conventions():
    R = build_root_system("C2")
    assert R.cartan == ((2, -2), (-1, 2))
    assert R.alpha(1) == (2, -1) and R.alpha(2) == (-2, 2)


def test_rejections():
    for bad in ("X3", "A0", "A7", "G3", "E6", "C1", "", "B"):
        with pytest.raises(RootSystemError):
            build_root_system(bad)
    assert build_root_system("E6", allow_e=True).rank == 6
    assert len(build_root_system("E6", allow_e=True).positive_roots) == 36
    with pytest.raises(RootSystemError):
        build_root_system("A4", max_rank=3)


def test_weyl_listings():
    C2 = build_root_system("C2")
    assert [str(w) for w in weyl_elements(C2)] == \
        ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"]
    assert [str(w) for w in weyl_elements(build_root_system("A1"))] == ["e", "s1"]
    A2 = build_root_system("A2")
    assert sorted(w.length for w in weyl_elements(A2)) == [0, 1, 1, 2, 2, 3]


def test_reflect_c2_example():
    R = build_root_system("C2")
    lam = symbol("λ", 2, R.full)
    mu = act(R, element(R, (2,)), lam.translate(R.rho)).translate((-1, -1))
    # a * e1 + b * e2 with the symbol's coordinates (a, b)
    for a, b in [(0, 0), (3, 1), (2, 5)]:
        assert mu.evaluate((a, b)) == (a + 2 * b + 2, -b - 2)


@given(st.sampled_from(RANK_LE_3), st.data())
@settings(max_examples=60, deadline=None)
def test_reflect_involution_and_fixed_hyperplane(label, data):
    R = build_root_system(label)
    mu = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=R.rank, max_size=R.rank)))
    i = data.draw(st.integers(1, R.rank))
    assert reflect(R, i, reflect(R, i, mu)) == mu
    if mu[i - 1] == 0:
        assert reflect(R, i, mu) == mu
    assert reflect(R, i, R.alpha(i)) == tuple(-x for x in R.alpha(i))


@pytest.mark.parametrize("label", RANK_LE_3)
def test_roots_permuted_and_length_is_inversions(label):
    R = build_root_system(label)
    for w in weyl_elements(R):
        perm = root_permutation(R, w)
        assert sorted(perm) == list(range(len(R.roots)))
        assert w.length == inversion_count(R, w)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_word_independence(label):
    R = build_root_system(label)
    # every word of length <= 5 gives an element whose canonical word represents it
    for k in range(6):
        for word in itertools.product(R.indices, repeat=k):
            w = element(R, word)
            assert element(R, w.word) == w
            assert w.length <= k and (k - w.length) % 2 == 0
    w0 = weyl_elements(R)[-1]
    assert w0.length == len(R.positive_roots)


def test_group_laws():
    R = build_root_system("B3")
    ws = weyl_elements(R)
    e = identity(R)
    for u in ws[::5]:
        assert multiply(R, u, inverse(R, u)) == e
        for v in ws[::7]:
            uv = multiply(R, u, v)
            assert uv == element(R, u.word + v.word)
            assert act(R, uv, R.rho) == act(R, u, act(R, v, R.rho))


def test_parse_word():
    R = build_root_system("C2")
    assert parse_word(R, "s1s2") == element(R, (1, 2))
    assert parse_word(R, "s2s2") == identity(R)
    with pytest.raises(RootSystemError):
        parse_word(R, "t1")


def test_c2_cosets():
    R = build_root_system("C2")
    assert words(R, min_coset_reps(R, set(), {1})) == {"e", "s1"}
    assert words(R, min_coset_reps(R, {1}, {1, 2})) == {"e", "s2", "s2s1", "s2s1s2"}
    assert words(R, min_coset_reps(R, {2}, {1, 2})) == {"e", "s1", "s1s2", "s1s2s1"}
    for I in all_strata(R):
        assert words(R, min_coset_reps(R, I, I)) == {"e"}
    with pytest.raises(RootSystemError):
        min_coset_reps(R, {1}, {2})


def test_coset_reps_sorted():
    R = build_root_system("B3")
    reps = min_coset_reps(R, {2}, {1, 2, 3})
    keys = [(w.length, w.word) for w in reps]
    assert keys == sorted(keys)


@pytest.mark.parametrize("label", RANK_LE_3)
def test_coset_counting(label):
    R = build_root_system(label)
    for J in all_strata(R):
        for I in all_strata(R):
            if I <= J:
                assert len(min_coset_reps(R, I, J)) * weyl_order(R, I) == weyl_order(R, J)


def test_coset_reps_by_brute_force():
    # minimal length element in each right coset W_I w, found by multiplying out
    R = build_root_system("A3")
    W = weyl_elements(R)
    for I in all_strata(R):
        WI = weyl_elements(R, I)
        mins = set()
        for w in W:
            coset = [multiply(R, u, w) for u in WI]
            mins.add(min(coset, key=lambda x: x.length))
        assert mins == set(min_coset_reps(R, I, R.full))


def test_decompose_examples():
    R = build_root_system("C2")
    s12 = element(R, (1, 2))
    up, low = decompose_at(R, s12, set(), {1}, {1, 2})
    assert (str(up), str(low)) == ("s1", "s2")
    up, low = decompose_at(R, s12, set(), {2}, {1, 2})
    assert (str(up), str(low)) == ("e", "s1s2")
    assert relative_length(R, s12, {1}) == 1 and relative_length(R, s12, {2}) == 2
    s21 = element(R, (2, 1))
    assert relative_length(R, s21, {1}) == 2 and relative_length(R, s21, {2}) == 1
    for w in weyl_elements(R):
        assert decompose_at(R, w, set(), R.full, R.full) == (w, identity(R))
    with pytest.raises(RootSystemError):
        decompose_at(R, element(R, (1,)), {1}, {1}, R.full)


@pytest.mark.parametrize("label", ["C2", "A3"])
def test_decompose_bijection(label):
    R = build_root_system(label)
    for J in all_strata(R):
        for I in all_strata(R):
            if not I <= J:
                continue
            for K in all_strata(R):
                if not I <= K <= J:
                    continue
                seen = set()
                for w in min_coset_reps(R, I, J):
                    up, low = decompose_at(R, w, I, K, J)
                    assert is_min_rep(R, up, I, K) and is_min_rep(R, low, K, J)
                    assert multiply(R, up, low) == w
                    assert up.length + low.length == w.length
                    seen.add((up, low))
                assert seen == {(u, v) for u in min_coset_reps(R, I, K) for v in min_coset_reps(R, K, J)}


def test_rank_six_enumeration():
    assert weyl_order(build_root_system("B6")) == 2 ** 6 * factorial(6)

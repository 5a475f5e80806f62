"""Acceptance criteria, one test each.

Run under pytest (a summary section lists PASS/FAIL per criterion) or directly
with ``python3 tests/test_acceptance.py``.
"""
import itertools
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import ih_simplex_nerve  # noqa: E402
from rbsperv.ext import ext1, ext_partners, middle_self_extension_detector  # noqa: E402
from rbsperv.kostant import is_dominant, kostant_modules, weyl_dim  # noqa: E402
from rbsperv.linkcoh import (check_perverse_conditions, link_cohomology, local_shriek,  # noqa: E402
                             local_star)
from rbsperv.paper_check import timed_paper_check  # noqa: E402
from rbsperv.rootsys import build_root_system, element, min_coset_reps, relative_length  # noqa: E402
from rbsperv.simplexih import ih_simplex, ih_simplex_depth2, stratified_simplex  # noqa: E402
from rbsperv.strata import (all_strata, dual_perversity, format_stratum, pbar, perversity,  # noqa: E402
                            stratum_dims)
from rbsperv.weights import symbol  # noqa: E402

F = frozenset
G, P1, P2, P0 = F({1, 2}), F({1}), F({2}), F()
C2 = build_root_system("C2")
PM = perversity(C2, "minus", stratum_dims(C2))

CRITERIA = []


def criterion(label):
    def wrap(fn):
        def test(record_property):
            record_property("acceptance", label)
            fn()
        test.__name__ = fn.__name__
        test.__doc__ = fn.__doc__
        test.label = label
        test.body = fn
        CRITERIA.append(test)
        return test
    return wrap


def words(ws):
    return {str(w) for w in ws}


@criterion("1 stratification data (C2)")
def test_c1_stratification():
    d = stratum_dims(C2)
    assert [d[S] for S in (G, P1, P2, P0)] == [6, 2, 2, 0]
    assert [PM[S] for S in (G, P1, P2, P0)] == [-3, -1, -1, 0]
    assert [pbar(PM, S, G) for S in (G, P1, P2, P0)] == [-1, 1, 1, 2]


@criterion("2 coset combinatorics (C2)")
def test_c2_cosets():
    assert words(min_coset_reps(C2, P0, P1)) == {"e", "s1"}
    assert words(min_coset_reps(C2, P1, G)) == {"e", "s2", "s2s1", "s2s1s2"}
    assert words(min_coset_reps(C2, P2, G)) == {"e", "s1", "s1s2", "s1s2s1"}
    s12, s21 = element(C2, (1, 2)), element(C2, (2, 1))
    assert [relative_length(C2, s12, P1), relative_length(C2, s12, P2),
            relative_length(C2, s21, P1), relative_length(C2, s21, P2)] == [1, 2, 2, 1]


@criterion("3 link vanishing at P_∅ (symbolic λ)")
def test_c3_link_vanishing():
    lk = link_cohomology(C2, PM, P0, G, symbol("λ", 2, G))
    assert lk.at(PM[P0] - 1) == ()
    assert lk.at(PM[P0]) == ()


EXT_FAMILIES = {
    ("G", "P_1", "λ' = s2(λ+ρ)−ρ", 1),
    ("G", "P_2", "λ' = s1(λ+ρ)−ρ", 1),
    ("P_1", "P_∅", "λ' = λ", 1),
    ("P_2", "P_∅", "λ' = λ", 1),
    ("P_∅", "P_1", "λ = s1(λ'+ρ)−ρ", 1),
    ("P_∅", "P_2", "λ = s2(λ'+ρ)−ρ", 1),
    ("P_1", "G", "λ = s2s1(λ'+ρ)−ρ", 1),
    ("P_2", "G", "λ = s1s2(λ'+ρ)−ρ", 1),
}


@criterion("4 Ext table (C2, p_-, symbolic λ)")
def test_c4_ext_table():
    found = set()
    for T in all_strata(C2):
        for pa in ext_partners(C2, PM, T, symbol("λ", 2, T)):
            assert pa.result.certified
            found.add((format_stratum(C2, T), format_stratum(C2, pa.stratum), pa.condition, pa.result.value))
    assert found == EXT_FAMILIES
    zero = ext1(C2, PM, G, symbol("λ", 2, G), P0, symbol("λ'", 2, P0))
    assert zero.certified and zero.value == 0


@criterion("5 simplex engine vs closed form and nerve oracle")
def test_c5_simplex_engine():
    for a, b in itertools.product(range(-3, 4), repeat=2):
        sx = stratified_simplex((0, 1), {F({0}): a, F({1}): b})
        h = ih_simplex(sx)
        assert h == ih_simplex_depth2(a, b)
        assert h == ih_simplex_nerve((0, 1), sx.perversity)
    assert ih_simplex(stratified_simplex((0,), {})) == {0: 1}
    faces = {F(c): -1 for k in (1, 2) for c in itertools.combinations(range(3), k)}
    assert ih_simplex(stratified_simplex((0, 1, 2), faces)) == {2: 1}
    assert ih_simplex_nerve((0, 1, 2), faces) == {2: 1}


@criterion("6 Kostant properties (C2, A3, 20 random λ)")
def test_c6_kostant():
    rng = random.Random(2024)
    for label in ("C2", "A3"):
        R = build_root_system(label)
        for _ in range(20):
            for T in all_strata(R):
                lam = tuple(rng.randint(0, 6) if i in T else rng.randint(-6, 6) for i in R.indices)
                for S in all_strata(R):
                    if S < T:
                        mods = kostant_modules(R, S, T, lam)
                        ws = [m.weight for m in mods]
                        assert all(is_dominant(R, S, mu) for mu in ws)
                        assert len(set(ws)) == len(ws)
                        assert sum((-1) ** m.degree * weyl_dim(R, S, m.weight) for m in mods) == 0


@criterion("7 duality, twisted perversity, middle detector")
def test_c7_duality():
    for label in ("C2", "A3", "B3"):
        R = build_root_system(label)
        d = stratum_dims(R)
        assert dual_perversity(perversity(R, "minus", d)).values == perversity(R, "plus", d).values
    q = dual_perversity(PM)
    for T in all_strata(C2):
        ok, viol = check_perverse_conditions(C2, PM, q, T, (1, 1))
        assert ok, viol
        assert middle_self_extension_detector(C2, PM, T, (1, 1)) == []


@criterion("8 triangle accounting (C2, λ=(1,1),(2,0))")
def test_c8_triangle():
    for lam in ((1, 1), (2, 0)):
        for T in all_strata(C2):
            for S in all_strata(C2):
                if not S < T:
                    continue
                lk = link_cohomology(C2, PM, S, T, lam)
                star = local_star(C2, PM, S, T, lam)
                shriek = local_shriek(C2, PM, S, T, lam).shifted(1)
                for k in lk.degrees():
                    a, b = star.dim_at(k), shriek.dim_at(k)
                    assert (a == 0) != (b == 0)
                    assert a + b == lk.dim_at(k)
                    src = star if a else shriek
                    assert sorted(map(str, (e.weight for e in src.at(k)))) == \
                        sorted(map(str, (e.weight for e in lk.at(k))))


@criterion("runtime: full reproduction suite under 10 s")
def test_runtime_budget():
    results, seconds = timed_paper_check()
    assert all(r.ok for r in results)
    assert seconds < 10, seconds


if __name__ == "__main__":
    failed = 0
    for test in CRITERIA:
        t0 = time.perf_counter()
        try:
            test.body()
            status = "PASS"
        except AssertionError as exc:
            status, failed = f"FAIL ({exc})", failed + 1
        print(f"{status:<5} {test.label}  [{time.perf_counter() - t0:.2f}s]")
    sys.exit(1 if failed else 0)

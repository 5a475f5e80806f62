"""Reproduction suite for the C2 worked example and the structural checks around it.

Each check returns a :class:`CheckResult` with the expected and observed data
rendered as strings, so a failure report names exactly what disagreed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .ext import ext1, ext_partners, middle_self_extension_detector
from .kostant import is_dominant, kostant_modules, weyl_dim
from .linkcoh import check_perverse_conditions, link_cohomology, local_shriek, local_star
from .rootsys import build_root_system, element, format_word, min_coset_reps, relative_length
from .simplexih import ih_simplex, ih_simplex_depth2, stratified_simplex
from .strata import (Perversity, all_strata, dual_perversity, format_stratum, pbar, perversity,
                     stratum_dims)
from .weights import format_weight, symbol

Mutation = Callable[[Perversity], Perversity]

G = frozenset({1, 2})
P1, P2, P0 = frozenset({1}), frozenset({2}), frozenset()


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    expected: str
    actual: str


def off_by_one(stratum=P1, delta: int = 1) -> Mutation:
    """Fault injection: bump the perversity on one stratum."""
    def mutate(p: Perversity) -> Perversity:
        vals = p.values
        vals[frozenset(stratum)] += delta
        R = build_root_system("C2")
        return perversity(R, "custom", p.dims, vals)
    return mutate


def _c2(mutate: Optional[Mutation]):
    R = build_root_system("C2")
    p = perversity(R, "minus", stratum_dims(R))
    return R, (mutate(p) if mutate else p)


def _table(R, m: Dict) -> str:
    order = sorted(m, key=lambda S: (-len(S), sorted(S)))
    return "{" + ", ".join(f"{format_stratum(R, S)}: {m[S]}" for S in order) + "}"


def check_stratification(R, p) -> CheckResult:
    exp = "dims {G: 6, P_1: 2, P_2: 2, P_∅: 0}; p {G: -3, P_1: -1, P_2: -1, P_∅: 0}; " \
          "pbar_G {G: -1, P_1: 1, P_2: 1, P_∅: 2}"
    act = f"dims {_table(R, p.dims)}; p {_table(R, p.values)}; " \
          f"pbar_G {_table(R, {S: pbar(p, S, G) for S in all_strata(R)})}"
    return CheckResult("stratification", exp == act, exp, act)


def check_cosets(R, p) -> CheckResult:
    def reps(I, J):
        return "{" + ", ".join(format_word(w.word) for w in min_coset_reps(R, I, J)) + "}"
    s12, s21 = element(R, (1, 2)), element(R, (2, 1))
    act = (f"W^P1 {reps(P0, P1)}; W_P1 {reps(P1, G)}; W_P2 {reps(P2, G)}; "
           f"l_P1(s1s2)={relative_length(R, s12, P1)} l_P2(s1s2)={relative_length(R, s12, P2)} "
           f"l_P1(s2s1)={relative_length(R, s21, P1)} l_P2(s2s1)={relative_length(R, s21, P2)}")
    exp = ("W^P1 {e, s1}; W_P1 {e, s2, s2s1, s2s1s2}; W_P2 {e, s1, s1s2, s1s2s1}; "
           "l_P1(s1s2)=1 l_P2(s1s2)=2 l_P1(s2s1)=2 l_P2(s2s1)=1")
    return CheckResult("cosets", exp == act, exp, act)


def check_link_vanishing(R, p) -> CheckResult:
    lk = link_cohomology(R, p, P0, G, symbol("λ", 2, G))
    k = p[P0]
    act = f"H^{k - 1}: {lk.dim_at(k - 1)}, H^{k}: {lk.dim_at(k)}"
    exp = "H^-1: 0, H^0: 0"
    return CheckResult("link-vanishing", exp == act, exp, act)


EXPECTED_FAMILIES = {
    ("G", "P_1", "λ' = s2(λ+ρ)−ρ"),
    ("G", "P_2", "λ' = s1(λ+ρ)−ρ"),
    ("P_1", "P_∅", "λ' = λ"),
    ("P_2", "P_∅", "λ' = λ"),
    ("P_∅", "P_1", "λ = s1(λ'+ρ)−ρ"),
    ("P_∅", "P_2", "λ = s2(λ'+ρ)−ρ"),
    ("P_1", "G", "λ = s2s1(λ'+ρ)−ρ"),
    ("P_2", "G", "λ = s1s2(λ'+ρ)−ρ"),
}


def check_ext_table(R, p) -> CheckResult:
    found, problems = set(), []
    for T in all_strata(R):
        for pa in ext_partners(R, p, T, symbol("λ", 2, T)):
            fam = (format_stratum(R, T), format_stratum(R, pa.stratum), pa.condition)
            found.add(fam)
            if not (pa.result.certified and pa.result.value == 1):
                problems.append(f"{fam} value {pa.result.value}")
    # numeric spot-check of the downward families at lambda = (1,1)
    for T in (G, P1, P2):
        for pa in ext_partners(R, p, T, (1, 1)):
            if pa.stratum < T and ext1(R, p, T, (1, 1), pa.stratum, pa.weight).value != 1:
                problems.append(f"numeric {format_stratum(R, T)}->{format_stratum(R, pa.stratum)}")
    zero = ext1(R, p, G, symbol("λ", 2, G), P0, symbol("λ'", 2, P0))
    if zero.value != 0:
        problems.append(f"Ext(G, P_∅) = {zero.value}")
    exp = f"{len(EXPECTED_FAMILIES)} families, all certified 1; Ext(G, P_∅) = 0"
    missing = sorted(EXPECTED_FAMILIES - found)
    extra = sorted(found - EXPECTED_FAMILIES)
    ok = not missing and not extra and not problems
    act = exp if ok else f"missing {missing}; extra {extra}; problems {problems}"
    return CheckResult("ext-table", ok, exp, act)


def check_simplex_engine(R, p) -> CheckResult:
    bad = []
    for a in range(-3, 4):
        for b in range(-3, 4):
            got = ih_simplex(stratified_simplex((0, 1), {frozenset({0}): a, frozenset({1}): b}))
            if got != ih_simplex_depth2(a, b):
                bad.append((a, b, got))
    d1 = ih_simplex(stratified_simplex((0,), {}))
    faces3 = {frozenset(s): -1 for s in ({0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2})}
    d3 = ih_simplex(stratified_simplex((0, 1, 2), faces3))
    exp = "49/49 depth-2 pairs; depth-1 {0: 1}; depth-3 negative {2: 1}"
    act = f"{49 - len(bad)}/49 depth-2 pairs; depth-1 {d1}; depth-3 negative {d3}"
    return CheckResult("simplex-engine", exp == act, exp, act)


def check_kostant(R, p, samples: int = 20, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for label in ("C2", "A3"):
        Rx = build_root_system(label)
        for _ in range(samples):
            for T in all_strata(Rx):
                lam = tuple(rng.randint(0, 4) if i + 1 in T else rng.randint(-4, 4) for i in range(Rx.rank))
                for S in all_strata(Rx):
                    if not S < T:
                        continue
                    mods = kostant_modules(Rx, S, T, lam)
                    weights = [m.weight for m in mods]
                    if not all(is_dominant(Rx, S, mu) for mu in weights):
                        failures.append(f"{label} {sorted(S)}<{sorted(T)} {lam}: non-dominant")
                    if len(set(weights)) != len(weights):
                        failures.append(f"{label} {sorted(S)}<{sorted(T)} {lam}: repeated weight")
                    chi = sum((-1) ** m.degree * weyl_dim(Rx, S, m.weight) for m in mods)
                    if chi:
                        failures.append(f"{label} {sorted(S)}<{sorted(T)} {lam}: euler {chi}")
    exp = "no failures"
    act = exp if not failures else "; ".join(failures[:5])
    return CheckResult("kostant", not failures, exp, act)


def check_duality(R, p) -> CheckResult:
    failures = []
    for label in ("C2", "A3", "B3"):
        Rx = build_root_system(label)
        d = stratum_dims(Rx)
        if dual_perversity(perversity(Rx, "minus", d)).values != perversity(Rx, "plus", d).values:
            failures.append(f"dual(p_-) != p_+ on {label}")
    q = dual_perversity(p)
    for T in all_strata(R):
        ok, viol = check_perverse_conditions(R, p, q, T, (1, 1))
        if not ok:
            failures.append(f"{format_stratum(R, T)}: {viol[0]}")
        hits = middle_self_extension_detector(R, p, T, (1, 1))
        if hits:
            failures.append(f"detector fired at {format_stratum(R, T)}")
    exp = "no failures"
    act = exp if not failures else "; ".join(failures)
    return CheckResult("duality", not failures, exp, act)


def check_triangle(R, p) -> CheckResult:
    failures = []
    for lam in ((1, 1), (2, 0)):
        for T in all_strata(R):
            for S in all_strata(R):
                if not S < T:
                    continue
                lk = sorted((e.degree, format_weight(e.weight), e.multiplicity)
                            for e in link_cohomology(R, p, S, T, lam).entries)
                star = [(e.degree, format_weight(e.weight), e.multiplicity)
                        for e in local_star(R, p, S, T, lam).entries]
                shriek = [(e.degree, format_weight(e.weight), e.multiplicity)
                          for e in local_shriek(R, p, S, T, lam).shifted(1).entries]
                if sorted(star + shriek) != lk or {x[0] for x in star} & {x[0] for x in shriek}:
                    failures.append(f"{format_stratum(R, S)}<{format_stratum(R, T)} λ={lam}")
    exp = "no failures"
    act = exp if not failures else "; ".join(failures)
    return CheckResult("triangle", not failures, exp, act)


CHECKS = (check_stratification, check_cosets, check_link_vanishing, check_ext_table,
          check_simplex_engine, check_kostant, check_duality, check_triangle)


def run_paper_check(mutate: Optional[Mutation] = None) -> List[CheckResult]:
    R, p = _c2(mutate)
    out = []
    for check in CHECKS:
        try:
            out.append(check(R, p))
        except Exception as exc:  # a crash is a failed check, reported by name
            out.append(CheckResult(check.__name__[len("check_"):].replace("_", "-"), False,
                                   "completes", f"{type(exc).__name__}: {exc}"))
    return out


def timed_paper_check(mutate: Optional[Mutation] = None):
    t0 = time.perf_counter()
    res = run_paper_check(mutate)
    return res, time.perf_counter() - t0

"""Ext^1 between simple perverse sheaves via candidate Hom spaces and prolongation obstructions.

The candidate space comes from the link of the smaller stratum; the extension
must then prolong across every stratum ``S`` strictly below both endpoints,
which requires the induced map from ``H^{p(S)-1}`` of the source's link to
``H^{p(S)}`` of the target's link to vanish.  Only dimensions are tracked, so a
nonzero obstruction space leaves the answer as an interval.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .kostant import DominanceError, _require_dominant, kostant_weight, rho_levi
from .linkcoh import GradedModuleList, SimpleObjectLabel, link_cohomology
from .rootsys import RootSystem, StratumId, act, inverse
from .strata import Perversity, all_strata, format_stratum, stratum_key
from .weights import (AnyWeight, coincidence_possible, format_weight, integral, is_symbolic,
                      negate, symbol, translate)


class LeviMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Obstruction:
    stratum: StratumId
    hom_dim: int
    special: Tuple[str, ...] = ()  # weight pairs that coincide only for special symbol values


@dataclass(frozen=True)
class ExtResult:
    source: SimpleObjectLabel
    target: SimpleObjectLabel
    relation: str
    candidate_dim: int
    obstructions: Tuple[Obstruction, ...]
    certified: bool
    value: Union[int, Tuple[int, int]]
    condition: str = field(default="", compare=False)


def hom_dim(a: GradedModuleList, deg_a: int, b: GradedModuleList, deg_b: int) -> int:
    """``dim Hom_{L}(a^{deg_a}, b^{deg_b})`` for semisimple Levi modules (Schur)."""
    if a.levi != b.levi:
        raise LeviMismatch("hom_dim between modules of different Levi quotients")
    return sum(x.multiplicity * y.multiplicity
               for x in a.at(deg_a) for y in b.at(deg_b) if x.weight == y.weight)


def special_coincidences(a: GradedModuleList, deg_a: int, b: GradedModuleList, deg_b: int) -> Tuple[str, ...]:
    return tuple(f"{format_weight(x.weight)} = {format_weight(y.weight)}"
                 for x in a.at(deg_a) for y in b.at(deg_b)
                 if coincidence_possible(x.weight, y.weight))


def relation(T: StratumId, T2: StratumId) -> str:
    if T == T2:
        return "equal"
    if T < T2:
        return "less"
    if T > T2:
        return "greater"
    return "incomparable"


def ext1(R: RootSystem, p: Perversity, T, lam: AnyWeight, T2, lam2: AnyWeight,
         condition: str = "") -> ExtResult:
    """``Ext^1(P_T(E_lam), P_T2(E_lam2))`` in the category of ``p``-perverse sheaves."""
    T, T2 = frozenset(T), frozenset(T2)
    _require_dominant(R, T, lam, "source weight")
    _require_dominant(R, T2, lam2, "target weight")
    src = SimpleObjectLabel(T, lam, p.kind)
    tgt = SimpleObjectLabel(T2, lam2, p.kind)
    rel = relation(T, T2)
    if rel in ("equal", "incomparable"):
        return ExtResult(src, tgt, rel, 0, (), True, 0, condition)
    if rel == "less":
        lk = link_cohomology(R, p, T, T2, lam2)
        candidate = sum(e.multiplicity for e in lk.at(p[T]) if e.weight == lam)
    else:
        lk = link_cohomology(R, p, T2, T, lam)
        candidate = sum(e.multiplicity for e in lk.at(p[T2] - 1) if e.weight == lam2)
    obstructions = []
    below = sorted((S for S in all_strata(R) if S < T and S < T2), key=stratum_key, reverse=True)
    for S in below:  # decreasing dimension
        a = link_cohomology(R, p, S, T, lam)
        b = link_cohomology(R, p, S, T2, lam2)
        obstructions.append(Obstruction(S, hom_dim(a, p[S] - 1, b, p[S]),
                                        special_coincidences(a, p[S] - 1, b, p[S])))
    certified = candidate == 0 or all(o.hom_dim == 0 for o in obstructions)
    value = candidate if certified else (0, candidate)
    return ExtResult(src, tgt, rel, candidate, tuple(obstructions), certified, value, condition)


@dataclass(frozen=True)
class Partner:
    stratum: StratumId
    weight: AnyWeight
    condition: str
    result: ExtResult


def ext_partners(R: RootSystem, p: Perversity, T, lam: AnyWeight,
                 partner_symbol: str = "λ'") -> List[Partner]:
    """Every simple ``P_T'(E')`` with a nonzero candidate ``Ext^1(P_T(E_lam), P_T'(E'))``.

    Below ``T`` the partner weight is read off a Kostant weight of ``lam``; above
    ``T`` the equation ``lam = w(lam'+rho)-rho`` is inverted per Kostant class and
    only dominant solutions are kept.  A symbolic ``lam`` yields symbolic families.
    """
    T = frozenset(T)
    _require_dominant(R, T, lam)
    out: List[Partner] = []
    for T2 in sorted(all_strata(R), key=stratum_key, reverse=True):
        if T2 < T:
            lk = link_cohomology(R, p, T2, T, lam)
            for e in lk.at(p[T2] - 1):
                cond = f"{partner_symbol} = {format_weight(e.weight)}"
                res = ext1(R, p, T, lam, T2, e.weight, cond)
                if res.candidate_dim:
                    out.append(Partner(T2, e.weight, cond, res))
        elif T2 > T:
            sym = symbol(partner_symbol, R.rank, T2)
            lk = link_cohomology(R, p, T, T2, sym)
            for e in lk.at(p[T]):
                cond = f"{lam.symbol if is_symbolic(lam) else 'λ'} = {format_weight(e.weight)}"
                if is_symbolic(lam):
                    res = ext1(R, p, T, e.weight, T2, sym, cond)
                    if res.candidate_dim:
                        out.append(Partner(T2, sym, cond, res))
                    continue
                lam2 = _invert_kostant(R, e.witness, T2, lam)
                if lam2 is None:
                    continue
                res = ext1(R, p, T, lam, T2, lam2, cond)
                if res.candidate_dim:
                    out.append(Partner(T2, lam2, cond, res))
    return out


def _invert_kostant(R: RootSystem, w, T2: StratumId, lam) -> Optional[tuple]:
    """Solve ``lam = w(x + rho) - rho`` for ``x``; None unless ``x`` is ``T2``-dominant."""
    rho = rho_levi(R, T2)
    x = integral(translate(act(R, inverse(R, w), translate(lam, rho)), negate(rho)))
    try:
        _require_dominant(R, T2, x)
    except DominanceError:
        return None
    assert kostant_weight(R, w, T2, x) == tuple(lam)
    return x


def middle_self_extension_detector(R: RootSystem, p: Perversity, T, lam: AnyWeight) -> List[StratumId]:
    """Odd-codimension strata ``S < T`` with nonzero link cohomology in the middle degree."""
    T = frozenset(T)
    _require_dominant(R, T, lam)
    hits = []
    for S in sorted(all_strata(R), key=stratum_key):
        if not S < T:
            continue
        c = p.codim(S, T)
        if c % 2 == 0:
            continue
        k = (c - 1) // 2 + p[T]
        if link_cohomology(R, p, S, T, lam).at(k):
            hits.append(S)
    return hits


def describe_result(R: RootSystem, res: ExtResult) -> str:
    """One-line human summary of an :class:`ExtResult`."""
    src = f"{_object_name(R, res.source.stratum)}({format_weight(res.source.weight)})"
    tgt = f"{_object_name(R, res.target.stratum)}({format_weight(res.target.weight)})"
    val = res.value if res.certified else f"[0, {res.candidate_dim}]"
    return f"Ext^1({src}, {tgt}) = {val}"


def _object_name(R: RootSystem, S: StratumId) -> str:
    name = format_stratum(R, S)
    return "P_G" if name == "G" else name

"""Levi-module valued link cohomology and local data of simple perverse sheaves.

For ``S < T`` the link of ``S`` in the closure of ``T`` contributes, for each
Kostant class ``w`` in ``W_S^T``, the module of highest weight
``w(lambda+rho)-rho`` placed in degree ``l(w)+p(T)``, tensored with the
intersection cohomology of the link simplex under the perversity
``Q -> pbar_T(Q) - l_Q(w)``.
"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .kostant import _require_dominant, kostant_modules
from .rootsys import RootSystem, StratumId, WeylElement, relative_length
from .simplexih import ih_simplex, stratified_simplex
from .strata import Perversity, StratumError, dual_perversity, format_stratum, pbar
from .weights import AnyWeight, format_weight


@dataclass(frozen=True)
class ModuleEntry:
    degree: int
    weight: AnyWeight
    multiplicity: int
    witness: Optional[WeylElement] = field(default=None, compare=False)


@dataclass(frozen=True)
class GradedModuleList:
    levi: StratumId
    entries: Tuple[ModuleEntry, ...] = ()

    def at(self, k: int) -> Tuple[ModuleEntry, ...]:
        return tuple(e for e in self.entries if e.degree == k)

    def degrees(self) -> List[int]:
        return sorted({e.degree for e in self.entries})

    def dim_at(self, k: int) -> int:
        """Number of irreducible constituents (with multiplicity) in degree ``k``."""
        return sum(e.multiplicity for e in self.at(k))

    def shifted(self, n: int) -> "GradedModuleList":
        """Degree bookkeeping of ``[n]``: every degree drops by ``n``."""
        return GradedModuleList(self.levi, tuple(
            ModuleEntry(e.degree - n, e.weight, e.multiplicity, e.witness) for e in self.entries))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def merged(levi: StratumId, entries) -> GradedModuleList:
    acc: "OrderedDict[tuple, ModuleEntry]" = OrderedDict()
    for e in entries:
        key = (e.degree, e.weight)
        if key in acc:
            old = acc[key]
            wit = old.witness if old.witness == e.witness else None
            acc[key] = ModuleEntry(e.degree, e.weight, old.multiplicity + e.multiplicity, wit)
        else:
            acc[key] = e
    ordered = sorted(acc.values(), key=lambda e: (e.degree, e.witness.length if e.witness else 0,
                                                  e.witness.word if e.witness else ()))
    return GradedModuleList(levi, tuple(ordered))


@dataclass(frozen=True)
class SimpleObjectLabel:
    stratum: StratumId
    weight: AnyWeight
    perversity_kind: str = "minus"


def link_simplex_perversity(R: RootSystem, p: Perversity, S, T, w: WeylElement) -> Dict[StratumId, int]:
    """``Q -> pbar_T(Q) - l_Q(w)`` on the intermediate strata ``S < Q < T``."""
    S, T = frozenset(S), frozenset(T)
    verts = sorted(T - S)
    out = {}
    for k in range(1, len(verts)):
        for Q in _subsets_of_size(verts, k):
            Q = S | Q
            out[Q] = pbar(p, Q, T) - relative_length(R, w, Q)
    return out


def _subsets_of_size(items, k):
    import itertools
    return (frozenset(c) for c in itertools.combinations(items, k))


def _ih_for(R, p, S, T, w):
    pv = link_simplex_perversity(R, p, S, T, w)
    verts = tuple(sorted(T - S))
    face_pv = {Q - S: v for Q, v in pv.items()}
    return ih_simplex(stratified_simplex(verts, face_pv))


def link_cohomology(R: RootSystem, p: Perversity, S, T, lam: AnyWeight) -> GradedModuleList:
    """``H(lk_S P_T(E))`` as a graded list of irreducible ``L_S``-modules."""
    S, T = frozenset(S), frozenset(T)
    if not S < T:
        raise StratumError(f"link cohomology needs {format_stratum(R, S)} strictly below {format_stratum(R, T)}")
    return _link(R, p, S, T, lam)


@lru_cache(maxsize=None)
def _link(R, p, S, T, lam):
    entries = []
    for mod in kostant_modules(R, S, T, lam):
        for j, r in _ih_for(R, p, S, T, mod.w).items():
            entries.append(ModuleEntry(mod.degree + p[T] + j, mod.weight, r, mod.w))
    return merged(S, entries)


def local_star(R: RootSystem, p: Perversity, S, T, lam: AnyWeight) -> GradedModuleList:
    """``H(i_S^* P_T(E))``: the link truncated to degrees below ``p(S)``."""
    S, T = frozenset(S), frozenset(T)
    if S == T:
        _require_dominant(R, T, lam)
        return GradedModuleList(T, (ModuleEntry(p[T], lam, 1),))
    if not S < T:
        return GradedModuleList(S)
    lk = link_cohomology(R, p, S, T, lam)
    return GradedModuleList(S, tuple(e for e in lk.entries if e.degree < p[S]))


def local_shriek(R: RootSystem, p: Perversity, S, T, lam: AnyWeight) -> GradedModuleList:
    """``H(i_S^! P_T(E))``: link degrees ``>= p(S)`` moved up by one."""
    S, T = frozenset(S), frozenset(T)
    if S == T:
        _require_dominant(R, T, lam)
        return GradedModuleList(T, (ModuleEntry(p[T], lam, 1),))
    if not S < T:
        return GradedModuleList(S)
    lk = link_cohomology(R, p, S, T, lam)
    return GradedModuleList(S, tuple(ModuleEntry(e.degree + 1, e.weight, e.multiplicity, e.witness)
                                     for e in lk.entries if e.degree + 1 > p[S]))


def twisted_local_data(R: RootSystem, p: Perversity, q: Perversity, S, T, lam):
    """Stalk and costalk data of ``P_{q,T}(E)[q(T) - p(T)]`` at ``S``."""
    shift = q[T] - p[T]
    return (local_star(R, q, S, T, lam).shifted(shift),
            local_shriek(R, q, S, T, lam).shifted(shift))


def check_perverse_conditions(R: RootSystem, p: Perversity, q: Perversity, T, lam):
    """Does ``P_{q,T}(E)[q(T)-p(T)]`` satisfy ``p``-perverse (co)vanishing on every stratum?

    Returns ``(ok, violations)`` with one human-readable line per failure.
    """
    T = frozenset(T)
    violations = []
    for S in sorted(p.values, key=lambda s: (len(s), sorted(s))):
        if not S <= T:
            continue
        star, shriek = twisted_local_data(R, p, q, S, T, lam)
        for e in star.entries:
            if e.degree > p[S]:
                violations.append(f"i^* at {format_stratum(R, S)}: degree {e.degree} > p = {p[S]}"
                                  f" ({format_weight(e.weight)})")
        for e in shriek.entries:
            if e.degree < p[S]:
                violations.append(f"i^! at {format_stratum(R, S)}: degree {e.degree} < p = {p[S]}"
                                  f" ({format_weight(e.weight)})")
    return not violations, violations


def twisted_differs(R: RootSystem, p: Perversity, T, lam) -> List[StratumId]:
    """Strata where the local data of ``P_{p*,T}(E)[p*(T)-p(T)]`` and ``P_{p,T}(E)`` differ."""
    T = frozenset(T)
    q = dual_perversity(p)
    out = []
    for S in sorted(p.values, key=lambda s: (len(s), sorted(s))):
        if not S < T:
            continue
        plain = (local_star(R, p, S, T, lam), local_shriek(R, p, S, T, lam))
        twisted = twisted_local_data(R, p, q, S, T, lam)
        if any(set(a.entries) != set(b.entries) for a, b in zip(plain, twisted)):
            out.append(S)
    return out

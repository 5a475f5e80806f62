"""The stratum poset of standard parabolic subsets, dimensions and perversities."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .rootsys import RootSystem, RootSystemError, StratumId, decompose_at, relative_length


class StratumError(ValueError):
    pass


def all_strata(R: RootSystem) -> Tuple[StratumId, ...]:
    """Every subset of the simple indices, ordered by size then lexicographically."""
    subsets = (frozenset(c) for k in range(R.rank + 1)
               for c in itertools.combinations(R.indices, k))
    return tuple(subsets)


def stratum_key(S: StratumId):
    return (len(S), tuple(sorted(S)))


@dataclass(frozen=True)
class ParabolicLattice:
    strata: Tuple[StratumId, ...]
    covers: Tuple[Tuple[StratumId, StratumId], ...]

    def below(self, T: StratumId) -> Tuple[StratumId, ...]:
        return tuple(S for S in self.strata if S < T)


def parabolic_lattice(R: RootSystem) -> ParabolicLattice:
    strata = all_strata(R)
    covers = tuple((S, S | {i}) for S in strata for i in R.indices if i not in S)
    return ParabolicLattice(strata, covers)


def format_stratum(R: RootSystem, S: StratumId) -> str:
    if S == R.full:
        return "G"
    if not S:
        return "P_∅"
    inner = "".join(str(i) for i in sorted(S)) if R.rank < 10 else ",".join(map(str, sorted(S)))
    return f"P_{inner}" if len(S) == 1 else f"P_{{{inner}}}"


def subset_literal(S: StratumId) -> str:
    return "{" + ",".join(str(i) for i in sorted(S)) + "}"


def parse_stratum(R: RootSystem, text: str) -> StratumId:
    """Accept ``{1,2}``, ``{}``, ``full``/``G`` and the display names ``P_1``, ``P_∅``."""
    t = str(text).strip()
    if t.lower() in ("full", "g"):
        return R.full
    m = re.fullmatch(r"\{\s*([\d\s,]*)\}", t) or re.fullmatch(r"P_\{?([\d,∅]*)\}?", t)
    if not m:
        raise StratumError(f"cannot parse stratum {text!r}")
    body = m.group(1).replace("∅", "").strip()
    if "," in body or " " in body:
        parts = [p for p in re.split(r"[,\s]+", body) if p]
    else:
        parts = list(body) if t.startswith("P_") else ([body] if body else [])
    S = frozenset(int(p) for p in parts)
    if not S <= R.full:
        raise StratumError(f"stratum {text!r} uses indices outside 1..{R.rank}")
    return S


def default_dim(R: RootSystem, I: StratumId) -> int:
    return len(R.positive_roots_of(I)) + len(I)


def stratum_dims(R: RootSystem, overrides: Optional[Mapping] = None) -> Dict[StratumId, int]:
    """Real dimension of every stratum; ``overrides`` must cover all strata or be empty."""
    strata = all_strata(R)
    if overrides:
        given = {frozenset(k): int(v) for k, v in overrides.items()}
        missing = [S for S in strata if S not in given]
        extra = [S for S in given if S not in strata]
        if missing or extra:
            raise StratumError(
                "dimension overrides must cover every stratum or none; missing "
                + ", ".join(subset_literal(S) for S in missing)
                + ("" if not extra else "; unknown " + ", ".join(subset_literal(S) for S in extra)))
        dims = {S: given[S] for S in strata}
    else:
        dims = {S: default_dim(R, S) for S in strata}
    for S in strata:
        if dims[S] < 0:
            raise StratumError(f"negative dimension for {subset_literal(S)}")
        for T in strata:
            if S < T and not dims[S] < dims[T]:
                raise StratumError(
                    f"dimension must increase along the closure order: dim {subset_literal(S)} = "
                    f"{dims[S]} >= dim {subset_literal(T)} = {dims[T]}")
    return dims


def stratum_dim(R: RootSystem, I, overrides: Optional[Mapping] = None) -> int:
    return stratum_dims(R, overrides)[frozenset(I)]


@dataclass(frozen=True)
class StratumInfo:
    id: StratumId
    dim: int
    split_torus_dim: int
    depth: int


def stratum_info(R: RootSystem, I, dims: Mapping[StratumId, int]) -> StratumInfo:
    I = frozenset(I)
    return StratumInfo(I, dims[I], R.rank - len(I), R.rank - len(I))


def relative_depth(S: StratumId, T: StratumId) -> int:
    if not S <= T:
        raise StratumError("relative depth needs S <= T")
    return len(T) - len(S)


@dataclass(frozen=True)
class Perversity:
    kind: str
    items: Tuple[Tuple[StratumId, int], ...]
    dim_items: Tuple[Tuple[StratumId, int], ...]

    def __getitem__(self, S) -> int:
        return dict(self.items)[frozenset(S)]

    @property
    def values(self) -> Dict[StratumId, int]:
        return dict(self.items)

    @property
    def dims(self) -> Dict[StratumId, int]:
        return dict(self.dim_items)

    def codim(self, S: StratumId, T: StratumId) -> int:
        d = self.dims
        return d[frozenset(T)] - d[frozenset(S)]


def _sorted_items(m: Mapping) -> Tuple:
    return tuple(sorted(((frozenset(k), int(v)) for k, v in m.items()), key=lambda kv: stratum_key(kv[0])))


def middle_value(kind: str, dim: int) -> int:
    if kind == "minus":
        return -((dim + 1) // 2)
    if kind == "plus":
        return -(dim // 2)
    raise StratumError(f"unknown perversity kind {kind!r}")


def perversity(R: RootSystem, kind: str, dims: Mapping[StratumId, int],
               values: Optional[Mapping] = None) -> Perversity:
    """Middle perversity ``minus``/``plus`` or a ``custom`` monotone one."""
    dims = {frozenset(k): v for k, v in dims.items()}
    if set(dims) != set(all_strata(R)):
        raise StratumError("dims must assign every stratum a dimension")
    if kind in ("minus", "plus"):
        vals = {S: middle_value(kind, d) for S, d in dims.items()}
    elif kind == "custom":
        if values is None:
            raise StratumError("custom perversity needs explicit values")
        vals = {frozenset(k): int(v) for k, v in values.items()}
        if set(vals) != set(dims):
            raise StratumError("custom perversity must assign every stratum a value")
        for S in vals:
            for T in vals:
                if S <= T and vals[S] < vals[T]:
                    raise StratumError(
                        f"perversity not monotone: p{subset_literal(S)} = {vals[S]} < "
                        f"p{subset_literal(T)} = {vals[T]}")
    else:
        raise StratumError(f"unknown perversity kind {kind!r}")
    return Perversity(kind, _sorted_items(vals), _sorted_items(dims))


def _classify(vals: Mapping, dims: Mapping) -> str:
    for kind in ("minus", "plus"):
        if all(vals[S] == middle_value(kind, dims[S]) for S in vals):
            return kind
    return "custom"


def dual_perversity(p: Perversity) -> Perversity:
    """``p*(S) = -p(S) - dim S``."""
    dims = p.dims
    vals = {S: -v - dims[S] for S, v in p.values.items()}
    partner = {"minus": "plus", "plus": "minus"}.get(p.kind)
    # on even-dimensional strata both middle perversities agree; prefer the partner's name
    if partner and all(vals[S] == middle_value(partner, dims[S]) for S in vals):
        kind = partner
    else:
        kind = _classify(vals, dims)
    return Perversity(kind, _sorted_items(vals), p.dim_items)


def pbar(p: Perversity, S, T) -> int:
    """Shifted perversity ``p(S) - p(T) - 1`` on the closure of ``T``."""
    S, T = frozenset(S), frozenset(T)
    if not S <= T:
        raise StratumError(f"{subset_literal(S)} is not below {subset_literal(T)}")
    return p[S] - p[T] - 1


def pbar_tw(R: RootSystem, p: Perversity, S, T, w, Q) -> int:
    """Perversity on the link simplex attached to the Kostant class of ``w``."""
    S, T, Q = frozenset(S), frozenset(T), frozenset(Q)
    if not (S <= Q <= T):
        raise StratumError("pbar_tw needs S <= Q <= T")
    decompose_at(R, w, S, Q, T)
    return pbar(p, Q, T) - relative_length(R, w, Q)

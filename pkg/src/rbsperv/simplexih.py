"""Intersection cohomology of a simplex stratified by its open faces.

Constructible complexes on the face-stratified simplex are representations of
the face poset (stalk at each face, generization maps towards larger faces).
We keep them as bounded complexes of the indecomposable injectives ``I_x``
(``I_x`` is the field on every face of ``x``, zero elsewhere).  In that model

* pushforward from an open union of faces is relabelling (``j_* I_x = I_x``),
* the stalk at a face ``F`` is spanned by the summands whose label contains ``F``,
* truncating at ``F`` is the cocone of the map to ``i_F* tau_{>k}`` of that stalk,
  which is again injective because ``F`` is closed in the current open set,
* hypercohomology is the scalar complex obtained by taking global sections.

All arithmetic is exact over the rationals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .linalg import cohomology_projection, rank

Face = FrozenSet[Hashable]
GradedRanks = Dict[int, int]


@dataclass(frozen=True)
class StratifiedSimplex:
    vertices: Tuple[Hashable, ...]
    perversity_items: Tuple[Tuple[Face, int], ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def top(self) -> Face:
        return frozenset(self.vertices)

    @property
    def perversity(self) -> Dict[Face, int]:
        return dict(self.perversity_items)

    def faces(self) -> List[Face]:
        """Nonempty faces, largest first (a processing order for the Deligne construction)."""
        vs = sorted(self.vertices, key=repr)
        return [frozenset(c) for k in range(len(vs), 0, -1) for c in itertools.combinations(vs, k)]

    def proper_faces(self) -> List[Face]:
        return self.faces()[1:]


def stratified_simplex(vertices: Iterable[Hashable], perversity: Mapping) -> StratifiedSimplex:
    vertices = tuple(vertices)
    if not vertices:
        raise ValueError("a simplex needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise ValueError("repeated vertex labels")
    sx = StratifiedSimplex(vertices, ())
    pv = {frozenset(k): int(v) for k, v in perversity.items()}
    pv.pop(sx.top, None)  # the open dense face is never truncated
    expected = set(sx.proper_faces())
    if set(pv) != expected:
        missing = expected - set(pv)
        raise ValueError(f"perversity must be given on every proper face; missing {sorted(map(sorted, missing))}")
    items = tuple((F, pv[F]) for F in sx.proper_faces())
    return StratifiedSimplex(vertices, items)


class InjectiveComplex:
    """Bounded complex of the injectives ``I_label`` with scalar differential."""

    def __init__(self):
        self.labels: List[Face] = []
        self.degrees: List[int] = []
        self.diff: Dict[int, Dict[int, Fraction]] = {}  # source -> {target: coefficient}

    def add(self, label: Face, degree: int) -> int:
        self.labels.append(label)
        self.degrees.append(degree)
        self.diff[len(self.labels) - 1] = {}
        return len(self.labels) - 1

    def support(self, F: Face) -> List[int]:
        return [a for a, lab in enumerate(self.labels) if F <= lab]

    def _matrix(self, src: Sequence[int], tgt: Sequence[int]):
        pos = {b: r for r, b in enumerate(tgt)}
        m = [[Fraction(0)] * len(src) for _ in tgt]
        for c, a in enumerate(src):
            for b, x in self.diff[a].items():
                if b in pos:
                    m[pos[b]][c] = x
        return m

    def _graded(self, summands: Sequence[int]) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for a in summands:
            out.setdefault(self.degrees[a], []).append(a)
        return out

    def stalk_cohomology(self, F: Face) -> GradedRanks:
        return _cohomology(self, self.support(F))

    def global_cohomology(self) -> GradedRanks:
        return _cohomology(self, range(len(self.labels)))

    def truncate_at(self, F: Face, k: int) -> None:
        """Stratum truncation ``tau_{<=k}`` at the face ``F`` (closed in the current support)."""
        stalk = self._graded(self.support(F))
        for q in sorted(stalk):
            if q <= k:
                continue
            cur = stalk[q]
            proj = cohomology_projection(self._matrix(stalk.get(q - 1, []), cur),
                                         self._matrix(cur, stalk.get(q + 1, [])), len(cur))
            for row in proj:
                b = self.add(F, q + 1)
                for a, x in zip(cur, row):
                    if x:
                        self.diff[a][b] = x

    def check(self) -> None:
        """Assert ``d^2 = 0`` and that every component respects the face order."""
        for a, outs in self.diff.items():
            for b, x in outs.items():
                assert self.labels[b] <= self.labels[a] and self.degrees[b] == self.degrees[a] + 1
            sq: Dict[int, Fraction] = {}
            for b, x in outs.items():
                for c, y in self.diff[b].items():
                    sq[c] = sq.get(c, 0) + x * y
            assert all(v == 0 for v in sq.values()), "d^2 != 0"


def _cohomology(cx: InjectiveComplex, summands: Iterable[int]) -> GradedRanks:
    graded = cx._graded(list(summands))
    ranks = {q: rank(cx._matrix(graded[q], graded.get(q + 1, []))) for q in graded}
    out = {}
    for q, summ in graded.items():
        h = len(summ) - ranks[q] - ranks.get(q - 1, 0)
        if h:
            out[q] = h
    return dict(sorted(out.items()))


def _check_order(sx: StratifiedSimplex, order: Sequence[Face]) -> List[Face]:
    order = [frozenset(F) for F in order]
    proper = sx.proper_faces()
    if sorted(map(sorted, order)) != sorted(map(sorted, proper)) or len(order) != len(proper):
        raise ValueError("order must list every proper face exactly once")
    done = {sx.top}
    for F in order:
        if any(G not in done for G in sx.faces() if F < G):
            raise ValueError(f"face {sorted(F)} processed before one of its cofaces")
        done.add(F)
    return order


def deligne_complex(sx: StratifiedSimplex, order: Optional[Sequence[Face]] = None) -> InjectiveComplex:
    """Iterated pushforward-and-truncate starting from the constant sheaf on the open face."""
    order = sx.proper_faces() if order is None else _check_order(sx, order)
    pv = sx.perversity
    cx = InjectiveComplex()
    cx.add(sx.top, 0)
    for F in order:
        cx.truncate_at(F, pv[F])
    return cx


def ih_simplex(sx: StratifiedSimplex, order: Optional[Sequence[Face]] = None) -> GradedRanks:
    """Graded ranks of the hypercohomology of the Deligne sheaf on ``sx``."""
    if order is None:
        return dict(_ih_cached(sx.vertices, sx.perversity_items))
    return deligne_complex(sx, order).global_cohomology()


@lru_cache(maxsize=4096)
def _ih_cached(vertices, items):
    return tuple(deligne_complex(StratifiedSimplex(vertices, items)).global_cohomology().items())


def ih_simplex_depth2(pv1: int, pv2: int) -> GradedRanks:
    """Closed form on a 1-simplex with endpoint perversities ``pv1``, ``pv2``."""
    if pv1 >= 0 and pv2 >= 0:
        return {0: 1}
    if pv1 < 0 and pv2 < 0:
        return {1: 1}
    return {}

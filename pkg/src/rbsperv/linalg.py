"""Small exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction` (ints are accepted on
input).  Every matrix met in this package is tiny, so plain Gaussian
elimination beats the overhead of a general CAS.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def rank(m: Sequence[Sequence]) -> int:
    return len(_echelon([list(map(Fraction, r)) for r in m])[1])


def _echelon(m: Matrix):
    """Row-reduce ``m`` in place; return (m, pivot columns)."""
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(m: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Basis of ``{x : m x = 0}``; ``ncols`` fixes the width when ``m`` has no rows."""
    rows = [list(map(Fraction, r)) for r in m if any(r)]
    if not rows:
        return [_unit(i, ncols) for i in range(ncols)]
    red, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def column_basis(m: Sequence[Sequence], nrows: int) -> List[Vector]:
    """Basis of the column space of ``m`` (an ``nrows``-row matrix)."""
    if nrows == 0 or not m or not m[0]:
        return []
    cols = [[Fraction(m[i][j]) for i in range(nrows)] for j in range(len(m[0]))]
    span = Span(nrows)
    return [c for c in cols if span.add(c)]


def _unit(i: int, n: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


class Span:
    """Incrementally grown subspace of ``Q^n`` kept in reduced echelon form."""

    def __init__(self, n: int):
        self.n = n
        self.rows: Matrix = []
        self.pivots: List[int] = []

    def _reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if v[pc] != 0:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return whether it enlarged the span."""
        v = self._reduce([Fraction(x) for x in v])
        pc = next((i for i, x in enumerate(v) if x != 0), None)
        if pc is None:
            return False
        inv = 1 / v[pc]
        v = [x * inv for x in v]
        for k, row in enumerate(self.rows):
            if row[pc] != 0:
                f = row[pc]
                self.rows[k] = [a - f * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def __len__(self) -> int:
        return len(self.rows)


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [[Fraction(x) for x in row] + _unit(i, n) for i, row in enumerate(m)]
    red, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red[:n]]


def cohomology_projection(d_in: Sequence[Sequence], d_out: Sequence[Sequence], n: int) -> Matrix:
    """Chain-level projection of ``C^q = Q^n`` onto a complement of ``B^q`` in ``Z^q``.

    ``d_in`` maps into ``C^q`` (``n`` rows), ``d_out`` maps out of it (``n``
    columns).  The returned ``h x n`` matrix kills the boundaries, so it is a
    cochain map from the complex to its cohomology in this degree.
    """
    boundaries = column_basis(d_in, n)
    cycles = nullspace(d_out, n)
    span = Span(n)
    for b in boundaries:
        span.add(b)
    harmonic = [z for z in cycles if span.add(z)]
    if not harmonic:
        return []
    rest = [e for e in (_unit(i, n) for i in range(n)) if span.add(e)]
    basis = boundaries + harmonic + rest
    inv = inverse([[basis[j][i] for j in range(n)] for i in range(n)])
    lo = len(boundaries)
    return inv[lo:lo + len(harmonic)]

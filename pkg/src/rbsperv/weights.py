"""Weights in fundamental-weight coordinates, numeric or symbolic.

A numeric weight is a plain tuple of ints (Fractions are tolerated for
intermediate values such as Levi rho-vectors).  A :class:`SymWeight` is an
affine expression ``M x + c`` in a free weight symbol ``x`` that ranges over the
weights dominant for ``domain``; the Weyl action is linear, so Kostant labels of
a symbol stay affine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple, Union

Weight = Tuple[int, ...]


def _norm(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class SymWeight:
    symbol: str
    domain: frozenset
    matrix: Tuple[Tuple, ...]
    offset: Tuple
    label: str = field(default="", compare=False)

    @property
    def rank(self) -> int:
        return len(self.offset)

    def __getitem__(self, i: int):
        """Coordinate ``i`` as a (row, constant) pair."""
        return self.matrix[i], self.offset[i]

    def translate(self, c: Sequence) -> "SymWeight":
        return SymWeight(self.symbol, self.domain, self.matrix,
                         tuple(_norm(a + b) for a, b in zip(self.offset, c)), self.label)

    def reflect(self, i: int, alpha: Sequence[int]) -> "SymWeight":
        """``s_i`` acting by ``mu - <mu, alpha_i^vee> alpha_i`` (``i`` is 0-based here)."""
        row, const = self.matrix[i], self.offset[i]
        mat = tuple(tuple(_norm(m - r * a) for m, r in zip(self.matrix[k], row))
                    for k, a in enumerate(alpha))
        off = tuple(_norm(c - const * a) for c, a in zip(self.offset, alpha))
        return SymWeight(self.symbol, self.domain, mat, off, self.label)

    def relabel(self, label: str) -> "SymWeight":
        return SymWeight(self.symbol, self.domain, self.matrix, self.offset, label)

    def evaluate(self, x: Sequence[int]) -> Weight:
        out = tuple(_norm(sum(Fraction(m) * v for m, v in zip(row, x)) + c)
                    for row, c in zip(self.matrix, self.offset))
        return out

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.offset) and all(
            Fraction(m).denominator == 1 for row in self.matrix for m in row)

    def __str__(self) -> str:
        return self.label or self.symbol


AnyWeight = Union[Weight, SymWeight]


def symbol(name: str, rank: int, domain) -> SymWeight:
    """Free weight symbol, dominant for ``domain`` (1-based simple indices)."""
    ident = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    return SymWeight(name, frozenset(domain), ident, (0,) * rank, name)


def is_symbolic(mu) -> bool:
    return isinstance(mu, SymWeight)


def translate(mu: AnyWeight, c: Sequence) -> AnyWeight:
    if isinstance(mu, SymWeight):
        return mu.translate(c)
    return tuple(_norm(a + b) for a, b in zip(mu, c))


def negate(c: Sequence) -> tuple:
    return tuple(-x for x in c)


def integral(mu: AnyWeight) -> AnyWeight:
    """Return ``mu`` with int coordinates; raise if some coordinate is fractional."""
    if isinstance(mu, SymWeight):
        if not mu.is_integral():
            raise ArithmeticError(f"non-integral weight {mu}")
        return mu
    if any(Fraction(x).denominator != 1 for x in mu):
        raise ArithmeticError(f"non-integral weight {mu}")
    return tuple(int(x) for x in mu)


def coincidence_possible(a: AnyWeight, b: AnyWeight) -> bool:
    """Whether ``a == b`` for some value of the symbol (over Q), without being identical."""
    if a == b:
        return False
    if not isinstance(a, SymWeight) and not isinstance(b, SymWeight):
        return False
    from .linalg import rank

    def affine(w, n):
        if isinstance(w, SymWeight):
            return [list(r) for r in w.matrix], list(w.offset)
        return [[0] * n for _ in w], list(w)

    sym = a if isinstance(a, SymWeight) else b
    if isinstance(a, SymWeight) and isinstance(b, SymWeight) and a.symbol != b.symbol:
        return True
    n = sym.rank
    ma, ca = affine(a, n)
    mb, cb = affine(b, n)
    lhs = [[Fraction(x) - Fraction(y) for x, y in zip(ra, rb)] for ra, rb in zip(ma, mb)]
    rhs = [Fraction(y) - Fraction(x) for x, y in zip(ca, cb)]
    aug = [row + [r] for row, r in zip(lhs, rhs)]
    return rank(lhs) == rank(aug)


def format_weight(mu: AnyWeight) -> str:
    if isinstance(mu, SymWeight):
        return str(mu)
    return "(" + ",".join(str(x) for x in mu) + ")"


def weight_to_json(mu: AnyWeight):
    if isinstance(mu, SymWeight):
        return {
            "symbol": mu.symbol,
            "domain": sorted(mu.domain),
            "matrix": [[str(x) for x in row] for row in mu.matrix],
            "offset": [str(x) for x in mu.offset],
            "label": mu.label,
        }
    return {"coords": [int(x) for x in mu]}


def weight_from_json(obj) -> AnyWeight:
    if "coords" in obj:
        return tuple(int(x) for x in obj["coords"])
    return SymWeight(
        obj["symbol"], frozenset(obj["domain"]),
        tuple(tuple(_norm(Fraction(x)) for x in row) for row in obj["matrix"]),
        tuple(_norm(Fraction(x)) for x in obj["offset"]),
        obj.get("label", ""),
    )

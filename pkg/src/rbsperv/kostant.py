"""Kostant's decomposition of nilradical cohomology into irreducible Levi modules."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .rootsys import (RootSystem, RootSystemError, StratumId, WeylElement, act,
                      min_coset_reps)
from .weights import AnyWeight, SymWeight, integral, negate, translate


class DominanceError(ValueError):
    pass


@dataclass(frozen=True)
class KostantModule:
    w: WeylElement
    degree: int
    weight: AnyWeight
    levi: StratumId


@lru_cache(maxsize=None)
def rho_levi(R: RootSystem, J: StratumId) -> Tuple[Fraction, ...]:
    """Half the sum of the positive roots of the ``J``-subsystem."""
    total = [Fraction(0)] * R.rank
    for beta in R.positive_roots_of(J):
        total = [t + b for t, b in zip(total, beta)]
    return tuple(t / 2 for t in total)


def is_dominant(R: RootSystem, J, mu: AnyWeight) -> bool:
    """Coordinatewise dominance on the indices in ``J``.

    For a symbolic weight this holds when it is dominant for every admissible
    value of its symbol (nonnegative coefficients on the symbol's dominant
    coordinates, zero elsewhere, nonnegative constant).
    """
    if isinstance(mu, SymWeight):
        for i in J:
            row, const = mu[i - 1]
            if const < 0:
                return False
            for j, m in enumerate(row):
                if m < 0 or (m != 0 and j + 1 not in mu.domain):
                    return False
        return True
    return all(mu[i - 1] >= 0 for i in J)


def _require_dominant(R: RootSystem, J, mu: AnyWeight, what: str = "weight") -> None:
    if len(mu if not isinstance(mu, SymWeight) else mu.offset) != R.rank:
        raise DominanceError(f"{what} must have {R.rank} coordinates")
    if not is_dominant(R, J, mu):
        raise DominanceError(f"{what} {mu} is not dominant for {sorted(J)}")


def kostant_weight(R: RootSystem, w: WeylElement, T: StratumId, lam: AnyWeight) -> AnyWeight:
    """``w(lam + rho^T) - rho^T``."""
    rho = rho_levi(R, frozenset(T))
    mu = integral(translate(act(R, w, translate(lam, rho)), negate(rho)))
    if isinstance(mu, SymWeight):
        inner = lam.label or lam.symbol
        mu = mu.relabel(inner if not w.word else f"{w}({_wrap(inner)}+ρ)−ρ")
    return mu


def _wrap(label: str) -> str:
    return f"[{label}]" if any(c in label for c in "+−") else label


def kostant_modules(R: RootSystem, S, T, lam: AnyWeight) -> Tuple[KostantModule, ...]:
    """One irreducible ``L_S``-module per ``w`` in ``W_S^T``, in degree ``l(w)``."""
    S, T = frozenset(S), frozenset(T)
    if not S <= T:
        raise RootSystemError(f"{sorted(S)} is not contained in {sorted(T)}")
    _require_dominant(R, T, lam)
    return tuple(KostantModule(w, w.length, kostant_weight(R, w, T, lam), S)
                 for w in min_coset_reps(R, S, T))


def weyl_dim(R: RootSystem, J, mu: Sequence[int]) -> int:
    """Weyl dimension formula over the positive roots of the ``J``-subsystem."""
    J = frozenset(J)
    if isinstance(mu, SymWeight):
        raise TypeError("weyl_dim needs a numeric weight")
    _require_dominant(R, J, mu)
    rho = rho_levi(R, J)
    shifted = [Fraction(m) + r for m, r in zip(mu, rho)]
    num, den = Fraction(1), Fraction(1)
    for beta, coeffs in zip(R.positive_roots, R.positive_coeffs):
        if any(c and (k + 1) not in J for k, c in enumerate(coeffs)):
            continue
        num *= R.inner(shifted, coeffs)
        den *= R.inner(rho, coeffs)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)

"""Root systems, Weyl groups and parabolic coset combinatorics.

Conventions: the Cartan matrix is ``A[i][j] = <alpha_j, alpha_i^vee>``, so the
simple root ``alpha_j`` written in fundamental-weight coordinates is column
``j`` of ``A``.  Simple indices are 1-based everywhere in the public API; a
Weyl word ``(i1, ..., ik)`` stands for ``s_i1 s_i2 ... s_ik`` and acts on
weights right-to-left.

Weyl elements are identified by the image of rho, which is regular dominant
and therefore has trivial stabilizer.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .weights import SymWeight, Weight

MAX_RANK = 6

StratumId = FrozenSet[int]


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    cartan: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    simple_roots: Tuple[Weight, ...] = field(compare=False, repr=False)
    positive_roots: Tuple[Weight, ...] = field(compare=False, repr=False)
    positive_coeffs: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    norms: Tuple[Fraction, ...] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def full(self) -> StratumId:
        return frozenset(self.indices)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def roots(self) -> Tuple[Weight, ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(tuple(-x for x in b) for b in self.positive_roots)

    def alpha(self, i: int) -> Weight:
        return self.simple_roots[i - 1]

    def positive_roots_of(self, J: Iterable[int]) -> Tuple[Weight, ...]:
        """Positive roots of the subsystem spanned by the simple roots in ``J``."""
        J = set(J)
        return tuple(b for b, c in zip(self.positive_roots, self.positive_coeffs)
                     if all(c[k] == 0 for k in range(self.rank) if k + 1 not in J))

    def is_positive_root(self, beta: Sequence) -> bool:
        return tuple(beta) in self._positive_set

    @property
    def _positive_set(self):
        return _positive_set(self)

    def inner(self, mu: Sequence, beta_coeffs: Sequence[int]) -> Fraction:
        """``(mu, beta)`` for ``mu`` in fundamental-weight and ``beta`` in simple-root coordinates."""
        return sum((Fraction(m) * c * self.norms[k] / 2
                    for k, (m, c) in enumerate(zip(mu, beta_coeffs))), Fraction(0))

    def __str__(self) -> str:
        return self.type_label


@lru_cache(maxsize=None)
def _positive_set(R: RootSystem):
    return frozenset(R.positive_roots)


# Simple roots in an orthonormal ambient basis (Bourbaki numbering).

def _vec(n: int, entries: Dict[int, Fraction]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(entries.get(k, 0)) for k in range(n))


def _classical(kind: str, n: int):
    if kind == "A":
        return [_vec(n + 1, {i: 1, i + 1: -1}) for i in range(n)]
    chain = [_vec(n, {i: 1, i + 1: -1}) for i in range(n - 1)]
    if kind == "B":
        return chain + [_vec(n, {n - 1: 1})]
    if kind == "C":
        return chain + [_vec(n, {n - 1: 2})]
    return chain + [_vec(n, {n - 2: 1, n - 1: 1})]  # D


def _exceptional(kind: str, n: int):
    h = Fraction(1, 2)
    if kind == "G":
        return [_vec(3, {0: 1, 1: -1}), _vec(3, {0: -2, 1: 1, 2: 1})]
    if kind == "F":
        return [_vec(4, {1: 1, 2: -1}), _vec(4, {2: 1, 3: -1}), _vec(4, {3: 1}),
                _vec(4, {0: h, 1: -h, 2: -h, 3: -h})]
    e8 = [_vec(8, {0: h, 7: h, **{k: -h for k in range(1, 7)}}), _vec(8, {0: 1, 1: 1})]
    e8 += [_vec(8, {k: 1, k - 1: -1}) for k in range(1, 7)]
    return e8[:n]


_RANKS = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
          "G": (2, 2), "F": (4, 4), "E": (6, 8)}


def _check_label(type_label: str, max_rank: int, allow_e: bool) -> Tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", type_label or "")
    if not m:
        raise RootSystemError(f"unrecognised Cartan type {type_label!r}")
    kind, n = m.group(1).upper(), int(m.group(2))
    lo, hi = _RANKS[kind]
    if n < lo or (hi is not None and n > hi) or (kind in "GF" and n != lo):
        raise RootSystemError(f"type {kind} does not exist in rank {n}")
    if kind == "E" and not allow_e:
        raise RootSystemError("E-types are disabled (pass allow_e=True to enable)")
    if n > max_rank:
        raise RootSystemError(f"rank {n} exceeds the configured ceiling {max_rank}")
    return kind, n


@lru_cache(maxsize=None)
def build_root_system(type_label: str, max_rank: int = MAX_RANK, allow_e: bool = False) -> RootSystem:
    """Build the root system of the given Cartan type, e.g. ``"C2"``."""
    kind, n = _check_label(type_label, max_rank, allow_e)
    simple = _classical(kind, n) if kind in "ABCD" else _exceptional(kind, n)
    dot = lambda x, y: sum(a * b for a, b in zip(x, y))
    cartan = tuple(tuple(int(2 * dot(simple[j], simple[i]) / dot(simple[i], simple[i]))
                         for j in range(n)) for i in range(n))
    norms = tuple(dot(a, a) for a in simple)
    shortest = min(norms)
    norms = tuple(x / shortest * 2 for x in norms)

    # reflection closure in simple-root coordinates
    start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(start)
    todo = deque(start)
    while todo:
        c = todo.popleft()
        for i in range(n):
            pair = sum(c[j] * cartan[i][j] for j in range(n))
            d = tuple(c[k] - pair * (k == i) for k in range(n))
            if d not in seen:
                seen.add(d)
                todo.append(d)
    pos = sorted((c for c in seen if all(x >= 0 for x in c)), key=lambda c: (sum(c), c))
    to_fund = lambda c: tuple(sum(cartan[i][j] * c[j] for j in range(n)) for i in range(n))
    label = f"{kind}{n}"
    return RootSystem(
        type_label=label,
        cartan=cartan,
        simple_roots=tuple(tuple(cartan[i][j] for i in range(n)) for j in range(n)),
        positive_roots=tuple(to_fund(c) for c in pos),
        positive_coeffs=tuple(pos),
        norms=norms,
    )


def reflect(R: RootSystem, i: int, mu):
    """``s_i(mu) = mu - <mu, alpha_i^vee> alpha_i``."""
    if not 1 <= i <= R.rank:
        raise RootSystemError(f"simple index {i} out of range for {R}")
    alpha = R.alpha(i)
    if isinstance(mu, SymWeight):
        return mu.reflect(i - 1, alpha)
    c = mu[i - 1]
    return tuple(m - c * a for m, a in zip(mu, alpha))


@dataclass(frozen=True)
class WeylElement:
    key: Weight
    word: Tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def reduced_word(self) -> Tuple[int, ...]:
        return self.word

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.word) if self.word else "e"


def act(R: RootSystem, w, mu):
    """Apply a Weyl element (or a raw word) to a weight."""
    word = w.word if isinstance(w, WeylElement) else tuple(w)
    for i in reversed(word):
        mu = reflect(R, i, mu)
    return mu


def _from_key(R: RootSystem, key: Weight) -> WeylElement:
    # Peel off the smallest left descent each time: lexicographically least reduced word.
    word = []
    k = key
    while True:
        i = next((j for j in range(R.rank) if k[j] < 0), None)
        if i is None:
            break
        word.append(i + 1)
        k = reflect(R, i + 1, k)
    return WeylElement(tuple(key), tuple(word))


def element(R: RootSystem, word: Iterable[int]) -> WeylElement:
    """Weyl element of an arbitrary (not necessarily reduced) word."""
    return _from_key(R, act(R, tuple(word), R.rho))


def identity(R: RootSystem) -> WeylElement:
    return WeylElement(R.rho, ())


def multiply(R: RootSystem, u: WeylElement, v: WeylElement) -> WeylElement:
    return _from_key(R, act(R, u, v.key))


def inverse(R: RootSystem, w: WeylElement) -> WeylElement:
    return element(R, reversed(w.word))


def left_descents(R: RootSystem, w: WeylElement) -> FrozenSet[int]:
    return frozenset(i + 1 for i in range(R.rank) if w.key[i] < 0)


def support(w: WeylElement) -> FrozenSet[int]:
    return frozenset(w.word)


def _sort_key(w: WeylElement):
    return (w.length, w.word)


@lru_cache(maxsize=None)
def weyl_elements(R: RootSystem, J: FrozenSet[int] = None) -> Tuple[WeylElement, ...]:
    """All elements of the Weyl group of the ``J``-subsystem (default: all of ``W``)."""
    gens = sorted(R.full if J is None else J)
    seen = {R.rho}
    todo = deque([R.rho])
    while todo:
        k = todo.popleft()
        for i in gens:
            nk = reflect(R, i, k)
            if nk not in seen:
                seen.add(nk)
                todo.append(nk)
    return tuple(sorted((_from_key(R, k) for k in seen), key=_sort_key))


def weyl_order(R: RootSystem, J: FrozenSet[int] = None) -> int:
    return len(weyl_elements(R, J))


def root_permutation(R: RootSystem, w: WeylElement) -> Tuple[int, ...]:
    """Permutation of ``R.roots`` induced by ``w``."""
    roots = R.roots
    index = {b: k for k, b in enumerate(roots)}
    return tuple(index[act(R, w, b)] for b in roots)


def inversion_count(R: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    npos = len(R.positive_roots)
    return sum(1 for k in root_permutation(R, w)[:npos] if k >= npos)


def _subset(R: RootSystem, I) -> FrozenSet[int]:
    I = frozenset(I)
    if not I <= R.full:
        raise RootSystemError(f"{sorted(I)} is not a set of simple indices of {R}")
    return I


def is_min_rep(R: RootSystem, w: WeylElement, I, J) -> bool:
    """``w`` lies in ``W_J`` and ``w^{-1}(alpha_i) > 0`` for all ``i`` in ``I``."""
    return support(w) <= frozenset(J) and all(w.key[i - 1] > 0 for i in I)


@lru_cache(maxsize=None)
def _min_coset_reps(R: RootSystem, I: FrozenSet[int], J: FrozenSet[int]):
    return tuple(w for w in weyl_elements(R, J) if all(w.key[i - 1] > 0 for i in I))


def min_coset_reps(R: RootSystem, I, J) -> Tuple[WeylElement, ...]:
    """The minimal-length representatives of ``W_I \\ W_J``, sorted by (length, word)."""
    I, J = _subset(R, I), _subset(R, J)
    if not I <= J:
        raise RootSystemError(f"{sorted(I)} is not contained in {sorted(J)}")
    return _min_coset_reps(R, I, J)


def decompose_at(R: RootSystem, w: WeylElement, I, K, J) -> Tuple[WeylElement, WeylElement]:
    """Factor ``w`` in ``W_I^J`` as ``upper * lower`` with upper in ``W_I^K``, lower in ``W_K^J``."""
    I, K, J = _subset(R, I), _subset(R, K), _subset(R, J)
    if not (I <= K <= J):
        raise RootSystemError("decompose_at needs I <= K <= J")
    if not is_min_rep(R, w, I, J):
        raise RootSystemError(f"{w} is not a minimal coset representative for ({sorted(I)}, {sorted(J)})")
    lower, upper = _split(R, w, K)
    if not is_min_rep(R, upper, I, K) or upper.length + lower.length != w.length:
        raise AssertionError(f"coset factorisation of {w} at {sorted(K)} failed")
    return upper, lower


def _split(R: RootSystem, w: WeylElement, K: FrozenSet[int]):
    key = w.key
    word = []
    while True:
        i = next((j for j in sorted(K) if key[j - 1] < 0), None)
        if i is None:
            break
        word.append(i)
        key = reflect(R, i, key)
    lower = _from_key(R, key)
    upper = element(R, word)
    return lower, upper


def relative_length(R: RootSystem, w: WeylElement, K) -> int:
    """``l_K(w)``: the length of the ``W_K\\W`` minimal representative of ``W_K w``."""
    return _split(R, w, frozenset(K))[0].length


def format_word(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) if word else "e"


def parse_word(R: RootSystem, text: str) -> WeylElement:
    text = text.strip()
    if text in ("", "e", "1"):
        return identity(R)
    if not re.fullmatch(r"(s\d+)+", text):
        raise RootSystemError(f"cannot parse Weyl word {text!r}")
    return element(R, [int(x) for x in re.findall(r"s(\d+)", text)])

"""Index combinatorics: vectors, compositions, permutations and diagram statistics.

Vectors and compositions are plain tuples of ints.  Permutations act on
vectors by ``(w v)_i = v_{w^{-1}(i)}``, so ``s_i`` swaps entries i and i+1
and ``w0`` reverses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactalg import FieldElem, Point

__all__ = [
    "Permutation", "k_stat", "bar_point", "tilde_point", "sort_shortest",
    "natural_shift", "diagram_stats", "scalar_stats", "ScalarStats",
    "enumerate_compositions", "compositions_upto", "partitions", "containment",
    "parse_vector", "format_vector", "inv_count", "ell_w0", "vectors_in_box",
    "min_shift", "add_constant",
]


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse the comma-separated CLI grammar, e.g. ``"2,0,-1"``."""
    try:
        v = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError(f"malformed index vector {text!r}") from None
    if not v:
        raise ValueError("empty index vector")
    return v


def format_vector(v) -> str:
    return ",".join(str(k) for k in v)


def is_composition(v) -> bool:
    return all(k >= 0 for k in v)


def add_constant(v, m: int) -> tuple[int, ...]:
    return tuple(k + m for k in v)


def min_shift(v) -> int:
    """Smallest m >= 0 with v + (m^n) a composition."""
    return max(0, -min(v))


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation (w(1), ..., w(n))."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.one_line)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, n: int, word) -> "Permutation":
        """The product s_{i_1} s_{i_2} ... s_{i_l}."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(n, i)
        return w

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (uv)(j) = u(v(j))
        return Permutation(tuple(self.one_line[j - 1] for j in other.one_line))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, w in enumerate(self.one_line, 1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    @property
    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    @property
    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
        if self.one_line == tuple(range(self.n, 0, -1)):
            return w0_word(self.n)
        w = list(self.one_line)
        found = []
        changed = True
        while changed:
            changed = False
            for i in range(self.n - 1):
                if w[i] > w[i + 1]:
                    # w -> w s_{i+1} drops the length by one
                    w[i], w[i + 1] = w[i + 1], w[i]
                    found.append(i + 1)
                    changed = True
        return tuple(reversed(found))

    def act(self, v) -> tuple:
        """(w v)_i = v_{w^{-1}(i)}."""
        out = [None] * self.n
        for j, wj in enumerate(self.one_line):
            out[wj - 1] = v[j]
        return tuple(out)


@lru_cache(maxsize=None)
def w0_word(n: int) -> tuple[int, ...]:
    """The fixed reduced word (s_1)(s_2 s_1)...(s_{n-1}...s_1) for w0."""
    word = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return tuple(word)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def ell_w0(n: int) -> int:
    return n * (n - 1) // 2


def k_stat(v, i: int) -> int:
    """k_i(v) = #{k < i : v_k >= v_i} + #{k > i : v_k > v_i}, 1-based i."""
    vi = v[i - 1]
    return (sum(1 for k in range(i - 1) if v[k] >= vi)
            + sum(1 for k in range(i, len(v)) if v[k] > vi))


@lru_cache(maxsize=None)
def _bar(v: tuple) -> Point:
    return Point.from_monomials((1, v[i], -k_stat(v, i + 1), 0) for i in range(len(v)))


def bar_point(v) -> Point:
    """v-bar with coordinates q^{v_i} t^{-k_i(v)}."""
    return _bar(tuple(v))


def tilde_point(v) -> Point:
    """v-tilde = bar(-w0 v)."""
    return _bar(tuple(-k for k in reversed(tuple(v))))


def sort_shortest(v) -> tuple[tuple[int, ...], Permutation]:
    """(v_plus, w_v): v_plus non-increasing, w_v shortest with w_v(v_plus) = v."""
    v = tuple(v)
    order = sorted(range(len(v)), key=lambda i: -v[i])
    vplus = tuple(v[i] for i in order)
    w = Permutation(tuple(i + 1 for i in order))
    return vplus, w


def natural_shift(v, direction: str = "raise") -> tuple[int, ...]:
    """raise: (v_2, ..., v_n, v_1 + 1); lower: (v_n - 1, v_1, ..., v_{n-1})."""
    v = tuple(v)
    if direction == "raise":
        return v[1:] + (v[0] + 1,)
    if direction == "lower":
        return (v[-1] - 1,) + v[:-1]
    raise ValueError(f"unknown direction {direction!r}")


def cells(alpha):
    """Cells (i, j) of the diagram, 1-based, row i holding alpha_i boxes."""
    return [(i, j) for i, ai in enumerate(alpha, 1) for j in range(1, ai + 1)]


def diagram_stats(alpha) -> dict[tuple[int, int], tuple[int, int, int, int]]:
    """Map each cell to (arm, leg, coarm, coleg)."""
    alpha = tuple(alpha)
    n = len(alpha)
    out = {}
    for i, j in cells(alpha):
        ai = alpha[i - 1]
        arm = ai - j
        leg = (sum(1 for k in range(i + 1, n + 1) if j <= alpha[k - 1] <= ai)
               + sum(1 for k in range(1, i) if j <= alpha[k - 1] + 1 <= ai))
        coarm = j - 1
        coleg = (sum(1 for k in range(i + 1, n + 1) if alpha[k - 1] > ai)
                 + sum(1 for k in range(1, i) if alpha[k - 1] >= ai))
        out[(i, j)] = (arm, leg, coarm, coleg)
    return out


def inv_count(v) -> int:
    """I(v) = #{i < j : v_i >= v_j}."""
    v = tuple(v)
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] >= v[j])


@dataclass(frozen=True)
class ScalarStats:
    I: int
    n_stat: int
    nprime: int
    tau_alpha: FieldElem


def n_stat(alpha) -> int:
    return sum(s[1] for s in diagram_stats(alpha).values())


def nprime_stat(alpha) -> int:
    return sum(s[0] for s in diagram_stats(alpha).values())


def scalar_stats(alpha) -> ScalarStats:
    alpha = tuple(alpha)
    plus = tuple(sorted(alpha, reverse=True))
    nprime = nprime_stat(alpha)
    assert nprime == sum(comb(k, 2) for k in alpha)
    tau = FieldElem.monomial(nprime, -n_stat(plus), 0, (-1) ** sum(alpha))
    return ScalarStats(inv_count(alpha), n_stat(alpha), nprime, tau)


def tau_alpha(alpha) -> FieldElem:
    return scalar_stats(alpha).tau_alpha


def enumerate_compositions(n: int, d: int) -> list[tuple[int, ...]]:
    """All compositions of weight d with n parts, lexicographically descending."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in enumerate_compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def compositions_upto(n: int, d: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    out = []
    for k in range(d + 1):
        out.extend(c for c in enumerate_compositions(n, k)
                   if max_part is None or max(c) <= max_part)
    return out


def partitions(n: int, d: int) -> list[tuple[int, ...]]:
    """Partitions of weight d with at most n parts, padded to length n."""
    return [c for c in enumerate_compositions(n, d)
            if all(c[i] >= c[i + 1] for i in range(n - 1))]


def containment(beta, alpha) -> bool:
    """beta is contained in alpha: beta_i <= alpha_i for all i."""
    return all(b <= a for b, a in zip(beta, alpha))


def vectors_in_box(n: int, lo: int, hi: int, max_weight: int | None = None):
    """All v in {lo..hi}^n whose minimal shift to a composition has weight <= max_weight."""
    out = []
    for v in itertools.product(range(lo, hi + 1), repeat=n):
        if max_weight is None or sum(v) + n * min_shift(v) <= max_weight:
            out.append(tuple(v))
    return out

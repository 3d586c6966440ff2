"""Demazure-Lusztig operators and the operators built from them.

Every operator accepts an ``XPoly`` (polynomial or Laurent) or an
``XRational``.  Products are read as operator composition: for a word
(i_1, ..., i_l), ``apply_Hw`` applies H_{i_l} first and H_{i_1} last.

The ``inverted`` flag of ``OperatorVariant`` gives the operators with q, t
replaced by q^{-1}, t^{-1}; ``bar`` gives Hbar_i = H_i + 1 - t = t H_i^{-1}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combin import Permutation, all_permutations, bar_point, natural_shift, w0_word
from .exactalg import ONE, Q, T, A, FieldElem, XPoly, XRational, divided_difference, fe
from .report import IdentityReport, timed

__all__ = [
    "OperatorVariant", "STANDARD", "CIRC", "BAR", "CIRC_BAR",
    "apply_s", "apply_w", "apply_H", "apply_H_inverse", "apply_Hw", "apply_Hperm",
    "apply_Delta", "apply_Phi", "apply_xi", "apply_Xi", "apply_Cplus",
    "apply_Psi", "apply_J", "FamilyTable", "SupportError", "hat_apply",
    "hat_table", "verify_hecke_relations",
]


@dataclass(frozen=True)
class OperatorVariant:
    inverted: bool = False
    bar: bool = False

    @property
    def t_exp(self) -> int:
        return -1 if self.inverted else 1


STANDARD = OperatorVariant()
CIRC = OperatorVariant(inverted=True)
BAR = OperatorVariant(bar=True)
CIRC_BAR = OperatorVariant(inverted=True, bar=True)


def _unit(n, i):
    e = [0] * n
    e[i - 1] = 1
    return tuple(e)


def apply_s(i: int, p):
    if not 1 <= i < p.n:
        raise ValueError(f"s_{i} undefined for n={p.n}")
    return p.swap(i)


def apply_w(w: Permutation, p):
    """Permute variables: x^e -> x^{w e}."""
    target = [w(j + 1) - 1 for j in range(p.n)]
    return p.permute(target)


def _H_poly(i: int, f: XPoly, variant: OperatorVariant) -> XPoly:
    # H_i f = t f - (x_i - t x_{i+1}) d_i f ;  Hbar_i f = f - (x_i - t x_{i+1}) d_i f
    te = variant.t_exp
    lead = (0, 0, 0) if variant.bar else (0, te, 0)
    acc: dict = {}
    for e, c in f.terms.items():
        acc.setdefault(e, []).append((c, 1, lead))
    d = divided_difference(f, i)
    ui, uj = _unit(f.n, i), _unit(f.n, i + 1)
    for e, c in d.terms.items():
        acc.setdefault(tuple(a + b for a, b in zip(e, ui)), []).append((c, -1, (0, 0, 0)))
        acc.setdefault(tuple(a + b for a, b in zip(e, uj)), []).append((c, 1, (0, te, 0)))
    return XPoly.from_accumulator(f.n, acc, f.laurent)


def apply_H(i: int, p, variant: OperatorVariant = STANDARD):
    """Demazure-Lusztig operator H_i (or its variants) on p."""
    if not 1 <= i < p.n:
        raise ValueError(f"H_{i} undefined for n={p.n}")
    if isinstance(p, XPoly):
        return _H_poly(i, p, variant)
    num, den = p.num, p.den
    sden = den.swap(i)
    if sden == den:
        return XRational(_H_poly(i, num, variant), den)
    # d_i(N/D) = d_i(N * s_i D) / (D * s_i D)
    prod = num * sden
    dd = divided_difference(prod, i)
    tcoef = ONE if variant.bar else T ** variant.t_exp
    lin = XPoly.var(p.n, i) - XPoly.var(p.n, i + 1) * (T ** variant.t_exp)
    new_num = prod * tcoef - lin * dd
    return XRational(new_num, den * sden)


def apply_H_inverse(i: int, p, variant: OperatorVariant = STANDARD):
    """H_i^{-1} = t^{-1} Hbar_i (with t -> t^{-1} for the inverted variant)."""
    inv = OperatorVariant(inverted=variant.inverted, bar=True)
    return apply_H(i, p, inv) * (T ** (-variant.t_exp))


def apply_Hw(word, p, variant: OperatorVariant = STANDARD):
    """H_{i_1} ... H_{i_l} for a reduced word (i_1, ..., i_l)."""
    word = tuple(word)
    if word and Permutation.from_word(p.n, word).length != len(word):
        raise ValueError(f"word {word} is not reduced")
    for i in reversed(word):
        p = apply_H(i, p, variant)
    return p


def apply_Hperm(w: Permutation, p, variant: OperatorVariant = STANDARD):
    return apply_Hw(w.reduced_word, p, variant)


def apply_Delta(p, variant: OperatorVariant = STANDARD, inverse: bool = False):
    """Delta f(x) = f(q^{-1} x_n, x_1, ..., x_{n-1}); the inverted variant uses q."""
    n = p.n
    qq = Q if variant.inverted else Q.inverse()
    if not inverse:
        target = [n - 1] + list(range(n - 1))
        scalars = [qq] + [ONE] * (n - 1)
    else:
        target = list(range(1, n)) + [0]
        scalars = [ONE] * (n - 1) + [qq.inverse()]
    return p.change_vars(target, scalars)


def apply_Phi(p):
    """Phi = (x_n - t^{1-n}) Delta."""
    n = p.n
    lin = XPoly.var(n, n) - T ** (1 - n)
    return apply_Delta(p) * lin


def apply_xi(i: int, p, inverse: bool = False, variant: OperatorVariant = STANDARD):
    """Cherednik operator xi_i (or xi_i^{-1})."""
    n = p.n
    if not 1 <= i <= n:
        raise ValueError(f"xi_{i} undefined for n={n}")
    plain = OperatorVariant(inverted=variant.inverted)
    barv = OperatorVariant(inverted=variant.inverted, bar=True)
    if not inverse:
        # t^{1-n} Hbar_{i-1}...Hbar_1 Delta^{-1} H_{n-1}...H_i
        for k in range(i, n):
            p = apply_H(k, p, plain)
        p = apply_Delta(p, plain, inverse=True)
        for k in range(1, i):
            p = apply_H(k, p, barv)
        return p * (T ** ((1 - n) * variant.t_exp))
    # Hbar_i...Hbar_{n-1} Delta H_1...H_{i-1}
    for k in range(i - 1, 0, -1):
        p = apply_H(k, p, plain)
    p = apply_Delta(p, plain)
    for k in range(n - 1, i - 1, -1):
        p = apply_H(k, p, barv)
    return p


def apply_Xi(j: int, p):
    """Inhomogeneous Cherednik operator 1/x_j + (1/x_j) H_j...H_{n-1} Phi H_1...H_{j-1}."""
    n = p.n
    if not 1 <= j <= n:
        raise ValueError(f"Xi_{j} undefined for n={n}")
    g = p
    for k in range(j - 1, 0, -1):
        g = apply_H(k, g)
    g = apply_Phi(g)
    for k in range(n - 1, j - 1, -1):
        g = apply_H(k, g)
    s = p + g
    if isinstance(s, XRational):
        return XRational(s.num, s.den * XPoly.var(n, j))
    if not s.laurent and any(e[j - 1] == 0 for e in s.terms):
        raise ArithmeticError(f"Xi_{j}: singular 1/x_{j} part did not cancel")
    return s.shift(tuple(-1 if k == j - 1 else 0 for k in range(n)))


def apply_Cplus(p, variant: OperatorVariant = STANDARD):
    """C_+ = sum over S_n of H_w."""
    total = None
    for w in all_permutations(p.n):
        term = apply_Hperm(w, p, variant)
        total = term if total is None else total + term
    return total


def apply_Psi(p):
    """Psi = w0 H_{w0}^circ."""
    return apply_Hw(w0_word(p.n), p, CIRC).reverse()


def apply_J(p):
    """(J f)(x) = f(x_1^{-1}, ..., x_n^{-1})."""
    return p.invert_vars()


# ---------------------------------------------------------------------------
# finitely supported functions on Z^n and the hat-operators


class SupportError(KeyError):
    """Lookup outside the explicit support of a FamilyTable."""


class FamilyTable:
    """A function on a finite subset of Z^n, valued in K, K[x] or K(x)."""

    def __init__(self, values: dict):
        self._values = {tuple(v): f for v, f in values.items()}

    @classmethod
    def from_function(cls, fn, domain) -> "FamilyTable":
        return cls({tuple(v): fn(tuple(v)) for v in domain})

    def __getitem__(self, v):
        v = tuple(v)
        try:
            return self._values[v]
        except KeyError:
            raise SupportError(f"index {v} outside table support") from None

    def __contains__(self, v):
        return tuple(v) in self._values

    @property
    def support(self):
        return tuple(self._values)

    def __len__(self):
        return len(self._values)


def _hat_H_coeff(v, i, inverted=False):
    b = bar_point(v)
    bi, bj = b[i - 1], b[i]
    tt = T
    if inverted:
        bi, bj, tt = bi.inverse(), bj.inverse(), T.inverse()
    return (bi - tt * bj) / (bi - bj), tt


def hat_apply(op: str, f: FamilyTable, v, index: int | None = None, inverted: bool = False):
    """Evaluate (hat-op f)(v) for op in H, Delta, Delta_inv, x, x_inv."""
    v = tuple(v)
    n = len(v)
    if op == "H":
        if not 1 <= index < n:
            raise ValueError(f"H_{index} undefined for n={n}")
        tt = T.inverse() if inverted else T
        if v[index - 1] == v[index]:
            return f[v] * tt
        coeff, tt = _hat_H_coeff(v, index, inverted)
        sv = list(v)
        sv[index - 1], sv[index] = sv[index], sv[index - 1]
        fv = f[v]
        return fv * tt + (f[tuple(sv)] - fv) * coeff
    if op == "Delta":
        return f[natural_shift(v, "lower")]
    if op == "Delta_inv":
        return f[natural_shift(v, "raise")]
    if op in ("x", "x_inv"):
        if not 1 <= index <= n:
            raise ValueError(f"x_{index} undefined for n={n}")
        c = A * bar_point(v)[index - 1]
        return f[v] * (c if op == "x" else c.inverse())
    raise ValueError(f"unknown hat operator {op!r}")


def hat_table(op: str, f: FamilyTable, domain, index: int | None = None,
              inverted: bool = False) -> FamilyTable:
    return FamilyTable({tuple(v): hat_apply(op, f, v, index, inverted) for v in domain})


# ---------------------------------------------------------------------------
# relation sweep


def _monomials(n, max_degree):
    for e in itertools.product(range(max_degree + 1), repeat=n):
        if sum(e) <= max_degree:
            yield e


def verify_hecke_relations(n: int, max_degree: int) -> IdentityReport:
    """Check the extended affine Hecke relations on all monomials of bounded degree."""
    if n < 2:
        raise ValueError("Hecke relations need n >= 2")
    rep = IdentityReport("hecke-relations", {"n": n, "max_degree": max_degree})
    with timed(rep):
        for e in _monomials(n, max_degree):
            m = XPoly.monomial(e)
            for i in range(1, n):
                h = apply_H(i, m)
                lhs = apply_H(i, h) + h * (1 - T) - m * T
                rep.record(lhs.is_zero(), {"relation": "quadratic", "i": i, "monomial": e},
                           lhs, 0)
            for i in range(1, n):
                for j in range(i + 2, n):
                    lhs = apply_H(i, apply_H(j, m))
                    rhs = apply_H(j, apply_H(i, m))
                    rep.record(lhs == rhs, {"relation": "commute", "i": i, "j": j,
                                            "monomial": e}, lhs, rhs)
            for i in range(1, n - 1):
                lhs = apply_H(i, apply_H(i + 1, apply_H(i, m)))
                rhs = apply_H(i + 1, apply_H(i, apply_H(i + 1, m)))
                rep.record(lhs == rhs, {"relation": "braid", "i": i, "monomial": e}, lhs, rhs)
            for i in range(1, n - 1):
                lhs = apply_Delta(apply_H(i + 1, m))
                rhs = apply_H(i, apply_Delta(m))
                rep.record(lhs == rhs, {"relation": "delta-shift", "i": i, "monomial": e},
                           lhs, rhs)
            lhs = apply_Delta(apply_Delta(apply_H(1, m)))
            rhs = apply_H(n - 1, apply_Delta(apply_Delta(m)))
            rep.record(lhs == rhs, {"relation": "delta-square", "monomial": e}, lhs, rhs)
    return rep

"""Constructors for the polynomial families.

Index vectors are tuples of ints; the number of variables is their length.
Polynomial families return ``XPoly``.  Members that live in K(x) (negative
degrees, and the primed family built from them) return ``XRational`` with
the displayed product denominator kept as-is.
"""
from __future__ import annotations

import enum
import json
import os
import threading
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .combin import (
    add_constant, all_permutations, bar_point, diagram_stats, enumerate_compositions,
    ell_w0, inv_count, is_composition, min_shift, natural_shift, tilde_point,
)
from .exactalg import (
    A, ONE, Q, T, ZERO, FieldElem, Point, XPoly, XRational, fe, fsum, pochhammer,
)
from .heckeops import apply_Cplus, apply_H, apply_Phi, apply_Psi

__all__ = [
    "Family", "FamilyTag", "FamilyCache", "CACHE", "tau_point", "a_tau",
    "monomials_upto", "solve_linear", "interpolate",
    "G_interpolation", "G_recursive", "G", "G_circ", "E_alpha", "E_family",
    "G_eval_product", "E_eval_product", "G_family", "K_family", "K_circ",
    "A_factor", "G_prime", "K_prime", "O_alpha", "Kbar_family", "R_lambda",
    "K_plus", "binom", "member", "member_to_dict", "member_from_dict",
]


class Family(enum.Enum):
    E = "E"
    G = "G"
    Gprime = "Gprime"
    K = "K"
    Kprime = "Kprime"
    Kbar = "Kbar"
    O = "O"
    R = "R"
    Kplus = "Kplus"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    inverted: bool = False

    def __post_init__(self):
        if self.inverted and self.family not in (Family.E, Family.G, Family.K):
            raise ValueError(f"no circ version of {self.family.value}")

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        inverted = text.endswith("circ") or text.endswith("°")
        base = text.removesuffix("circ").removesuffix("°").removesuffix("_")
        try:
            return cls(Family(base), inverted)
        except ValueError:
            raise ValueError(f"unknown family {text!r}") from None

    def __str__(self):
        return self.family.value + ("circ" if self.inverted else "")


# ---------------------------------------------------------------------------
# cache


def _encode(value) -> dict:
    if isinstance(value, XRational):
        num, den = value.num, value.den
    else:
        num, den = value, XPoly.const(value.n, 1)
    return {"n": num.n, "numerator_terms": num.to_terms(),
            "denominator_terms": den.to_terms(), "rational": isinstance(value, XRational)}


def _decode(d: dict):
    num = XPoly.from_terms(d["n"], d["numerator_terms"])
    den = XPoly.from_terms(d["n"], d["denominator_terms"])
    return XRational(num, den) if d["rational"] else num


class FamilyCache:
    """Get-or-compute map keyed by (name, index).

    Racing threads may both compute a value; the first stored one wins and
    both are equal, so nothing is lost.  With ``directory`` set, members are
    also written to and read from JSON files there.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.directory = Path(directory) if directory else None
        if self.directory:
            self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key):
        name, index = key
        return self.directory / f"{name}_{'_'.join(map(str, index)) or 'empty'}.json"

    def get_or_compute(self, key, fn):
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = None
        if self.directory and self._path(key).exists():
            value = _decode(json.loads(self._path(key).read_text(encoding="utf-8")))
        if value is None:
            value = fn()
            if self.directory:
                tmp = self._path(key).with_suffix(".tmp")
                tmp.write_text(json.dumps(_encode(value), sort_keys=True), encoding="utf-8")
                os.replace(tmp, self._path(key))
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data


CACHE = FamilyCache(os.environ.get("MACINTERP_CACHE_DIR") or None)


def _cached(name):
    def deco(fn):
        def wrapper(v, *args):
            v = tuple(v)
            return CACHE.get_or_compute((name, v) if not args else (name + repr(args), v),
                                        lambda: fn(v, *args))
        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        wrapper.uncached = fn
        return wrapper
    return deco


# ---------------------------------------------------------------------------
# points and linear algebra


def tau_point(n: int) -> Point:
    return bar_point((0,) * n)


def a_tau(n: int) -> Point:
    return tau_point(n).scale(A)


def monomials_upto(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponents of degree <= d, in graded-lex order (degree first)."""
    out = []
    for k in range(d + 1):
        out.extend(enumerate_compositions(n, k))
    return out


def solve_linear(rows: list[list[FieldElem]], rhs: list[FieldElem]) -> list[FieldElem]:
    """Gaussian elimination over the field; pivot on the first nonzero entry."""
    size = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not m[r][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError("singular interpolation system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        prow = [c * inv for c in m[col]]
        m[col] = prow
        for r in range(size):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y if not y.is_zero() else x for x, y in zip(m[r], prow)]
    return [m[r][size] for r in range(size)]


def _power(pt: Point, e) -> FieldElem:
    return XPoly.monomial(e).substitute(pt)


def interpolate(n: int, unknowns, points, fixed: XPoly | None = None) -> XPoly:
    """The polynomial fixed + sum c_e x^e (e in unknowns) vanishing at every point."""
    unknowns = list(unknowns)
    points = list(points)
    if len(points) != len(unknowns):
        raise ValueError("interpolation system is not square")
    rows = [[_power(p, e) for e in unknowns] for p in points]
    rhs = [-(fixed.substitute(p)) if fixed is not None else ZERO for p in points]
    sol = solve_linear(rows, rhs) if unknowns else []
    out = fixed if fixed is not None else XPoly(n)
    return out + XPoly(n, dict(zip(unknowns, sol)))


# ---------------------------------------------------------------------------
# G and E


def _check_composition(alpha):
    alpha = tuple(alpha)
    if not alpha or not is_composition(alpha):
        raise ValueError(f"{alpha} is not a composition")
    return alpha


@_cached("Ginterp")
def G_interpolation(alpha) -> XPoly:
    """G_alpha from its vanishing conditions, by a linear solve."""
    alpha = _check_composition(alpha)
    n, d = len(alpha), sum(alpha)
    unknowns = [e for e in monomials_upto(n, d) if e != alpha]
    points = [bar_point(b) for b in monomials_upto(n, d) if b != alpha]
    return interpolate(n, unknowns, points, XPoly.monomial(alpha))


@_cached("G")
def G_recursive(alpha) -> XPoly:
    """G_alpha through the raising and exchange recursions."""
    alpha = _check_composition(alpha)
    n = len(alpha)
    if not any(alpha):
        return XPoly.const(n, 1)
    i = next((k for k in range(n - 1) if alpha[k] > alpha[k + 1]), None)
    if i is None:
        gamma = natural_shift(alpha, "lower")
        return apply_Phi(G_recursive(gamma)) * Q ** gamma[0]
    beta = list(alpha)
    beta[i], beta[i + 1] = beta[i + 1], beta[i]
    beta = tuple(beta)
    gb = G_recursive(beta)
    b = bar_point(beta)
    coeff = (T - 1) * b[i] / (b[i] - b[i + 1])
    return apply_H(i + 1, gb) - gb * coeff


def G(alpha) -> XPoly:
    return G_recursive(alpha)


@_cached("Gcirc")
def G_circ(alpha) -> XPoly:
    return G(alpha).iota()


def E_alpha(alpha) -> XPoly:
    """Top homogeneous component of G_alpha."""
    alpha = _check_composition(alpha)
    return G(alpha).homogeneous_part(sum(alpha))


@_cached("E")
def E_family(v) -> XPoly:
    """E_v for any integral v, a Laurent polynomial when v has negative entries."""
    m = min_shift(v)
    e = E_alpha(add_constant(v, m))
    if m == 0:
        return e
    return e.shift((-m,) * len(v))


def G_eval_product(alpha) -> FieldElem:
    """G_alpha(a tau) from the product over cells."""
    alpha = _check_composition(alpha)
    n = len(alpha)
    out = ONE
    for arm, leg, coarm, coleg in diagram_stats(alpha).values():
        num = T ** (1 - n) - Q ** (coarm + 1) * T ** (1 - coleg)
        den = 1 - Q ** (arm + 1) * T ** (leg + 1)
        out = out * num / den * (A * T ** coleg - Q ** coarm)
    return out


def E_eval_product(alpha) -> FieldElem:
    """E_alpha(tau) from the product over cells."""
    alpha = _check_composition(alpha)
    n = len(alpha)
    out = ONE
    for arm, leg, coarm, coleg in diagram_stats(alpha).values():
        out = out * (T ** (1 - n + coleg) - Q ** (coarm + 1) * T) \
            / (1 - Q ** (arm + 1) * T ** (leg + 1))
    return out


# ---------------------------------------------------------------------------
# normalized and negative-degree families


def _x_pochhammer_product(n: int, c: FieldElem, m: int, base=None) -> XPoly:
    """prod_i (c x_i; base)_m."""
    out = XPoly.const(n, 1)
    for i in range(1, n + 1):
        out = out * pochhammer(XPoly.var(n, i) * c, m, base)
    return out


@_cached("Gv")
def G_family(v):
    """G_v for any integral v; an XRational when v has negative entries."""
    v = tuple(v)
    n, m = len(v), min_shift(v)
    if m == 0:
        return G(v)
    num = G(add_constant(v, m)).scale_vars(Q ** m) * Q ** (-m * sum(v) - m * m * n)
    # x_i^m (q^{-m} t^{1-n} x_i^{-1}; q)_m = prod_j (x_i - q^{j-m} t^{1-n})
    den = XPoly.const(n, 1)
    for i in range(1, n + 1):
        for j in range(m):
            den = den * (XPoly.var(n, i) - Q ** (j - m) * T ** (1 - n))
    return XRational(num, den)


def A_factor(v, m: int) -> XRational:
    """A_m(x; v) = prod_i (q^{1-m} a vbar_i^{-1}; q)_m / (q t^{n-1} x_i; q)_m."""
    v = tuple(v)
    n = len(v)
    b = bar_point(v)
    c = ONE
    for i in range(n):
        c = c * pochhammer(Q ** (1 - m) * A * b[i].inverse(), m)
    return XRational(XPoly.const(n, c), _x_pochhammer_product(n, Q * T ** (n - 1), m))


def K_family_shift(v, m: int):
    """K_v from Definition-style shift by (m^n); m must make v + (m^n) a composition."""
    v = tuple(v)
    if m < min_shift(v):
        raise ValueError(f"shift {m} too small for {v}")
    if m == 0:
        return K_family(v)
    kk = K_family(add_constant(v, m)).scale_vars(Q ** m)
    af = A_factor(v, m)
    return XRational(kk * af.num.coefficient((0,) * len(v)), af.den)


@_cached("K")
def K_family(v):
    """K_v: G_v/G_v(a tau) for compositions, shifted definition otherwise."""
    v = tuple(v)
    if is_composition(v):
        g = G(v)
        return g / g.substitute(a_tau(len(v)))
    return K_family_shift(v, min_shift(v))


@_cached("Kcirc")
def K_circ(v):
    return K_family(v).iota()


def G_prime(alpha) -> XPoly:
    """G'_alpha = t^{(1-n)|alpha| + I(alpha)} Psi G_alpha^circ(t^{n-1} x)."""
    alpha = _check_composition(alpha)
    n = len(alpha)
    g = G_circ(alpha).scale_vars(T ** (n - 1))
    return apply_Psi(g) * T ** ((1 - n) * sum(alpha) + inv_count(alpha))


@_cached("Kprime")
def K_prime(v):
    """K'_v = t^{l(w0)} Psi K_v^circ(t^{n-1} x)."""
    v = tuple(v)
    n = len(v)
    k = K_circ(v).scale_vars(T ** (n - 1))
    return apply_Psi(k) * T ** ell_w0(n)


def O_alpha(alpha) -> XPoly:
    """O_alpha(x) = K_alpha(t^{1-n} a w0 x)."""
    alpha = _check_composition(alpha)
    n = len(alpha)
    c = T ** (1 - n) * A
    return K_family(alpha).change_vars([n - 1 - i for i in range(n)], [c] * n)


@_cached("Kbar")
def Kbar_family(v) -> XPoly:
    """Kbar_v = E_v / E_v(tau), a Laurent polynomial."""
    e = E_family(v)
    return e / e.substitute(tau_point(len(v)))


@_cached("R")
def R_lambda(lam) -> XPoly:
    """Symmetric interpolation polynomial: C_+ G_lambda made monic at x^lambda."""
    lam = _check_composition(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    c = apply_Cplus(G(lam))
    return c / c.coefficient(lam)


def K_plus(lam) -> XPoly:
    r = R_lambda(lam)
    return r / r.substitute(a_tau(len(lam)))


def binom(alpha, beta, inverted: bool = False) -> FieldElem:
    """Generalized binomial coefficient G_beta(alpha-bar)/G_beta(beta-bar).

    The inverted version evaluates G_beta^circ at the inverted points.
    """
    alpha, beta = _check_composition(alpha), _check_composition(beta)
    if inverted:
        g = G_circ(beta)
        return g.substitute(bar_point(alpha).inverse()) / g.substitute(bar_point(beta).inverse())
    g = G(beta)
    return g.substitute(bar_point(alpha)) / g.substitute(bar_point(beta))


# ---------------------------------------------------------------------------
# dispatch and serialization


def member(tag: FamilyTag | str, index):
    """The family member for a tag and an index vector."""
    if isinstance(tag, str):
        tag = FamilyTag.parse(tag)
    index = tuple(index)
    f = tag.family
    if f is Family.G:
        p = G_family(index)
    elif f is Family.E:
        p = E_family(index)
    elif f is Family.K:
        p = K_family(index)
    elif f is Family.Gprime:
        p = G_prime(index)
    elif f is Family.Kprime:
        p = K_prime(index)
    elif f is Family.Kbar:
        p = Kbar_family(index)
    elif f is Family.O:
        p = O_alpha(index)
    elif f is Family.R:
        p = R_lambda(index)
    else:
        p = K_plus(index)
    return p.iota() if tag.inverted else p


def member_to_dict(tag, index, value) -> dict:
    d = _encode(value)
    return {"family": str(tag), "n": d["n"], "index": list(index),
            "numerator_terms": d["numerator_terms"],
            "denominator_terms": d["denominator_terms"]}


def member_from_dict(d: dict):
    num = XPoly.from_terms(d["n"], d["numerator_terms"])
    den = XPoly.from_terms(d["n"], d["denominator_terms"])
    if den == XPoly.const(d["n"], 1):
        return num
    return XRational(num, den)

"""Exact arithmetic over K = Q(q, t, a) and polynomials in x_1..x_n over K.

Parameter polynomials are flint ``fmpz_mpoly`` objects over Z[a, t, q]; a
field element is a reduced fraction of two of them.  Negative parameter
exponents never appear inside a polynomial: a Laurent monomial is folded into
the denominator, so ``num/den`` with ``gcd(num, den) = 1`` and a positive
leading denominator coefficient is a unique representative.

x-polynomials are plain dicts from exponent tuples to ``FieldElem``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint

__all__ = [
    "FieldElem", "FieldDivisionByZero", "XPoly", "XRational", "Point",
    "Q", "T", "A", "ONE", "ZERO", "fe", "mono", "fsum", "pochhammer",
    "divided_difference", "poly_substitute", "field_arith",
]

# Generator order (a, t, q) with deglex makes flint's leading term the
# leading term for the graded-lex order with q < t < a.
_CTX = flint.fmpz_mpoly_ctx.get(("a", "t", "q"), "deglex")
_P0 = _CTX.constant(0)
_P1 = _CTX.constant(1)


class FieldDivisionByZero(ZeroDivisionError):
    """Division by the zero element of K."""


@lru_cache(maxsize=65536)
def _pmono(eq: int, et: int, ea: int, c: int = 1):
    return _CTX.from_dict({(ea, et, eq): c})


def _pterms(p) -> list[tuple[int, int, int, int]]:
    """Terms of a parameter polynomial as (e_q, e_t, e_a, coeff)."""
    return [(e[2], e[1], e[0], int(c)) for e, c in p.to_dict().items()]


def _pdeg_a(p) -> int:
    return max(e[0] for e in p.to_dict())


def _plead_a(p):
    """Coefficient of the top power of a, as a polynomial in (t, q)."""
    d = p.to_dict()
    top = max(e[0] for e in d)
    return _CTX.from_dict({(0, e[1], e[2]): c for e, c in d.items() if e[0] == top})


def _pflip(p):
    """Return (p*, (dq, dt, da)) with p(1/q, 1/t, 1/a) = p* / (q^dq t^dt a^da)."""
    d = p.to_dict()
    da = max(e[0] for e in d)
    dt = max(e[1] for e in d)
    dq = max(e[2] for e in d)
    flipped = _CTX.from_dict({(da - e[0], dt - e[1], dq - e[2]): c for e, c in d.items()})
    return flipped, (dq, dt, da)


def _term_key(e):
    # ascending graded-lex, q < t < a
    return (e[0] + e[1] + e[2], e[2], e[1], e[0])


def _render_poly(p) -> str:
    terms = sorted(_pterms(p), key=lambda x: _term_key(x[:3]))
    if not terms:
        return "0"
    out = []
    for eq, et, ea, c in terms:
        parts = []
        for name, k in (("q", eq), ("t", et), ("a", ea)):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        m = "*".join(parts)
        if not m:
            s = str(c)
        elif c == 1:
            s = m
        elif c == -1:
            s = "-" + m
        else:
            s = f"{c}*{m}"
        if not out:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


def _parse_poly(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith(")") and _balanced(text[1:-1]):
        text = text[1:-1].strip()
    text = text.replace(" - ", " + -").replace(" ", "")
    acc = {}
    for term in text.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        c, e = 1, [0, 0, 0]
        for factor in term.split("*"):
            m = re.fullmatch(r"([qta])(?:\^(\d+))?", factor)
            if m:
                e["qta".index(m.group(1))] += int(m.group(2) or 1)
            elif re.fullmatch(r"\d+", factor):
                c *= int(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        key = (e[2], e[1], e[0])
        acc[key] = acc.get(key, 0) + sign * c
    return _CTX.from_dict({k: v for k, v in acc.items() if v})


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


class FieldElem:
    """An element of Q(q, t, a) in canonical reduced form."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num=0, den=None):
        if isinstance(num, Fraction):
            num, den0 = num.numerator, num.denominator
            den = den0 if den is None else den * den0
        if isinstance(num, int):
            num = _CTX.constant(num)
        if den is None:
            den = _P1
        elif isinstance(den, int):
            den = _CTX.constant(den)
        if den.is_zero():
            raise FieldDivisionByZero("division by zero in Q(q,t,a)")
        if num.is_zero():
            self.num, self.den = _P0, _P1
        else:
            if not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
            self.num, self.den = num, den
        self._key = None

    @classmethod
    def _make(cls, num, den):
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._key = num, den, None
        return obj

    @classmethod
    def monomial(cls, eq: int = 0, et: int = 0, ea: int = 0, sign: int = 1) -> "FieldElem":
        num = _pmono(max(eq, 0), max(et, 0), max(ea, 0), sign)
        den = _pmono(max(-eq, 0), max(-et, 0), max(-ea, 0))
        return cls._make(num, den)

    @classmethod
    def parse(cls, text: str) -> "FieldElem":
        """Inverse of ``str``: parse the canonical ``num/den`` rendering."""
        text = text.strip()
        depth, cut = 0, None
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                cut = i
        if cut is None:
            return cls(_parse_poly(text))
        return cls(_parse_poly(text[:cut]), _parse_poly(text[cut + 1:]))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_monomial(self) -> bool:
        return len(self.num.to_dict()) == 1 and len(self.den.to_dict()) == 1

    def den_key(self) -> str:
        if self._key is None:
            self._key = "1" if self.den.is_one() else str(self.den)
        return self._key

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == d2:
            return FieldElem(n1 + n2, d1)
        g = d1.gcd(d2)
        if g.is_one():
            num = n1 * d2 + n2 * d1
            if num.is_zero():
                return ZERO
            return FieldElem._make(num, d1 * d2)
        d1g, d2g = d1 / g, d2 / g
        num = n1 * d2g + n2 * d1g
        if num.is_zero():
            return ZERO
        g2 = num.gcd(g)
        if not g2.is_one():
            num = num / g2
            d2 = d2 / g2
        return FieldElem._make(num, d1g * d2)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._make(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = n1.gcd(d2)
        g2 = n2.gcd(d1)
        if not g1.is_one():
            n1, d2 = n1 / g1, d2 / g1
        if not g2.is_one():
            n2, d1 = n2 / g2, d1 / g2
        return FieldElem._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.num.is_zero():
            raise FieldDivisionByZero("inverse of zero in Q(q,t,a)")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return FieldElem._make(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return FieldElem._make(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), self.den_key()))

    # -- structure --------------------------------------------------------
    def iota(self) -> "FieldElem":
        """Invert all three parameters q, t, a."""
        if self.num.is_zero():
            return self
        nf, (nq, nt, na) = _pflip(self.num)
        df, (dq, dt, da) = _pflip(self.den)
        # num(1/.)/den(1/.) = nf * q^dq t^dt a^da / (df * q^nq t^nt a^na)
        eq, et, ea = dq - nq, dt - nt, da - na
        num = nf * _pmono(max(eq, 0), max(et, 0), max(ea, 0))
        den = df * _pmono(max(-eq, 0), max(-et, 0), max(-ea, 0))
        return FieldElem(num, den)

    def a_degree(self) -> int:
        """Degree in a of the rational function (deg num - deg den)."""
        if self.num.is_zero():
            raise ValueError("a-degree of zero")
        return _pdeg_a(self.num) - _pdeg_a(self.den)

    def a_leading(self) -> "FieldElem":
        """lim_{a->oo} a^{-deg_a} * self, an element of Q(q, t)."""
        return FieldElem(_plead_a(self.num), _plead_a(self.den))

    def has_a(self) -> bool:
        return _pdeg_a(self.num) > 0 or _pdeg_a(self.den) > 0

    def monomial_exponents(self):
        """(sign, e_q, e_t, e_a) if self is +-q^i t^j a^k, else None."""
        nt = _pterms(self.num)
        dt = _pterms(self.den)
        if len(nt) != 1 or len(dt) != 1 or abs(nt[0][3]) != 1 or dt[0][3] != 1:
            return None
        (q1, t1, a1, c), (q2, t2, a2, _) = nt[0], dt[0]
        return (c, q1 - q2, t1 - t2, a1 - a2)

    def __str__(self):
        if self.den.is_one():
            return _render_poly(self.num)
        n = _render_poly(self.num)
        d = _render_poly(self.den)
        if d.startswith("-"):
            # display with the lowest denominator term positive: (1 - t)/(1 - q*t)
            n, d = _render_poly(-self.num), _render_poly(-self.den)
        if len(self.num.to_dict()) > 1:
            n = f"({n})"
        if len(self.den.to_dict()) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"FieldElem({str(self)!r})"


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem(x)
    return NotImplemented


ZERO = FieldElem(0)
ONE = FieldElem(1)
Q = FieldElem.monomial(1, 0, 0)
T = FieldElem.monomial(0, 1, 0)
A = FieldElem.monomial(0, 0, 1)


def fe(x) -> FieldElem:
    """Coerce an int, Fraction, FieldElem or canonical string to a FieldElem."""
    if isinstance(x, str):
        return FieldElem.parse(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to FieldElem")
    return c


def mono(eq: int = 0, et: int = 0, ea: int = 0, sign: int = 1) -> FieldElem:
    return FieldElem.monomial(eq, et, ea, sign)


def field_arith(op: str, u, v) -> FieldElem:
    u, v = fe(u), fe(v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown field operation {op!r}")


def fsum(values: Iterable[FieldElem]) -> FieldElem:
    """Sum many field elements, adding numerators over equal denominators."""
    groups: dict[str, list] = {}
    for v in values:
        if v.num.is_zero():
            continue
        g = groups.get(v.den_key())
        if g is None:
            groups[v.den_key()] = [v.den, v.num]
        else:
            g[1] = g[1] + v.num
    total = ZERO
    for den, num in groups.values():
        if not num.is_zero():
            total = total + FieldElem(num, den)
    return total


def _mono_combination(items) -> FieldElem:
    """Sum of c * sign * q^eq t^et a^ea over items (c, sign, (eq, et, ea))."""
    items = [it for it in items if not it[0].num.is_zero()]
    if not items:
        return ZERO
    mq = min(e[0] for _, _, e in items)
    mt = min(e[1] for _, _, e in items)
    ma = min(e[2] for _, _, e in items)
    groups: dict[str, list] = {}
    for c, s, (eq, et, ea) in items:
        term = c.num * _pmono(eq - mq, et - mt, ea - ma, s)
        g = groups.get(c.den_key())
        if g is None:
            groups[c.den_key()] = [c.den, term]
        else:
            g[1] = g[1] + term
    total = ZERO
    for den, num in groups.values():
        if not num.is_zero():
            total = total + FieldElem(num, den)
    if (mq, mt, ma) != (0, 0, 0) and not total.is_zero():
        total = total * FieldElem.monomial(mq, mt, ma)
    return total


def _scale(c: FieldElem, s: int, e) -> FieldElem:
    if e == (0, 0, 0):
        return c if s == 1 else -c
    return c * FieldElem.monomial(e[0], e[1], e[2], s)


# ---------------------------------------------------------------------------
# evaluation points


class Point:
    """A point of K^n; monomial coordinates +-q^i t^j a^k get a fast path."""

    __slots__ = ("coords", "monos")

    def __init__(self, coords: Sequence, monos=None):
        self.coords = tuple(fe(c) for c in coords)
        if any(c.is_zero() for c in self.coords):
            raise ValueError("point coordinates must be nonzero")
        if monos is None:
            ms = [c.monomial_exponents() for c in self.coords]
            monos = None if any(m is None for m in ms) else tuple(ms)
        self.monos = monos

    @classmethod
    def from_monomials(cls, monos) -> "Point":
        monos = tuple((s, eq, et, ea) for s, eq, et, ea in monos)
        coords = [FieldElem.monomial(eq, et, ea, s) for s, eq, et, ea in monos]
        obj = cls.__new__(cls)
        obj.coords, obj.monos = tuple(coords), monos
        return obj

    @property
    def n(self) -> int:
        return len(self.coords)

    def scale(self, c) -> "Point":
        """Multiply every coordinate by the scalar c."""
        c = fe(c)
        m = c.monomial_exponents()
        if self.monos is not None and m is not None:
            s, eq, et, ea = m
            return Point.from_monomials(
                (s * s0, eq + q0, et + t0, ea + a0) for s0, q0, t0, a0 in self.monos)
        return Point([x * c for x in self.coords])

    def inverse(self) -> "Point":
        if self.monos is not None:
            return Point.from_monomials((s, -eq, -et, -ea) for s, eq, et, ea in self.monos)
        return Point([c.inverse() for c in self.coords])

    def reversed(self) -> "Point":
        """The w0-image: coordinates in reverse order."""
        if self.monos is not None:
            return Point.from_monomials(self.monos[::-1])
        return Point(self.coords[::-1])

    def swap(self, i: int) -> "Point":
        """s_i acting on the point (1-based i)."""
        idx = list(range(self.n))
        idx[i - 1], idx[i] = idx[i], idx[i - 1]
        if self.monos is not None:
            return Point.from_monomials(self.monos[j] for j in idx)
        return Point([self.coords[j] for j in idx])

    def natural(self) -> "Point":
        """y -> (y_2, ..., y_n, q*y_1)."""
        if self.monos is not None:
            s, eq, et, ea = self.monos[0]
            return Point.from_monomials(self.monos[1:] + ((s, eq + 1, et, ea),))
        return Point(self.coords[1:] + (self.coords[0] * Q,))

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"


# ---------------------------------------------------------------------------
# x-polynomials


def _xkey(e):
    # ascending graded-lex with x_1 < ... < x_n
    return (sum(e),) + tuple(reversed(e))


def _render_xmono(e) -> str:
    parts = []
    for i, k in enumerate(e, 1):
        if k == 1:
            parts.append(f"x{i}")
        elif k:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


class XPoly:
    """Polynomial (or Laurent polynomial) in x_1..x_n with K coefficients.

    Treated as immutable: every operation returns a new object.
    """

    __slots__ = ("n", "terms", "laurent")

    def __init__(self, n: int, terms=None, laurent: bool = False):
        if n < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for n={n}")
            c = fe(c)
            if not c.is_zero():
                clean[e] = c
        if not laurent and any(k < 0 for e in clean for k in e):
            raise ValueError("negative exponent in a non-Laurent polynomial")
        self.n = n
        self.terms = clean
        self.laurent = laurent

    @classmethod
    def _make(cls, n, terms, laurent):
        obj = cls.__new__(cls)
        obj.n, obj.terms, obj.laurent = n, terms, laurent
        return obj

    @classmethod
    def const(cls, n: int, c=1) -> "XPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "XPoly":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): ONE})

    @classmethod
    def monomial(cls, e, c=1) -> "XPoly":
        e = tuple(e)
        return cls(len(e), {e: c}, laurent=any(k < 0 for k in e))

    @classmethod
    def from_accumulator(cls, n, acc, laurent) -> "XPoly":
        """Build from {exponent: [(c, sign, (eq, et, ea)), ...]}."""
        terms = {}
        for e, items in acc.items():
            if len(items) == 1:
                c = _scale(*items[0])
            else:
                c = _mono_combination(items)
            if not c.is_zero():
                terms[e] = c
        return cls._make(n, terms, laurent)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e) -> FieldElem:
        return self.terms.get(tuple(e), ZERO)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.n
        return tuple(min(e[i] for e in self.terms) for i in range(self.n))

    def homogeneous_part(self, d: int) -> "XPoly":
        return XPoly._make(self.n, {e: c for e, c in self.terms.items() if sum(e) == d},
                           self.laurent)

    def top_part(self) -> "XPoly":
        return self.homogeneous_part(self.degree())

    def is_polynomial(self) -> bool:
        return all(k >= 0 for e in self.terms for k in e)

    def as_laurent(self) -> "XPoly":
        return XPoly._make(self.n, self.terms, True)

    def as_polynomial(self) -> "XPoly":
        if not self.is_polynomial():
            raise ValueError("Laurent polynomial has negative exponents")
        return XPoly._make(self.n, self.terms, False)

    def coefficients_in_F(self) -> bool:
        return not any(c.has_a() for c in self.terms.values())

    # -- ring operations --------------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = XPoly.const(self.n, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        acc: dict = {}
        for src in (self.terms, other.terms):
            for e, c in src.items():
                acc.setdefault(e, []).append(c)
        terms = {}
        for e, cs in acc.items():
            c = cs[0] if len(cs) == 1 else cs[0] + cs[1]
            if not c.is_zero():
                terms[e] = c
        return XPoly._make(self.n, terms, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._make(self.n, {e: -c for e, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = XPoly.const(self.n, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            c = fe(other)
            if c.is_zero():
                return XPoly._make(self.n, {}, self.laurent)
            return XPoly._make(self.n, {e: v * c for e, v in self.terms.items()}, self.laurent)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc.setdefault(e, []).append(c1 * c2)
        terms = {}
        for e, cs in acc.items():
            c = cs[0] if len(cs) == 1 else fsum(cs)
            if not c.is_zero():
                terms[e] = c
        return XPoly._make(self.n, terms, self.laurent or other.laurent)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self * fe(other).inverse()
        return NotImplemented

    def __pow__(self, k: int):
        out = XPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = XPoly.const(self.n, other)
        if isinstance(other, XRational):
            return other == self
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- structural maps --------------------------------------------------
    def map_coeffs(self, fn) -> "XPoly":
        terms = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                terms[e] = v
        return XPoly._make(self.n, terms, self.laurent)

    def iota(self) -> "XPoly":
        return self.map_coeffs(FieldElem.iota)

    def shift(self, e) -> "XPoly":
        """Multiply by the monomial x^e."""
        e = tuple(e)
        laurent = self.laurent or any(k < 0 for k in e)
        terms = {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()}
        out = XPoly._make(self.n, terms, laurent)
        if not laurent and not out.is_polynomial():
            raise ValueError("shift produced negative exponents")
        return out

    def permute(self, target: Sequence[int]) -> "XPoly":
        """Substitute x_i -> x_{target[i]} (0-based targets)."""
        terms = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, k in enumerate(e):
                new[target[i]] += k
            terms[tuple(new)] = c
        return XPoly._make(self.n, terms, self.laurent)

    def change_vars(self, target: Sequence[int], scalars: Sequence) -> "XPoly":
        """Substitute x_i -> scalars[i] * x_{target[i]} (0-based targets).

        Scalars must be monomials +-q^i t^j a^k.
        """
        ms = []
        for s in scalars:
            m = fe(s).monomial_exponents()
            if m is None:
                raise ValueError("change_vars needs monomial scalars")
            ms.append(m)
        acc: dict = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            sign, eq, et, ea = 1, 0, 0, 0
            for i, k in enumerate(e):
                new[target[i]] += k
                if k:
                    s0, q0, t0, a0 = ms[i]
                    if s0 < 0 and k % 2:
                        sign = -sign
                    eq += q0 * k
                    et += t0 * k
                    ea += a0 * k
            acc.setdefault(tuple(new), []).append((c, sign, (eq, et, ea)))
        return XPoly.from_accumulator(self.n, acc, self.laurent)

    def scale_vars(self, c) -> "XPoly":
        """f(x) -> f(c*x) for a monomial scalar c."""
        return self.change_vars(range(self.n), [c] * self.n)

    def swap(self, i: int) -> "XPoly":
        """s_i: interchange x_i and x_{i+1} (1-based)."""
        target = list(range(self.n))
        target[i - 1], target[i] = i, i - 1
        return self.permute(target)

    def reverse(self) -> "XPoly":
        """w0: x_i -> x_{n+1-i}."""
        return self.permute([self.n - 1 - i for i in range(self.n)])

    def invert_vars(self) -> "XPoly":
        """f(x) -> f(x_1^{-1}, ..., x_n^{-1})."""
        return XPoly._make(self.n, {tuple(-k for k in e): c for e, c in self.terms.items()},
                           True)

    def is_symmetric_pair(self, i: int) -> bool:
        return self.swap(i) == self

    def substitute(self, pt) -> FieldElem:
        return poly_substitute(self, pt)

    def top_a_part(self):
        """Leading behaviour of f(a*x) as a -> oo: returns (degree, XPoly over Q(q,t))."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading a-part")
        degs = {e: c.a_degree() + sum(e) for e, c in self.terms.items()}
        top = max(degs.values())
        terms = {e: self.terms[e].a_leading() for e, d in degs.items() if d == top}
        return top, XPoly._make(self.n, terms, self.laurent)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _xkey(ec[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            m = _render_xmono(e)
            cs = str(c)
            if not m:
                s = cs
            elif c.is_one():
                s = m
            elif c == -1:
                s = "-" + m
            else:
                if c.den.is_one() and len(c.num.to_dict()) > 1:
                    cs = f"({cs})"
                s = f"{cs} * {m}"
            if not out:
                out.append(s)
            elif s.startswith("-"):
                out.append(" - " + s[1:])
            else:
                out.append(" + " + s)
        return "".join(out)

    def __repr__(self):
        return f"XPoly(n={self.n}, {str(self)!r})"

    def to_terms(self) -> list[dict]:
        return [{"exponent": list(e), "coefficient": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_terms(cls, n: int, items: list[dict], laurent: bool = False) -> "XPoly":
        terms = {tuple(it["exponent"]): FieldElem.parse(it["coefficient"]) for it in items}
        laurent = laurent or any(k < 0 for e in terms for k in e)
        return cls(n, terms, laurent=laurent)


def poly_substitute(p: XPoly, pt) -> FieldElem:
    """Exact value of p at the point pt."""
    if not isinstance(pt, Point):
        pt = Point(pt)
    if pt.n != p.n:
        raise ValueError(f"point has {pt.n} coordinates, polynomial has {p.n} variables")
    if pt.monos is not None:
        items = []
        for e, c in p.terms.items():
            sign, eq, et, ea = 1, 0, 0, 0
            for k, (s0, q0, t0, a0) in zip(e, pt.monos):
                if k:
                    if s0 < 0 and k % 2:
                        sign = -sign
                    eq += q0 * k
                    et += t0 * k
                    ea += a0 * k
            items.append((c, sign, (eq, et, ea)))
        return _mono_combination(items)
    vals = []
    for e, c in p.terms.items():
        v = c
        for k, y in zip(e, pt.coords):
            if k:
                v = v * y ** k
        vals.append(v)
    return fsum(vals)


def _dd_monomial(e, i):
    """Divided difference of x^e in variables i, i+1 (0-based i): list of (exp, sign)."""
    a, b = e[i], e[i + 1]
    if a == b:
        return []
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    d = a - b
    out = []
    for j in range(d):
        new = list(e)
        new[i] = b + d - 1 - j
        new[i + 1] = b + j
        out.append((tuple(new), sign))
    return out


def divided_difference(p: XPoly, i: int) -> XPoly:
    """(p - s_i p) / (x_i - x_{i+1}), computed monomial by monomial (1-based i)."""
    if not 1 <= i < p.n:
        raise ValueError(f"index {i} out of range for n={p.n}")
    acc: dict = {}
    for e, c in p.terms.items():
        for new, s in _dd_monomial(e, i - 1):
            acc.setdefault(new, []).append((c, s, (0, 0, 0)))
    out = XPoly.from_accumulator(p.n, acc, p.laurent)
    if p.degree() >= 0 and out.terms and not p.laurent and out.degree() > p.degree() - 1:
        raise ArithmeticError("divided difference raised the degree")
    return out


def pochhammer(y, m: int, base=None):
    """(y; base)_m = prod_{j<m} (1 - base^j y); base defaults to q.

    y may be a FieldElem or an XPoly.
    """
    if m < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if base is None or base == "q":
        base = Q
    elif base in ("qinv", "q^-1"):
        base = Q.inverse()
    else:
        base = fe(base)
    if isinstance(y, XPoly):
        out = XPoly.const(y.n, 1)
    else:
        y = fe(y)
        out = ONE
    for j in range(m):
        out = out * (1 - y * base ** j)
    return out


# ---------------------------------------------------------------------------
# rational functions in x


class XRational:
    """A quotient num/den of x-polynomials; equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly | None = None):
        if den is None:
            den = XPoly.const(num.n, 1)
        if num.n != den.n:
            raise ValueError("numerator and denominator variable counts differ")
        if den.is_zero():
            raise FieldDivisionByZero("zero denominator")
        self.num, self.den = num, den

    @property
    def n(self) -> int:
        return self.num.n

    @staticmethod
    def lift(f) -> "XRational":
        return f if isinstance(f, XRational) else XRational(f)

    def is_polynomial_den(self) -> bool:
        return len(self.den.terms) == 1 and next(iter(self.den.terms)) == (0,) * self.n

    def to_poly(self) -> XPoly:
        """Exact polynomial when the denominator is a constant."""
        if len(self.den.terms) != 1:
            raise ValueError("denominator is not a monomial")
        (e, c), = self.den.terms.items()
        return (self.num * c.inverse()).shift(tuple(-k for k in e))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FieldElem, XPoly)):
            other = XRational(other if isinstance(other, XPoly) else XPoly.const(self.n, other))
        if not isinstance(other, XRational):
            return NotImplemented
        if self.den == other.den:
            return XRational(self.num + other.num, self.den)
        return XRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return XRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-XRational.lift(other) if isinstance(other, (XPoly, XRational))
                       else -fe(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return XRational(self.num * fe(other), self.den)
        if isinstance(other, XPoly):
            return XRational(self.num * other, self.den)
        if isinstance(other, XRational):
            return XRational(self.num * other.num, self.den * other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return XRational(self.num * fe(other).inverse(), self.den)
        if isinstance(other, XPoly):
            return XRational(self.num, self.den * other)
        if isinstance(other, XRational):
            return XRational(self.num * other.den, self.den * other.num)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = XPoly.const(self.n, other)
        if isinstance(other, XPoly):
            other = XRational(other)
        if not isinstance(other, XRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def map_parts(self, fn) -> "XRational":
        return XRational(fn(self.num), fn(self.den))

    def iota(self) -> "XRational":
        return self.map_parts(XPoly.iota)

    def scale_vars(self, c) -> "XRational":
        return self.map_parts(lambda p: p.scale_vars(c))

    def change_vars(self, target, scalars) -> "XRational":
        return self.map_parts(lambda p: p.change_vars(target, scalars))

    def permute(self, target) -> "XRational":
        return self.map_parts(lambda p: p.permute(target))

    def swap(self, i: int) -> "XRational":
        return self.map_parts(lambda p: p.swap(i))

    def reverse(self) -> "XRational":
        return self.map_parts(XPoly.reverse)

    def invert_vars(self) -> "XRational":
        return self.map_parts(XPoly.invert_vars)

    def substitute(self, pt) -> FieldElem:
        d = poly_substitute(self.den, pt)
        if d.is_zero():
            raise FieldDivisionByZero("denominator vanishes at the evaluation point")
        return poly_substitute(self.num, pt) / d

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"XRational({str(self)!r})"

"""Exact verification of the identities between the families.

Each ``check_*`` function handles one index (or index pair) and returns an
``IdentityReport``.  ``run_identity`` sweeps a registered identity over a
``SweepConfig`` and merges the per-index reports in a fixed order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .combin import (
    add_constant, bar_point, compositions_upto, containment, ell_w0, inv_count,
    is_composition, min_shift, n_stat, natural_shift, nprime_stat, partitions, tau_alpha,
    tilde_point, vectors_in_box, w0_word, all_permutations,
)
from .exactalg import A, ONE, Q, T, ZERO, FieldElem, XPoly, XRational, fsum, pochhammer
from .families import (
    A_factor, E_family, G, G_circ, G_family, G_prime, K_circ, K_family,
    K_family_shift, K_plus, K_prime, Kbar_family, O_alpha, a_tau, binom, interpolate,
    monomials_upto, tau_point,
)
from .heckeops import (
    CIRC, FamilyTable, apply_Cplus, apply_Delta, apply_H, apply_Hw, apply_Phi, apply_Psi,
    apply_Xi, apply_xi, hat_apply, verify_hecke_relations,
)
from .report import IdentityReport, timed

__all__ = [
    "SweepConfig", "check_duality", "check_twisted_duality", "check_primed_duality",
    "check_theoremA", "check_theoremC", "check_binomial", "check_dual_binomial",
    "check_orthogonality", "check_okounkov", "check_transfer", "check_eval_relations",
    "check_duality_steps", "check_closed_forms_n1", "check_negative_degree",
    "REGISTRY", "register", "run_identity", "run_suite",
]


def _swap(v, i):
    v = list(v)
    v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def _eq(rep, lhs, rhs, index):
    return rep.record(lhs == rhs, index, lhs, rhs)


# ---------------------------------------------------------------------------
# duality family


def check_duality(u, v) -> IdentityReport:
    """K_u(a v~) = K_v(a u~)."""
    u, v = tuple(u), tuple(v)
    rep = IdentityReport("duality", {"u": u, "v": v})
    with timed(rep):
        lhs = K_family(u).substitute(tilde_point(v).scale(A))
        rhs = K_family(v).substitute(tilde_point(u).scale(A))
        _eq(rep, lhs, rhs, {"u": u, "v": v})
    return rep


def check_twisted_duality(u, v) -> IdentityReport:
    """(H_{w0} K_u)(a v~) = (H_{w0} K_v)(a u~)."""
    u, v = tuple(u), tuple(v)
    rep = IdentityReport("twisted-duality", {"u": u, "v": v})
    with timed(rep):
        word = w0_word(len(u))
        lhs = apply_Hw(word, K_family(u)).substitute(tilde_point(v).scale(A))
        rhs = apply_Hw(word, K_family(v)).substitute(tilde_point(u).scale(A))
        _eq(rep, lhs, rhs, {"u": u, "v": v})
    return rep


def check_primed_duality(u, v) -> IdentityReport:
    """K'_v(a^{-1} u-bar) = K'_u(a^{-1} v-bar)."""
    u, v = tuple(u), tuple(v)
    rep = IdentityReport("primed-duality", {"u": u, "v": v})
    with timed(rep):
        ainv = A.inverse()
        lhs = K_prime(v).substitute(bar_point(u).scale(ainv))
        rhs = K_prime(u).substitute(bar_point(v).scale(ainv))
        _eq(rep, lhs, rhs, {"u": u, "v": v})
    return rep


def check_closed_forms_n1(max_m: int = 5) -> IdentityReport:
    """One-variable closed forms for K, K' and the duality values."""
    rep = IdentityReport("closed-forms-n1", {"max_m": max_m})
    x = XPoly.var(1, 1)
    ainv = A.inverse()
    with timed(rep):
        for m in range(max_m + 1):
            # K_{-m} = (qa;q)_m / (qx;q)_m
            rhs = XRational(XPoly.const(1, pochhammer(Q * A, m)), pochhammer(x * Q, m))
            _eq(rep, K_family((-m,)), rhs, {"family": "K", "index": -m})
            # K_m = (x/a)^m (x^{-1};q)_m / (a^{-1};q)_m, cleared of x^{-1}
            num = XPoly.const(1, 1)
            for j in range(m):
                num = num * (x - Q ** j)
            rhs = num * (ainv ** m / pochhammer(ainv, m))
            _eq(rep, K_family((m,)), rhs, {"family": "K", "index": m})
            # K'_{-m} = (q^{-1}a^{-1};q^{-1})_m / (q^{-1}x;q^{-1})_m
            qi = Q.inverse()
            rhs = XRational(XPoly.const(1, pochhammer(qi * ainv, m, qi)),
                            pochhammer(x * qi, m, qi))
            _eq(rep, K_prime((-m,)), rhs, {"family": "Kprime", "index": -m})
            # second displayed form (ax)^{-m} (qa;q)_m / (q x^{-1};q)_m
            den = XPoly.const(1, 1)
            for j in range(m):
                den = den * (x - Q ** (j + 1))
            rhs2 = XRational(XPoly.const(1, pochhammer(Q * A, m) * A ** (-m)), den)
            _eq(rep, rhs, rhs2, {"family": "Kprime-alt", "index": -m})
            # K'_m = (x;q)_m / (a^{-1};q)_m
            rhs = pochhammer(x, m) / pochhammer(ainv, m)
            _eq(rep, K_prime((m,)), rhs, {"family": "Kprime", "index": m})
            for r in range(max_m + 1):
                lhs = K_family((m,)).substitute([A * Q ** (-r)])
                rhs = Q ** (-m * r) * pochhammer(ainv, m + r) \
                    / (pochhammer(ainv, m) * pochhammer(ainv, r))
                _eq(rep, lhs, rhs, {"m": m, "r": r})
    return rep


# ---------------------------------------------------------------------------
# primed polynomials and O


def check_theoremA(alpha) -> IdentityReport:
    """G'_alpha from the Psi construction equals the vanishing-characterized one."""
    alpha = tuple(alpha)
    n, d = len(alpha), sum(alpha)
    rep = IdentityReport("theorem-a", {"alpha": alpha})
    with timed(rep):
        lower = monomials_upto(n, d - 1) if d > 0 else []
        top = G(alpha).homogeneous_part(d)
        oracle = interpolate(n, lower, [tilde_point(b) for b in lower], top)
        _eq(rep, G_prime(alpha), oracle, {"alpha": alpha})
    return rep


def check_theoremC(alpha, sweep_degree: int) -> IdentityReport:
    """O_alpha(bar(beta)^{-1}) = K_beta(a alpha~) for |beta| <= sweep_degree."""
    alpha = tuple(alpha)
    n = len(alpha)
    rep = IdentityReport("theorem-c", {"alpha": alpha, "sweep_degree": sweep_degree})
    with timed(rep):
        o = O_alpha(alpha)
        rep.record(o.degree() <= sum(alpha), {"alpha": alpha, "check": "degree"},
                   o.degree(), sum(alpha))
        at = tilde_point(alpha).scale(A)
        for beta in compositions_upto(n, sweep_degree):
            lhs = o.substitute(bar_point(beta).inverse())
            rhs = K_family(beta).substitute(at)
            _eq(rep, lhs, rhs, {"alpha": alpha, "beta": beta})
    return rep


# ---------------------------------------------------------------------------
# binomial formulas


def _sorted_contained(beta, alpha) -> bool:
    return containment(sorted(beta, reverse=True), sorted(alpha, reverse=True))


def _sub_compositions(alpha):
    """Compositions beta with beta+ inside alpha+.

    Componentwise containment is too small a support: [(0,2) choose (1,0)]
    is nonzero.  The sorted containment is checked by ``_support_check``.
    """
    n, d = len(alpha), sum(alpha)
    return [b for b in compositions_upto(n, d) if _sorted_contained(b, alpha)]


def _support_check(rep, alpha, inverted):
    for b in compositions_upto(len(alpha), sum(alpha)):
        if not _sorted_contained(b, alpha):
            c = binom(alpha, b, inverted=inverted)
            rep.record(c.is_zero(), {"alpha": alpha, "beta": b, "check": "support"}, c, 0)


def check_binomial(alpha) -> IdentityReport:
    """The binomial formula and its three rewritten forms."""
    alpha = tuple(alpha)
    n = len(alpha)
    rep = IdentityReport("binomial", {"alpha": alpha})
    with timed(rep):
        lhs = K_family(alpha).scale_vars(A)
        betas = _sub_compositions(alpha)
        at = a_tau(n)
        abar_inv = bar_point(alpha).inverse()
        forms = [XPoly(n), XPoly(n), XPoly(n), XPoly(n)]
        for b in betas:
            c = binom(alpha, b, inverted=True)
            forms[0] = forms[0] + G_prime(b) * (A ** sum(b) * c / G(b).substitute(at))
            kp = K_prime(b)
            forms[1] = forms[1] + kp * (tau_alpha(b).inverse() * c)
            kc = K_circ(b)
            ratio = kc.substitute(abar_inv) / (tau_alpha(b) * kc.substitute(
                bar_point(b).inverse()))
            forms[2] = forms[2] + kp * ratio
            psi = apply_Psi(kc.scale_vars(T ** (n - 1)))
            forms[3] = forms[3] + psi * (ratio * T ** ell_w0(n))
        for k, rhs in enumerate(forms):
            _eq(rep, lhs, rhs, {"alpha": alpha, "form": k})
        _support_check(rep, alpha, inverted=True)
    return rep


def check_dual_binomial(alpha) -> IdentityReport:
    """K'_alpha = sum tau_beta [alpha beta] K_beta(ax), and the Psi form."""
    alpha = tuple(alpha)
    n = len(alpha)
    rep = IdentityReport("dual-binomial", {"alpha": alpha})
    with timed(rep):
        abar = bar_point(alpha)
        rhs1, rhs2 = XPoly(n), XPoly(n)
        for b in _sub_compositions(alpha):
            kb = K_family(b)
            kba = kb.scale_vars(A)
            rhs1 = rhs1 + kba * (tau_alpha(b) * binom(alpha, b))
            rhs2 = rhs2 + kba * (tau_alpha(b) * kb.substitute(abar)
                                 / kb.substitute(bar_point(b)))
        _eq(rep, K_prime(alpha), rhs1, {"alpha": alpha, "form": 0})
        lhs2 = apply_Psi(K_circ(alpha).scale_vars(T ** (n - 1)))
        _eq(rep, lhs2, rhs2 * T ** (-ell_w0(n)), {"alpha": alpha, "form": 1})
        _support_check(rep, alpha, inverted=False)
    return rep


def check_orthogonality(alpha, gamma) -> IdentityReport:
    """sum_beta (tau_beta/tau_alpha) [alpha beta]_{q,t} [beta gamma]_{1/q,1/t} = delta."""
    alpha, gamma = tuple(alpha), tuple(gamma)
    rep = IdentityReport("orthogonality", {"alpha": alpha, "gamma": gamma})
    with timed(rep):
        terms = []
        for b in _sub_compositions(alpha):
            if _sorted_contained(gamma, b):
                terms.append(tau_alpha(b) / tau_alpha(alpha) * binom(alpha, b)
                             * binom(b, gamma, inverted=True))
        total = fsum(terms)
        _eq(rep, total, ONE if alpha == gamma else ZERO, {"alpha": alpha, "gamma": gamma})
    return rep


# ---------------------------------------------------------------------------
# symmetric polynomials


def check_okounkov(lam, mu) -> IdentityReport:
    """K+_lambda(a t^{1-n} mu-bar^{-1}) = K+_mu(a t^{1-n} lambda-bar^{-1}).

    The factor t^{1-n} comes from mu~ = t^{1-n} w0 mu-bar^{-1} and the
    symmetry of K+; without it the identity fails already for lambda = 0.
    The tilde form K+_lambda(a mu~) = K+_mu(a lambda~) is checked as well.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam)
    rep = IdentityReport("okounkov", {"lambda": lam, "mu": mu})
    with timed(rep):
        kl, km = K_plus(lam), K_plus(mu)
        c = A * T ** (1 - n)
        lhs = kl.substitute(bar_point(mu).inverse().scale(c))
        rhs = km.substitute(bar_point(lam).inverse().scale(c))
        _eq(rep, lhs, rhs, {"lambda": lam, "mu": mu, "form": "inverse-bar"})
        lhs = kl.substitute(tilde_point(mu).scale(A))
        rhs = km.substitute(tilde_point(lam).scale(A))
        _eq(rep, lhs, rhs, {"lambda": lam, "mu": mu, "form": "tilde"})
    return rep


def check_symmetrization(alpha) -> IdentityReport:
    """C_+ K_alpha = (sum_w t^{l(w)}) K+_{alpha+}."""
    alpha = tuple(alpha)
    n = len(alpha)
    rep = IdentityReport("symmetrization", {"alpha": alpha})
    with timed(rep):
        poin = fsum(T ** w.length for w in all_permutations(n))
        plus = tuple(sorted(alpha, reverse=True))
        _eq(rep, apply_Cplus(K_family(alpha)), K_plus(plus) * poin, {"alpha": alpha})
    return rep


# ---------------------------------------------------------------------------
# transfer identities


TRANSFER_CASES = ("H", "Xi", "Phi", "laurent")


def _table(fn, indices):
    return FamilyTable({tuple(w): fn(tuple(w)) for w in indices})


def check_transfer(v, which: str) -> IdentityReport:
    """Analytic operator on the family member versus hat-operator recombination."""
    v = tuple(v)
    n = len(v)
    if which not in TRANSFER_CASES:
        raise ValueError(f"unknown transfer case {which!r}")
    rep = IdentityReport("transfer", {"v": v, "which": which})
    b = bar_point(v)
    with timed(rep):
        if which == "H":
            for i in range(1, n):
                tab = _table(K_family, {v, _swap(v, i)})
                _eq(rep, apply_H(i, K_family(v)), hat_apply("H", tab, v, i),
                    {"v": v, "op": f"H{i}"})
        elif which == "Xi":
            tab = _table(K_family, [v])
            for j in range(1, n + 1):
                rhs = hat_apply("x_inv", tab, v, j) * A
                _eq(rep, apply_Xi(j, K_family(v)), rhs, {"v": v, "op": f"Xi{j}"})
                _eq(rep, rhs, K_family(v) * b[j - 1].inverse(),
                    {"v": v, "op": f"Xi{j}-eigen"})
        elif which == "Phi":
            nat = natural_shift(v, "raise")
            tab = _table(K_family, [nat])
            g = FamilyTable({v: hat_apply("Delta_inv", tab, v)})
            rhs = (hat_apply("x_inv", g, v, 1) * A ** 2 - g[v]) * T ** (1 - n)
            lhs = apply_Phi(K_family(v))
            _eq(rep, lhs, rhs, {"v": v, "op": "Phi"})
            _eq(rep, lhs, K_family(nat) * ((A * b[0].inverse() - 1) * T ** (1 - n)),
                {"v": v, "op": "Phi-explicit"})
            if is_composition(v):
                c = A * tilde_point(v)[n - 1] - T ** (1 - n)
                _eq(rep, lhs, K_family(nat) * c, {"v": v, "op": "Phi-alt"})
        else:
            _laurent_transfer(rep, v)
    return rep


def _laurent_transfer(rep, v):
    n = len(v)
    b = bar_point(v)
    kb = Kbar_family(v)
    for i in range(1, n):
        tab = _table(Kbar_family, {v, _swap(v, i)})
        _eq(rep, apply_H(i, kb), hat_apply("H", tab, v, i), {"v": v, "op": f"H{i}"})
    # the eigenvalue of xi_j^{-1} (on Kbar and on E) is vbar_j^{-1}
    for j in range(1, n + 1):
        _eq(rep, apply_xi(j, kb, inverse=True), kb * b[j - 1].inverse(),
            {"v": v, "op": f"xi{j}^-1"})
        e = E_family(v)
        _eq(rep, apply_xi(j, e), e * b[j - 1], {"v": v, "op": f"xi{j}-E"})
        ec = e.iota()
        _eq(rep, apply_xi(j, ec, inverse=True, variant=CIRC), ec * b[j - 1],
            {"v": v, "op": f"xicirc{j}^-1-Ecirc"})
    nat = natural_shift(v, "raise")
    lhs = apply_Delta(kb) * XPoly.var(n, n)
    _eq(rep, lhs, Kbar_family(nat) * (T ** (1 - n) * b[0].inverse()), {"v": v, "op": "xnDelta"})
    # Kbar_v is the a -> oo limit of K_v(ax)
    k = K_family(v)
    if isinstance(k, XRational):
        dn, tn = k.num.top_a_part()
        dd, td = k.den.top_a_part()
        rep.record(dn == dd and XRational(tn, td) == kb, {"v": v, "op": "limit"},
                   XRational(tn, td), kb)
    else:
        d, top = k.top_a_part()
        rep.record(d == 0 and top == kb, {"v": v, "op": "limit"}, top, kb)
    # E_{v+1} = x_1...x_n E_v, and the normalized shift relation
    e, e1 = E_family(v), E_family(add_constant(v, 1))
    _eq(rep, e1, e.shift((1,) * n), {"v": v, "op": "E-shift"})
    c = Q ** sum(v) * T ** ((1 - n) * n)
    for i in range(n):
        c = c * b[i].inverse()
    _eq(rep, kb, Kbar_family(add_constant(v, 1)).shift((-1,) * n) * c,
        {"v": v, "op": "Kbar-shift"})
    # E_u = t^{I(u)} Psi E_u^circ and w0 E_{-w0 u}(x^{-1}) = E_u(x)
    _eq(rep, e, apply_Psi(e.iota()) * T ** inv_count(v), {"v": v, "op": "stepprime"})
    neg = tuple(-k for k in reversed(v))
    _eq(rep, E_family(neg).invert_vars().reverse(), e, {"v": v, "op": "inversion"})


def check_negative_degree(v) -> IdentityReport:
    """Independence of the shift, K_v = G_v/G_v(a tau), K_v(a tau) = 1, shift rule."""
    v = tuple(v)
    n = len(v)
    rep = IdentityReport("negative-degree", {"v": v})
    with timed(rep):
        m = min_shift(v)
        k = K_family(v)
        _eq(rep, K_family_shift(v, m + 1), k, {"v": v, "check": "shift-independence"})
        at = a_tau(n)
        _eq(rep, k.substitute(at), ONE, {"v": v, "check": "normalization"})
        g = G_family(v)
        _eq(rep, k, g / g.substitute(at), {"v": v, "check": "K=G/G(atau)"})
        if is_composition(v):
            # shift rule for G and K under v -> v + (1^n)
            g1 = G(add_constant(v, 1)).scale_vars(Q)
            den = XPoly.const(n, 1)
            for i in range(1, n + 1):
                den = den * (XPoly.var(n, i) * Q - T ** (1 - n))
            _eq(rep, XRational(g1 * Q ** (-sum(v)), den), G(v), {"v": v, "check": "G-shift"})
            b = bar_point(v)
            c = ONE
            kden = XPoly.const(n, 1)
            for i in range(1, n + 1):
                c = c * (1 - A * b[i - 1].inverse())
                kden = kden * (1 - XPoly.var(n, i) * (Q * T ** (n - 1)))
            k1 = K_family(add_constant(v, 1)).scale_vars(Q)
            _eq(rep, XRational(k1 * c, kden), K_family(v), {"v": v, "check": "K-shift"})
        # primed shift by (1^n)
        b = bar_point(v)
        c = ONE
        kden = XPoly.const(n, 1)
        for i in range(1, n + 1):
            c = c * (1 - A.inverse() * b[i - 1])
            kden = kden * (1 - XPoly.var(n, i) * Q.inverse())
        kp1 = K_prime(add_constant(v, 1)).scale_vars(Q.inverse())
        _eq(rep, XRational.lift(kp1) * c / kden, K_prime(v), {"v": v, "check": "Kprime-shift"})
    return rep


# ---------------------------------------------------------------------------
# evaluation relations


def check_eval_relations(alpha) -> IdentityReport:
    alpha = tuple(alpha)
    n, d = len(alpha), sum(alpha)
    rep = IdentityReport("eval-relations", {"alpha": alpha})
    with timed(rep):
        tau = tau_point(n)
        at, ainv = tau.scale(A), A.inverse()
        tinv = tau.inverse()
        I, l0 = inv_count(alpha), ell_w0(n)
        gp, g, gc = G_prime(alpha), G(alpha), G_circ(alpha)
        lhs = gp.substitute(at)
        rhs = T ** ((1 - n) * d + I - l0) * gc.substitute(tinv.scale(A))
        _eq(rep, lhs, rhs, {"alpha": alpha, "relation": "Gprime(atau)"})
        lhs = g.substitute(at)
        rhs = (-A) ** d * T ** ((1 - n) * d - n_stat(alpha)) * Q ** nprime_stat(alpha) \
            * gc.substitute(tinv.scale(ainv))
        _eq(rep, lhs, rhs, {"alpha": alpha, "relation": "G(atau)-inverse"})
        lhs = gp.substitute(tau.scale(ainv))
        rhs = tau_alpha(alpha).inverse() * ainv ** d * g.substitute(at)
        _eq(rep, lhs, rhs, {"alpha": alpha, "relation": "Gprime(ainvtau)"})
        plus = tuple(sorted(alpha, reverse=True))
        lhs, rhs = n_stat(alpha), n_stat(plus) + l0 - I
        rep.record(lhs == rhs, {"alpha": alpha, "relation": "orbit"}, lhs, rhs)
        # normalized primed family
        _eq(rep, K_prime(alpha), gp / lhs_nonzero(gp.substitute(tau.scale(ainv))),
            {"alpha": alpha, "relation": "Kprime-normalization"})
    return rep


def lhs_nonzero(c: FieldElem) -> FieldElem:
    if c.is_zero():
        raise ArithmeticError("normalization value vanishes")
    return c


# ---------------------------------------------------------------------------
# steps of the duality proof


def check_duality_steps(u, v) -> IdentityReport:
    """Exchange relation, raising relation and the step-4 product for one pair."""
    u, v = tuple(u), tuple(v)
    n = len(u)
    rep = IdentityReport("duality-steps", {"u": u, "v": v})
    with timed(rep):
        ku = K_family(u)
        vt, ub = tilde_point(v), bar_point(u)
        kuv = ku.substitute(vt.scale(A))
        for i in range(1, n):
            w = vt
            lhs = (T - 1) * w[i - 1] / (w[i - 1] - w[i]) * kuv \
                + (w[i - 1] - T * w[i]) / (w[i - 1] - w[i]) \
                * ku.substitute(tilde_point(_swap(v, n - i)).scale(A))
            rhs = (T - 1) * ub[i - 1] / (ub[i - 1] - ub[i]) * kuv \
                + (ub[i - 1] - T * ub[i]) / (ub[i - 1] - ub[i]) \
                * K_family(_swap(u, i)).substitute(vt.scale(A))
            _eq(rep, lhs, rhs, {"u": u, "v": v, "step": "exchange", "i": i})
        vb = bar_point(v)
        lhs = (A * vb[0].inverse() - 1) * ku.substitute(
            tilde_point(natural_shift(v, "raise")).scale(A))
        rhs = (A * ub[0].inverse() - 1) * K_family(natural_shift(u, "raise")).substitute(
            vt.scale(A))
        _eq(rep, lhs, rhs, {"u": u, "v": v, "step": "raising"})
        _eq(rep, K_family(v).substitute(tilde_point((0,) * n).scale(A)), ONE,
            {"v": v, "step": "base"})
        for m in range(3):
            vm = add_constant(v, -m)
            _eq(rep, vt.scale(Q ** m), tilde_point(vm), {"v": v, "m": m, "step": "tilde-shift"})
            prod = A_factor(u, m).substitute(vt.scale(A)) \
                * A_factor(vm, m).substitute(tilde_point(u).scale(A * Q ** (-m)))
            _eq(rep, prod, ONE, {"u": u, "v": v, "m": m, "step": "A-product"})
    return rep


# ---------------------------------------------------------------------------
# sweeps and registry


@dataclass(frozen=True)
class SweepConfig:
    """Index range: vectors in {lo..hi}^n whose minimal shift has weight <= max_weight."""

    n: int
    lo: int
    hi: int
    max_weight: int

    def __post_init__(self):
        if self.n < 1 or self.max_weight < 0 or self.lo > self.hi:
            raise ValueError(f"bad sweep bounds {self}")

    @classmethod
    def default(cls, n: int, max_weight: int | None = None) -> "SweepConfig":
        if n <= 2:
            return cls(n, -2, 3, 4 if max_weight is None else max_weight)
        return cls(n, 0, 2, 3 if max_weight is None else max_weight)

    def vectors(self):
        return vectors_in_box(self.n, self.lo, self.hi, self.max_weight)

    def compositions(self):
        return [c for c in compositions_upto(self.n, self.max_weight)
                if all(k <= max(self.hi, 0) for k in c)]

    def partitions(self):
        return [p for d in range(self.max_weight + 1) for p in partitions(self.n, d)
                if p in set(self.compositions())]

    def as_dict(self):
        return {"n": self.n, "lo": self.lo, "hi": self.hi, "max_weight": self.max_weight}


def _pairs(items):
    return [(a, b) for a in items for b in items]


def _sweep_duality(cfg):
    reps = [check_duality(u, v) for u, v in _pairs(cfg.vectors())]
    if cfg.n == 1:
        reps.append(check_closed_forms_n1(min(5, max(cfg.max_weight, 0) + 1)))
    return reps


def _sweep_transfer(cfg):
    reps = []
    for v in cfg.vectors():
        for which in TRANSFER_CASES:
            if which == "H" and cfg.n < 2:
                continue
            reps.append(check_transfer(v, which))
        reps.append(check_negative_degree(v))
    return reps


def _sweep_okounkov(cfg):
    parts = cfg.partitions()
    reps = [check_okounkov(l, m) for l, m in _pairs(parts)]
    reps += [check_symmetrization(a) for a in cfg.compositions()]
    return reps


def _sweep_hecke(cfg):
    if cfg.n < 2:
        return []
    return [verify_hecke_relations(cfg.n, min(cfg.max_weight, 3))]


REGISTRY: dict = {
    "duality": _sweep_duality,
    "twisted-duality": lambda c: [check_twisted_duality(u, v) for u, v in _pairs(c.vectors())],
    "primed-duality": lambda c: [check_primed_duality(u, v) for u, v in _pairs(c.vectors())],
    "theorem-a": lambda c: [check_theoremA(a) for a in c.compositions()],
    "theorem-c": lambda c: [check_theoremC(a, c.max_weight) for a in c.compositions()],
    "binomial": lambda c: [check_binomial(a) for a in c.compositions()],
    "dual-binomial": lambda c: [check_dual_binomial(a) for a in c.compositions()],
    "orthogonality": lambda c: [check_orthogonality(a, g) for a, g in _pairs(c.compositions())
                                if sum(g) <= sum(a)],
    "okounkov": _sweep_okounkov,
    "transfer": _sweep_transfer,
    "eval-relations": lambda c: [check_eval_relations(a) for a in c.compositions()],
    "hecke-relations": _sweep_hecke,
    "duality-steps": lambda c: [check_duality_steps(u, v) for u, v in _pairs(c.vectors())],
}


def register(name: str, sweep) -> None:
    """Add an identity; ``sweep(cfg)`` returns a list of reports."""
    REGISTRY[name] = sweep


def run_identity(name: str, cfg: SweepConfig) -> IdentityReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}")
    out = IdentityReport(name, cfg.as_dict())
    with timed(out):
        for rep in REGISTRY[name](cfg):
            out.checked += rep.checked
            out.witnesses.extend(rep.witnesses)
    return out


def run_suite(cfg: SweepConfig, names=None) -> list[IdentityReport]:
    return [run_identity(name, cfg) for name in (names or list(REGISTRY))]

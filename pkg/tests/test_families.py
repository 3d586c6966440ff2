import json

import pytest

from macinterp.combin import bar_point, compositions_upto, tilde_point
from macinterp.exactalg import A, ONE, Q, T, ZERO, XPoly, XRational, pochhammer
from macinterp.families import (CACHE, E_alpha, E_family, FamilyCache, FamilyTag, G,
                                G_eval_product, G_interpolation, G_prime, G_recursive,
                                K_family, K_family_shift, K_plus, K_prime, Kbar_family, O_alpha,
                                R_lambda, a_tau, binom, member, member_from_dict,
                                member_to_dict, tau_point)
from macinterp.heckeops import apply_s

RANGE = [a for n in (1, 2) for a in compositions_upto(n, 3)] + compositions_upto(3, 2)


def test_small_members():
    assert G((0, 0)) == XPoly.const(2, 1)
    assert G((1,)) == XPoly.var(1, 1) - 1
    assert G_recursive((0, 0, 1)) == XPoly.var(3, 3) - T ** -2
    assert E_alpha((0, 1)) == XPoly.var(2, 2)
    g = G_interpolation((0, 1))
    assert g.substitute(bar_point((0, 0))) == ZERO
    assert g.substitute(bar_point((1, 0))) == ZERO


@pytest.mark.parametrize("alpha", RANGE)
def test_oracle_and_vanishing(alpha):
    g = G_recursive.uncached(alpha)
    assert g == G_interpolation.uncached(alpha)
    assert g.coefficient(alpha) == ONE
    for b in compositions_upto(len(alpha), sum(alpha)):
        if b != alpha:
            assert g.substitute(bar_point(b)).is_zero()


@pytest.mark.parametrize("alpha", RANGE)
def test_eval_product(alpha):
    assert G_eval_product(alpha) == G(alpha).substitute(a_tau(len(alpha)))


def test_negative_degree_n1():
    x = XPoly.var(1, 1)
    for m in range(4):
        den = XPoly.const(1, 1)
        for j in range(1, m + 1):
            den = den * (XPoly.const(1, 1) - x * Q ** j)
        assert K_family((-m,)) == XRational(XPoly.const(1, pochhammer(Q * A, m)), den)


def test_primed_n1():
    x = XPoly.var(1, 1)
    for m in range(4):
        num = XPoly.const(1, 1)
        for j in range(m):
            num = num * (XPoly.const(1, 1) - x * Q ** j)
        assert K_prime((m,)) == XRational.lift(num) * pochhammer(A.inverse(), m).inverse()


@pytest.mark.parametrize("v", [(-1, 0), (0, -2), (-1, 1), (2, -1)])
def test_negative_degree_shift_independent(v):
    m = max(0, -min(v))
    assert K_family_shift(v, m) == K_family_shift(v, m + 1)
    assert K_family(v).substitute(a_tau(2)) == ONE


def test_primed_and_other_families():
    assert G_prime((0, 0)) == XPoly.const(2, 1)
    assert G_prime((1, 0)).substitute(tilde_point((0, 0))) == ZERO
    assert O_alpha((0, 0)) == XPoly.const(2, 1)
    assert O_alpha((2, 0)).degree() <= 2
    assert O_alpha((1, 0)).substitute(tau_point(2).inverse()) == ONE
    assert (O_alpha((1, 0)).substitute(bar_point((0, 1)).inverse())
            == K_family((0, 1)).substitute(tilde_point((1, 0)).scale(A)))
    assert Kbar_family((0, 0)) == XPoly.const(2, 1)
    assert Kbar_family((-1, 1)).substitute(tau_point(2)) == ONE
    x1, x2 = XPoly.var(2, 1), XPoly.var(2, 2)
    assert E_family((2, 1)) == E_family((1, 0)) * x1 * x2
    assert R_lambda((0, 0)) == XPoly.const(2, 1)
    assert apply_s(1, R_lambda((1, 0))) == R_lambda((1, 0))
    assert apply_s(1, K_plus((2, 1))) == K_plus((2, 1))


def test_binomial_values():
    assert binom((2, 1), (0, 0)) == ONE
    assert binom((2, 1), (2, 1)) == ONE
    assert binom((1, 0), (0, 1)) == ZERO
    # nonzero although (1,0) is not contained in (0,2) componentwise
    assert binom((0, 2), (1, 0)) != ZERO


def test_family_tags():
    assert FamilyTag.parse("Kcirc").inverted
    assert str(FamilyTag.parse("Gcirc")) == "Gcirc"
    with pytest.raises(ValueError):
        FamilyTag.parse("Ocirc")
    with pytest.raises(ValueError):
        FamilyTag.parse("Z")
    assert member("Gcirc", (1, 0)) == G((1, 0)).iota()


@pytest.mark.parametrize("tag,index", [("G", (1, 0)), ("K", (-1, 0)), ("Kprime", (0, 2)),
                                       ("Kbar", (-1, 1)), ("E", (0, 1, 1))])
def test_serialization_round_trip(tag, index):
    value = member(tag, index)
    d = json.loads(json.dumps(member_to_dict(tag, index, value)))
    assert member_from_dict(d) == value


def test_cache_spot_check():
    # cached values agree with a fresh uncached computation
    for a in [(2, 1), (0, 3), (1, 1, 0)]:
        assert G(a) == G_recursive.uncached(a)
    assert len(CACHE) > 0


def test_disk_cache(tmp_path):
    cache = FamilyCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return K_family((-1, 0))

    v1 = cache.get_or_compute(("K", (-1, 0)), compute)
    v2 = FamilyCache(tmp_path).get_or_compute(("K", (-1, 0)), compute)
    assert v1 == v2 and len(calls) == 1

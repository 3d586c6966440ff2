import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from macinterp.exactalg import FieldElem, XPoly, fe

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small = st.integers(-3, 3)


@st.composite
def field_polys(draw, max_terms=3):
    terms = draw(st.lists(st.tuples(small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)),
                          min_size=1, max_size=max_terms))
    out = FieldElem(0)
    for c, eq, et, ea in terms:
        out = out + FieldElem.monomial(eq, et, ea) * c
    return out


@st.composite
def field_elems(draw):
    num = draw(field_polys())
    den = draw(field_polys().filter(lambda d: not d.is_zero()))
    return num / den


@st.composite
def xpolys(draw, n=2, max_deg=2):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    items = draw(st.lists(st.tuples(exps, field_polys(2)), max_size=3))
    p = XPoly.const(n, 0)
    for e, c in items:
        p = p + XPoly.monomial(e, c)
    return p

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macinterp.combin import (all_permutations, bar_point, compositions_upto, containment,
                              diagram_stats, ell_w0, enumerate_compositions, format_vector,
                              inv_count, k_stat, n_stat, natural_shift, nprime_stat,
                              parse_vector, partitions, scalar_stats, sort_shortest, tau_alpha,
                              tilde_point, w0_word)
from macinterp.exactalg import ONE, Q, T
from macinterp.families import tau_point

vectors = st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(tuple)


def test_parse_and_format():
    assert parse_vector("2,0,-1") == (2, 0, -1)
    assert format_vector((2, 0, 1)) == "2,0,1"
    with pytest.raises(ValueError):
        parse_vector("1,,2")


def test_k_stat():
    assert (k_stat((0, 0), 1), k_stat((0, 0), 2)) == (0, 1)
    assert [k_stat((2, 1, 0), i) for i in (1, 2, 3)] == [0, 1, 2]
    assert (k_stat((0, 1), 1), k_stat((0, 1), 2)) == (1, 0)


def test_points():
    assert bar_point((0, 0)) == tau_point(2)
    assert bar_point((2, 1, 0)).coords == (Q ** 2, Q / T, T ** -2)
    assert bar_point((0, 1)).coords == (T.inverse(), Q)
    assert tilde_point((0, 0, 0)) == tau_point(3)
    assert tilde_point((4,)).coords == (Q ** -4,)
    # t^{n-1} w0(beta~) = bar(beta)^{-1}
    b = (1, 0)
    assert tilde_point(b).reversed().scale(T) == bar_point(b).inverse()


@given(vectors)
def test_bar_point_intertwines_natural_shift(v):
    assert bar_point(v).natural() == bar_point(natural_shift(v))
    assert natural_shift(natural_shift(v), "lower") == v


def test_sort_shortest():
    assert sort_shortest((2, 1))[1] == all_permutations(2)[0]
    vp, w = sort_shortest((0, 1))
    assert vp == (1, 0) and w.reduced_word == (1,)
    vp, w = sort_shortest((1, 0, 1))
    assert vp == (1, 1, 0) and w.reduced_word == (2,)


def test_natural_shift_examples():
    assert natural_shift((0, 0)) == (0, 1)
    assert natural_shift(natural_shift((3, -1)), "lower") == (3, -1)


def test_diagram_stats():
    assert diagram_stats((1,)) == {(1, 1): (0, 0, 0, 0)}
    d = diagram_stats((2,))
    assert [d[(1, j)][0] for j in (1, 2)] == [1, 0]
    assert [d[(1, j)][2] for j in (1, 2)] == [0, 1]
    assert diagram_stats((0, 1))[(2, 1)] == (0, 1, 0, 0)


def test_scalar_stats():
    assert inv_count((1, 0)) == 1 and inv_count((0, 1)) == 0
    assert nprime_stat((2, 1, 0)) == 1
    assert tau_alpha((0, 0)) == ONE
    a = (0, 2, 1)
    assert n_stat(a) == n_stat((2, 1, 0)) + ell_w0(3) - inv_count(a)
    assert scalar_stats(a).I == inv_count(a)


def test_enumeration():
    assert enumerate_compositions(2, 1) == [(1, 0), (0, 1)]
    assert len(enumerate_compositions(2, 2)) == 3
    assert len(compositions_upto(3, 3)) == 20
    assert partitions(3, 3) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
    assert containment((1, 0), (2, 1)) and not containment((0, 1), (1, 0))


def test_w0():
    for n in (1, 2, 3, 4):
        assert len(w0_word(n)) == ell_w0(n) == n * (n - 1) // 2

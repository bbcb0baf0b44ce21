import pytest
from hypothesis import given, settings, strategies as st

from lefcalc import (CurveClass, InputError, SeifertForm, SignedTwist,
                     Surface, SurfaceMismatch, add_page_handle,
                     intersection_number, torus_sum, twist_action)
from lefcalc.surface import (embed, extend_seifert, seifert_framing,
                             twist_matrix)
from lefcalc import intmat


def basis(s):
    return [s.basis_vector(i) for i in range(s.h1_rank)]


def test_rank_and_euler_characteristic():
    for g in range(3):
        for b in range(1, 4):
            s = Surface(g, b)
            assert s.h1_rank == 2 * g + b - 1
            assert s.euler_characteristic == 2 - 2 * g - b


def test_intersection_examples():
    s = Surface(1, 1)
    a1, b1 = basis(s)
    assert intersection_number(a1, b1) == 1
    assert intersection_number(b1, a1) == -1
    t = Surface(2, 1)
    a1, b1, a2, b2 = basis(t)
    assert intersection_number(a1 + b2, b1 - a2) == 2


def test_boundary_classes_pair_trivially():
    s = Surface(1, 3)
    for i in s.boundary_basis():
        d = s.basis_vector(i)
        assert all(intersection_number(d, x) == 0 for x in basis(s))


def test_twist_sends_b1_to_b1_plus_a1():
    s = Surface(1, 1)
    a1, b1 = basis(s)
    assert twist_action(SignedTwist(a1, 1), b1) == b1 + a1
    assert twist_action(SignedTwist(a1, -1), b1) == b1 - a1
    assert twist_action(SignedTwist(a1, 1), a1) == a1


def test_twist_then_inverse_is_identity():
    s = Surface(2, 2)
    c = s.basis_vector(0) + 2 * s.basis_vector(3) - s.basis_vector(4)
    t = SignedTwist(c, 1)
    for x in basis(s):
        assert twist_action(t.inverse(), twist_action(t, x)) == x


coeff_lists = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


@settings(max_examples=150, deadline=None)
@given(c=coeff_lists, x=coeff_lists, y=coeff_lists, sign=st.sampled_from([1, -1]))
def test_twist_preserves_intersection(c, x, y, sign):
    s = Surface(2, 3)
    t = SignedTwist(CurveClass(s, c), sign)
    X, Y = CurveClass(s, x), CurveClass(s, y)
    assert intersection_number(twist_action(t, X), twist_action(t, Y)) == intersection_number(X, Y)


@settings(max_examples=100, deadline=None)
@given(c=coeff_lists, x=coeff_lists, sign=st.sampled_from([1, -1]))
def test_twist_matrix_agrees_with_action(c, x, sign):
    s = Surface(2, 3)
    t = SignedTwist(CurveClass(s, c), sign)
    assert tuple(intmat.matvec(twist_matrix(t), x)) == twist_action(t, CurveClass(s, x)).coeffs


def test_default_seifert_form_examples():
    s = Surface(1, 1)
    L = SeifertForm.default(s)
    a1, b1 = basis(s)
    assert seifert_framing(L, a1) == 0
    assert seifert_framing(L, b1) == 0
    assert seifert_framing(L, a1 + b1) == 1
    assert seifert_framing(L, s.zero()) == 0


def test_seifert_form_antisymmetrizes_to_intersection_form():
    s = Surface(2, 3)
    L = SeifertForm.default(s)
    for x in basis(s):
        for y in basis(s):
            assert L(x, y) - L(y, x) == intersection_number(x, y)
    with pytest.raises(InputError):
        SeifertForm(s, intmat.zeros(s.h1_rank, s.h1_rank))


def test_add_page_handle_same_boundary():
    d = Surface(0, 1)
    a = add_page_handle(d)
    assert (a.genus, a.boundary_count, a.h1_rank) == (0, 2, 1)
    b = add_page_handle(Surface(1, 2))
    assert (b.genus, b.boundary_count) == (1, 3)
    assert all(intersection_number(b.basis_vector(b.h1_rank - 1), x) == 0 for x in basis(b))


def test_add_page_handle_join():
    a = add_page_handle(Surface(0, 1))
    t = add_page_handle(a, join=0)
    assert (t.genus, t.boundary_count) == (1, 1)
    assert intersection_number(t.basis_vector(0), t.basis_vector(1)) == 1
    with pytest.raises(InputError):
        add_page_handle(Surface(1, 1), join=0)


def test_torus_sum_adds_genus():
    s = Surface(0, 3)
    t = torus_sum(s)
    assert (t.genus, t.boundary_count, t.h1_rank) == (1, 3, s.h1_rank + 2)
    assert t.euler_characteristic == s.euler_characteristic - 2


def test_embed_and_extend_seifert():
    s = Surface(1, 1)
    L = SeifertForm.default(s)
    grown = torus_sum(add_page_handle(s))
    M = extend_seifert(L, grown)
    x = s.basis_vector(0) + s.basis_vector(1)
    assert M(embed(x, grown), embed(x, grown)) == L(x, x)
    for u in basis(grown):
        for v in basis(grown):
            assert M(u, v) - M(v, u) == intersection_number(u, v)
    with pytest.raises(SurfaceMismatch):
        embed(x, Surface(0, 2))


def test_mismatched_surfaces_rejected():
    with pytest.raises(SurfaceMismatch):
        Surface(1, 1).basis_vector(0) + Surface(0, 3).basis_vector(0)
    with pytest.raises(InputError):
        CurveClass(Surface(1, 1), (1, 0, 0))
    with pytest.raises(InputError):
        Surface(1, 1, [[0, 1], [1, 0]])

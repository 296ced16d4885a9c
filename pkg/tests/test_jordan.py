"""Exceptional Jordan algebra: determinant, trace forms, block structure."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e6kit.jordan import (JordanElement, Spinor, Vector2, basis_element,
                          det, det_trace_form, from_coords, from_matrix,
                          jordan_product, lorentz_dot, sigma, spinor_square,
                          to_coords, to_matrix, trace, vector2_det,
                          vector_block)
from e6kit.octonion import Octonion

rational = st.fractions(min_value=-6, max_value=6, max_denominator=4)
coord_lists = st.lists(rational, min_size=27, max_size=27)
octonions = st.builds(Octonion.from_rationals,
                      st.lists(rational, min_size=8, max_size=8))


def test_identity_invariants():
    e = JordanElement.identity()
    assert trace(e) == 3
    assert sigma(e) == 3
    assert det(e) == 1


def test_diag_det():
    x = JordanElement.diag(Fraction(2), Fraction(3), Fraction(5))
    assert det(x) == 30
    assert trace(x) == 10
    assert sigma(x) == 2 * 3 + 3 * 5 + 5 * 2


@given(coord_lists)
@settings(max_examples=40, deadline=None)
def test_coords_roundtrip(coords):
    assert to_coords(from_coords(coords)) == coords


@given(coord_lists)
@settings(max_examples=40, deadline=None)
def test_matrix_roundtrip(coords):
    x = from_coords(coords)
    assert to_coords(from_matrix(to_matrix(x))) == coords


@given(coord_lists, coord_lists)
@settings(max_examples=30, deadline=None)
def test_jordan_product_commutative(c1, c2):
    x, y = from_coords(c1), from_coords(c2)
    assert to_coords(jordan_product(x, y)) == to_coords(jordan_product(y, x))


@given(coord_lists)
@settings(max_examples=25, deadline=None)
def test_det_agrees_with_trace_form(coords):
    x = from_coords(coords)
    assert det(x) == det_trace_form(x)


@given(coord_lists)
@settings(max_examples=25, deadline=None)
def test_det_cyclic_under_type_permutation(coords):
    from e6kit.group import type_cycle
    x = from_coords(coords)
    assert det(type_cycle(x)) == det(x)


def test_basis_elements():
    for k in range(27):
        coords = to_coords(basis_element(k))
        assert coords[k] == 1
        assert all(v == 0 for i, v in enumerate(coords) if i != k)


@given(st.builds(Spinor, octonions, octonions))
@settings(max_examples=40, deadline=None)
def test_spinor_square_is_null(theta):
    v = spinor_square(theta)
    assert vector2_det(v) == 0


def test_lorentz_dot_mixed_signature():
    # t-like direction has negative self-dot, z-like positive.
    t = Vector2(Fraction(1), Fraction(1), Octonion.zero())
    z = Vector2(Fraction(1), Fraction(-1), Octonion.zero())
    q = Vector2(Fraction(0), Fraction(0), Octonion.unit("i"))
    assert lorentz_dot(t, t) == -2
    assert lorentz_dot(z, z) == 2
    assert lorentz_dot(q, q) == 2
    assert lorentz_dot(t, z) == 0


@given(coord_lists)
@settings(max_examples=25, deadline=None)
def test_vector_block_projection(coords):
    x = from_coords(coords)
    v = vector_block(x)
    assert v.tz_plus == x.p and v.tz_minus == x.m and v.q == x.a

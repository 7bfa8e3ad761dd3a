# -*- coding: UTF-8 -*-
# pylint:disable=missing-function-docstring
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from homhopf.exactlin import (LinMap, TensorIndex, TensorProduct, basis_vector, compose, compose_all, format_scalar,
                              identity_map, invert, parse_scalar, permute, render_vector, swap, tensor, tensor_all,
                              zero_map)
from homhopf.report import DimensionError, StructureError


def matrices(rows, cols):
    scalars = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(st.lists(scalars, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(LinMap)


def test_parse_scalar():
    assert parse_scalar("3/6") == Fraction(1, 2)
    assert parse_scalar("-4") == Fraction(-4)
    assert parse_scalar(7) == Fraction(7)
    assert parse_scalar(" 2 / 3 ") == Fraction(2, 3)
    with pytest.raises(ValueError):
        parse_scalar(0.5)
    with pytest.raises(ValueError):
        parse_scalar(True)
    with pytest.raises(ValueError):
        parse_scalar("1.5")


def test_format_scalar():
    assert format_scalar(Fraction(2, 4)) == "1/2"
    assert format_scalar(Fraction(-3)) == "-3"
    assert format_scalar(Fraction(0)) == "0"


def test_tensor_index():
    idx = TensorIndex([2, 3, 4])
    assert idx.size == 24
    assert idx.flat(1, 2, 3) == 23
    assert idx.flat(0, 1, 0) == 4
    assert idx.unflatten(23) == (1, 2, 3)
    assert list(idx)[:3] == [(0, 0, 0), (0, 0, 1), (0, 0, 2)]
    assert len(list(idx)) == 24
    with pytest.raises(DimensionError):
        idx.unflatten(24)
    with pytest.raises(DimensionError):
        idx.flat(1, 2)
    with pytest.raises(DimensionError):
        TensorIndex([2, 0])


def test_tensor_is_left_factor_major():
    f = LinMap([[1, 2], [3, 4]])
    g = LinMap([[0, 1], [1, 0], [5, 0]])
    fg = tensor(f, g)
    assert fg.cod_dim == 6 and fg.dom_dim == 4
    # column of e_1⊗e_0 is f(e_1)⊗g(e_0)
    expected = np.multiply.outer(f.column(1), g.column(0)).reshape(-1)
    assert list(fg.column(1 * 2 + 0)) == list(expected)
    assert fg.entries[5, 3] == f.entries[1, 1] * g.entries[2, 1]


def test_compose_and_identity():
    f = LinMap([[1, 2], [3, 4]])
    assert compose(f, identity_map(2)) == f
    assert identity_map(2) @ f == f
    assert (f @ f) == LinMap([[7, 10], [15, 22]])
    with pytest.raises(DimensionError):
        compose(f, zero_map(3, 3))


def test_invert():
    f = LinMap([[2, 1], [1, 1]])
    inv = invert(f)
    assert inv == LinMap([[1, -1], [-1, 2]])
    assert (f @ inv).is_identity()
    assert invert(LinMap.diagonal([1, 1, 2, 2])) == LinMap.diagonal([1, 1, Fraction(1, 2), Fraction(1, 2)])


def test_invert_singular():
    with pytest.raises(StructureError, match="not an automorphism"):
        invert(LinMap([[1, 2], [2, 4]]))
    with pytest.raises(DimensionError):
        invert(LinMap([[1, 2, 3], [2, 4, 5]]))


def test_permute_and_swap():
    s = swap(2, 3)
    # e_i⊗f_j -> f_j⊗e_i
    for i in range(2):
        for j in range(3):
            out = s.apply(basis_vector(6, i * 3 + j))
            assert list(out) == list(basis_vector(6, j * 2 + i))
    p = permute([2, 3, 4], [2, 0, 1])
    assert p.apply(basis_vector(24, TensorIndex([2, 3, 4]).flat(1, 2, 3)))[TensorIndex([4, 2, 3]).flat(3, 1, 2)] == 1
    with pytest.raises(DimensionError):
        permute([2, 3], [0, 0])


def test_tensor_product_stays_lazy_when_composed():
    f = LinMap([[1, 0, 1, 0]])
    t = tensor(identity_map(2), LinMap([[1, 1], [0, 1]]))
    assert isinstance(t, TensorProduct)
    composed = f @ t
    assert t.entries_pending()
    assert composed == LinMap([[1, 1, 1, 1]])


def test_render_vector():
    labels = ["1", "g", "x", "gx"]
    assert render_vector([0, 0, 0, 0], labels) == "0"
    assert render_vector([1, 0, -2, 0], labels) == "1 - 2 x"
    assert render_vector([0, -1, 0, Fraction(1, 2)], labels) == "-g + 1/2 gx"


def test_linmap_is_read_only():
    f = LinMap([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        f.entries[0, 0] = 5


@settings(max_examples=50, deadline=None)
@given(matrices(2, 2), matrices(3, 2), matrices(2, 3), matrices(2, 2))
def test_tensor_interchange_law(f, g, h, k):
    assert tensor(f, g) @ tensor(h, k) == tensor(f @ h, g @ k)


@settings(max_examples=50, deadline=None)
@given(matrices(2, 12), matrices(2, 3), matrices(2, 2), matrices(3, 3))
def test_lazy_contraction_matches_dense_product(f, a, b, c):
    t = tensor_all(a, b, c)
    assert compose(f, t) == LinMap(np.dot(f.entries, t.entries))
    g = LinMap(f.entries.T)
    left = tensor_all(LinMap(a.entries.T), b, c)
    assert compose(left, g) == LinMap(np.dot(left.entries, g.entries))


@settings(max_examples=50, deadline=None)
@given(matrices(3, 3))
def test_inverse_is_two_sided(f):
    try:
        inv = invert(f)
    except StructureError:
        assume(False)
    assert (f @ inv).is_identity()
    assert (inv @ f).is_identity()
    assert compose_all(f, inv, f) == f

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihspaces.linalg import RationalMatrix, kernel_basis, pivot_columns, rank, rref
from oracles import bareiss_rank


def int_matrices(max_side=6):
    return st.integers(0, max_side).flatmap(
        lambda r: st.integers(0, max_side).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: (rows, c))
        )
    )


def test_empty_matrix_has_rank_zero():
    assert rank(RationalMatrix.zeros(0, 0)) == 0


def test_identity_rank():
    assert rank(RationalMatrix.identity(3)) == 3


def test_triangle_incidence_rank():
    # edges (01, 02, 12) of the full simplex on 3 vertices
    d1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert bareiss_rank(d1) == 2
    assert rank(RationalMatrix.from_rows(d1)) == 2


def test_kernel_of_identity_is_empty():
    assert kernel_basis(RationalMatrix.identity(2)) == []


def test_kernel_of_zero_map():
    basis = kernel_basis(RationalMatrix.zeros(2, 3))
    assert len(basis) == 3


def test_kernel_of_tetrahedron_boundary():
    from ihspaces.complexes import chain_complex, simplex_boundary

    d2 = chain_complex(simplex_boundary(3)).boundary(2)
    basis = kernel_basis(d2)
    assert len(basis) == 1
    (z,) = basis
    assert all(x == 0 for x in d2.apply(z))
    # the fundamental cycle uses every triangle with coefficient +-1
    assert {abs(x) for x in z} == {1}


def test_shape_is_enforced():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, ((Fraction(1),),))


def test_floats_rejected():
    with pytest.raises(TypeError):
        RationalMatrix.from_rows([[0.5]])


def test_rational_entries():
    m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(m) == 1
    red, piv = rref(m)
    assert piv == [0]
    assert red.entries[0] == (1, Fraction(2, 3))


def test_pivot_columns_first_nonzero_order():
    m = RationalMatrix.from_rows([[0, 1, 1, 0], [0, 2, 2, 1]])
    assert pivot_columns(m) == [1, 3]


def test_matmul_and_kron():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ RationalMatrix.identity(2)) == a
    k = RationalMatrix.identity(2).kron(a)
    assert k.shape == (4, 4) and k[2, 2] == 1 and k[3, 3] == 4 and k[0, 2] == 0


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_matches_bareiss(data):
    rows, cols = data
    m = RationalMatrix.from_rows(rows, cols=cols)
    assert rank(m) == bareiss_rank(rows)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_nullity_and_transpose(data):
    rows, cols = data
    m = RationalMatrix.from_rows(rows, cols=cols)
    r = rank(m)
    basis = kernel_basis(m)
    assert 0 <= r <= min(m.rows, m.cols)
    assert r + len(basis) == cols
    assert rank(m.transpose()) == r
    for v in basis:
        assert all(x == 0 for x in m.apply(v))
    if basis:
        assert rank(RationalMatrix.from_columns(basis, rows=cols)) == len(basis)

import numpy as np
import pytest
from hypothesis import given, settings

from okubo.algebra import OkuboElement, element
from okubo.matrix_model import (
    HermMatrix3,
    from_matrix,
    matrix_norm,
    matrix_polar,
    matrix_star,
    model_basis,
    to_matrix,
)
from okubo.scalar import ONE, ZERO, ComplexScalar, FieldScalar

from conftest import NP_BASIS, elements, np_coords, np_star_matrix

E_M = HermMatrix3([[2, 0, 0], [0, -1, 0], [0, 0, -1]])


def test_e_is_idempotent():
    assert matrix_star(E_M, E_M) == E_M


def test_zero_annihilates():
    h1 = model_basis()[1]
    assert matrix_star(HermMatrix3.zero(), h1) == HermMatrix3.zero()


def test_h1_h2_against_numpy():
    h1, h2 = model_basis()[1], model_basis()[2]
    got = matrix_star(h1, h2).to_numpy()
    want = np_star_matrix(NP_BASIS[1], NP_BASIS[2])
    assert np.allclose(got, want, atol=1e-12)


def test_norm_examples():
    assert matrix_norm(E_M) == ONE
    assert matrix_norm(HermMatrix3.zero()) == ZERO
    assert matrix_norm(model_basis()[1]) == ONE


def test_basis_is_orthonormal():
    B = model_basis()
    for i, a in enumerate(B):
        for j, b in enumerate(B):
            assert matrix_polar(a, b) == (2 if i == j else 0)
    # also against the independent numpy basis
    assert np.allclose(np.array([b.to_numpy() for b in B]), NP_BASIS)


def test_to_matrix_examples():
    assert to_matrix(OkuboElement.basis(0)) == E_M
    assert to_matrix(OkuboElement.zero()) == HermMatrix3.zero()
    assert to_matrix(element(1, 1, 0, 0, 0, 0, 0, 0)) == E_M + model_basis()[1]


def test_from_matrix_examples():
    assert from_matrix(E_M) == OkuboElement.basis(0)
    assert from_matrix(E_M + model_basis()[7]) == element(1, 0, 0, 0, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        from_matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_rejects_bad_matrices():
    with pytest.raises(ValueError):
        HermMatrix3([[1, 0, 0], [0, 0, 0], [0, 0, 0]])  # not traceless
    with pytest.raises(ValueError):
        HermMatrix3([[0, ComplexScalar(0, 1), 0], [ComplexScalar(0, 1), 0, 0], [0, 0, 0]])


def test_basis_closure():
    B = model_basis()
    for a in B:
        for b in B:
            matrix_star(a, b)  # validates Hermitian and traceless


@settings(max_examples=30, deadline=None)
@given(elements, elements)
def test_composition_flexibility_scl(x, y):
    X, Y = to_matrix(x), to_matrix(y)
    XY = matrix_star(X, Y)
    assert matrix_norm(XY) == matrix_norm(X) * matrix_norm(Y)
    left = matrix_star(XY, X)
    assert left == matrix_star(X, matrix_star(Y, X))
    assert left == Y.scale(matrix_norm(X))


@settings(max_examples=30, deadline=None)
@given(elements)
def test_positive_definite(x):
    n = matrix_norm(to_matrix(x))
    assert n.sign() == (0 if x.is_zero() else 1)


@settings(max_examples=30, deadline=None)
@given(elements)
def test_roundtrip(x):
    assert from_matrix(to_matrix(x)) == x
    assert np.allclose(np_coords(to_matrix(x).to_numpy()), [float(c) for c in x.coords])


def test_scalar_term_is_multiple_of_identity():
    # without the -Tr(xy)/3 * I shift the product of e with itself is not traceless
    e = E_M.to_numpy()
    raw = (3 + 1j * np.sqrt(3)) / 6 * e @ e + (3 - 1j * np.sqrt(3)) / 6 * e @ e
    assert abs(np.trace(raw)) > 1
    assert abs(np.trace(np_star_matrix(e, e))) < 1e-12
    assert FieldScalar(0) == ZERO

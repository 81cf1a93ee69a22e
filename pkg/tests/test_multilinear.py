import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import kvectors
from so3five.multilinear import (
    KVector,
    Tensor2,
    basis,
    bivector_to_matrix,
    hodge_star,
    inner,
    interior,
    matrix_to_bivector,
    perm_sign,
    vol,
    wedge,
)


def test_perm_sign():
    assert perm_sign([0, 1, 2]) == 1
    assert perm_sign([1, 0, 2]) == -1
    assert perm_sign([2, 0, 1]) == 1


def test_blade_reordering_picks_up_the_sign():
    assert KVector.blade(2, 1) == -KVector.blade(1, 2)
    assert KVector.blade(1, 1).is_zero()


def test_hodge_of_basis_blades():
    assert hodge_star(KVector.blade(1, 2)) == KVector.blade(3, 4, 5)
    assert hodge_star(KVector.blade(1)) == KVector.blade(2, 3, 4, 5)
    assert hodge_star(KVector.scalar(1)) == vol()


@given(kvectors(2))
def test_star_star_is_identity_in_odd_dimension(a):
    assert hodge_star(hodge_star(a)) == a


@given(kvectors(1), kvectors(2), kvectors(2))
def test_wedge_graded_commutativity_and_associativity(x, a, b):
    assert wedge(x, a) == wedge(a, x)
    assert wedge(a, b) == wedge(b, a)
    assert wedge(x, x).is_zero()
    assert wedge(wedge(x, a), b) == wedge(x, wedge(a, b))


@given(kvectors(2), kvectors(2))
def test_hodge_pairing(a, b):
    assert wedge(a, hodge_star(b)) == vol() * inner(a, b)


@given(kvectors(1), kvectors(3), kvectors(2))
def test_interior_is_adjoint_to_wedge(x, w, u):
    assert inner(interior(x, w), u) == inner(w, wedge(x, u))


@given(kvectors(1), kvectors(2), kvectors(2))
def test_interior_is_an_antiderivation(x, a, b):
    lhs = interior(x, wedge(a, b))
    rhs = wedge(interior(x, a), b) + wedge(a, interior(x, b))
    assert lhs == rhs


@given(kvectors(2))
def test_bivector_matrix_round_trip(a):
    m = bivector_to_matrix(a)
    assert np.all(m == -m.T)
    assert matrix_to_bivector(m) == a


def test_basis_sizes():
    assert [len(basis(k)) for k in range(6)] == [1, 5, 10, 10, 5, 1]


@given(st.integers(0, 5))
def test_float_and_exact_agree(k):
    for b in basis(k):
        assert np.allclose(hodge_star(b.to_float()).components, hodge_star(b).to_float().components)


def test_mode_mismatch_is_rejected():
    with pytest.raises(TypeError):
        KVector.blade(1) + KVector.blade(1, mode="float")


def test_tensor2_flags():
    m = np.array([[0, 1], [-1, 0]], dtype=float)
    t = Tensor2(np.pad(m, ((0, 3), (0, 3))), "float")
    assert t.is_skew and not t.is_symmetric and t.is_traceless

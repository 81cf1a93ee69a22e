"""Curvature maps, their decomposition and the worked example."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import kvectors, rationals
from so3five import linalg as la
from so3five.analysis import check_star_T
from so3five.curvature import (
    CurvatureDecomposition,
    CurvatureMap,
    RangeError,
    antisym,
    check_L27,
    check_S9,
    chi_killing_t,
    eta_prime,
    k_minus,
    k_nu,
    k_plus,
    k_scalar,
    lambda23_complement_basis,
    lambda27_basis_ricci,
    lambda27_basis_torsion,
    psi_decompose,
    psi_inverse,
    ricci,
    ricci_parts,
    sym29_basis,
)
from so3five.multilinear import KVector, Tensor2, bivector_to_matrix, inner, matrix_to_bivector
from so3five.representation import projector, projector_lambda2
from so3five.scalars import EXACT, FLOAT, QF
from so3five.torsion import TorsionTensor


def diag(*v):
    return la.asarray(np.diag([Fraction(x) for x in v]).astype(object), EXACT)


@st.composite
def symmetric(draw, traceless=False):
    m = la.zeros((5, 5), EXACT)
    for i in range(5):
        for j in range(i, 5):
            m[i, j] = m[j, i] = QF(draw(rationals))
    if traceless:
        m = m - la.eye(5, EXACT) * (sum(m[i, i] for i in range(5)) / 5)
    return Tensor2(m, EXACT)


@st.composite
def skew(draw):
    m = la.zeros((5, 5), EXACT)
    for i in range(5):
        for j in range(i + 1, 5):
            m[i, j] = QF(draw(rationals))
            m[j, i] = -m[i, j]
    return Tensor2(m, EXACT)


@st.composite
def curvature_maps(draw):
    raw = np.array([[QF(draw(rationals)) for _ in range(10)] for _ in range(10)], dtype=object)
    return CurvatureMap(projector_lambda2() @ raw, EXACT)


class TestExample:
    """The homogeneous example with T = e124 + 2 e135 and K = 2 <., k3> k3."""

    t = TorsionTensor.from_components({(1, 2, 4): 1, (1, 3, 5): 2})
    k = CurvatureMap.rank_one_kappa3(2)

    def test_ricci_and_scalar(self):
        rp, rm, s = ricci_parts(self.k)
        assert la.equal(ricci(self.k).matrix, diag(0, 8, 2, 8, 2))
        assert s == 20
        assert la.all_zero(rm.matrix)

    def test_traceless_ricci_and_alternation(self):
        d = psi_decompose(self.k)
        assert la.equal(d.eta.matrix, diag(-4, 4, -2, 4, -2))
        assert d.A.coeff(1, 2, 3, 5) == 0
        assert d.A.coeff(2, 3, 4, 5) == Fraction(-4, 3)

    def test_star_torsion(self):
        want = -(KVector.blade(2, 4) * 2 + KVector.blade(3, 5))
        assert self.t.star() == want
        chk = check_star_T(self.t)
        assert chk.holds and chk.residual == 0

    def test_vanishing_components(self):
        assert check_S9(self.k).holds and check_S9(self.k).residual == 0
        assert check_L27(self.k).holds and check_L27(self.k).residual == 0

    def test_not_constant_curvature(self):
        assert chi_killing_t(self.k) is None


@given(curvature_maps())
def test_psi_round_trip(k):
    assert psi_inverse(psi_decompose(k)) == k


@given(kvectors(4), skew(), rationals, symmetric(traceless=True))
def test_constructors_land_in_their_own_component(nu, rm, s, eta):
    z4 = KVector.zero(4)
    z2 = Tensor2(la.zeros((5, 5), EXACT), EXACT)
    assert psi_decompose(k_nu(nu)) == CurvatureDecomposition(nu, z2, QF(0), z2)
    assert psi_decompose(k_minus(rm)) == CurvatureDecomposition(z4, rm, QF(0), z2)
    assert psi_decompose(k_scalar(s)) == CurvatureDecomposition(z4, z2, QF(s), z2)
    assert psi_decompose(k_plus(eta)) == CurvatureDecomposition(z4, z2, QF(0), eta)


@given(kvectors(4))
def test_k_nu_is_ricci_flat(nu):
    assert not la.to_float_array(ricci(k_nu(nu)).matrix).any()
    assert antisym(k_nu(nu)) == nu


def test_range_is_enforced():
    raw = la.zeros((10, 10), EXACT)
    raw[0, 0] = QF(1)
    with pytest.raises(RangeError, match="residual"):
        CurvatureMap(raw)


@given(st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_killing_scale_of_a_multiple_of_the_projection(lam):
    k = CurvatureMap.projection() * lam
    assert chi_killing_t(k) == 1 / lam
    assert chi_killing_t(CurvatureMap.projection() * (-lam)) is None


def test_flat_has_no_killing_scale():
    assert chi_killing_t(CurvatureMap.zero()) is None


@pytest.mark.parametrize("bs", [lambda27_basis_torsion, lambda27_basis_ricci], ids=["torsion", "ricci"])
def test_listed_bivectors_span_the_minus_eight_space(bs):
    m = np.stack([bivector_to_matrix(b).reshape(-1) for b in bs()], axis=1)
    p = projector("L27")
    assert la.equal(p @ m, m)
    assert la.rank(m) == 7


def test_listed_symmetric_set_spans_the_four_space():
    m = np.stack([t.matrix.reshape(-1) for t in sym29_basis()], axis=1)
    p = projector("S9")
    assert la.equal(p @ m, m)
    assert la.rank(m) == 9 == la.rank(p)
    assert len(sym29_basis()) == 10


def test_complement_basis_is_orthogonal_to_the_summand():
    p = projector_lambda2()
    bs = lambda23_complement_basis()
    assert len(bs) == 7
    for b in bs:
        assert not (p @ b.components).any()


@given(skew())
def test_eta_prime_on_skew(e):
    rhs = bivector_to_matrix(KVector(2, projector_lambda2() @ matrix_to_bivector(e.matrix).components)) * 5
    assert la.equal(eta_prime(e).matrix, rhs)


@given(symmetric())
def test_eta_prime_on_symmetric(s):
    e1 = eta_prime(s)
    e2 = eta_prime(e1)
    assert la.equal(e1.matrix + e2.matrix, s.matrix * 12 + la.eye(5, EXACT) * (s.trace * 6))


def test_float_mode_decomposition_matches_exact():
    k = CurvatureMap.rank_one_kappa3(2) + k_nu(KVector.blade(1, 2, 3, 4))
    d, df = psi_decompose(k), psi_decompose(k.to_float())
    assert np.allclose(la.to_float_array(d.eta.matrix), df.eta.matrix, atol=1e-12)
    assert np.allclose(la.to_float_array(d.A.components), df.A.components, atol=1e-12)
    assert df.mode == FLOAT
    assert abs(inner(df.A, df.A) - float(inner(d.A, d.A))) < 1e-12

"""The Q tensor and its vanishing test."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from conftest import kvectors, unit_y
from so3five import linalg as la
from so3five.curvature import CurvatureMap, psi_decompose
from so3five.multilinear import KVector, Tensor2, basis, hodge_star
from so3five.qtensor import q_raw, q_reduced, q_reduced_in_frame, q_vanishes, sphere_points, split_vector
from so3five.representation import Frame, h_psi, kappa_frame, standard_kappa, upsilon_op_matrix
from so3five.scalars import FLOAT, R3
from so3five.twistor import TwistorPoint, xi

EXAMPLE = psi_decompose(CurvatureMap.rank_one_kappa3(2))
WITNESS_X = KVector.blade(1) * (R3 / 2) + KVector.blade(4) * Fraction(1, 2)


def eta_null(v: KVector) -> Tensor2:
    """The traceless form paired with A = *v so that Q vanishes identically."""
    return Tensor2(upsilon_op_matrix(v) * Fraction(12, 5), "exact")


def test_example_witness_value():
    kt = standard_kappa()
    assert q_reduced(EXAMPLE.A, EXAMPLE.eta, kt.k1, WITNESS_X) == -18 * R3
    assert q_reduced_in_frame(EXAMPLE.A, EXAMPLE.eta, Frame.standard(), KVector.blade(2)) == 0


def test_example_q_does_not_vanish():
    res = q_vanishes(EXAMPLE.A, EXAMPLE.eta)
    assert not res.vanishes
    assert res.hypothesis_ok and res.method == "reduction"
    s, x, v = res.witness
    assert v != 0 and q_reduced(EXAMPLE.A, EXAMPLE.eta, s, x) == v


def test_raw_polynomial_with_literal_norm_factors_differs():
    kt = standard_kappa()
    assert q_raw(EXAMPLE.A, EXAMPLE.eta, kt.k1, WITNESS_X) == -18 * R3
    assert q_raw(EXAMPLE.A, EXAMPLE.eta, kt.k1, WITNESS_X, literal_norm=True) == -114 * R3


@given(unit_y(), kvectors(1), kvectors(1))
def test_raw_and_reduced_agree_on_the_sphere(y, v, x):
    a = hodge_star(v)
    eta = Tensor2(upsilon_op_matrix(x), "exact")
    s = TwistorPoint(list(y)).sigma
    assert q_raw(a, eta, s, x) == q_reduced(a, eta, s, x)


@given(kvectors(1), unit_y(), kvectors(1))
def test_null_relation(v, y, x):
    s = TwistorPoint(list(y)).sigma
    assert q_reduced(hodge_star(v), eta_null(v), s, x) == 0


@given(kvectors(1))
def test_null_relation_passes_the_decision(v):
    res = q_vanishes(hodge_star(v), eta_null(v))
    assert res.vanishes and res.witness is None and res.residual == 0


@given(unit_y(), kvectors(1))
def test_q_vanishes_on_xi_and_vertical_directions(y, v):
    s = TwistorPoint(list(y)).sigma
    a, eta = EXAMPLE.A, EXAMPLE.eta
    assert q_reduced(a, eta, s, xi(s)) == 0
    px, pv, rest = split_vector(s, v)
    assert q_reduced(a, eta, s, pv) == 0
    assert px + pv + rest == v


def test_frame_independence_under_the_stabilizer():
    a, eta = EXAMPLE.A, EXAMPLE.eta
    frame = Frame.standard()
    other = frame.transformed_by(h_psi(Fraction(3, 5), Fraction(4, 5)))
    assert kappa_frame(other).k3 == kappa_frame(frame).k3
    for x in basis(1):
        v0 = q_reduced(a, eta, standard_kappa().k3, x)
        assert q_reduced_in_frame(a, eta, frame, x) == v0
        assert q_reduced_in_frame(a, eta, other, x) == v0


def test_grid_fallback_is_flagged():
    eta = Tensor2(la.asarray(np.diag([1, -1, 0, 0, 0]).astype(object), "exact"), "exact")
    res = q_vanishes(KVector.zero(4), eta)
    assert not res.hypothesis_ok and res.method == "grid"
    assert not res.vanishes


def test_sphere_points_are_unit_and_rational():
    for size, n in (("small", 30), ("default", None)):
        pts = sphere_points(size=size)
        if n is not None:
            assert len(pts) == n
        for y in pts:
            assert sum(c * c for c in y) == 1


def test_off_sphere_sigma_is_rejected():
    with pytest.raises(ValueError, match="sphere"):
        q_reduced(EXAMPLE.A, EXAMPLE.eta, standard_kappa().k1 * 2, WITNESS_X)


def test_float_mode():
    d = psi_decompose(CurvatureMap.rank_one_kappa3(2, mode=FLOAT))
    s = standard_kappa(FLOAT).k1
    assert abs(q_reduced(d.A, d.eta, s, WITNESS_X.to_float()) + 18 * 3**0.5) < 1e-12
    assert not q_vanishes(d.A, d.eta).vanishes

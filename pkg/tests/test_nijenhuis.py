"""Nijenhuis tensors and Levi forms, checked against the flat sympy model."""

from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

import flat_model
from conftest import kvectors, rationals
from so3five import linalg as la
from so3five.curvature import CurvatureMap
from so3five.multilinear import KVector, basis, hodge_star, inner
from so3five.nijenhuis import (
    contact_basis,
    cr_nijenhuis,
    levi_form,
    levi_j_invariance_residual,
    nijenhuis,
    nijenhuis_horizontal,
    nijenhuis_horizontal_table,
    nijenhuis_mixed,
)
from so3five.representation import standard_kappa
from so3five.scalars import R3, to_float
from so3five.torsion import TorsionTensor
from so3five.twistor import TangentPair, TwistorPoint, d_eta, xi

STRUCTURES = [(1, "+"), (1, "-"), (2, "+"), (2, "-")]
EX_T = TorsionTensor.from_components({(1, 2, 4): 1, (1, 3, 5): 2})
EX_K = CurvatureMap.rank_one_kappa3(2)


def vertical(u, b):
    """The vertical vector with fibre velocity ``b`` at ``y = (u1, u2, y3)``, as in the flat model."""
    y3 = sp.sqrt(1 - sp.Rational(u[0]) ** 2 - sp.Rational(u[1]) ** 2)
    b3 = -(sp.Rational(u[0]) * b[0] + sp.Rational(u[1]) * b[1]) / y3
    y = (Fraction(u[0]), Fraction(u[1]), Fraction(str(y3)))
    return TwistorPoint(list(y)), standard_kappa().combine([b[0], b[1], Fraction(str(b3))])


def sympy_value(x) -> float:
    return float(sp.N(x, 30))


ORACLE_CASES = [((0, 0), 2, (1, 0)), ((Fraction(1, 3), Fraction(2, 3)), 0, (1, 2)), ((Fraction(1, 3), Fraction(2, 3)), 3, (-1, 1))]


@pytest.mark.parametrize("n,sign", STRUCTURES)
@pytest.mark.parametrize("u,xi_index,b", ORACLE_CASES)
def test_mixed_nijenhuis_matches_the_flat_model(n, sign, u, xi_index, b):
    p, v = vertical(u, b)
    got = nijenhuis_mixed(n, sign, p, KVector.blade(xi_index + 1), v)
    want = flat_model.mixed_at(n, 1 if sign == "+" else -1, tuple(sp.Rational(c) for c in u), xi_index, b)
    assert all(sympy_value(c) == pytest.approx(0, abs=1e-12) for c in want[5:])
    assert np.allclose(la.to_float_array(got.horizontal.components), [sympy_value(c) for c in want[:5]], atol=1e-12)
    assert got.vertical.is_zero()


@pytest.mark.parametrize("sign", ["+", "-"])
@pytest.mark.parametrize("u,xi_index,b", ORACLE_CASES)
def test_d_eta_matches_the_flat_model(sign, u, xi_index, b):
    p, v = vertical(u, b)
    got = d_eta(1, p, sign, TangentPair.hor(KVector.blade(xi_index + 1)), TangentPair.ver(v))
    want = flat_model.d_eta_at(1, 1 if sign == "+" else -1, tuple(sp.Rational(c) for c in u), xi_index, b)
    assert to_float(got) == pytest.approx(sympy_value(want), abs=1e-12)


def test_plus_one_mixed_part_vanishes():
    p = TwistorPoint([Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)])
    for v in p.vertical_basis():
        for x in basis(1):
            assert nijenhuis_mixed(1, "+", p, x, v).horizontal.is_zero()


def test_case_formulas_agree_with_the_derived_form_for_plus():
    p = TwistorPoint([Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)])
    for n in (1, 2):
        for v in p.vertical_basis():
            for x in basis(1):
                assert nijenhuis_mixed(n, "+", p, x, v, "closed") == nijenhuis_mixed(n, "+", p, x, v)


def test_horizontal_table_equals_pointwise_evaluation():
    p = TwistorPoint([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)])
    kt = p.triple
    for n, sign in STRUCTURES:
        hor, ver = nijenhuis_horizontal_table(n, sign, EX_T, EX_K, p)
        for i, x in enumerate(basis(1)):
            for j, y in enumerate(basis(1)):
                got = nijenhuis_horizontal(n, sign, EX_T, EX_K, p, x, y)
                assert la.equal(hor[i, j], got.horizontal.components)
                assert la.equal(ver[i, j], kt.coords(got.vertical))


def test_minus_two_vertical_witness():
    p = TwistorPoint([0, 0, 1])
    got = nijenhuis_mixed(2, "-", p, KVector.blade(2), standard_kappa().k1)
    assert got.horizontal == KVector.blade(5) * -4


def test_bilinear_assembly_is_skew():
    p = TwistorPoint([0, 0, 1])
    a = TangentPair(KVector.blade(1), standard_kappa().k1)
    b = TangentPair.hor(KVector.blade(3))
    for n, sign in STRUCTURES:
        assert nijenhuis(n, sign, EX_T, EX_K, p, a, b) == -nijenhuis(n, sign, EX_T, EX_K, p, b, a)


@settings(max_examples=10)
@given(st.integers(0, 5), st.integers(0, 5), rationals, rationals)
def test_levi_form_is_minus_d_eta_on_the_contact_distribution(i, j, c1, c2):
    p = TwistorPoint([Fraction(2, 3), Fraction(-2, 3), Fraction(1, 3)])
    cb = contact_basis(p)
    a = cb[i] * c1 + cb[(i + 1) % 6]
    b = cb[j] * c2 + cb[(j + 3) % 6]
    for n, sign in STRUCTURES:
        assert levi_form(n, sign, p, EX_T, a, b) == -d_eta(1, p, sign, a, b, EX_T)


def test_levi_form_rejects_chi():
    p = TwistorPoint([0, 0, 1])
    with pytest.raises(ValueError, match="contact"):
        levi_form(1, "+", p, None, TangentPair.hor(xi(p.sigma)), TangentPair.hor(KVector.blade(3)))


POINTS = [[0, 0, 1], [Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)]]


@pytest.mark.parametrize("y", POINTS)
@pytest.mark.parametrize(
    "torsion",
    [TorsionTensor.zero(), EX_T, TorsionTensor(hodge_star(standard_kappa().combine([1, -2, 3])))],
    ids=["zero", "example", "kappa"],
)
def test_levi_form_j_invariant_for_plus_one_when_star_t_in_summand(y, torsion):
    assert levi_j_invariance_residual(1, "+", TwistorPoint(y), torsion) == 0


@pytest.mark.parametrize("y", POINTS)
def test_levi_form_not_j_invariant_for_other_torsion(y):
    t = TorsionTensor.from_components({(1, 2, 3): 1})
    assert levi_j_invariance_residual(1, "+", TwistorPoint(y), t) > 0


@pytest.mark.parametrize("y", POINTS)
def test_levi_form_invariance_of_the_other_structures_at_zero_torsion(y):
    p = TwistorPoint(y)
    assert levi_j_invariance_residual(1, "-", p, None) > 0
    assert levi_j_invariance_residual(2, "+", p, None) > 0
    assert levi_j_invariance_residual(2, "-", p, None) == 0


@pytest.mark.parametrize("y", POINTS)
def test_cr_nijenhuis_vanishes_for_the_example(y):
    p = TwistorPoint(y)
    hs = [b.horizontal for b in contact_basis(p)[:4]]
    for i, a in enumerate(hs):
        for b in hs[i + 1 :]:
            assert cr_nijenhuis(EX_K, p, a, b).is_zero()


def test_cr_nijenhuis_sees_the_nine_dimensional_part_only():
    from so3five.curvature import k_minus, k_plus, sym29_basis
    from so3five.multilinear import Tensor2, bivector_to_matrix

    p = TwistorPoint([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)])
    hs = [b.horizontal for b in contact_basis(p)[:4]]
    pairs = [(a, b) for i, a in enumerate(hs) for b in hs[i + 1 :]]
    k9 = k_plus(sym29_basis()[0])
    assert any(not cr_nijenhuis(k9, p, a, b).is_zero() for a, b in pairs)
    k7 = k_minus(Tensor2(bivector_to_matrix(KVector.blade(1, 5)), "exact"))
    assert all(cr_nijenhuis(k7, p, a, b).is_zero() for a, b in pairs)


@given(kvectors(1))
def test_witness_pair_lies_in_the_contact_distribution(x):
    p = TwistorPoint([0, 0, 1])
    assert inner(KVector.blade(3), xi(p.sigma)) == 0
    assert d_eta(1, p, "+", TangentPair.hor(KVector.blade(3)), TangentPair.ver(standard_kappa().k1)) == -R3


def test_levi_witness_value():
    p = TwistorPoint([0, 0, 1])
    a, b = TangentPair.hor(KVector.blade(3)), TangentPair.ver(standard_kappa().k1)
    for n, sign in STRUCTURES:
        assert levi_form(n, sign, p, None, a, b) == R3


@pytest.mark.xfail(strict=True, reason="the Levi form equals -d eta, which is +sqrt3 on this pair")
def test_levi_witness_negative_value():
    p = TwistorPoint([0, 0, 1])
    a, b = TangentPair.hor(KVector.blade(3)), TangentPair.ver(standard_kappa().k1)
    assert levi_form(2, "+", p, None, a, b) == -R3

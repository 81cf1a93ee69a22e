"""Acceptance criteria, one test (or group) per criterion.

Each criterion records a ``criterion N: <claim>: PASS|FAIL`` line; the lines
are printed at the end of the module (and when the file is run directly).
Claims that the implementation does not reproduce are kept as strict
``xfail`` tests so that a silent change in either direction is noticed.
"""

from __future__ import annotations

import time
from fractions import Fraction

import numpy as np
import pytest

import builders
from so3five import linalg as la
from so3five.analysis import analyze, check_star_T, is_normal
from so3five.curvature import (
    CurvatureMap,
    check_L27,
    check_S9,
    chi_killing_t,
    eta_prime,
    k_minus,
    k_nu,
    k_plus,
    k_scalar,
    lambda27_basis_ricci,
    lambda27_basis_torsion,
    psi_decompose,
    psi_inverse,
    ricci,
    sym29_basis,
)
from so3five.identities import run_suite
from so3five.multilinear import KVector, Tensor2, basis, bivector_to_matrix, inner, matrix_to_bivector
from so3five.qtensor import q_reduced
from so3five.representation import (
    DIMENSIONS,
    EIGENVALUES,
    Frame,
    _upsilon_basis_ops,
    _upsilon_products,
    eigen_multiplicities,
    kappa_frame,
    projector,
    projector_lambda2,
    standard_kappa,
    upsilon_hat_matrix,
    upsilon_tensor,
)
from so3five.scalars import EXACT, FLOAT, QF, R2, R3
from so3five.torsion import TorsionTensor
from so3five.twistor import TangentPair, TwistorPoint, d_eta, f_matrix, omega, phi_matrix, xi, xi_polynomial
from so3five.nijenhuis import nijenhuis_mixed

LINES: dict[str, str] = {}


def record(key: str, claim: str, ok: bool, note: str = "") -> None:
    LINES[key] = "criterion %s: %s: %s%s" % (key, claim, "PASS" if ok else "FAIL", note)
    print(LINES[key])


def _sort_key(key: str):
    digits = "".join(ch for ch in key if ch.isdigit())
    return int(digits), key


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    lines = [LINES[k] for k in sorted(LINES, key=_sort_key)]
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line("")
        for line in lines:
            reporter.write_line(line)
    else:  # pragma: no cover
        print("\n".join(lines))


def rng(seed: int = 2024) -> np.random.Generator:
    return np.random.default_rng(seed)


def rational(g: np.random.Generator, span: int = 6) -> QF:
    return QF(Fraction(int(g.integers(-span, span + 1)), int(g.integers(1, 5))))


# ---------------------------------------------------------------------------


def test_criterion_01_spectrum():
    for fn in (upsilon_tensor, _upsilon_basis_ops, _upsilon_products, upsilon_hat_matrix, projector):
        fn.cache_clear()
    t0 = time.perf_counter()
    got = eigen_multiplicities(EXACT)
    elapsed = time.perf_counter() - t0
    want = {EIGENVALUES[n]: DIMENSIONS[n] for n in EIGENVALUES}
    ok = got == want and want == {7: 3, -8: 7, 14: 1, -3: 5, 4: 9} and elapsed < 1.0
    record("1", "spectrum {7,-8,14,-3,4} with multiplicities {3,7,1,5,9}, exact, %.2fs" % elapsed, ok)
    assert ok


def _kappa_identities(triple) -> bool:
    ks, ss = triple.as_list(), triple.endomorphisms()
    ok = all(inner(k, k) == 5 for k in ks)
    ok &= all(inner(ks[i], ks[j]) == 0 for i in range(3) for j in range(i + 1, 3))
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        ok &= la.equal(ss[i] @ ss[j] - ss[j] @ ss[i], -ss[k])
    for x in basis(1):
        for y in basis(1):
            total = sum(inner(KVector(1, s @ x.components), KVector(1, s @ y.components)) for s in ss)
            ok &= total == 6 * inner(x, y)
    return bool(ok)


def test_criterion_02_kappa_frame():
    rot = Frame.standard().transformed_by(np.array([[QF(Fraction(3, 5)), QF(Fraction(-4, 5)), QF(0)], [QF(Fraction(4, 5)), QF(Fraction(3, 5)), QF(0)], [QF(0), QF(0), QF(1)]], dtype=object))
    ok = _kappa_identities(standard_kappa()) and _kappa_identities(kappa_frame(rot))
    record("2", "kappa-frame norms, orthogonality, brackets and sum identity, exact", ok)
    assert ok


def test_criterion_03_example():
    t0 = time.perf_counter()
    t = TorsionTensor.from_components({(1, 2, 4): 1, (1, 3, 5): 2})
    k = CurvatureMap.rank_one_kappa3(2)
    d = psi_decompose(k)
    diag = lambda *v: la.asarray(np.diag([Fraction(x) for x in v]).astype(object), EXACT)  # noqa: E731
    star = check_star_T(t)
    x = KVector.blade(1) * (R3 / 2) + KVector.blade(4) * Fraction(1, 2)
    rep = analyze(t, k)
    checks = {
        "rho": la.equal(ricci(k).matrix, diag(0, 8, 2, 8, 2)),
        "eta": la.equal(d.eta.matrix, diag(-4, 4, -2, 4, -2)),
        "s": d.s == 20,
        "A1235": d.A.coeff(1, 2, 3, 5) == 0,
        "A2345": d.A.coeff(2, 3, 4, 5) == Fraction(-4, 3),
        "*T": t.star() == -(KVector.blade(2, 4) * 2 + KVector.blade(3, 5)) and star.holds and star.residual == 0,
        "S9": check_S9(k).holds and check_S9(k).residual == 0,
        "L27": check_L27(k).holds and check_L27(k).residual == 0,
        "Q": q_reduced(d.A, d.eta, standard_kappa().k1, x) == -18 * R3,
        "verdicts": rep.normal is False and rep.cr_integrable is True,
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 5.0
    bad = [n for n, v in checks.items() if not v]
    record("3", "homogeneous example anchors, Q = -18 sqrt3, normal false, CR true, %.2fs" % elapsed, ok, "" if ok else " %s" % bad)
    assert ok


def test_criterion_04_flat_and_symmetric():
    flat = is_normal(TorsionTensor.zero(), CurvatureMap.zero())
    ok = flat.normal
    for lam in (QF(1), QF(Fraction(2, 3)), QF(5)):
        rep = is_normal(TorsionTensor.zero(), CurvatureMap.projection() * lam)
        ok &= rep.normal and rep.chi_killing_t == 1 / lam and chi_killing_t(CurvatureMap.projection() * lam) == 1 / lam
    record("4", "flat input normal; K = lambda P normal with chi_killing_t = 1/lambda", bool(ok))
    assert ok


def test_criterion_05_psi_round_trip():
    t0 = time.perf_counter()
    g = rng(5)
    p = projector_lambda2()
    ok = True
    for _ in range(50):
        raw = np.array([[rational(g) for _ in range(10)] for _ in range(10)], dtype=object)
        k = CurvatureMap(p @ raw)
        ok &= psi_inverse(psi_decompose(k)) == k
    z2 = la.zeros((5, 5), EXACT)
    for _ in range(5):
        nu = KVector(4, [rational(g) for _ in range(5)])
        skew = la.zeros((5, 5), EXACT)
        sym = la.zeros((5, 5), EXACT)
        for i in range(5):
            for j in range(i, 5):
                sym[i, j] = sym[j, i] = rational(g)
                if j > i:
                    skew[i, j] = rational(g)
                    skew[j, i] = -skew[i, j]
        sym = sym - la.eye(5, EXACT) * (np.trace(sym) / 5)
        s = rational(g)
        d = psi_decompose(k_nu(nu))
        ok &= d.A == nu and la.all_zero(d.rho_minus.matrix) and d.s == 0 and la.all_zero(d.eta.matrix)
        d = psi_decompose(k_minus(Tensor2(skew, EXACT)))
        ok &= d.A.is_zero() and la.equal(d.rho_minus.matrix, skew) and d.s == 0 and la.all_zero(d.eta.matrix)
        d = psi_decompose(k_scalar(s))
        ok &= d.A.is_zero() and la.all_zero(d.rho_minus.matrix) and d.s == s and la.all_zero(d.eta.matrix)
        d = psi_decompose(k_plus(Tensor2(sym, EXACT)))
        ok &= d.A.is_zero() and la.equal(d.rho_minus.matrix, z2) and d.s == 0 and la.equal(d.eta.matrix, sym)
    elapsed = time.perf_counter() - t0
    ok = bool(ok) and elapsed < 10.0
    record("5", "Psi round trip on 50 random maps and component recovery per constructor, %.2fs" % elapsed, ok)
    assert ok


def test_criterion_06_explicit_bases():
    p7, p9 = projector("L27"), projector("S9")
    ok = True
    for bs in (lambda27_basis_torsion(), lambda27_basis_ricci()):
        m = np.stack([bivector_to_matrix(b).reshape(-1) for b in bs], axis=1)
        ok &= len(bs) == 7 and la.equal(p7 @ m, m) and la.rank(m) == 7 == la.rank(p7)
    m = np.stack([t.matrix.reshape(-1) for t in sym29_basis()], axis=1)
    ok &= len(sym29_basis()) == 10 and la.equal(p9 @ m, m) and la.rank(m) == 9 == la.rank(p9)
    record("6", "listed 7-element bivector sets span the -8 space; listed symmetric set spans the 4 space", bool(ok))
    assert ok


def test_criterion_07_eta_prime_laws():
    g = rng(7)
    p = projector_lambda2()
    ok = True
    for _ in range(100):
        m = la.zeros((5, 5), EXACT)
        for i in range(5):
            for j in range(i + 1, 5):
                m[i, j] = rational(g)
                m[j, i] = -m[i, j]
        rhs = bivector_to_matrix(KVector(2, p @ matrix_to_bivector(m).components)) * 5
        ok &= la.equal(eta_prime(Tensor2(m, EXACT)).matrix, rhs)
    for _ in range(100):
        m = la.zeros((5, 5), EXACT)
        for i in range(5):
            for j in range(i, 5):
                m[i, j] = m[j, i] = rational(g)
        e1 = eta_prime(Tensor2(m, EXACT))
        e2 = eta_prime(e1)
        ok &= la.equal(e1.matrix + e2.matrix, m * 12 + la.eye(5, EXACT) * (np.trace(m) * 6))
    record("7", "eta' = 5 eta o P (100 skew) and eta' + eta'' = 12 eta + 6 tr(eta) g (100 symmetric)", bool(ok))
    assert ok


def test_criterion_08_twistor_consistency():
    g = rng(8)
    worst = 0.0
    for _ in range(200):
        y = g.normal(size=3)
        pt = TwistorPoint(list(y / np.linalg.norm(y)), mode=FLOAT)
        for sign in "+-":
            worst = max(worst, float(np.max(np.abs(f_matrix(pt, sign) - phi_matrix(pt, sign).T))))
    ok = worst <= 1e-10
    half = Fraction(1, 2)
    special = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)), (half, half, R2 / 2), (half, R3 / 2, 0)]
    for y in special:
        pt = TwistorPoint(list(y))
        z = xi(pt.sigma)
        ok &= z == xi_polynomial(pt)
        target = -la.eye(5, EXACT) + np.outer(z.components, z.components)
        for sign in "+-":
            m = phi_matrix(pt, sign)
            ok &= la.equal(f_matrix(pt, sign), m.T) and la.equal(m @ m, target)
    record("8", "f agrees with phi on 200 float points (max %.1e) and exactly on special points; phi^2 = -Id + xi xi; xi polynomial" % worst, bool(ok))
    assert ok


# criterion 9 ----------------------------------------------------------------

WITNESS_POINT = TwistorPoint([0, 0, 1])
E3 = KVector.blade(3)
K1 = standard_kappa().k1


def _mixed(n: int, sign: str) -> KVector:
    return nijenhuis_mixed(n, sign, WITNESS_POINT, E3, K1).horizontal


def test_criterion_09a_plus_two_witness():
    got = _mixed(2, "+")
    ok = got == KVector.blade(1) * (2 * R3)
    record("9a", "N2+(E3, kappa1) = 2 sqrt3 E1", ok)
    assert ok


def test_criterion_09b_d_eta_plus_and_omega():
    a, b = TangentPair.hor(E3), TangentPair.ver(K1)
    de = d_eta(1, WITNESS_POINT, "+", a, b)
    om = [omega(1, n, s, WITNESS_POINT, a, b) for n in (1, 2) for s in "+-"]
    ok = de == -R3 and all(v == 0 for v in om)
    record("9b", "d eta (plus) = -sqrt3 with Omega = 0 at the same pair", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="computed N1-(E3, kappa1) = 2 sqrt3 E1, confirmed by the flat sympy model")
def test_criterion_09c_minus_one_witness():
    got = _mixed(1, "-")
    ok = got == KVector.blade(4) * 2
    record("9c", "N1-(E3, kappa1) = 2 E4", ok, "" if ok else " (expected failure: computed %s)" % got.to_strings())
    assert ok


@pytest.mark.xfail(strict=True, reason="computed N2-(E3, kappa1) = -4 E4, confirmed by the flat sympy model")
def test_criterion_09d_minus_two_witness():
    got = _mixed(2, "-")
    ok = got == (KVector.blade(1) * R3 + KVector.blade(4)) * 2
    record("9d", "N2-(E3, kappa1) = 2 (sqrt3 E1 + E4)", ok, "" if ok else " (expected failure: computed %s)" % got.to_strings())
    assert ok


@pytest.mark.xfail(strict=True, reason="computed d eta (minus) = -sqrt3, confirmed by the flat sympy model")
def test_criterion_09e_d_eta_minus():
    de = d_eta(1, WITNESS_POINT, "-", TangentPair.hor(E3), TangentPair.ver(K1))
    ok = de == R3
    record("9e", "d eta (minus) = +sqrt3", ok, "" if ok else " (expected failure: computed %s)" % de)
    assert ok


# ---------------------------------------------------------------------------


def test_criterion_10_verdict_consistency():
    t0 = time.perf_counter()
    agree = 0
    named = 0
    cases = builders.cases()
    for t, k, want in cases:
        rep = analyze(t, k)
        agree += int(rep.probe_agrees is True and rep.probe.vanishes == (not want))
        named += int(rep.failing == want)
    elapsed = time.perf_counter() - t0
    ok = agree == named == len(cases) == 20 and elapsed < 60.0
    record("10", "probe agrees with the verdict on %d/20 randomized inputs (10 normal, 10 single violations), %.1fs" % (agree, elapsed), ok)
    assert ok


def test_criterion_11_suite_time():
    t0 = time.perf_counter()
    results = run_suite(EXACT)
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results) and elapsed < 60.0
    record("11", "exact identity suite (%d checks) passes in %.1fs" % (len(results), elapsed), ok)
    assert ok


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-q"]))

"""The invariant suite run by ``so3five verify-identities``.

Every check returns a residual (largest violation seen) and a verdict; in
exact mode the verdict requires a residual of exactly zero.  Random data
comes from a fixed seed so runs are reproducible.  ``fault`` names a
deliberate sign error that a check injects into its own computation; it
exists so that tests can confirm that the suite notices a broken identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import linalg as la
from .analysis import analyze
from .curvature import (
    CurvatureDecomposition,
    CurvatureMap,
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
from .multilinear import COMBOS, DIM, KVector, Tensor2, basis, bivector_to_matrix, hodge_star, inner, interior, wedge
from .nijenhuis import nijenhuis_mixed
from .qtensor import q_reduced
from .representation import (
    ELEMENTARY,
    DIMENSIONS,
    EIGENVALUES,
    Frame,
    adapted_from_triple,
    det3,
    expected_kappa_law,
    iota,
    is_adapted,
    kappa_frame,
    kappa_law,
    mu,
    projector,
    projector_lambda2,
    standard_kappa,
    upsilon_cubic,
    upsilon_hat_matrix,
    upsilon_op_matrix,
)
from .scalars import EXACT, FLOAT, R2, R3, R6, QF, format_scalar, parse_scalar, sqrt_const, to_mode
from .torsion import TorsionTensor
from .twistor import (
    TangentPair,
    TwistorPoint,
    big_phi,
    comm_identity_check,
    f_matrix,
    phi_matrix,
    sigma_pm,
    xi,
    xi_polynomial,
)

SEED = 20240607
FAULTS = ("hodge_sign", "upsilon_sign", "kappa_sign", "psi_scalar")


@dataclass(frozen=True)
class IdentityResult:
    name: str
    description: str
    passed: bool
    residual: float
    seconds: float


@dataclass
class _Ctx:
    mode: str
    tol: float
    rng: np.random.Generator
    fault: str | None

    def q(self, lo: int = -6, hi: int = 6, den: int = 4):
        v = Fraction(int(self.rng.integers(lo, hi + 1)), int(self.rng.integers(1, den + 1)))
        return to_mode(v, self.mode)

    def vec(self, degree: int = 1) -> KVector:
        return KVector(degree, np.array([self.q() for _ in COMBOS[degree]], dtype=object if self.mode == EXACT else float), self.mode)

    def c(self, x):
        return to_mode(x, self.mode)


_REGISTRY: list[tuple[str, str, Callable[[_Ctx], float]]] = []


def _check(name: str, description: str):
    def deco(fn):
        _REGISTRY.append((name, description, fn))
        return fn

    return deco


def _worst(*vals) -> float:
    return max([0.0] + [float(v) for v in vals])


def _kv_res(a: KVector, b: KVector) -> float:
    return la.max_abs(a.components - b.components)


# ---------------------------------------------------------------------------
# scalars and exterior algebra
# ---------------------------------------------------------------------------


@_check("field_identities", "sqrt2^2 = 2, sqrt3^2 = 3, sqrt2 sqrt3 = sqrt6; random operations round-trip through text")
def _field(ctx: _Ctx) -> float:
    if ctx.mode == FLOAT:
        r2, r3, r6 = (sqrt_const(n, FLOAT) for n in (2, 3, 6))
        return _worst(abs(r2 * r2 - 2), abs(r3 * r3 - 3), abs(r2 * r3 - r6))
    bad = int(R2 * R2 != 2) + int(R3 * R3 != 3) + int(R2 * R3 != R6)
    gens = [R2, R3, R6, QF(1)]
    x = QF(Fraction(1, 3))
    for n in range(2000):
        y = gens[n % 4] * int(ctx.rng.integers(-5, 6)) + Fraction(int(ctx.rng.integers(-7, 8)), int(ctx.rng.integers(1, 6)))
        op = n % 3
        z = x + y if op == 0 else (x * y if op == 1 else (x / y if y != 0 else x - y))
        bad += int(parse_scalar(format_scalar(z)) != z)
        if y != 0:
            bad += int((z - y) != x if op == 0 else ((z / y) != x if op == 1 else (z * y) != x))
        x = z if n % 25 else QF(Fraction(int(ctx.rng.integers(1, 9)), 7))
    return float(bad)


@_check("hodge_pairing", "alpha ^ *beta = g(alpha, beta) vol over all basis pairs, every degree")
def _hodge(ctx: _Ctx) -> float:
    worst = 0.0
    sgn = -1 if ctx.fault == "hodge_sign" else 1
    vol = KVector.blade(1, 2, 3, 4, 5, mode=ctx.mode)
    for k in range(DIM + 1):
        bs = basis(k, ctx.mode)
        for a in bs:
            for b in bs:
                lhs = wedge(a, hodge_star(b) * sgn)
                worst = max(worst, _kv_res(lhs, vol * inner(a, b)))
    return worst


@_check("interior_adjoint", "g(i_x w, u) = g(w, x ^ u) over full bases")
def _interior(ctx: _Ctx) -> float:
    worst = 0.0
    xs = basis(1, ctx.mode)
    for k in range(1, DIM + 1):
        for x in xs:
            for w in basis(k, ctx.mode):
                for u in basis(k - 1, ctx.mode):
                    worst = max(worst, abs(float(inner(interior(x, w), u) - inner(w, wedge(x, u)))))
    return worst


@_check("float_matches_exact", "float evaluation reproduces exact results on rational inputs (1e-12)")
def _float_exact(ctx: _Ctx) -> float:
    worst = 0.0
    for _ in range(20):
        a, b = ctx.vec(2), ctx.vec(2)
        ex = hodge_star(wedge(a, b))
        fl = hodge_star(wedge(a.to_float(), b.to_float()))
        worst = max(worst, la.max_abs(la.to_float_array(ex.components) - fl.components))
    return 0.0 if worst < 1e-12 else worst


# ---------------------------------------------------------------------------
# the representation
# ---------------------------------------------------------------------------


@_check("spectrum", "spectrum {7,-8,14,-3,4} multiplicities (3,7,1,5,9)")
def _spectrum(ctx: _Ctx) -> float:
    u = upsilon_hat_matrix(ctx.mode)
    if ctx.fault == "upsilon_sign":
        u = -u
    ident = la.eye(DIM * DIM, ctx.mode)
    got = {lam: DIM * DIM - la.rank(u - lam * ident, tol=1e-8) for lam in EIGENVALUES.values()}
    want = {EIGENVALUES[n]: DIMENSIONS[n] for n in EIGENVALUES}
    miss = sum(abs(got[k] - want[k]) for k in want)
    return float(miss + abs(sum(got.values()) - DIM * DIM))


@_check("upsilon_hat_split", "upsilon_hat preserves Lambda^2 and Sym^2")
def _split(ctx: _Ctx) -> float:
    u = upsilon_hat_matrix(ctx.mode)
    swap = la.zeros((DIM * DIM, DIM * DIM), ctx.mode)
    for i in range(DIM):
        for j in range(DIM):
            swap[i * DIM + j, j * DIM + i] = ctx.c(1)
    return la.max_abs(u @ swap - swap @ u)


@_check("projectors", "projectors idempotent, mutually annihilating, summing to the identity, of the right ranks")
def _projectors(ctx: _Ctx) -> float:
    ps = {n: projector(n, ctx.mode) for n in EIGENVALUES}
    worst = la.max_abs(sum(ps.values()) - la.eye(DIM * DIM, ctx.mode))
    names = sorted(ps)
    for i, a in enumerate(names):
        pa = ps[a]
        worst = max(worst, la.max_abs(pa @ pa - pa))
        worst = max(worst, abs(la.rank(pa, 1e-8) - DIMENSIONS[a]))
        for b in names[i + 1 :]:
            worst = max(worst, la.max_abs(pa @ ps[b]))
    return worst


@_check("kappa_frame", "|kappa_i|^2 = 5, orthogonal, [S_i, S_j] = -S_k cyclically, kappa_i in the 7-eigenspace")
def _kappa(ctx: _Ctx) -> float:
    kt = standard_kappa(ctx.mode)
    ks = kt.as_list()
    ss = kt.endomorphisms()
    sgn = -1 if ctx.fault == "kappa_sign" else 1
    worst = 0.0
    p = projector("L23", ctx.mode)
    for i in range(3):
        worst = max(worst, abs(float(inner(ks[i], ks[i]) - 5)))
        for j in range(i + 1, 3):
            worst = max(worst, abs(float(inner(ks[i], ks[j]))))
        j, k = (i + 1) % 3, (i + 2) % 3
        worst = max(worst, la.max_abs(ss[i] @ ss[j] - ss[j] @ ss[i] + ss[k] * sgn))
        m = bivector_to_matrix(ks[i]).reshape(-1)
        worst = max(worst, la.max_abs(p @ m - m))
    return worst


@_check("kappa_sum_metric", "sum_i g(kappa_i X, kappa_i Y) = 6 g(X, Y) over a basis")
def _kappa_metric(ctx: _Ctx) -> float:
    ss = standard_kappa(ctx.mode).endomorphisms()
    total = sum(s.T @ s for s in ss)
    return la.max_abs(total - la.eye(DIM, ctx.mode) * 6)


@_check("kappa_sum_wedge", "sum_i kappa_i X ^ kappa_i Z = 5 P(X ^ Z) over a basis")
def _kappa_wedge(ctx: _Ctx) -> float:
    ss = standard_kappa(ctx.mode).endomorphisms()
    p = projector_lambda2(mode=ctx.mode)
    worst = 0.0
    xs = basis(1, ctx.mode)
    for x in xs:
        for z in xs:
            lhs = KVector.zero(2, ctx.mode)
            for s in ss:
                lhs = lhs + wedge(KVector(1, s @ x.components, ctx.mode), KVector(1, s @ z.components, ctx.mode))
            rhs = p @ wedge(x, z).components * 5
            worst = max(worst, la.max_abs(lhs.components - rhs))
    return worst


def _special_angles(mode: str):
    half = Fraction(1, 2)
    r2h, r3h = sqrt_const(2, mode) / 2, sqrt_const(3, mode) / 2
    c = lambda v: to_mode(v, mode)  # noqa: E731
    return [(c(1), c(0)), (c(0), c(1)), (r2h, r2h), (-r2h, r2h), (c(half), r3h), (r3h, c(half)), (-r3h, -c(half))]


@_check("kappa_laws", "kappa-triple transformation laws under h_phi, h_theta, h_psi at special angles")
def _laws(ctx: _Ctx) -> float:
    worst = 0.0
    frame = Frame.standard(ctx.mode)
    for kind in ("phi", "theta", "psi"):
        for cs, sn in _special_angles(ctx.mode):
            h = ELEMENTARY[kind](cs, sn, ctx.mode)
            worst = max(worst, la.max_abs(kappa_law(frame, h) - expected_kappa_law(kind, cs, sn, ctx.mode)))
            frame = frame.transformed_by(h)
    return worst


def _cayley(ctx: _Ctx) -> np.ndarray:
    a, b, c = ctx.q(), ctx.q(), ctx.q()
    z = ctx.c(0)
    skew = np.array([[z, -a, b], [a, z, -c], [-b, c, z]], dtype=object if ctx.mode == EXACT else float)
    ident = la.eye(3, ctx.mode)
    return (ident - skew) @ la.solve(ident + skew, ident)


@_check("iota_homomorphism", "iota(h1 h2) = iota(h1) iota(h2) on random rational rotations")
def _iota(ctx: _Ctx) -> float:
    worst = 0.0
    for _ in range(4):
        h1, h2 = _cayley(ctx), _cayley(ctx)
        worst = max(worst, la.max_abs(iota(h1 @ h2) - iota(h1) @ iota(h2)))
    return worst


@_check("adapted_from_triple", "frames recovered from rotated kappa-triples are adapted and reproduce the triple")
def _adapted(ctx: _Ctx) -> float:
    worst = 0.0
    for _ in range(3):
        frame = Frame.standard(ctx.mode).transformed_by(_cayley(ctx))
        kt = kappa_frame(frame)
        rec = adapted_from_triple(kt.k1, kt.k2, kt.k3)
        worst = max(worst, 0.0 if is_adapted(rec) else 1.0)
        kr = kappa_frame(rec)
        worst = max(worst, *(_kv_res(a, b) for a, b in zip(kr.as_list(), kt.as_list())))
    return worst


@_check("upsilon_cubic", "Upsilon(x,x,x) = (3 sqrt3 / 2) det mu(x) and Upsilon_v^2 v = |v|^2 v")
def _cubic(ctx: _Ctx) -> float:
    worst = 0.0
    c = sqrt_const(3, ctx.mode) * ctx.c(Fraction(3, 2))
    for _ in range(10):
        x = ctx.vec()
        worst = max(worst, abs(float(upsilon_cubic(x) - c * det3(mu(x)))))
        m = upsilon_op_matrix(x)
        worst = max(worst, la.max_abs(m @ (m @ x.components) - x.components * inner(x, x)))
    return worst


# ---------------------------------------------------------------------------
# the twistor fibre
# ---------------------------------------------------------------------------


def _fibre_points(ctx: _Ctx) -> list[TwistorPoint]:
    ys = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)), (Fraction(-2, 7), Fraction(3, 7), Fraction(6, 7))]
    half = Fraction(1, 2)
    ys.append((to_mode(half, ctx.mode), to_mode(half, ctx.mode), sqrt_const(2, ctx.mode) / 2))
    return [TwistorPoint(list(y), Frame.standard(ctx.mode)) for y in ys]


@_check("xi_polynomial", "xi = (1/4) *(s ^ s) agrees with its closed polynomial form; |xi| = 1 and i_xi sigma = 0")
def _xi(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx):
        z = xi(p.sigma)
        worst = max(worst, _kv_res(z, xi_polynomial(p)), abs(float(inner(z, z) - 1)))
        worst = max(worst, la.max_abs(interior(z, p.sigma).components))
    return worst


@_check("phi_square", "(phi_+-)^2 = -Id + xi (x) xi and phi_+- is skew")
def _phi_sq(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx):
        z = xi(p.sigma).components
        target = -la.eye(DIM, ctx.mode) + np.outer(z, z)
        for sign in "+-":
            m = phi_matrix(p, sign)
            worst = max(worst, la.max_abs(m @ m - target), la.max_abs(m + m.T))
    return worst


@_check("sigma_duality", "sigma_+ and sigma_- are self-dual and anti-self-dual on the horizontal 4-space")
def _duality(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx):
        z = xi(p.sigma)
        sp_, sm_ = sigma_pm(p)
        worst = max(worst, _kv_res(interior(z, hodge_star(sp_)), sp_), _kv_res(interior(z, hodge_star(sm_)), -sm_))
        worst = max(worst, la.max_abs(interior(z, sp_).components), la.max_abs(interior(z, sm_).components))
    return worst


@_check("f_matrix", "the closed form f in y agrees with the matrix of phi_+-")
def _f(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx)[:4]:
        for sign in "+-":
            worst = max(worst, la.max_abs(f_matrix(p, sign) - phi_matrix(p, sign).T))
    return worst


@_check("xi_scaling", "g(xi, xi) = |sigma|^4 / 25 under scaling of sigma")
def _xi_scale(ctx: _Ctx) -> float:
    worst = 0.0
    s = standard_kappa(ctx.mode).combine([Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)])
    for lam in (Fraction(2), Fraction(-1, 3), Fraction(5, 2)):
        t = s * to_mode(lam, ctx.mode)
        n2 = inner(t, t)
        worst = max(worst, abs(float(inner(xi(t), xi(t)) - n2 * n2 / 25)))
    return worst


@_check("big_phi_cubic", "Phi^3 + Phi = 0 and the commutation identity for both n and both signs")
def _bigphi(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx)[2:5]:
        vb = p.vertical_basis()
        for n in (1, 2):
            for sign in "+-":
                for j in range(DIM):
                    a = TangentPair(KVector.blade(j + 1, mode=ctx.mode), vb[j % 2])
                    b = big_phi(n, sign, p, a)
                    r = big_phi(n, sign, p, big_phi(n, sign, p, b)) + b
                    worst = max(worst, la.max_abs(r.horizontal.components), la.max_abs(r.vertical.components))
                for v in vb:
                    worst = max(worst, 0.0 if comm_identity_check(p, n, sign, v) else 1.0)
    return worst


@_check("nxv_plus_one", "N^(1)_+(X^h, V) vanishes identically")
def _nxv(ctx: _Ctx) -> float:
    worst = 0.0
    for p in _fibre_points(ctx)[2:5]:
        for v in p.vertical_basis():
            for x in basis(1, ctx.mode):
                worst = max(worst, la.max_abs(nijenhuis_mixed(1, "+", p, x, v).horizontal.components))
    return worst


# ---------------------------------------------------------------------------
# curvature and normality
# ---------------------------------------------------------------------------


def _sym_traceless(ctx: _Ctx) -> Tensor2:
    m = la.zeros((DIM, DIM), ctx.mode)
    for i in range(DIM):
        for j in range(i, DIM):
            m[i, j] = m[j, i] = ctx.q()
    tr = sum(m[i, i] for i in range(DIM)) / ctx.c(5)
    return Tensor2(m - la.eye(DIM, ctx.mode) * tr, ctx.mode)


def _skew(ctx: _Ctx) -> Tensor2:
    m = la.zeros((DIM, DIM), ctx.mode)
    for i in range(DIM):
        for j in range(i + 1, DIM):
            m[i, j] = ctx.q()
            m[j, i] = -m[i, j]
    return Tensor2(m, ctx.mode)


def _random_curvature(ctx: _Ctx) -> CurvatureMap:
    p = projector_lambda2(mode=ctx.mode)
    raw = np.array([[ctx.q() for _ in range(10)] for _ in range(10)], dtype=object if ctx.mode == EXACT else float)
    return CurvatureMap(p @ raw, ctx.mode)


@_check("psi_round_trip", "psi_inverse(psi_decompose(K)) = K on random curvature maps")
def _psi(ctx: _Ctx) -> float:
    worst = 0.0
    for _ in range(10):
        k = _random_curvature(ctx)
        d = psi_decompose(k)
        if ctx.fault == "psi_scalar":
            d = CurvatureDecomposition(d.A, d.rho_minus, d.s * 5, d.eta)
        worst = max(worst, la.max_abs(psi_inverse(d).matrix - k.matrix))
    return worst


@_check("psi_constructors", "each constructor's image decomposes into exactly its own component")
def _constructors(ctx: _Ctx) -> float:
    worst = 0.0
    zero4, zero2 = KVector.zero(4, ctx.mode), Tensor2(la.zeros((DIM, DIM), ctx.mode), ctx.mode)
    for _ in range(3):
        nu, rm, s, eta = ctx.vec(4), _skew(ctx), ctx.q(), _sym_traceless(ctx)
        for k, want in (
            (k_nu(nu), (nu, zero2, 0, zero2)),
            (k_minus(rm), (zero4, rm, 0, zero2)),
            (k_scalar(s, ctx.mode), (zero4, zero2, s, zero2)),
            (k_plus(eta), (zero4, zero2, 0, eta)),
        ):
            d = psi_decompose(k)
            worst = max(
                worst,
                _kv_res(d.A, want[0]),
                la.max_abs(d.rho_minus.matrix - want[1].matrix),
                abs(float(d.s - want[2])),
                la.max_abs(d.eta.matrix - want[3].matrix),
            )
    return worst


@_check("constructor_images", "the four constructor images are mutually orthogonal and span a 30-dimensional space")
def _images(ctx: _Ctx) -> float:
    cols = {"nu": [], "minus": [], "scalar": [], "plus": []}
    for b in basis(4, ctx.mode):
        cols["nu"].append(k_nu(b).matrix.reshape(-1))
    for i in range(DIM):
        for j in range(i + 1, DIM):
            m = la.zeros((DIM, DIM), ctx.mode)
            m[i, j], m[j, i] = ctx.c(1), ctx.c(-1)
            cols["minus"].append(k_minus(Tensor2(m, ctx.mode)).matrix.reshape(-1))
    cols["scalar"].append(k_scalar(1, ctx.mode).matrix.reshape(-1))
    for i in range(DIM):
        for j in range(i, DIM):
            m = la.zeros((DIM, DIM), ctx.mode)
            m[i, j] = m[j, i] = ctx.c(1)
            if i == j:
                m = m - la.eye(DIM, ctx.mode) / 5
            cols["plus"].append(k_plus(Tensor2(m, ctx.mode)).matrix.reshape(-1))
    want = {"nu": 5, "minus": 10, "scalar": 1, "plus": 14}
    worst = 0.0
    mats = {n: np.stack(c, axis=1) for n, c in cols.items()}
    for n, m in mats.items():
        worst = max(worst, abs(la.rank(m, 1e-9) - want[n]))
    names = sorted(mats)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            worst = max(worst, la.max_abs(mats[a].T @ mats[b]))
    worst = max(worst, abs(la.rank(np.concatenate(list(mats.values()), axis=1), 1e-9) - 30))
    return worst


@_check("explicit_bases", "listed bivector sets span the (-8)-eigenspace and the listed symmetric set spans the 4-eigenspace")
def _bases(ctx: _Ctx) -> float:
    worst = 0.0
    p7 = projector("L27", ctx.mode)
    p9 = projector("S9", ctx.mode)
    for bs in (lambda27_basis_torsion(ctx.mode), lambda27_basis_ricci(ctx.mode)):
        m = np.stack([bivector_to_matrix(b).reshape(-1) for b in bs], axis=1)
        worst = max(worst, la.max_abs(p7 @ m - m), abs(la.rank(m, 1e-9) - 7))
    m = np.stack([t.matrix.reshape(-1) for t in sym29_basis(ctx.mode)], axis=1)
    worst = max(worst, la.max_abs(p9 @ m - m), abs(la.rank(m, 1e-9) - 9), abs(la.rank(m, 1e-9) - la.rank(p9, 1e-9)))
    return worst


@_check("eta_prime_laws", "eta' = 5 eta o P for skew eta; eta' + eta'' = 12 eta + 6 tr(eta) g for symmetric eta")
def _eta_laws(ctx: _Ctx) -> float:
    worst = 0.0
    p = projector_lambda2(mode=ctx.mode)
    from .multilinear import matrix_to_bivector

    for _ in range(10):
        e = _skew(ctx)
        lhs = eta_prime(e).matrix
        rhs = bivector_to_matrix(KVector(2, p @ matrix_to_bivector(e.matrix, ctx.mode).components, ctx.mode)) * 5
        worst = max(worst, la.max_abs(lhs - rhs))
        m = la.zeros((DIM, DIM), ctx.mode)
        for i in range(DIM):
            for j in range(i, DIM):
                m[i, j] = m[j, i] = ctx.q()
        s = Tensor2(m, ctx.mode)
        e1 = eta_prime(s)
        e2 = eta_prime(e1)
        worst = max(worst, la.max_abs(e1.matrix + e2.matrix - m * 12 - la.eye(DIM, ctx.mode) * (s.trace * 6)))
    return worst


@_check("ricci_of_nu", "K_nu has vanishing Ricci tensor")
def _ricci_nu(ctx: _Ctx) -> float:
    return max(la.max_abs(ricci(k_nu(ctx.vec(4))).matrix) for _ in range(5))


@_check("q_frame_independence", "Q(sigma, X) is the same in two adapted frames with kappa_3 = sigma")
def _q_frames(ctx: _Ctx) -> float:
    worst = 0.0
    from .qtensor import q_reduced_in_frame
    from .representation import h_psi

    for _ in range(2):
        a, eta = ctx.vec(4), _sym_traceless(ctx)
        frame = Frame.standard(ctx.mode).transformed_by(_cayley(ctx))
        kt = kappa_frame(frame)
        r2h = sqrt_const(2, ctx.mode) / 2
        other = frame.transformed_by(h_psi(r2h, r2h, ctx.mode))  # stabilizer of kappa_3
        for x in basis(1, ctx.mode):
            v0 = q_reduced(a, eta, kt.k3, x, kt)
            worst = max(worst, abs(float(q_reduced_in_frame(a, eta, frame, x) - v0)), abs(float(q_reduced_in_frame(a, eta, other, x) - v0)))
    return worst


@_check("normality_probe", "normal data gives a vanishing Nijenhuis probe; each single violation gives a witness")
def _normality(ctx: _Ctx) -> float:
    kt = standard_kappa(ctx.mode)
    v = KVector(1, np.array([ctx.c(2), ctx.c(1), ctx.c(0), ctx.c(-3), ctx.c(0)], dtype=object if ctx.mode == EXACT else float), ctx.mode)
    t_ok = TorsionTensor(hodge_star(kt.combine([1, -2, 3])))
    rho = Tensor2(bivector_to_matrix(kt.combine([1, 0, -1])), ctx.mode)
    eta = Tensor2(upsilon_op_matrix(v) * ctx.c(Fraction(12, 5)), ctx.mode)
    k_ok = k_nu(hodge_star(v)) + k_minus(rho) + k_scalar(7, ctx.mode) + k_plus(eta)
    t_bad = TorsionTensor.from_components({(1, 2, 3): 1}, ctx.mode)
    k_l27 = k_ok + k_minus(Tensor2(bivector_to_matrix(KVector.blade(1, 5, mode=ctx.mode)), ctx.mode))
    k_q = k_ok + k_plus(Tensor2(upsilon_op_matrix(KVector.blade(1, mode=ctx.mode)), ctx.mode))
    bad = 0
    for t, k, want in ((t_ok, k_ok, []), (t_bad, k_ok, ["star_T_in_L23"]), (t_ok, k_l27, ["L27_vanishes"]), (t_ok, k_q, ["Q_vanishes"])):
        rep = analyze(t, k)
        bad += int(rep.failing != want) + int(not rep.probe_agrees)
    return float(bad)


@_check("example_so12", "the SO(3) x SO(1,2) example: Ricci, scalar, eta, A anchors and Q witness -18 sqrt3")
def _example(ctx: _Ctx) -> float:
    from .curvature import ricci_parts

    t = TorsionTensor.from_components({(1, 2, 4): 1, (1, 3, 5): 2}, ctx.mode)
    k = CurvatureMap.rank_one_kappa3(2, mode=ctx.mode)
    d = psi_decompose(k)
    rp, rm, s = ricci_parts(k)
    c = lambda *v: la.asarray(np.diag([Fraction(x) for x in v]).astype(object), ctx.mode)  # noqa: E731
    worst = _worst(la.max_abs(ricci(k).matrix - c(0, 8, 2, 8, 2)), abs(float(s - 20)), la.max_abs(d.eta.matrix - c(-4, 4, -2, 4, -2)))
    worst = max(worst, abs(float(d.A.coeff(2, 3, 4, 5) + ctx.c(Fraction(4, 3)))), abs(float(d.A.coeff(1, 2, 3, 5))))
    kt = standard_kappa(ctx.mode)
    x = KVector.blade(1, mode=ctx.mode) * (sqrt_const(3, ctx.mode) / 2) + KVector.blade(4, mode=ctx.mode) * ctx.c(Fraction(1, 2))
    worst = max(worst, abs(float(q_reduced(d.A, d.eta, kt.k1, x, kt) + sqrt_const(3, ctx.mode) * 18)))
    rep = analyze(t, k, probe=False)
    worst = max(worst, float(rep.normal) + float(not rep.cr_integrable))
    return worst


def names() -> list[str]:
    return [n for n, _, _ in _REGISTRY]


def run_suite(mode: str = EXACT, tol: float = 1e-9, fault: str | None = None, only: list[str] | None = None) -> list[IdentityResult]:
    """Run every check; ``only`` restricts to the named checks."""
    if fault is not None and fault not in FAULTS:
        raise ValueError("unknown fault %r" % fault)
    out = []
    ctx_tol = 0.0 if mode == EXACT else tol
    for name, desc, fn in _REGISTRY:
        if only is not None and name not in only:
            continue
        ctx = _Ctx(mode, ctx_tol, np.random.default_rng(SEED), fault)
        t0 = time.perf_counter()
        res = float(fn(ctx))
        out.append(IdentityResult(name, desc, res <= ctx_tol, res, time.perf_counter() - t0))
    return out


__all__ = ["FAULTS", "IdentityResult", "names", "run_suite"]

"""The irreducible 5-dimensional representation of SO(3).

Vectors of R^5 are identified with symmetric traceless 3x3 matrices by
``mu``; SO(3) acts by conjugation, which gives the embedding ``iota`` of
SO(3) into SO(5).  The invariant cubic form, the operator ``upsilon_hat`` on
``R^5 (x) R^5`` and its eigenprojectors, adapted frames and the kappa basis
of the 3-dimensional summand of the bivectors all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg as la
from .multilinear import DIM, PAIRS, KVector, Tensor2, bivector_to_matrix, inner, wedge_vectors
from .scalars import EXACT, FLOAT, QF, check_mode, is_zero, sqrt_const, to_mode

HALF = Fraction(1, 2)

#: eigenvalue of upsilon_hat for each summand of R^5 (x) R^5
EIGENVALUES = {"L23": 7, "L27": -8, "S1": 14, "S5": -3, "S9": 4}
#: dimension of each summand
DIMENSIONS = {"L23": 3, "L27": 7, "S1": 1, "S5": 5, "S9": 9}


def _coords(x, mode: str | None = None) -> tuple[np.ndarray, str]:
    if isinstance(x, KVector):
        if x.degree != 1:
            raise ValueError("expected a vector (degree 1)")
        return x.components, x.mode
    arr = np.asarray(x)
    m = mode or (EXACT if arr.dtype == object else FLOAT)
    return la.asarray(arr, m), m


def _tol(mode: str, tol: float | None) -> float:
    if mode == EXACT:
        return 0.0
    return 1e-9 if tol is None else tol


# ---------------------------------------------------------------------------
# mu and iota
# ---------------------------------------------------------------------------


def mu(x) -> np.ndarray:
    """Symmetric traceless matrix of a vector of R^5."""
    c, mode = _coords(x)
    x1, x2, x3, x4, x5 = c
    s = x1 / sqrt_const(3, mode)
    return np.array(
        [[s - x4, x2, x3], [x2, s + x4, x5], [x3, x5, -2 * s]],
        dtype=object if mode == EXACT else float,
    )


def mu_inv(m: np.ndarray, tol: float | None = None) -> KVector:
    """Inverse of :func:`mu`; rejects non-symmetric or non-traceless input."""
    m = np.asarray(m)
    mode = la.mode_of(m)
    t = _tol(mode, tol)
    if m.shape != (3, 3):
        raise ValueError("mu_inv expects a 3x3 matrix")
    if not la.all_zero(m - m.T, t):
        raise ValueError("mu_inv: matrix is not symmetric")
    if not is_zero(m[0, 0] + m[1, 1] + m[2, 2], t):
        raise ValueError("mu_inv: matrix is not traceless")
    r3 = sqrt_const(3, mode)
    half = to_mode(HALF, mode)
    # x_i = 1/2 trace(m mu(e_i)), written out for speed
    x1 = half * (m[0, 0] + m[1, 1] - 2 * m[2, 2]) / r3
    x4 = half * (m[1, 1] - m[0, 0])
    return KVector(1, [x1, m[0, 1], m[0, 2], x4, m[1, 2]], mode)


@dataclass(frozen=True)
class SO3Element:
    """A 3x3 rotation matrix, validated on construction."""

    matrix: np.ndarray
    mode: str

    def __init__(self, matrix, mode: str | None = None, tol: float | None = None):
        m = np.asarray(matrix)
        mode = mode or la.mode_of(m)
        m = la.asarray(m, mode)
        if m.shape != (3, 3):
            raise ValueError("SO(3) element must be 3x3")
        t = _tol(mode, tol)
        if not la.all_zero(m.T @ m - la.eye(3, mode), t):
            raise ValueError("matrix is not orthogonal")
        if not is_zero(la.det(m) - 1, t):
            raise ValueError("matrix does not have determinant +1")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "mode", mode)

    def __matmul__(self, other: "SO3Element") -> "SO3Element":
        return SO3Element(self.matrix @ other.matrix, self.mode, tol=1e-9)

    @property
    def T(self) -> "SO3Element":
        return SO3Element(self.matrix.T.copy(), self.mode, tol=1e-9)


def _so3_matrix(h) -> np.ndarray:
    return h.matrix if isinstance(h, SO3Element) else SO3Element(h).matrix


def iota(h) -> np.ndarray:
    """5x5 orthogonal matrix whose column j is ``mu_inv(h mu(e_j) h^T)``."""
    hm = _so3_matrix(h)
    mode = la.mode_of(hm)
    out = la.zeros((DIM, DIM), mode)
    for j in range(DIM):
        ej = la.zeros(DIM, mode)
        ej[j] = to_mode(1, mode)
        out[:, j] = mu_inv(hm @ mu(ej) @ hm.T, tol=1e-9).components
    return out


def h_psi(cos, sin, mode: str = EXACT) -> np.ndarray:
    c, s = to_mode(cos, mode), to_mode(sin, mode)
    z, o = to_mode(0, mode), to_mode(1, mode)
    return np.array([[c, s, z], [-s, c, z], [z, z, o]], dtype=object if mode == EXACT else float)


def h_theta(cos, sin, mode: str = EXACT) -> np.ndarray:
    c, s = to_mode(cos, mode), to_mode(sin, mode)
    z, o = to_mode(0, mode), to_mode(1, mode)
    return np.array([[z, z, o], [c, s, z], [-s, c, z]], dtype=object if mode == EXACT else float)


def h_phi(cos, sin, mode: str = EXACT) -> np.ndarray:
    c, s = to_mode(cos, mode), to_mode(sin, mode)
    z, o = to_mode(0, mode), to_mode(1, mode)
    return np.array([[-s, c, z], [z, z, o], [c, s, z]], dtype=object if mode == EXACT else float)


def euler_factor(h) -> tuple[float, float, float]:
    """Angles ``(psi, theta, phi)`` with ``h = h_psi h_theta h_phi`` (float).

    When ``sin(theta) = 0`` the factorization is not unique; ``phi = 0`` is
    chosen and ``psi`` is solved directly.
    """
    m = la.to_float_array(_so3_matrix(h))
    st = math.hypot(m[2, 0], m[2, 1])
    theta = math.atan2(st, m[2, 2])
    if st > 1e-12:
        phi = math.atan2(m[2, 0], -m[2, 1])
        psi = math.atan2(m[0, 2], m[1, 2])
    else:
        phi = 0.0
        # h_theta h_phi with phi = 0 has first row (1, 0, 0)
        psi = math.atan2(-m[1, 0], m[0, 0])
    return psi, theta, phi


# ---------------------------------------------------------------------------
# the invariant cubic
# ---------------------------------------------------------------------------


def upsilon_cubic(x):
    """The invariant cubic polynomial in the coordinates of ``x``."""
    c, mode = _coords(x)
    x1, x2, x3, x4, x5 = c
    r3 = sqrt_const(3, mode)
    h = to_mode(HALF, mode)
    return (
        h * x1 * (6 * x2 * x2 + 6 * x4 * x4 - 2 * x1 * x1 - 3 * x3 * x3 - 3 * x5 * x5)
        + 3 * h * r3 * x4 * (x5 * x5 - x3 * x3)
        + 3 * r3 * x2 * x3 * x5
    )


def det3(m: np.ndarray):
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


@lru_cache(maxsize=None)
def upsilon_tensor(mode: str = EXACT) -> np.ndarray:
    """Totally symmetric 5x5x5 array of the polarized cubic.

    Built by inclusion-exclusion on :func:`upsilon_cubic` so no convention
    for polarizing a determinant is needed.
    """
    check_mode(mode)
    eye = la.eye(DIM, mode)
    sixth = to_mode(Fraction(1, 6), mode)
    u = la.zeros((DIM, DIM, DIM), mode)
    cub = upsilon_cubic
    for i in range(DIM):
        for j in range(i, DIM):
            for k in range(j, DIM):
                a, b, c = eye[i], eye[j], eye[k]
                val = (
                    cub(a + b + c) - cub(a + b) - cub(a + c) - cub(b + c) + cub(a) + cub(b) + cub(c)
                ) * sixth
                for p in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
                    u[p] = val
    u.setflags(write=False)
    return u


def upsilon(x, y, z):
    """The symmetric trilinear form with ``upsilon(x, x, x) = upsilon_cubic(x)``."""
    xc, mode = _coords(x)
    yc, _ = _coords(y, mode)
    zc, _ = _coords(z, mode)
    u = upsilon_tensor(mode)
    total = to_mode(0, mode)
    for i in range(DIM):
        if is_zero(xc[i]):
            continue
        for j in range(DIM):
            if is_zero(yc[j]):
                continue
            for k in range(DIM):
                if is_zero(zc[k]) or is_zero(u[i, j, k]):
                    continue
                total = total + u[i, j, k] * xc[i] * yc[j] * zc[k]
    return total


def upsilon_op_matrix(v) -> np.ndarray:
    """Symmetric matrix ``M`` with ``g(M x, y) = upsilon(v, x, y)``."""
    vc, mode = _coords(v)
    u = upsilon_tensor(mode)
    m = la.zeros((DIM, DIM), mode)
    for i in range(DIM):
        if not is_zero(vc[i]):
            m = m + vc[i] * u[i]
    return m


def upsilon_op(v) -> Tensor2:
    """The operator ``Upsilon_v`` as a :class:`Tensor2`."""
    return Tensor2(upsilon_op_matrix(v))


@lru_cache(maxsize=None)
def _upsilon_basis_ops(mode: str) -> tuple[np.ndarray, ...]:
    u = upsilon_tensor(mode)
    return tuple(np.array(u[i]) for i in range(DIM))


@lru_cache(maxsize=None)
def _upsilon_products(mode: str) -> tuple[tuple[np.ndarray, ...], ...]:
    ops = _upsilon_basis_ops(mode)
    return tuple(tuple(4 * (ops[j] @ ops[i]) for i in range(DIM)) for j in range(DIM))


def upsilon_hat_array(w: np.ndarray) -> np.ndarray:
    """``upsilon_hat`` on a raw 5x5 array ``W[i, k]`` (coefficient of e_i (x) e_k).

    ``W`` acts as the endomorphism ``x -> W^T x`` (so that
    ``g(W(x), y) = g(W, x (x) y)``); the resulting endomorphism
    ``4 sum_j Upsilon_{W(e_j)} Upsilon_{e_j}`` is turned back into a tensor
    by the same rule.
    """
    w = np.asarray(w)
    mode = la.mode_of(w)
    prods = _upsilon_products(mode)
    out = la.zeros((DIM, DIM), mode)
    for j in range(DIM):
        for i in range(DIM):
            if not is_zero(w[j, i]):
                # W(e_j) = sum_i W[j, i] e_i, endomorphism term Upsilon_i Upsilon_j
                out = out + w[j, i] * prods[j][i]
    return out


def upsilon_hat(w: Tensor2) -> Tensor2:
    return Tensor2(upsilon_hat_array(w.matrix), w.mode)


@lru_cache(maxsize=None)
def upsilon_hat_matrix(mode: str = EXACT) -> np.ndarray:
    """The 25x25 matrix of ``upsilon_hat`` in the basis ``e_i (x) e_k`` (row-major)."""
    m = la.zeros((DIM * DIM, DIM * DIM), mode)
    for col in range(DIM * DIM):
        w = la.zeros((DIM, DIM), mode)
        w[divmod(col, DIM)] = to_mode(1, mode)
        m[:, col] = upsilon_hat_array(w).reshape(-1)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def projector(name: str, mode: str = EXACT) -> np.ndarray:
    """Orthogonal projector (25x25) onto an eigenspace of ``upsilon_hat``.

    Lagrange interpolation in the operator: the product over the other
    eigenvalues ``mu`` of ``(U - mu I) / (lam - mu)``.
    """
    if name not in EIGENVALUES:
        raise ValueError("unknown summand %r; expected one of %s" % (name, sorted(EIGENVALUES)))
    lam = EIGENVALUES[name]
    u = upsilon_hat_matrix(mode)
    ident = la.eye(DIM * DIM, mode)
    p = ident
    for other, mu_ in EIGENVALUES.items():
        if other == name:
            continue
        factor = (u - mu_ * ident) / to_mode(lam - mu_, mode)
        p = _sparse_matmul(p, factor) if mode == EXACT else p @ factor
    p.setflags(write=False)
    return p


def _sparse_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product skipping zero entries (the operands are sparse)."""
    n, k = a.shape
    m = b.shape[1]
    out = la.zeros((n, m), EXACT)
    brows = [[(c, b[r, c]) for c in range(m) if b[r, c]] for r in range(k)]
    for i in range(n):
        acc: dict[int, QF] = {}
        for r in range(k):
            x = a[i, r]
            if not x:
                continue
            for c, y in brows[r]:
                acc[c] = acc[c] + x * y if c in acc else x * y
        for c, v in acc.items():
            out[i, c] = v
    return out


def project(name: str, w: Tensor2) -> Tensor2:
    p = projector(name, w.mode)
    return Tensor2((p @ w.matrix.reshape(-1)).reshape(DIM, DIM), w.mode)


def eigen_multiplicities(mode: str = EXACT) -> dict[int, int]:
    """Multiplicity of each expected eigenvalue, from ranks of ``U - lam I``."""
    u = upsilon_hat_matrix(mode)
    ident = la.eye(DIM * DIM, mode)
    return {lam: DIM * DIM - la.rank(u - lam * ident, tol=1e-8) for lam in EIGENVALUES.values()}


# ---------------------------------------------------------------------------
# frames and the kappa basis
# ---------------------------------------------------------------------------


class Frame:
    """An ordered basis ``a_1, ..., a_5`` stored as the columns of a matrix."""

    __slots__ = ("matrix", "mode", "_cache")

    def __init__(self, vectors, mode: str | None = None):
        if isinstance(vectors, (list, tuple)) and vectors and isinstance(vectors[0], KVector):
            mode = mode or vectors[0].mode
            cols = [v.to_mode(mode).components for v in vectors]
            m = np.stack(cols, axis=1)
        else:
            m = np.asarray(vectors)
            mode = mode or la.mode_of(m)
        m = la.asarray(m, mode)
        if m.shape != (DIM, DIM):
            raise ValueError("a frame consists of five vectors in R^5")
        self.matrix = m
        self.mode = mode
        self._cache: dict[str, bool] = {}

    @classmethod
    def standard(cls, mode: str = EXACT) -> "Frame":
        return cls(la.eye(DIM, mode), mode)

    def vector(self, j: int) -> KVector:
        """The 1-based frame vector ``a_j``."""
        return KVector(1, self.matrix[:, j - 1], self.mode)

    @property
    def vectors(self) -> list[KVector]:
        return [self.vector(j) for j in range(1, DIM + 1)]

    def _tol(self) -> float:
        return 0.0 if self.mode == EXACT else 1e-9

    @property
    def orthonormal(self) -> bool:
        if "orthonormal" not in self._cache:
            self._cache["orthonormal"] = la.all_zero(self.matrix.T @ self.matrix - la.eye(DIM, self.mode), self._tol())
        return self._cache["orthonormal"]

    @property
    def oriented(self) -> bool:
        if "oriented" not in self._cache:
            self._cache["oriented"] = is_zero(la.det(self.matrix) - 1, self._tol())
        return self._cache["oriented"]

    @property
    def adapted(self) -> bool:
        if "adapted" not in self._cache:
            self._cache["adapted"] = is_adapted(self)
        return self._cache["adapted"]

    def transformed_by(self, h) -> "Frame":
        """The frame ``b`` with ``b_j = sum_i iota(h)[j, i] a_i``.

        A rotation acts on a basis this way when frames are compared:
        ``iota(h)`` acts on coordinates, so the basis moves by its transpose.
        """
        return Frame(self.matrix @ iota(h).T, self.mode)

    def to_float(self) -> "Frame":
        return Frame(la.to_float_array(self.matrix), FLOAT)

    def coordinates(self, x: KVector) -> np.ndarray:
        """Coordinates of ``x`` in this (orthonormal) frame."""
        return self.matrix.T @ x.components

    def __repr__(self) -> str:
        return "Frame(%r)" % [v for v in self.vectors]


def _frame_bivector(f: Frame, i: int, j: int) -> KVector:
    return wedge_vectors(f.matrix[:, i - 1], f.matrix[:, j - 1], f.mode)


@dataclass(frozen=True)
class KappaTriple:
    """The orthogonal basis ``kappa_1, kappa_2, kappa_3`` of the 3-dimensional summand."""

    k1: KVector
    k2: KVector
    k3: KVector

    @property
    def mode(self) -> str:
        return self.k1.mode

    def as_list(self) -> list[KVector]:
        return [self.k1, self.k2, self.k3]

    def __getitem__(self, i: int) -> KVector:
        """0-based access."""
        return self.as_list()[i]

    def combine(self, y: Sequence) -> KVector:
        """``sum_i y_i kappa_i``."""
        mode = self.mode
        out = KVector.zero(2, mode)
        for yi, k in zip(y, self.as_list()):
            yi = to_mode(yi, mode)
            if not is_zero(yi):
                out = out + k * yi
        return out

    def coords(self, s: KVector, tol: float | None = None) -> np.ndarray:
        """Kappa-coordinates ``y_i = g(s, kappa_i) / 5``; ``s`` must lie in the span."""
        if s.degree != 2:
            raise ValueError("expected a bivector")
        s = s.to_mode(self.mode) if s.mode != self.mode and self.mode == FLOAT else s
        five = to_mode(5, s.mode)
        y = np.array([inner(s, k.to_mode(s.mode)) / five for k in self.as_list()], dtype=object if s.mode == EXACT else float)
        resid = s - self.to_mode(s.mode).combine(y)
        if not resid.is_zero(_tol(s.mode, tol)):
            raise ValueError("bivector is not in the span of the kappa triple (outside the 3-dimensional summand)")
        return y

    def to_mode(self, mode: str) -> "KappaTriple":
        if mode == self.mode:
            return self
        return KappaTriple(self.k1.to_mode(mode), self.k2.to_mode(mode), self.k3.to_mode(mode))

    def endomorphisms(self) -> list[np.ndarray]:
        """Matrices of ``S_kappa_i : x -> i_x kappa_i``."""
        return [bivector_to_matrix(k).T for k in self.as_list()]


def kappa_from_frame_unchecked(f: Frame) -> KappaTriple:
    r3 = sqrt_const(3, f.mode)
    b = lambda i, j: _frame_bivector(f, i, j)  # noqa: E731
    k1 = b(1, 5) * r3 + b(2, 3) + b(4, 5)
    k2 = b(1, 3) * r3 + b(2, 5) + b(3, 4)
    k3 = b(2, 4) * 2 + b(3, 5)
    return KappaTriple(k1, k2, k3)


def kappa_frame(f: Frame) -> KappaTriple:
    """The kappa triple of an adapted frame."""
    if not f.adapted:
        raise ValueError("kappa_frame requires an adapted frame")
    return kappa_from_frame_unchecked(f)


@lru_cache(maxsize=None)
def standard_kappa(mode: str = EXACT) -> KappaTriple:
    return kappa_from_frame_unchecked(Frame.standard(mode))


def is_adapted(f: Frame) -> bool:
    """Orthonormal, positively oriented, and the cubic has its canonical coefficients."""
    if not (f.orthonormal and f.oriented):
        return False
    u = upsilon_tensor(f.mode)
    a = f.matrix
    # coefficient table in the frame: U'[i,j,k] = U(a_i, a_j, a_k)
    transformed = np.einsum("pqr,pi,qj,rk->ijk", u, a, a, a) if f.mode == FLOAT else _transform3(u, a)
    return la.all_zero(transformed - u, 0.0 if f.mode == EXACT else 1e-9)


def _transform3(u: np.ndarray, a: np.ndarray) -> np.ndarray:
    t1 = np.tensordot(u, a, axes=([0], [0]))  # q r i
    t2 = np.tensordot(t1, a, axes=([0], [0]))  # r i j
    t3 = np.tensordot(t2, a, axes=([0], [0]))  # i j k
    return t3


def projector_lambda2(triple: KappaTriple | None = None, mode: str = EXACT) -> np.ndarray:
    """10x10 matrix of ``P = (1/5) sum_i <., kappa_i> kappa_i`` on bivector coordinates."""
    kt = triple or standard_kappa(mode)
    mode = kt.mode
    p = la.zeros((len(PAIRS), len(PAIRS)), mode)
    five = to_mode(5, mode)
    for k in kt.as_list():
        c = k.components
        p = p + np.outer(c, c) / five
    return p


def in_l23(s: KVector, tol: float | None = None) -> bool:
    p = projector_lambda2(mode=s.mode)
    return la.all_zero(p @ s.components - s.components, _tol(s.mode, tol))


def cross(s: KVector, t: KVector, triple: KappaTriple | None = None, tol: float | None = None) -> KVector:
    """Cross product in kappa-coordinates: ``(s x t)_i = eps_ijk s_j t_k``."""
    kt = (triple or standard_kappa(s.mode)).to_mode(s.mode)
    a = kt.coords(s, tol)
    b = kt.coords(t, tol)
    c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    return kt.combine(c)


_D = np.diag([1, -1, 1])


def adapted_from_triple(q1: KVector, q2: KVector, q3: KVector, tol: float | None = None) -> Frame:
    """An adapted frame whose kappa triple is ``(q1, q2, q3)``.

    In kappa-coordinates the rotation taking ``kappa_i(e)`` to ``q_i`` is an
    SO(3) matrix ``Q``; the adjoint action of ``iota(h)`` on the kappa
    coordinates is ``D h D`` with ``D = diag(1, -1, 1)``, so ``h = D Q D``
    solves the problem with field operations only (exact whenever the
    inputs are).  In float mode ``Q`` is first replaced by the nearest
    rotation.
    """
    mode = q1.mode
    t = _tol(mode, tol)
    ref = standard_kappa(mode)
    try:
        cols = [ref.coords(q, tol) for q in (q1, q2, q3)]
    except ValueError as exc:
        raise ValueError("adapted_from_triple: %s" % exc) from None
    qm = np.stack(cols, axis=1)
    ident = la.eye(3, mode)
    if not la.all_zero(qm.T @ qm - ident, t):
        raise ValueError("adapted_from_triple: inputs are not pairwise orthogonal with squared norm 5")
    d = la.det(qm)
    if not is_zero(d - 1, t):
        raise ValueError("adapted_from_triple: triple has the wrong orientation")
    if mode == FLOAT:
        u, _, vt = np.linalg.svd(qm)
        qm = u @ vt
    dm = la.asarray(_D, mode)
    h = dm @ qm @ dm
    frame = Frame.standard(mode).transformed_by(SO3Element(h.T, mode, tol=1e-9))
    got = kappa_from_frame_unchecked(frame)
    for g_, q in zip(got.as_list(), (q1, q2, q3)):
        if not g_.close_to(q, t if mode == EXACT else 1e-8):
            raise ValueError("adapted_from_triple: reconstruction failed")  # pragma: no cover
    return frame


# ---------------------------------------------------------------------------
# transformation laws of the kappa-triple under the elementary rotations
# ---------------------------------------------------------------------------


def kappa_law(frame: Frame, h) -> np.ndarray:
    """3x3 matrix ``L`` with ``kappa_i(b) = sum_j L[i, j] kappa_j(a)``, ``b = a.transformed_by(h)``."""
    b = frame.transformed_by(h)
    ka, kb = kappa_frame(frame), kappa_frame(b)
    return np.array([list(ka.coords(kb[i])) for i in range(3)], dtype=object if frame.mode == EXACT else float)


def expected_kappa_law(kind: str, cos, sin, mode: str = EXACT) -> np.ndarray:
    """Closed form of :func:`kappa_law` for ``h_phi``, ``h_theta`` and ``h_psi``.

    ``phi``: ``kappa(b) = (-s k1 - c k2, -k3, c k1 - s k2)``;
    ``theta``: ``(k3, -c k1 + s k2, -s k1 - c k2)``;
    ``psi``: ``(c k1 - s k2, s k1 + c k2, k3)``.
    """
    c, s = to_mode(cos, mode), to_mode(sin, mode)
    z, o = to_mode(0, mode), to_mode(1, mode)
    rows = {
        "phi": [[-s, -c, z], [z, z, -o], [c, -s, z]],
        "theta": [[z, z, o], [-c, s, z], [-s, -c, z]],
        "psi": [[c, -s, z], [s, c, z], [z, z, o]],
    }
    if kind not in rows:
        raise ValueError("kind must be 'phi', 'theta' or 'psi'")
    return np.array(rows[kind], dtype=object if mode == EXACT else float)


ELEMENTARY = {"phi": h_phi, "theta": h_theta, "psi": h_psi}

"""Curvature-type maps ``Lambda^2 -> Lambda^2_3`` and their decomposition.

A :class:`CurvatureMap` is stored as a 10x10 matrix over the bivector
basis ``e_ij`` (lexicographic); column ``a`` holds the image of the a-th
basis bivector.  The 4-tensor is ``K(X, Y, Z, U) = g(K(X ^ Y), Z ^ U)``.
The map ``Psi`` sends ``K`` to (alternation, skew Ricci, scalar curvature,
traceless symmetric Ricci); explicit constructors invert each piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import linalg as la
from .multilinear import COMBOS, DIM, INDEX, PAIRS, KVector, Tensor2, matrix_to_bivector, perm_sign
from .representation import KappaTriple, projector, projector_lambda2, standard_kappa
from .scalars import EXACT, FLOAT, is_zero, sqrt_const, to_mode

NPAIR = len(PAIRS)


def _tol(mode: str, tol: float | None = None) -> float:
    if mode == EXACT:
        return 0.0
    return 1e-9 if tol is None else tol


class RangeError(ValueError):
    """The curvature map does not take values in the 3-dimensional summand."""


class CurvatureMap:
    """A linear map ``K: Lambda^2 -> Lambda^2_3`` given by its 10x10 matrix."""

    __slots__ = ("matrix", "mode", "_k4")

    def __init__(self, matrix, mode: str | None = None, check: bool = True, tol: float | None = None):
        m = np.asarray(matrix)
        mode = mode or la.mode_of(m)
        m = la.asarray(m, mode)
        if m.shape != (NPAIR, NPAIR):
            raise ValueError("a curvature map is a 10x10 matrix, got %s" % (m.shape,))
        self.matrix = m
        self.mode = mode
        self._k4 = None
        if check:
            r = self.range_residual()
            if r > _tol(mode, tol):
                raise RangeError("curvature not Λ²₃-valued (residual %.3g)" % r)

    @classmethod
    def zero(cls, mode: str = EXACT) -> "CurvatureMap":
        return cls(la.zeros((NPAIR, NPAIR), mode), mode)

    @classmethod
    def rank_one_kappa3(cls, c, triple: KappaTriple | None = None, mode: str = EXACT) -> "CurvatureMap":
        """``K(X, Y, Z, U) = c g(X ^ Y, kappa_3) g(kappa_3, Z ^ U)``."""
        kt = triple or standard_kappa(mode)
        k = kt.k3.components
        return cls(np.outer(k, k) * to_mode(c, kt.mode), kt.mode)

    @classmethod
    def projection(cls, mode: str = EXACT) -> "CurvatureMap":
        """The orthogonal projection P onto the 3-dimensional summand."""
        return cls(projector_lambda2(mode=mode), mode)

    def range_residual(self) -> float:
        p = projector_lambda2(mode=self.mode)
        return la.max_abs(p @ self.matrix - self.matrix)

    def __call__(self, b: KVector) -> KVector:
        return KVector(2, self.matrix @ b.components, self.mode)

    def __add__(self, other: "CurvatureMap") -> "CurvatureMap":
        return CurvatureMap(self.matrix + other.matrix, self.mode, check=False)

    def __sub__(self, other: "CurvatureMap") -> "CurvatureMap":
        return CurvatureMap(self.matrix - other.matrix, self.mode, check=False)

    def __mul__(self, c) -> "CurvatureMap":
        return CurvatureMap(self.matrix * to_mode(c, self.mode), self.mode, check=False)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, CurvatureMap) and self.mode == other.mode and bool(np.all(self.matrix == other.matrix))

    __hash__ = None  # type: ignore[assignment]

    def close_to(self, other: "CurvatureMap", tol: float = 0.0) -> bool:
        return la.all_zero(self.matrix - other.matrix, tol)

    def to_float(self) -> "CurvatureMap":
        return CurvatureMap(la.to_float_array(self.matrix), FLOAT, check=False)

    def k4(self) -> np.ndarray:
        """The full array ``K[x, y, z, u]``."""
        if self._k4 is None:
            out = la.zeros((DIM,) * 4, self.mode)
            for a, (x, y) in enumerate(PAIRS):
                for b, (z, u) in enumerate(PAIRS):
                    v = self.matrix[b, a]
                    if is_zero(v):
                        continue
                    out[x, y, z, u] = v
                    out[y, x, z, u] = -v
                    out[x, y, u, z] = -v
                    out[y, x, u, z] = v
            out.setflags(write=False)
            self._k4 = out
        return self._k4

    def is_zero(self, tol: float = 0.0) -> bool:
        return la.all_zero(self.matrix, tol)


# ---------------------------------------------------------------------------
# Ricci, alternation, eta'
# ---------------------------------------------------------------------------


def ricci(k: CurvatureMap) -> Tensor2:
    """``rho(X, Y) = sum_a K(X, e_a, Y, e_a)``."""
    k4 = k.k4()
    out = la.zeros((DIM, DIM), k.mode)
    for x in range(DIM):
        for y in range(DIM):
            total = out[x, y]
            for a in range(DIM):
                v = k4[x, a, y, a]
                if not is_zero(v):
                    total = total + v
            out[x, y] = total
    return Tensor2(out, k.mode)


def ricci_parts(k: CurvatureMap) -> tuple[Tensor2, Tensor2, object]:
    """``(rho_plus, rho_minus, s)``."""
    r = ricci(k).matrix
    half = to_mode(Fraction(1, 2), k.mode)
    return Tensor2((r + r.T) * half, k.mode), Tensor2((r - r.T) * half, k.mode), Tensor2(r, k.mode).trace


@lru_cache(maxsize=None)
def _alt_terms() -> tuple[tuple[tuple[int, int, int, int], int], ...]:
    return tuple((p, perm_sign(p)) for p in permutations(range(4)))


def antisym(k: CurvatureMap) -> KVector:
    """The full alternation of the 4-tensor, returned as a 4-vector.

    ``A(e_i ^ e_j ^ e_k ^ e_l) = (1/24) sum_pi sign(pi) K(pi(i, j, k, l))``.
    """
    k4 = k.k4()
    comps = la.zeros(len(COMBOS[4]), k.mode)
    w = to_mode(Fraction(1, 24), k.mode)
    for n, idx in enumerate(COMBOS[4]):
        total = to_mode(0, k.mode)
        for p, s in _alt_terms():
            v = k4[idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]]
            if not is_zero(v):
                total = total + v * s
        comps[n] = total * w
    return KVector(4, comps, k.mode)


def kappa_endomorphisms(triple: KappaTriple | None = None, mode: str = EXACT) -> list[np.ndarray]:
    kt = triple or standard_kappa(mode)
    return kt.endomorphisms()


def eta_prime(eta: Tensor2, triple: KappaTriple | None = None) -> Tensor2:
    """``eta'(X, Z) = sum_i eta(kappa_i X, kappa_i Z)`` (unnormalized sum)."""
    mode = eta.mode
    kt = (triple or standard_kappa(mode)).to_mode(mode)
    out = la.zeros((DIM, DIM), mode)
    for s in kt.endomorphisms():
        out = out + s.T @ eta.matrix @ s
    return Tensor2(out, mode)


# ---------------------------------------------------------------------------
# constructors for each summand
# ---------------------------------------------------------------------------


def _derivation_matrix(eta: np.ndarray, mode: str) -> np.ndarray:
    """Matrix of ``X ^ Y -> eta(X) ^ Y + X ^ eta(Y)`` where ``g(eta(X), Y) = eta(X, Y)``."""
    out = la.zeros((NPAIR, NPAIR), mode)
    for a, (i, j) in enumerate(PAIRS):
        col = la.zeros(NPAIR, mode)
        # eta(e_i) = sum_m eta[i, m] e_m
        for m in range(DIM):
            c = eta[i, m]
            if not is_zero(c) and m != j:
                b = INDEX[2][tuple(sorted((m, j)))]
                col[b] = col[b] + (c if m < j else -c)
            c = eta[j, m]
            if not is_zero(c) and m != i:
                b = INDEX[2][tuple(sorted((i, m)))]
                col[b] = col[b] + (c if i < m else -c)
        out[:, a] = col
    return out


def k_nu(nu: KVector) -> CurvatureMap:
    """``K_nu = (10/3) P o N`` with ``g(N(X ^ Y), Z ^ U) = nu(X ^ Y ^ Z ^ U)``."""
    if nu.degree != 4:
        raise ValueError("k_nu expects a 4-vector")
    mode = nu.mode
    n = la.zeros((NPAIR, NPAIR), mode)
    for a, (i, j) in enumerate(PAIRS):
        for b, (k, l) in enumerate(PAIRS):
            if len({i, j, k, l}) == 4:
                n[b, a] = nu.coeff(i + 1, j + 1, k + 1, l + 1)
    p = projector_lambda2(mode=mode)
    return CurvatureMap(p @ n * to_mode(Fraction(10, 3), mode), mode, check=False)


def k_minus(eta: Tensor2, triple: KappaTriple | None = None) -> CurvatureMap:
    """``(5/6) P(eta(X)^Y + X^eta(Y) + eta'(X)^Y + X^eta'(Y))`` for skew ``eta``."""
    if not eta.is_skew:
        raise ValueError("k_minus expects a skew tensor")
    mode = eta.mode
    ep = eta_prime(eta, triple)
    d = _derivation_matrix(eta.matrix + ep.matrix, mode)
    p = projector_lambda2(triple, mode)
    return CurvatureMap(p @ d * to_mode(Fraction(5, 6), mode), mode, check=False)


def k_plus(eta: Tensor2, triple: KappaTriple | None = None) -> CurvatureMap:
    """``(5/18) P(5 eta(X)^Y + 5 X^eta(Y) - eta'(X)^Y - X^eta'(Y))`` for symmetric traceless ``eta``."""
    if not eta.is_symmetric:
        raise ValueError("k_plus expects a symmetric tensor")
    if not eta.is_traceless:
        raise ValueError("k_plus expects a traceless (g-orthogonal) tensor")
    mode = eta.mode
    ep = eta_prime(eta, triple)
    d = _derivation_matrix(eta.matrix * to_mode(5, mode) - ep.matrix, mode)
    p = projector_lambda2(triple, mode)
    return CurvatureMap(p @ d * to_mode(Fraction(5, 18), mode), mode, check=False)


def k_scalar(s, mode: str = EXACT) -> CurvatureMap:
    """``(s/6) P``: the unique multiple of P with scalar curvature ``s``."""
    p = projector_lambda2(mode=mode)
    return CurvatureMap(p * (to_mode(s, mode) / to_mode(6, mode)), mode, check=False)


@dataclass(frozen=True)
class CurvatureDecomposition:
    """``Psi(K) = (A, rho_minus, s, eta)``."""

    A: KVector
    rho_minus: Tensor2
    s: object
    eta: Tensor2

    @property
    def mode(self) -> str:
        return self.A.mode

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvatureDecomposition):
            return NotImplemented
        return self.A == other.A and self.rho_minus == other.rho_minus and self.s == other.s and self.eta == other.eta

    __hash__ = None  # type: ignore[assignment]


def psi_decompose(k: CurvatureMap) -> CurvatureDecomposition:
    r = k.range_residual()
    if r > _tol(k.mode):
        raise RangeError("curvature not Λ²₃-valued (residual %.3g)" % r)
    rp, rm, s = ricci_parts(k)
    eta = rp.matrix - la.eye(DIM, k.mode) * (s / to_mode(5, k.mode))
    return CurvatureDecomposition(antisym(k), rm, s, Tensor2(eta, k.mode))


def psi_inverse(d: CurvatureDecomposition) -> CurvatureMap:
    """``k_nu(A) + k_minus(rho_minus) + (s/6) P + k_plus(eta)``."""
    mode = d.mode
    total = k_nu(d.A) + k_minus(d.rho_minus) + k_scalar(d.s, mode) + k_plus(d.eta)
    return CurvatureMap(total.matrix, mode)


# ---------------------------------------------------------------------------
# explicit bases of Lambda^2_7 and Sym^2_9 in an adapted frame
# ---------------------------------------------------------------------------


def _bv(mode: str, *terms) -> KVector:
    out = KVector.zero(2, mode)
    for c, i, j in terms:
        out = out + KVector.blade(i, j, mode=mode, coeff=c)
    return out


def lambda27_basis_torsion(mode: str = EXACT) -> list[KVector]:
    """The seven bivectors on which ``*T`` vanishes in the normality proof."""
    r3 = sqrt_const(3, mode)
    return [
        _bv(mode, (1, 2, 3), (-1, 4, 5)),
        _bv(mode, (1, 2, 5), (-1, 3, 4)),
        _bv(mode, (1, 1, 2)),
        _bv(mode, (1, 2, 4), (-2, 3, 5)),
        _bv(mode, (1, 1, 4)),
        _bv(mode, (1, 1, 3), (-r3, 2, 5)),
        _bv(mode, (1, 1, 5), (-r3, 2, 3)),
    ]


def lambda27_basis_ricci(mode: str = EXACT) -> list[KVector]:
    """The seven bivectors on which the skew Ricci tensor vanishes in the normality proof."""
    r3 = sqrt_const(3, mode)
    return [
        _bv(mode, (1, 1, 2)),
        _bv(mode, (1, 2, 4), (-2, 3, 5)),
        _bv(mode, (1, 1, 4)),
        _bv(mode, (1, 2, 3), (-1, 4, 5)),
        _bv(mode, (1, 2, 5), (-1, 3, 4)),
        _bv(mode, (1, 1, 5), (-r3, 4, 5)),
        _bv(mode, (1, 1, 3), (-r3, 3, 4)),
    ]


def _sym(mode: str, *terms) -> Tensor2:
    """``sum c a_i (.) a_j`` with ``a (.) b = (a (x) b + b (x) a) / 2``."""
    m = la.zeros((DIM, DIM), mode)
    half = to_mode(Fraction(1, 2), mode)
    for c, i, j in terms:
        c = to_mode(c, mode)
        m[i - 1, j - 1] = m[i - 1, j - 1] + c * half
        m[j - 1, i - 1] = m[j - 1, i - 1] + c * half
    return Tensor2(m, mode)


def sym29_basis(mode: str = EXACT) -> list[Tensor2]:
    """The ten symmetric tensors listed as spanning ``Sym^2_9`` in the normality proof."""
    r3 = sqrt_const(3, mode)
    return [
        _sym(mode, (1, 2, 4)),
        _sym(mode, (1, 2, 2), (-1, 4, 4)),
        _sym(mode, (2 * r3, 1, 4), (-3, 1, 1), (4, 3, 3), (-1, 4, 4)),
        _sym(mode, (r3, 1, 3), (-1, 3, 4)),
        _sym(mode, (2 * r3, 1, 4), (3, 1, 1), (-4, 5, 5), (1, 4, 4)),
        _sym(mode, (r3, 1, 5), (1, 4, 5)),
        _sym(mode, (r3, 1, 3), (1, 2, 5)),
        _sym(mode, (r3, 1, 5), (1, 2, 3)),
        _sym(mode, (3, 1, 1), (1, 2, 2), (-2, 3, 3), (-2, 5, 5)),
        _sym(mode, (r3, 1, 2), (-2, 3, 5)),
    ]


def lambda23_complement_basis(mode: str = EXACT) -> list[KVector]:
    """Alias of :func:`lambda27_basis_torsion` (a basis of the complement of the 3-dim summand)."""
    return lambda27_basis_torsion(mode)


# ---------------------------------------------------------------------------
# component checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """Verdict of one condition with the residual that decided it."""

    holds: bool
    residual: float
    detail: dict | None = None


def _proj_residual(name: str, w: Tensor2) -> tuple[np.ndarray, float]:
    p = projector(name, w.mode)
    comp = p @ w.matrix.reshape(-1)
    return comp.reshape(DIM, DIM), la.max_abs(comp)


def check_S9(k: CurvatureMap, tol: float | None = None) -> Check:
    """The ``Sym^2_9`` component of ``eta = rho_plus - s g / 5`` vanishes."""
    d = psi_decompose(k)
    comp, res = _proj_residual("S9", d.eta)
    t = _tol(k.mode, tol)
    holds = la.all_zero(comp, t)
    # cross-check against the explicit basis: eta must vanish on it exactly when the component does
    on_basis = max(la.max_abs([_pair(d.eta, b)]) for b in sym29_basis(k.mode))
    if holds != (on_basis <= max(t, 1e-12 if k.mode == FLOAT else 0.0)):
        raise AssertionError("projector and explicit basis disagree on the Sym^2_9 component")  # pragma: no cover
    return Check(holds, res, {"basis_residual": on_basis})


def check_L27(k: CurvatureMap, tol: float | None = None) -> Check:
    """The ``Lambda^2_7`` component of ``rho_minus`` vanishes."""
    d = psi_decompose(k)
    comp, res = _proj_residual("L27", d.rho_minus)
    t = _tol(k.mode, tol)
    holds = la.all_zero(comp, t)
    rb = matrix_to_bivector(d.rho_minus.matrix, k.mode)
    from .multilinear import inner

    on_basis = max(la.max_abs([inner(rb, b)]) for b in lambda27_basis_ricci(k.mode))
    if holds != (on_basis <= max(t, 1e-12 if k.mode == FLOAT else 0.0)):
        raise AssertionError("projector and explicit basis disagree on the Lambda^2_7 component")  # pragma: no cover
    return Check(holds, res, {"basis_residual": on_basis})


def _pair(a: Tensor2, b: Tensor2):
    """``sum a_ij b_ij``."""
    return np.sum(a.matrix * b.matrix)


def chi_killing_t(k: CurvatureMap):
    """The ``t > 0`` with ``t K = P`` or ``None`` when no such ``t`` exists."""
    p = projector_lambda2(mode=k.mode)
    tol = _tol(k.mode)
    flat = list(zip(k.matrix.ravel(), p.ravel()))
    pivot = max(range(len(flat)), key=lambda i: abs(float(flat[i][0])))
    kv, pv = flat[pivot]
    if is_zero(kv, tol):
        return None
    t = pv / kv
    if float(t) <= 0:
        return None
    if not la.all_zero(k.matrix * t - p, tol):
        return None
    return t

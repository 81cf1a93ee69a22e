"""The degree-6 tensor ``Q(sigma, X)`` built from a 4-form ``A`` and a symmetric form ``eta``.

Three evaluators are provided:

``q_reduced``
    Normative.  Splits ``X`` into ``R xi``, ``V(xi)`` and their orthogonal
    complement; ``Q`` vanishes on the first two and equals
    ``-6 A(xi ^ i_X sigma ^ sigma) + 5 eta(X, xi)`` on the complement.
    Needs only field operations, so it is exact at every exact ``sigma``.
``q_reduced_in_frame``
    The same quantity read off in an adapted frame with ``sigma = kappa_3``:
    ``-(12 A_1345 + 5 eta_12) x_2 - (12 A_1235 + 5 eta_14) x_4``.
``q_raw``
    Literal evaluation of the defining degree-6 polynomial, with the
    ``|sigma|^2`` factors read as ``|sigma|^2 / 5`` so that it agrees with
    the reduced form on the sphere ``|sigma|^2 = 5``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from . import linalg as la
from .multilinear import KVector, Tensor2, hodge_star, inner, interior, wedge
from .representation import Frame, KappaTriple, in_l23, kappa_frame, projector, standard_kappa
from .scalars import EXACT, FLOAT, is_zero, sqrt_const, to_mode
from .twistor import phi_plus_extended, xi


def _tol(mode: str, tol: float | None = None) -> float:
    return 0.0 if mode == EXACT else (1e-9 if tol is None else tol)


def _eta_form(eta: Tensor2, x: KVector, y: KVector):
    return x.components @ eta.matrix @ y.components


def _check_sphere(s: KVector) -> None:
    if not in_l23(s, 1e-9):
        raise ValueError("sigma is not in the 3-dimensional summand")
    if not is_zero(inner(s, s) - 5, _tol(s.mode)):
        raise ValueError("sigma is off the sphere |sigma|^2 = 5")


def _sigma_of(s) -> KVector:
    from .twistor import TwistorPoint

    return s.sigma if isinstance(s, TwistorPoint) else s


def vertical_image(s: KVector, triple: KappaTriple | None = None) -> list[KVector]:
    """Vectors ``i_xi tau`` spanning ``V(xi_sigma)`` (``tau`` orthogonal to ``sigma``)."""
    kt = (triple or standard_kappa(s.mode)).to_mode(s.mode)
    z = xi(s)
    n2 = inner(s, s)
    vs = []
    for k in kt.as_list():
        tau = k - s * (inner(k, s) / n2)
        v = interior(z, tau)
        if not v.is_zero(1e-12 if s.mode == FLOAT else 0.0):
            vs.append(v)
    # keep an independent pair
    keep: list[KVector] = []
    for v in vs:
        trial = keep + [v]
        if la.rank(np.stack([w.components for w in trial], axis=1), 1e-10 if s.mode == FLOAT else None) == len(trial):
            keep = trial
        if len(keep) == 2:
            break
    return keep


def split_vector(s: KVector, x: KVector, triple: KappaTriple | None = None) -> tuple[KVector, KVector, KVector]:
    """``x = (part on R xi) + (part on V(xi)) + (complement part)``, orthogonally."""
    z = xi(s)
    zz = inner(z, z)
    px = z * (inner(x, z) / zz)
    vs = vertical_image(s, triple)
    gram = np.array([[inner(a, b) for b in vs] for a in vs], dtype=object if s.mode == EXACT else float)
    rhs = np.array([inner(x, a) for a in vs], dtype=gram.dtype)
    coef = la.solve(gram, rhs)
    pv = KVector.zero(1, s.mode)
    for c, v in zip(coef, vs):
        pv = pv + v * c
    return px, pv, x - px - pv


def q_reduced(a: KVector, eta: Tensor2, s, x: KVector, triple: KappaTriple | None = None):
    """Normative evaluator of ``Q(sigma, X)`` on the sphere ``|sigma|^2 = 5``."""
    s = _sigma_of(s)
    _check_sphere(s)
    _, _, xc = split_vector(s, x, triple)
    z = xi(s)
    w = wedge(wedge(z, interior(xc, s)), s)
    return inner(a, w) * to_mode(-6, s.mode) + _eta_form(eta, xc, z) * to_mode(5, s.mode)


def q_reduced_in_frame(a: KVector, eta: Tensor2, frame: Frame, x: KVector):
    """``Q(kappa_3(frame), X)`` from the closed form in the adapted frame."""
    mode = frame.mode
    kappa_frame(frame)  # validates that the frame is adapted
    av = frame.vectors
    A = lambda i, j, k, l: inner(a, wedge(wedge(wedge(av[i - 1], av[j - 1]), av[k - 1]), av[l - 1]))  # noqa: E731
    E = lambda i, j: _eta_form(eta, av[i - 1], av[j - 1])  # noqa: E731
    x2 = inner(x, av[1])
    x4 = inner(x, av[3])
    c12, c5 = to_mode(12, mode), to_mode(5, mode)
    return -(A(1, 3, 4, 5) * c12 + E(1, 2) * c5) * x2 - (A(1, 2, 3, 5) * c12 + E(1, 4) * c5) * x4


def q_raw(a: KVector, eta: Tensor2, s: KVector, x: KVector, literal_norm: bool = False):
    """Literal degree-6 evaluation for any ``s`` in the summand.

    With ``literal_norm=False`` (default) every ``|s|^2`` factor, including
    the one inside the extended ``phi_+``, is read as ``|s|^2 / 5``; with
    ``literal_norm=True`` the factors are taken literally.
    """
    mode = s.mode
    z = xi(s)
    n2 = inner(s, s)
    scale = n2 if literal_norm else n2 / to_mode(5, mode)
    if literal_norm:
        phi = lambda y: interior(y, s * n2 + interior(z, hodge_star(s))) / 3  # noqa: E731
    else:
        phi = lambda y: phi_plus_extended(s, y)  # noqa: E731
    ixs = interior(x, s)
    t1 = inner(a, wedge(wedge(z, phi(x)), s)) - inner(a, wedge(wedge(z, ixs), s)) * scale
    zz = inner(z, z)
    t2 = inner(x, z) * _eta_form(eta, z, z) - _eta_form(eta, x, z) * zz - _eta_form(eta, phi(ixs), z)
    return t1 * to_mode(12, mode) + t2 * to_mode(5, mode)


def frame_complement_basis(frame: Frame) -> list[tuple[int, list[KVector]]]:
    """For ``i = 1, 2, 3`` a basis of the complement of ``R xi + V(xi)`` at ``sigma = kappa_i``."""
    mode = frame.mode
    a = frame.vectors
    r3h = sqrt_const(3, mode) / 2
    half = to_mode(Fraction(1, 2), mode)
    return [
        (1, [a[0] * r3h + a[3] * half, a[4]]),
        (2, [a[0] * r3h - a[3] * half, a[2]]),
        (3, [a[1], a[3]]),
    ]


def sphere_points(mode: str = EXACT, size: str = "default") -> list[tuple]:
    """Deterministic points of the unit sphere with rational coordinates.

    ``size`` is ``"small"`` (axes and the (1,2,2)/3 family) or ``"default"``
    (adds (2,3,6)/7 and (3,4,0)/5 families).
    """
    families = [(1, 0, 0, 1), (1, 2, 2, 3)]
    if size == "default":
        families += [(2, 3, 6, 7), (0, 3, 4, 5)]
    pts: list[tuple] = []
    seen = set()
    for a, b, c, d in families:
        for perm in set(permutations((a, b, c))):
            for signs in product((1, -1), repeat=3):
                y = tuple(Fraction(sg * v, d) for sg, v in zip(signs, perm))
                if y in seen:
                    continue
                seen.add(y)
                pts.append(y)
    pts.sort()
    return [tuple(to_mode(v, mode) for v in y) for y in pts]


@dataclass(frozen=True)
class QResult:
    """Outcome of :func:`q_vanishes`."""

    vanishes: bool
    residual: float
    witness: tuple | None  # (sigma, X, value)
    hypothesis_ok: bool
    method: str


def q_vanishes(a: KVector, eta: Tensor2, frame: Frame | None = None, tol: float | None = None) -> QResult:
    """Decide ``Q = 0`` identically.

    When the ``Sym^2_9`` part of ``eta`` vanishes it suffices to test
    ``sigma = kappa_1, kappa_2, kappa_3`` and ``X`` over a basis of each
    complement.  Otherwise that reduction is not available: the result is
    flagged ``hypothesis_ok=False`` and ``Q`` is evaluated over a grid of
    rational sphere points and the full basis of R^5, stopping at the
    first nonzero value (the residual is then the largest value seen).
    """
    mode = eta.mode
    frame = frame or Frame.standard(mode)
    t = _tol(mode, tol)
    comp = projector("S9", mode) @ eta.matrix.reshape(-1)
    hyp = la.all_zero(comp, t)
    triple = kappa_frame(frame)
    worst = 0.0
    witness = None
    if hyp:
        method = "reduction"
        cases = [(triple[i - 1], xs) for i, xs in frame_complement_basis(frame)]
    else:
        from .twistor import TwistorPoint

        method = "grid"
        basis = frame.vectors
        cases = [(TwistorPoint(list(y), frame).sigma, basis) for y in sphere_points(mode)]
    for s, xs in cases:
        for x in xs:
            v = q_reduced(a, eta, s, x, triple)
            mag = abs(float(v))
            if mag > worst:
                worst = mag
            if witness is None and not is_zero(v, t):
                witness = (s, x, v)
                if method == "grid":
                    break
        if witness is not None and method == "grid":
            break
    return QResult(witness is None, worst, witness, hyp, method)

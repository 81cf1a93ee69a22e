"""Pointwise geometry of the twistor fibre.

A point of the fibre is a bivector ``sigma`` in the 3-dimensional summand
with ``|sigma|^2 = 5``.  It determines the unit vector ``xi_sigma``, the
self-dual/anti-self-dual halves ``sigma_+-`` on the orthogonal complement
``H^sigma`` of ``xi_sigma``, and the partially complex structures
``phi_+-``.  Tangent vectors of the twistor space are modelled as pairs
(horizontal vector of R^5, vertical bivector orthogonal to ``sigma``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg as la
from .multilinear import DIM, KVector, bivector_to_matrix, hodge_star, inner, interior, wedge
from .representation import Frame, KappaTriple, cross, in_l23, kappa_frame
from .scalars import EXACT, FLOAT, is_zero, sqrt_const, to_mode
from .torsion import TorsionTensor

PLUS = 1
MINUS = -1


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return PLUS
    if sign in (-1, "-", "minus"):
        return MINUS
    raise ValueError("sign must be + or -, got %r" % (sign,))


def _tol(mode: str) -> float:
    return 0.0 if mode == EXACT else 1e-9


@dataclass(frozen=True)
class TwistorPoint:
    """``sigma = sum_i y_i kappa_i(frame)`` with ``sum y_i^2 = 1``."""

    frame: Frame
    y: tuple
    triple: KappaTriple = field(init=False, repr=False, compare=False)
    sigma: KVector = field(init=False, repr=False, compare=False)

    def __init__(self, y: Sequence, frame: Frame | None = None, mode: str | None = None):
        if frame is None:
            mode = mode or EXACT
            frame = Frame.standard(mode)
        mode = frame.mode
        if len(y) != 3:
            raise ValueError("twistor coordinates are three scalars")
        yy = tuple(to_mode(v, mode) for v in y)
        norm = yy[0] * yy[0] + yy[1] * yy[1] + yy[2] * yy[2]
        if not is_zero(norm - 1, 0.0 if mode == EXACT else 1e-10):
            raise ValueError("twistor coordinates must satisfy y1^2 + y2^2 + y3^2 = 1")
        triple = kappa_frame(frame)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "y", yy)
        object.__setattr__(self, "triple", triple)
        object.__setattr__(self, "sigma", triple.combine(yy))

    @classmethod
    def from_sigma(cls, sigma: KVector, frame: Frame | None = None) -> "TwistorPoint":
        frame = frame or Frame.standard(sigma.mode)
        y = kappa_frame(frame).coords(sigma)
        return cls(list(y), frame)

    @property
    def mode(self) -> str:
        return self.frame.mode

    def to_float(self) -> "TwistorPoint":
        return TwistorPoint([float(v) for v in self.y], self.frame.to_float())

    def vertical_basis(self) -> list[KVector]:
        """Two vectors spanning the orthogonal complement of sigma in the summand."""
        ks = self.triple.as_list()
        five = to_mode(5, self.mode)
        out: list[KVector] = []
        for k in ks:
            v = k - self.sigma * (inner(k, self.sigma) / five)
            if v.is_zero(1e-12 if self.mode == FLOAT else 0.0):
                continue
            out.append(v)
        # any two of the projected kappas that are independent
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                c = cross(out[i], out[j], self.triple)
                if not c.is_zero(1e-12 if self.mode == FLOAT else 0.0):
                    return [out[i], out[j]]
        raise AssertionError("unreachable: the complement of sigma is 2-dimensional")  # pragma: no cover


@dataclass(frozen=True)
class TangentPair:
    """A tangent vector ``X^h + V`` of the twistor space."""

    horizontal: KVector
    vertical: KVector

    def __post_init__(self):
        if self.horizontal.degree != 1 or self.vertical.degree != 2:
            raise ValueError("TangentPair needs a vector and a bivector")
        if self.horizontal.mode != self.vertical.mode:
            raise TypeError("mixed-mode TangentPair")

    @classmethod
    def hor(cls, x: KVector) -> "TangentPair":
        return cls(x, KVector.zero(2, x.mode))

    @classmethod
    def ver(cls, v: KVector) -> "TangentPair":
        return cls(KVector.zero(1, v.mode), v)

    @property
    def mode(self) -> str:
        return self.horizontal.mode

    def __add__(self, other: "TangentPair") -> "TangentPair":
        return TangentPair(self.horizontal + other.horizontal, self.vertical + other.vertical)

    def __sub__(self, other: "TangentPair") -> "TangentPair":
        return TangentPair(self.horizontal - other.horizontal, self.vertical - other.vertical)

    def __neg__(self) -> "TangentPair":
        return TangentPair(-self.horizontal, -self.vertical)

    def __mul__(self, c) -> "TangentPair":
        return TangentPair(self.horizontal * c, self.vertical * c)

    __rmul__ = __mul__

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.horizontal.is_zero(tol) and self.vertical.is_zero(tol)

    def close_to(self, other: "TangentPair", tol: float = 0.0) -> bool:
        return self.horizontal.close_to(other.horizontal, tol) and self.vertical.close_to(other.vertical, tol)


def _check_vertical(p: TwistorPoint, v: KVector) -> None:
    if v.degree != 2:
        raise ValueError("vertical part must be a bivector")
    if not in_l23(v, 1e-9):
        raise ValueError("vertical part is not in the 3-dimensional summand")
    if not is_zero(inner(v, p.sigma), 1e-9 if v.mode == FLOAT else 0.0):
        raise ValueError("vertical part is not orthogonal to sigma")


# ---------------------------------------------------------------------------
# xi, sigma_+-, phi_+-
# ---------------------------------------------------------------------------


def xi(s: KVector) -> KVector:
    """``xi_s = 1/4 * (s ^ s)``; defined for every ``s`` in the 3-dimensional summand."""
    if s.degree != 2:
        raise ValueError("xi expects a bivector")
    if not in_l23(s, 1e-9):
        raise ValueError("xi: bivector is not in the 3-dimensional summand")
    return hodge_star(wedge(s, s)) / 4


def xi_polynomial(p: TwistorPoint) -> KVector:
    """The closed form of ``xi`` in the coordinates ``y`` of the frame of ``p``."""
    y1, y2, y3 = p.y
    mode = p.mode
    r3 = sqrt_const(3, mode)
    half = to_mode(Fraction(1, 2), mode)
    coeffs = [
        half * y1 * y1 + half * y2 * y2 - y3 * y3,
        -r3 * y1 * y2,
        r3 * y1 * y3,
        -half * r3 * (y1 * y1 - y2 * y2),
        -r3 * y2 * y3,
    ]
    return KVector(1, p.frame.matrix @ np.array(coeffs, dtype=object if mode == EXACT else float), mode)


def sigma_pm(p: TwistorPoint) -> tuple[KVector, KVector]:
    """``sigma_+- = 1/2 (sigma +- i_xi(*sigma))``."""
    s = p.sigma
    t = interior(xi(s), hodge_star(s))
    return (s + t) / 2, (s - t) / 2


def _phi_factor(sign: int, mode: str):
    return to_mode(Fraction(2, 3) if sign == PLUS else 2, mode)


def phi_matrix(p: TwistorPoint, sign) -> np.ndarray:
    """Matrix ``M`` of ``phi_+-`` acting on column coordinates.

    ``g(phi X, Y) = 2/(2 +- 1) g(sigma_+-, X ^ Y)``; with ``B[i, j]`` the
    coefficient of ``e_i ^ e_j`` in ``sigma_+-`` this is ``M = c B^T``.
    """
    sign = _sign(sign)
    sp_, sm_ = sigma_pm(p)
    part = sp_ if sign == PLUS else sm_
    return bivector_to_matrix(part).T * _phi_factor(sign, p.mode)


def phi_pm(p: TwistorPoint, sign, x: KVector) -> KVector:
    return KVector(1, phi_matrix(p, sign) @ x.components, p.mode)


def phi_plus_extended(s: KVector, x: KVector) -> KVector:
    """``1/3 i_X(s |s|^2 / 5 + i_xi(*s))`` for any ``s`` in the summand.

    Homogeneous of degree 3 in ``s`` and equal to ``phi_+`` when ``|s|^2 = 5``.
    """
    n2 = inner(s, s)
    w = s * (n2 / to_mode(5, s.mode)) + interior(xi(s), hodge_star(s))
    return interior(x, w) / 3


def f_matrix(p: TwistorPoint, sign) -> np.ndarray:
    """``f[alpha, beta] = g(phi E_alpha, E_beta)`` from the closed form in ``y``.

    Uses ``h_eps = g(xi, E_eps)`` from :func:`xi_polynomial`, so it is an
    independent route to the matrix of ``phi`` (in frame coordinates, ``f``
    is the transpose of that matrix).
    """
    sign = _sign(sign)
    mode = p.mode
    e_vecs = p.frame.vectors
    h = p.frame.coordinates(xi_polynomial(p))
    denom = to_mode(2 + sign, mode)
    stars = [hodge_star(k) for k in p.triple.as_list()]
    out = la.zeros((DIM, DIM), mode)
    for a in range(DIM):
        for b in range(DIM):
            if a == b:
                continue
            ab = wedge(e_vecs[a], e_vecs[b])
            total = to_mode(0, mode)
            for yi, k, sk in zip(p.y, p.triple.as_list(), stars):
                if is_zero(yi):
                    continue
                term = inner(k, ab)
                extra = to_mode(0, mode)
                for eps in range(DIM):
                    if is_zero(h[eps]):
                        continue
                    extra = extra + h[eps] * inner(sk, wedge(ab, e_vecs[eps]))
                total = total + yi * (term + extra * sign)
            out[a, b] = total / denom
    return out


# ---------------------------------------------------------------------------
# structures on the twistor space
# ---------------------------------------------------------------------------


def calJ(p: TwistorPoint, v: KVector) -> KVector:
    """Complex structure of the fibre: ``J V = -sigma x V``."""
    return -cross(p.sigma, v, p.triple)


def big_phi(n: int, sign, p: TwistorPoint, a: TangentPair) -> TangentPair:
    """``Phi^(n)_+-``: ``(-1)^n sigma x V`` on vertical, ``phi_+-`` on horizontal."""
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    _check_vertical(p, a.vertical)
    v = cross(p.sigma, a.vertical, p.triple)
    if n == 1:
        v = -v
    return TangentPair(phi_pm(p, sign, a.horizontal), v)


def calJ_n(n: int, p: TwistorPoint, v: KVector) -> KVector:
    """``J^(n) V = (-1)^(n+1) J V``."""
    jv = calJ(p, v)
    return jv if n == 1 else -jv


def metric_ht(t, a: TangentPair, b: TangentPair):
    """``h_t(X^h + V, Y^h + W) = g(X, Y) + t g(V, W)``."""
    t = to_mode(t, a.mode)
    if float(t) <= 0:
        raise ValueError("the metric h_t needs t > 0")
    return inner(a.horizontal, b.horizontal) + t * inner(a.vertical, b.vertical)


def d_eta(t, p: TwistorPoint, sign, a: TangentPair, b: TangentPair, torsion: TorsionTensor | None = None):
    """``d eta_t`` on two tangent vectors (independent of ``t``).

    ``-1/2 [T(X, xi, Y) - T(Y, xi, X)] +- [g(phi X, W(xi)) - g(phi Y, V(xi))]``
    where ``W(xi) = i_xi W``.
    """
    sign = _sign(sign)
    if t is not None and float(to_mode(t, p.mode)) <= 0:
        raise ValueError("t must be positive")
    _check_vertical(p, a.vertical)
    _check_vertical(p, b.vertical)
    mode = p.mode
    x_, y_ = a.horizontal, b.horizontal
    z = xi(p.sigma)
    total = to_mode(0, mode)
    if torsion is not None and not torsion.is_zero():
        tt = torsion if torsion.mode == mode else torsion.to_float()
        total = total - (tt.value(x_, z, y_) - tt.value(y_, z, x_)) / 2
    part = inner(phi_pm(p, sign, x_), interior(z, b.vertical)) - inner(phi_pm(p, sign, y_), interior(z, a.vertical))
    return total + part * sign


def omega(t, n: int, sign, p: TwistorPoint, a: TangentPair, b: TangentPair):
    """``Omega^(n)_+-,t(A, B) = h_t(A, Phi B)``."""
    return metric_ht(t, a, big_phi(n, sign, p, b))


def comm_identity_check(p: TwistorPoint, n: int, sign, v: KVector, tol: float | None = None) -> bool:
    """Check ``(J^(n) V)(xi) = +-(-1)^(n+1) phi_+-(V(xi))`` at one ``V``."""
    sign = _sign(sign)
    _check_vertical(p, v)
    z = xi(p.sigma)
    lhs = interior(z, calJ_n(n, p, v))
    rhs = phi_pm(p, sign, interior(z, v))
    if (sign == PLUS) != (n == 1):
        rhs = -rhs
    return lhs.close_to(rhs, _tol(p.mode) if tol is None else tol)


def chi(p: TwistorPoint) -> TangentPair:
    """The characteristic vector ``xi^h``."""
    return TangentPair.hor(xi(p.sigma))


def in_contact_distribution(p: TwistorPoint, a: TangentPair) -> bool:
    """``A`` lies in ``D = V + (H^sigma)^h``."""
    return is_zero(inner(a.horizontal, xi(p.sigma)), _tol(p.mode))

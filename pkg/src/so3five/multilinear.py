"""Exterior algebra of R^5 with its standard metric and orientation.

k-vectors are stored on lexicographically ordered strictly increasing
multi-indices.  Public index arguments are 1-based (``e(1)`` is the first
basis vector) to match the usual notation ``e_1, ..., e_5``; storage is
0-based.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .scalars import EXACT, FLOAT, check_mode, format_scalar, is_zero, to_mode

DIM = 5
COMBOS: dict[int, list[tuple[int, ...]]] = {k: list(itertools.combinations(range(DIM), k)) for k in range(DIM + 1)}
INDEX: dict[int, dict[tuple[int, ...], int]] = {k: {c: i for i, c in enumerate(COMBOS[k])} for k in COMBOS}
PAIRS = COMBOS[2]


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 if an index repeats)."""
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _wedge_table(j: int, k: int) -> tuple[tuple[int, int, int, int], ...]:
    out = []
    for a, I in enumerate(COMBOS[j]):
        for b, J in enumerate(COMBOS[k]):
            s = perm_sign(I + J)
            if s:
                out.append((a, b, INDEX[j + k][tuple(sorted(I + J))], s))
    return tuple(out)


@lru_cache(maxsize=None)
def _interior_table(k: int) -> tuple[tuple[int, int, int, int], ...]:
    """Rows (vector index, source index, target index, sign) for i_x on degree k."""
    out = []
    for src, I in enumerate(COMBOS[k]):
        for pos, i in enumerate(I):
            rest = I[:pos] + I[pos + 1 :]
            out.append((i, src, INDEX[k - 1][rest], -1 if pos % 2 else 1))
    return tuple(out)


class KVector:
    """An element of the k-th exterior power of R^5 (0 <= k <= 5)."""

    __slots__ = ("degree", "components", "mode")

    def __init__(self, degree: int, components, mode: str | None = None):
        if not 0 <= degree <= DIM:
            raise ValueError("degree must be between 0 and 5, got %r" % (degree,))
        comps = np.asarray(components)
        if mode is None:
            mode = EXACT if comps.dtype == object else FLOAT
        comps = la.asarray(comps, check_mode(mode))
        if comps.shape != (len(COMBOS[degree]),):
            raise ValueError(
                "degree %d needs %d components, got shape %s" % (degree, len(COMBOS[degree]), comps.shape)
            )
        self.degree = degree
        self.components = comps
        self.mode = check_mode(mode)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, degree: int, mode: str = EXACT) -> "KVector":
        return cls(degree, la.zeros(len(COMBOS[degree]), mode), mode)

    @classmethod
    def blade(cls, *indices: int, mode: str = EXACT, coeff=1) -> "KVector":
        """``coeff * e_{i1} ^ ... ^ e_{ik}`` for 1-based indices in any order."""
        idx = tuple(i - 1 for i in indices)
        if any(not 0 <= i < DIM for i in idx):
            raise ValueError("basis indices must lie in 1..5: %r" % (indices,))
        out = cls.zero(len(idx), mode)
        s = perm_sign(idx)
        if s:
            out.components[INDEX[len(idx)][tuple(sorted(idx))]] = to_mode(coeff, mode) * s
        return out

    @classmethod
    def vector(cls, coords, mode: str | None = None) -> "KVector":
        return cls(1, coords, mode)

    @classmethod
    def scalar(cls, value, mode: str = EXACT) -> "KVector":
        return cls(0, [to_mode(value, mode)], mode)

    # -- access --------------------------------------------------------------
    def coeff(self, *indices: int):
        """Coefficient on ``e_{i1} ^ ... ^ e_{ik}`` (1-based, any order)."""
        idx = tuple(i - 1 for i in indices)
        if len(idx) != self.degree:
            raise ValueError("expected %d indices" % self.degree)
        s = perm_sign(idx)
        if not s:
            return to_mode(0, self.mode)
        return self.components[INDEX[self.degree][tuple(sorted(idx))]] * s

    def value(self):
        """The scalar of a degree-0 element."""
        if self.degree != 0:
            raise ValueError("value() is only defined for degree 0")
        return self.components[0]

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "KVector") -> None:
        if not isinstance(other, KVector):
            raise TypeError("expected KVector, got %r" % type(other).__name__)
        if other.mode != self.mode:
            raise TypeError("mixed-mode operation: %s vs %s" % (self.mode, other.mode))
        if other.degree != self.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))

    def __add__(self, other: "KVector") -> "KVector":
        self._check(other)
        return KVector(self.degree, self.components + other.components, self.mode)

    def __sub__(self, other: "KVector") -> "KVector":
        self._check(other)
        return KVector(self.degree, self.components - other.components, self.mode)

    def __neg__(self) -> "KVector":
        return KVector(self.degree, -self.components, self.mode)

    def __mul__(self, c) -> "KVector":
        if isinstance(c, KVector):
            return NotImplemented
        c = to_mode(c, self.mode)
        return KVector(self.degree, self.components * c, self.mode)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "KVector":
        c = to_mode(c, self.mode)
        return KVector(self.degree, self.components / c, self.mode)

    def __xor__(self, other: "KVector") -> "KVector":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KVector):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.mode == other.mode
            and bool(np.all(self.components == other.components))
        )

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self, tol: float = 0.0) -> bool:
        return la.all_zero(self.components, tol)

    def close_to(self, other: "KVector", tol: float = 0.0) -> bool:
        self._check(other)
        return la.all_zero(self.components - other.components, tol)

    def to_float(self) -> "KVector":
        return KVector(self.degree, la.to_float_array(self.components), FLOAT)

    def to_mode(self, mode: str) -> "KVector":
        if mode == self.mode:
            return self
        if mode == FLOAT:
            return self.to_float()
        raise TypeError("float to exact conversion is forbidden")

    def as_array(self) -> np.ndarray:
        return self.components.copy()

    def to_strings(self) -> list[str]:
        return [format_scalar(v) for v in self.components]

    def __repr__(self) -> str:
        terms = []
        for I, v in zip(COMBOS[self.degree], self.components):
            if is_zero(v, 0.0):
                continue
            label = "e" + "".join(str(i + 1) for i in I) if I else "1"
            terms.append("(%s)*%s" % (format_scalar(v), label))
        return "KVector(%s)" % (" + ".join(terms) if terms else "0")


def e(i: int, mode: str = EXACT) -> KVector:
    """The 1-based standard basis vector ``e_i``."""
    return KVector.blade(i, mode=mode)


def vol(mode: str = EXACT) -> KVector:
    return KVector.blade(1, 2, 3, 4, 5, mode=mode)


def _same_mode(u: KVector, v: KVector) -> str:
    if u.mode != v.mode:
        raise TypeError("mixed-mode operation: %s vs %s" % (u.mode, v.mode))
    return u.mode


def wedge(u: KVector, v: KVector) -> KVector:
    """Exterior product; degree overflow (j + k > 5) is an error."""
    mode = _same_mode(u, v)
    j, k = u.degree, v.degree
    if j + k > DIM:
        raise ValueError("degree overflow: %d + %d > 5" % (j, k))
    out = la.zeros(len(COMBOS[j + k]), mode)
    uc, vc = u.components, v.components
    for a, b, t, s in _wedge_table(j, k):
        x, y = uc[a], vc[b]
        if is_zero(x) or is_zero(y):
            continue
        out[t] = out[t] + x * y if s > 0 else out[t] - x * y
    return KVector(j + k, out, mode)


def hodge_star(w: KVector) -> KVector:
    """Hodge star with ``a ^ *b = g(a, b) vol`` for the orientation e_1^...^e_5."""
    k = w.degree
    out = la.zeros(len(COMBOS[DIM - k]), w.mode)
    for i, I in enumerate(COMBOS[k]):
        comp = tuple(c for c in range(DIM) if c not in I)
        s = perm_sign(I + comp)
        out[INDEX[DIM - k][comp]] = w.components[i] * s
    return KVector(DIM - k, out, w.mode)


def interior(x: KVector, w: KVector) -> KVector:
    """Interior product: ``g(i_x w, u) = g(w, x ^ u)``."""
    if x.degree != 1:
        raise ValueError("interior product needs a vector, got degree %d" % x.degree)
    if w.degree < 1:
        raise ValueError("interior product of a degree-0 element")
    mode = _same_mode(x, w)
    out = la.zeros(len(COMBOS[w.degree - 1]), mode)
    xc, wc = x.components, w.components
    for i, src, tgt, s in _interior_table(w.degree):
        a, b = xc[i], wc[src]
        if is_zero(a) or is_zero(b):
            continue
        out[tgt] = out[tgt] + a * b if s > 0 else out[tgt] - a * b
    return KVector(w.degree - 1, out, mode)


def inner(u: KVector, v: KVector):
    """Induced inner product; the multi-index basis is orthonormal."""
    mode = _same_mode(u, v)
    if u.degree != v.degree:
        raise ValueError("degree mismatch: %d vs %d" % (u.degree, v.degree))
    total = la.scalar(0, mode)
    for a, b in zip(u.components, v.components):
        total = total + a * b
    return total


def norm2(u: KVector):
    return inner(u, u)


# ---------------------------------------------------------------------------
# bivectors as matrices
# ---------------------------------------------------------------------------


def bivector_to_matrix(b: KVector) -> np.ndarray:
    """Skew matrix ``M`` with ``M[i, j] = b(e_i, e_j)``, the coefficient of e_i^e_j."""
    if b.degree != 2:
        raise ValueError("expected a bivector")
    m = la.zeros((DIM, DIM), b.mode)
    for (i, j), c in zip(PAIRS, b.components):
        m[i, j] = c
        m[j, i] = -c
    return m


def matrix_to_bivector(m: np.ndarray, mode: str | None = None) -> KVector:
    """Bivector with coefficients ``m[i, j]`` (i < j); the lower triangle is ignored."""
    mode = mode or la.mode_of(m)
    return KVector(2, np.array([m[i, j] for i, j in PAIRS], dtype=object if mode == EXACT else float), mode)


def endomorphism(b: KVector) -> np.ndarray:
    """Matrix of ``S_b: x -> i_x b`` acting on column vectors."""
    return bivector_to_matrix(b).T


def apply_bivector(b: KVector, x: KVector) -> KVector:
    """``S_b(x) = i_x b`` (the bivector read as a skew endomorphism)."""
    return interior(x, b)


def vector_array(x: KVector) -> np.ndarray:
    if x.degree != 1:
        raise ValueError("expected a vector")
    return x.components


def wedge_vectors(x: np.ndarray, y: np.ndarray, mode: str) -> KVector:
    """``x ^ y`` for coordinate arrays, returned as a bivector."""
    out = la.zeros(len(PAIRS), mode)
    for t, (i, j) in enumerate(PAIRS):
        out[t] = x[i] * y[j] - x[j] * y[i]
    return KVector(2, out, mode)


def basis(k: int, mode: str = EXACT) -> list[KVector]:
    return [KVector.blade(*(i + 1 for i in I), mode=mode) for I in COMBOS[k]]


class Tensor2:
    """A 5x5 matrix ``W[i, k]``, the coefficient of ``e_i (x) e_k``.

    Symmetry, skewness and tracelessness are computed from the data, never
    assumed; in float mode they are judged with a 1e-12 tolerance.
    """

    __slots__ = ("matrix", "mode")

    FLOAT_TOL = 1e-12

    def __init__(self, matrix, mode: str | None = None):
        m = np.asarray(matrix)
        if mode is None:
            mode = EXACT if m.dtype == object else FLOAT
        if m.shape != (DIM, DIM):
            raise ValueError("Tensor2 needs a 5x5 matrix, got %s" % (m.shape,))
        self.matrix = la.asarray(m, mode)
        self.mode = mode

    def _tol(self) -> float:
        return 0.0 if self.mode == EXACT else self.FLOAT_TOL

    @property
    def is_symmetric(self) -> bool:
        return la.all_zero(self.matrix - self.matrix.T, self._tol())

    @property
    def is_skew(self) -> bool:
        return la.all_zero(self.matrix + self.matrix.T, self._tol())

    @property
    def trace(self):
        return sum((self.matrix[i, i] for i in range(1, DIM)), self.matrix[0, 0])

    @property
    def is_traceless(self) -> bool:
        return is_zero(self.trace, self._tol())

    def flags(self) -> dict[str, bool]:
        return {"symmetric": self.is_symmetric, "skew": self.is_skew, "traceless": self.is_traceless}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.mode == other.mode and bool(np.all(self.matrix == other.matrix))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return "Tensor2(%s)" % [[format_scalar(v) for v in row] for row in self.matrix]


def kvectors_close(us: Iterable[KVector], vs: Iterable[KVector], tol: float = 0.0) -> bool:
    return all(u.close_to(v, tol) for u, v in zip(us, vs))

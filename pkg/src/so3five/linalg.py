"""Array helpers and linear algebra that work for both scalar backends.

Exact arrays are numpy ``object`` arrays of :class:`QF`; float arrays are
``float64``.  Exact rank/nullspace/solve use fraction-free-ish Gaussian
elimination with exact zero tests, float ones use the SVD.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .scalars import EXACT, FLOAT, QF, check_mode, is_zero, to_mode

ZERO = QF(0)
ONE = QF(1)


def zeros(shape, mode: str) -> np.ndarray:
    check_mode(mode)
    if mode == EXACT:
        return np.full(shape, ZERO, dtype=object)
    return np.zeros(shape, dtype=float)


def eye(n: int, mode: str) -> np.ndarray:
    out = zeros((n, n), mode)
    for i in range(n):
        out[i, i] = ONE if mode == EXACT else 1.0
    return out


def asarray(data, mode: str) -> np.ndarray:
    """Convert nested sequences / arrays of numbers to the backend array type."""
    check_mode(mode)
    arr = np.asarray(data, dtype=object)
    if mode == EXACT:
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = to_mode(v, EXACT)
        return out
    return np.array([float(v) for v in arr.ravel()], dtype=float).reshape(arr.shape)


def mode_of(arr: np.ndarray) -> str:
    return EXACT if arr.dtype == object else FLOAT


def to_float_array(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return np.array([float(v) for v in arr.ravel()], dtype=float).reshape(arr.shape)
    return np.asarray(arr, dtype=float)


def max_abs(arr) -> float:
    """Largest absolute entry as a float (0.0 for empty input)."""
    a = to_float_array(np.asarray(arr))
    return float(np.max(np.abs(a))) if a.size else 0.0


def all_zero(arr, tol: float = 0.0) -> bool:
    a = np.asarray(arr)
    if a.dtype == object:
        return all(is_zero(v, tol) for v in a.ravel())
    return bool(np.all(np.abs(a) <= tol))


def equal(a, b, tol: float = 0.0) -> bool:
    return all_zero(np.asarray(a) - np.asarray(b), tol)


def scalar(value, mode: str):
    return to_mode(value, mode)


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------


def _rref_exact(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.array(m, dtype=object, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for i in range(r, rows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = a[r, c].inverse()
        a[r] = [v * inv if v else v for v in a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                f = a[i, c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def _float_tol(m: np.ndarray, tol: float | None) -> float:
    if tol is not None:
        return tol
    return max(m.shape) * np.finfo(float).eps * (np.linalg.norm(m, 2) if m.size else 0.0) * 10


def rank(m: np.ndarray, tol: float | None = None) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    if m.dtype == object:
        return len(_rref_exact(m)[1])
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > _float_tol(m, tol)))


def nullspace(m: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Columns spanning the right null space of ``m``."""
    m = np.asarray(m)
    rows, cols = m.shape
    if m.dtype == object:
        red, pivots = _rref_exact(m)
        free = [c for c in range(cols) if c not in pivots]
        basis = zeros((cols, len(free)), EXACT)
        for k, fcol in enumerate(free):
            basis[fcol, k] = ONE
            for r, pcol in enumerate(pivots):
                basis[pcol, k] = -red[r, fcol]
        return basis
    u, s, vt = np.linalg.svd(m)
    r = int(np.sum(s > _float_tol(m, tol)))
    return vt[r:].T.copy()


def solve(m: np.ndarray, b: np.ndarray, tol: float | None = None) -> np.ndarray | None:
    """One solution of ``m x = b`` or ``None`` when the system is inconsistent."""
    m = np.asarray(m)
    b = np.asarray(b)
    vec = b.ndim == 1
    bb = b.reshape(len(b), -1)
    if m.dtype == object:
        aug = np.concatenate([m, bb], axis=1)
        red, pivots = _rref_exact(aug)
        ncols = m.shape[1]
        if any(p >= ncols for p in pivots):
            return None
        x = zeros((ncols, bb.shape[1]), EXACT)
        for r, p in enumerate(pivots):
            x[p] = red[r, ncols:]
        return x[:, 0] if vec else x
    x, *_ = np.linalg.lstsq(m, bb, rcond=None)
    res = m @ x - bb
    t = 1e-9 if tol is None else tol
    if np.max(np.abs(res), initial=0.0) > t * max(1.0, np.max(np.abs(bb), initial=0.0)):
        return None
    return x[:, 0] if vec else x


def det(m: np.ndarray):
    m = np.asarray(m)
    if m.dtype != object:
        return float(np.linalg.det(m))
    a = np.array(m, dtype=object, copy=True)
    n = a.shape[0]
    result = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i, c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            result = -result
        result = result * a[c, c]
        inv = a[c, c].inverse()
        for i in range(c + 1, n):
            if a[i, c]:
                f = a[i, c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def span_contains(basis_cols: np.ndarray, vectors: Iterable[np.ndarray], tol: float | None = None) -> bool:
    base = rank(basis_cols, tol)
    for v in vectors:
        aug = np.concatenate([basis_cols, np.asarray(v).reshape(-1, 1)], axis=1)
        if rank(aug, tol) != base:
            return False
    return True

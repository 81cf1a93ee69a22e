"""Totally skew torsion tensors on R^5."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import linalg as la
from .multilinear import COMBOS, INDEX, KVector, hodge_star, interior
from .scalars import EXACT, check_mode, to_mode


class TorsionTensor:
    """A totally skew 3-tensor ``T(X, Y, Z) = g(T(X, Y), Z)``.

    Stored as the 3-vector ``tau`` with ``T(X, Y, Z) = g(tau, X ^ Y ^ Z)``,
    i.e. by its ten components ``T_ijk`` on increasing indices.
    """

    __slots__ = ("form",)

    def __init__(self, form: KVector):
        if form.degree != 3:
            raise ValueError("torsion is a 3-vector")
        self.form = form

    @classmethod
    def zero(cls, mode: str = EXACT) -> "TorsionTensor":
        return cls(KVector.zero(3, mode))

    @classmethod
    def from_components(cls, entries, mode: str = EXACT) -> "TorsionTensor":
        """Build from ``{(i, j, k): value}`` or ``[(i, j, k, value), ...]`` (1-based).

        Indices must be strictly increasing; repeated triples are an error.
        """
        check_mode(mode)
        items = entries.items() if isinstance(entries, dict) else ((tuple(e[:3]), e[3]) for e in entries)
        comps = la.zeros(len(COMBOS[3]), mode)
        seen = set()
        for idx, value in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != 3 or not all(1 <= i <= 5 for i in idx) or not idx[0] < idx[1] < idx[2]:
                raise ValueError("torsion index %r must be strictly increasing in 1..5" % (idx,))
            if idx in seen:
                raise ValueError("torsion index %r given twice" % (idx,))
            seen.add(idx)
            comps[INDEX[3][tuple(i - 1 for i in idx)]] = to_mode(value, mode)
        return cls(KVector(3, comps, mode))

    @property
    def mode(self) -> str:
        return self.form.mode

    def component(self, i: int, j: int, k: int):
        """``T(e_i, e_j, e_k)`` for 1-based indices in any order."""
        return self.form.coeff(i, j, k)

    def components(self) -> dict[tuple[int, int, int], object]:
        return {tuple(i + 1 for i in c): self.form.components[n] for n, c in enumerate(COMBOS[3])}

    def __call__(self, x: KVector, y: KVector) -> KVector:
        """The vector ``T(x, y)``."""
        return interior(y, interior(x, self.form))

    def value(self, x: KVector, y: KVector, z: KVector):
        from .multilinear import inner

        return inner(self(x, y), z)

    def star(self) -> KVector:
        return hodge_star(self.form)

    def to_float(self) -> "TorsionTensor":
        return TorsionTensor(self.form.to_float())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.form.is_zero(tol)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorsionTensor) and self.form == other.form

    def __hash__(self):  # pragma: no cover - mutable-free but unhashable arrays
        raise TypeError("TorsionTensor is unhashable")

    def __repr__(self) -> str:
        return "TorsionTensor(%r)" % (self.form,)


def increasing_triples():
    return list(combinations(range(1, 6), 3))


def torsion_matrix_form(t: TorsionTensor) -> np.ndarray:
    """Full 5x5x5 skew array ``T[i, j, k]``."""
    out = la.zeros((5, 5, 5), t.mode)
    for (i, j, k), v in t.components().items():
        for (a, b, c), s in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1), ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            out[a - 1, b - 1, c - 1] = v * s
    return out

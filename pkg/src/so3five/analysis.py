"""Decision procedures for normality and CR-integrability of the twistor structure.

The four algebraic conditions are

* ``*T`` lies in the 3-dimensional summand of ``Lambda^2``;
* the ``Sym^2_9`` component of the traceless Ricci form vanishes;
* the ``Lambda^2_7`` component of the skew Ricci form vanishes;
* the degree-6 tensor ``Q`` vanishes.

Normality is their conjunction; CR-integrability needs only the first two.
:func:`normality_probe` evaluates ``N^(1)_+`` on horizontal basis pairs over
a grid of rational points of the fibre as an independent direct check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .curvature import Check, CurvatureMap, antisym, check_L27, check_S9, chi_killing_t, psi_decompose
from .nijenhuis import nijenhuis_horizontal_table
from .qtensor import QResult, q_vanishes, sphere_points
from .representation import Frame, projector_lambda2
from .scalars import EXACT, is_zero
from .torsion import TorsionTensor
from .twistor import TwistorPoint

CONDITIONS = ("star_T_in_L23", "S9_vanishes", "L27_vanishes", "Q_vanishes")


def _tol(mode: str, tol: float | None = None) -> float:
    return 0.0 if mode == EXACT else (1e-9 if tol is None else tol)


def check_star_T(t: TorsionTensor, tol: float | None = None) -> Check:
    """``*T`` has no component orthogonal to the 3-dimensional summand."""
    s = t.star().components
    res = s - projector_lambda2(mode=t.mode) @ s
    return Check(la.all_zero(res, _tol(t.mode, tol)), la.max_abs(res))


@dataclass(frozen=True)
class ProbeResult:
    """Largest entry of ``N^(1)_+(X^h, Y^h)`` over the sampled points and basis pairs."""

    vanishes: bool
    residual: float
    witness: tuple | None  # (y, i, j) with 1-based basis indices
    points: int


def normality_probe(
    t: TorsionTensor, k: CurvatureMap, size: str = "small", frame: Frame | None = None, tol: float | None = None
) -> ProbeResult:
    """Evaluate ``N^(1)_+`` on all pairs of horizontal basis vectors over a ``sigma``-grid."""
    mode = k.mode
    frame = frame or Frame.standard(mode)
    tl = _tol(mode, tol)
    pts = sphere_points(mode, size)
    worst = 0.0
    witness = None
    for y in pts:
        p = TwistorPoint(list(y), frame)
        hor, ver = nijenhuis_horizontal_table(1, "+", t, k, p)
        for arr, kind in ((hor, "horizontal"), (ver, "vertical")):
            mag = la.max_abs(arr)
            worst = max(worst, mag)
            if witness is None and not la.all_zero(arr, tl):
                idx = next(ix for ix in np.ndindex(arr.shape) if not is_zero(arr[ix], tl))
                witness = (tuple(y), idx[0] + 1, idx[1] + 1)
    return ProbeResult(witness is None, worst, witness, len(pts))


@dataclass(frozen=True)
class StructureReport:
    """Verdicts of the four conditions, the derived properties and the direct probe."""

    mode: str
    tolerance: float
    star_T_in_L23: Check
    S9_vanishes: Check
    L27_vanishes: Check
    Q: QResult
    chi_killing_t: object
    probe: ProbeResult | None = None
    extra: dict = field(default_factory=dict)

    @property
    def Q_vanishes(self) -> bool:
        return self.Q.vanishes

    @property
    def normal(self) -> bool:
        return self.star_T_in_L23.holds and self.S9_vanishes.holds and self.L27_vanishes.holds and self.Q.vanishes

    @property
    def cr_integrable(self) -> bool:
        return self.star_T_in_L23.holds and self.S9_vanishes.holds

    @property
    def failing(self) -> list[str]:
        flags = (self.star_T_in_L23.holds, self.S9_vanishes.holds, self.L27_vanishes.holds, self.Q.vanishes)
        return [name for name, ok in zip(CONDITIONS, flags) if not ok]

    @property
    def probe_agrees(self) -> bool | None:
        return None if self.probe is None else self.probe.vanishes == self.normal


def analyze(
    t: TorsionTensor,
    k: CurvatureMap,
    frame: Frame | None = None,
    probe: bool = True,
    probe_size: str = "small",
    tol: float | None = None,
) -> StructureReport:
    """Run every check on ``(T, K)``; raises :class:`~so3five.curvature.RangeError` on bad ``K``."""
    if t.mode != k.mode:
        raise TypeError("torsion and curvature must share one arithmetic mode")
    mode = k.mode
    d = psi_decompose(k)
    return StructureReport(
        mode=mode,
        tolerance=_tol(mode, tol),
        star_T_in_L23=check_star_T(t, tol),
        S9_vanishes=check_S9(k, tol),
        L27_vanishes=check_L27(k, tol),
        Q=q_vanishes(antisym(k), d.eta, frame, tol),
        chi_killing_t=chi_killing_t(k),
        probe=normality_probe(t, k, probe_size, frame, tol) if probe else None,
    )


def is_normal(t: TorsionTensor, k: CurvatureMap, **kw) -> StructureReport:
    """Report whose ``normal`` field is the conjunction of the four conditions."""
    return analyze(t, k, **kw)


def is_cr_integrable(t: TorsionTensor, k: CurvatureMap, **kw) -> StructureReport:
    """Report whose ``cr_integrable`` field is ``star_T_in_L23 and S9_vanishes``."""
    kw.setdefault("probe", False)
    return analyze(t, k, **kw)

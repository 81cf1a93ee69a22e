"""Deterministic JSON reports.

Exact scalars are written in the canonical ``"a + b*r2 + c*r3 + d*r6"``
form, floats with ``repr`` precision, keys sorted and indentation fixed, so
identical input gives identical bytes.
"""

from __future__ import annotations

import json

from . import __version__
from .analysis import StructureReport, analyze
from .curvature import Check, CurvatureDecomposition, psi_decompose, psi_inverse
from .multilinear import COMBOS, KVector
from .representation import kappa_frame, standard_kappa
from .scalars import format_scalar
from .schema import StructureInput

TOOL = "so3five"


def _label(idx) -> str:
    return "e" + "".join(str(i + 1) for i in idx)


def kvector_doc(x: KVector) -> dict:
    return {_label(idx): format_scalar(v) for idx, v in zip(COMBOS[x.degree], x.components)}


def matrix_doc(m) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m]


def _residual(x: float) -> float:
    return float(x)


def _check_doc(c: Check) -> dict:
    doc = {"holds": bool(c.holds), "residual": _residual(c.residual)}
    for key, val in sorted((c.detail or {}).items()):
        doc[key] = _residual(val)
    return doc


def decomposition_doc(d: CurvatureDecomposition) -> dict:
    return {
        "A": kvector_doc(d.A),
        "rho_minus": matrix_doc(d.rho_minus.matrix),
        "s": format_scalar(d.s),
        "eta": matrix_doc(d.eta.matrix),
    }


def report_doc(rep: StructureReport, inp: StructureInput) -> dict:
    """Everything in a :class:`StructureReport` as plain JSON values."""
    triple = kappa_frame(inp.frame) if inp.frame is not None else standard_kappa(inp.mode)
    q = rep.Q
    qdoc = {
        "holds": bool(q.vanishes),
        "residual": _residual(q.residual),
        "hypothesis_S9_zero": bool(q.hypothesis_ok),
        "method": q.method,
        "witness": None,
    }
    if q.witness is not None:
        s, x, v = q.witness
        qdoc["witness"] = {
            "sigma_kappa_coords": [format_scalar(c) for c in triple.coords(s)],
            "sigma": kvector_doc(s),
            "X": x.to_strings(),
            "value": format_scalar(v),
        }
    doc = {
        "tool": TOOL,
        "version": __version__,
        "scalar_mode": rep.mode,
        "tolerance": rep.tolerance,
        "conditions": {
            "star_T_in_L23": _check_doc(rep.star_T_in_L23),
            "S9_vanishes": _check_doc(rep.S9_vanishes),
            "L27_vanishes": _check_doc(rep.L27_vanishes),
            "Q_vanishes": qdoc,
        },
        "failing_conditions": rep.failing,
        "normal": rep.normal,
        "cr_integrable": rep.cr_integrable,
        "chi_killing_t": "none" if rep.chi_killing_t is None else format_scalar(rep.chi_killing_t),
        "decomposition": decomposition_doc(psi_decompose(inp.curvature)),
    }
    if rep.probe is not None:
        p = rep.probe
        doc["probe"] = {
            "vanishes": p.vanishes,
            "residual": _residual(p.residual),
            "points": p.points,
            "agrees_with_verdict": rep.probe_agrees,
            "witness": None
            if p.witness is None
            else {"y": [format_scalar(c) for c in p.witness[0]], "pair": [p.witness[1], p.witness[2]]},
        }
    return doc


def decompose_doc(inp: StructureInput) -> dict:
    d = psi_decompose(inp.curvature)
    back = psi_inverse(d)
    from . import linalg as la

    return {
        "tool": TOOL,
        "version": __version__,
        "scalar_mode": inp.mode,
        "decomposition": decomposition_doc(d),
        "reconstruction_residual": la.max_abs(back.matrix - inp.curvature.matrix),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def analyze_input(inp: StructureInput, tol: float | None = None, probe_size: str = "small") -> dict:
    rep = analyze(inp.torsion, inp.curvature, frame=inp.frame, tol=tol, probe_size=probe_size)
    return report_doc(rep, inp)

"""JSON input format for structure data and the built-in examples.

A structure file looks like::

    {
      "scalar_mode": "exact",
      "params": {"t": "1"},
      "torsion": [{"i": 1, "j": 2, "k": 4, "value": "t"},
                  {"i": 1, "j": 3, "k": 5, "value": "2*t"}],
      "curvature": {"kind": "rank_one_kappa3", "payload": {"c": "2*t^2"}},
      "frame": null
    }

Scalars are strings in the grammar of :func:`so3five.scalars.parse_scalar`
and may use the names bound under ``params``.  ``curvature.kind`` is
``"matrix"`` (payload: 10 rows of 10 scalars over the bivector basis
``e12, e13, ..., e45``) or ``"rank_one_kappa3"`` (payload ``{"c": ...}``
for ``K(X, Y, Z, U) = c g(X ^ Y, kappa_3) g(kappa_3, Z ^ U)``).  ``frame``
optionally lists five adapted frame vectors (rows) used for the kappa-triple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .curvature import CurvatureMap, RangeError
from .multilinear import COMBOS, DIM
from .representation import Frame, kappa_frame, projector_lambda2
from .scalars import EXACT, FLOAT, ScalarParseError, format_scalar, parse_scalar, to_mode
from .torsion import TorsionTensor

BUILTINS = ("flat", "symmetric", "so12")
_TOP_KEYS = {"scalar_mode", "params", "torsion", "curvature", "frame"}
NPAIR = len(COMBOS[2])


class InputError(ValueError):
    """Malformed structure input; ``where`` is a JSON path or a line/column."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(message if where is None else "%s: %s" % (where, message))


@dataclass
class StructureInput:
    """Torsion and curvature data in one arithmetic mode."""

    mode: str
    torsion: TorsionTensor
    curvature: CurvatureMap
    frame: Frame | None = None
    params: dict = field(default_factory=dict)
    source: dict | None = None  # the JSON document, when loaded from one

    def to_json(self) -> str:
        doc = self.source if self.source is not None else self.to_document()
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_document(self) -> dict:
        """A JSON document with every value spelled out (no parameters)."""
        entries = [
            {"i": i, "j": j, "k": k, "value": format_scalar(v)}
            for (i, j, k), v in sorted(self.torsion.components().items())
            if v != 0
        ]
        return {
            "scalar_mode": self.mode,
            "params": {},
            "torsion": entries,
            "curvature": {"kind": "matrix", "payload": [[format_scalar(v) for v in row] for row in self.curvature.matrix]},
            "frame": None if self.frame is None else [list(v.to_strings()) for v in self.frame.vectors],
        }


def _scalar(value, mode: str, params: dict, where: str):
    if isinstance(value, bool) or value is None:
        raise InputError("expected a scalar, got %s" % json.dumps(value), where)
    if isinstance(value, float) and mode == EXACT:
        raise InputError("mixed scalar modes: a float literal in an exact-mode file", where)
    try:
        return parse_scalar(value, mode, params)
    except ScalarParseError as exc:
        raise InputError(str(exc), where) from None


def _expect(cond: bool, message: str, where: str) -> None:
    if not cond:
        raise InputError(message, where)


def load_document(doc, mode_override: str | None = None) -> StructureInput:
    """Validate a parsed JSON document and build the tensors."""
    _expect(isinstance(doc, dict), "top level must be an object", "$")
    extra = sorted(set(doc) - _TOP_KEYS)
    _expect(not extra, "unknown key(s) %s" % ", ".join(extra), "$")
    mode = doc.get("scalar_mode", EXACT)
    _expect(mode in (EXACT, FLOAT), "scalar_mode must be 'exact' or 'float'", "$.scalar_mode")
    if mode_override is not None:
        mode = mode_override

    raw_params = doc.get("params") or {}
    _expect(isinstance(raw_params, dict), "params must be an object", "$.params")
    params: dict = {}
    for name in sorted(raw_params):
        _expect(name.isidentifier() and name not in ("r2", "r3", "r6"), "bad parameter name %r" % name, "$.params")
        params[name] = _scalar(raw_params[name], mode, params, "$.params.%s" % name)

    entries = doc.get("torsion") or []
    _expect(isinstance(entries, list), "torsion must be a list", "$.torsion")
    comps = {}
    for n, ent in enumerate(entries):
        where = "$.torsion[%d]" % n
        _expect(isinstance(ent, dict) and set(ent) == {"i", "j", "k", "value"}, "entry needs exactly i, j, k, value", where)
        idx = (ent["i"], ent["j"], ent["k"])
        _expect(all(isinstance(v, int) and not isinstance(v, bool) for v in idx), "indices must be integers", where)
        _expect(all(1 <= v <= DIM for v in idx), "indices must lie in 1..5", where)
        _expect(idx[0] < idx[1] < idx[2], "indices must be strictly increasing", where)
        _expect(idx not in comps, "triple %r given twice" % (idx,), where)
        comps[idx] = _scalar(ent["value"], mode, params, where + ".value")
    torsion = TorsionTensor.from_components(comps, mode)

    frame = None
    if doc.get("frame") is not None:
        rows = doc["frame"]
        _expect(isinstance(rows, list) and len(rows) == DIM, "frame must list five vectors", "$.frame")
        vecs = []
        for r, row in enumerate(rows):
            _expect(isinstance(row, list) and len(row) == DIM, "frame vector needs five scalars", "$.frame[%d]" % r)
            vecs.append([_scalar(v, mode, params, "$.frame[%d][%d]" % (r, c)) for c, v in enumerate(row)])
        frame = Frame(la.asarray(np.array(vecs, dtype=object).T, mode), mode)
        try:
            kappa_frame(frame)
        except ValueError as exc:
            raise InputError("frame is not adapted (%s)" % exc, "$.frame") from None

    curv = doc.get("curvature")
    if curv is None:
        matrix = la.zeros((NPAIR, NPAIR), mode)
    else:
        _expect(isinstance(curv, dict) and "kind" in curv, "curvature needs a kind", "$.curvature")
        kind = curv["kind"]
        payload = curv.get("payload")
        if kind == "matrix":
            _expect(isinstance(payload, list) and len(payload) == NPAIR, "matrix payload needs 10 rows", "$.curvature.payload")
            rows = []
            for r, row in enumerate(payload):
                where = "$.curvature.payload[%d]" % r
                _expect(isinstance(row, list) and len(row) == NPAIR, "row needs 10 scalars", where)
                rows.append([_scalar(v, mode, params, "%s[%d]" % (where, c)) for c, v in enumerate(row)])
            matrix = la.asarray(np.array(rows, dtype=object), mode)
        elif kind == "rank_one_kappa3":
            _expect(isinstance(payload, dict) and set(payload) == {"c"}, "payload must be {\"c\": scalar}", "$.curvature.payload")
            c = _scalar(payload["c"], mode, params, "$.curvature.payload.c")
            triple = kappa_frame(frame) if frame is not None else None
            matrix = CurvatureMap.rank_one_kappa3(c, triple, mode).matrix
        else:
            raise InputError("kind must be 'matrix' or 'rank_one_kappa3'", "$.curvature.kind")
    try:
        k = CurvatureMap(matrix, mode)
    except RangeError as exc:
        raise InputError(str(exc), "$.curvature") from None
    return StructureInput(mode, torsion, k, frame, params, doc)


def loads(text: str, mode_override: str | None = None) -> StructureInput:
    """Parse JSON text; syntax errors report line and column."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, "line %d column %d" % (exc.lineno, exc.colno)) from None
    return load_document(doc, mode_override)


def load(path: str, mode_override: str | None = None) -> StructureInput:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read file (%s)" % exc.strerror, path) from None
    return loads(text, mode_override)


def _param_text(t, mode: str) -> str:
    return format_scalar(to_mode(t, mode) if mode == EXACT or not isinstance(t, float) else t)


def builtin_document(name: str, t="1", mode: str = EXACT) -> dict:
    """JSON document of a built-in example.

    ``flat``: ``T = 0``, ``K = 0``.  ``symmetric``: ``T = 0`` and
    ``K = t P``, a surrogate with vanishing ``A``, skew Ricci and traceless
    Ricci parts.  ``so12``: ``T = t (e124 + 2 e135)`` and
    ``K = 2 t^2 <., kappa_3> kappa_3``.
    """
    if name not in BUILTINS:
        raise InputError("unknown example %r (choose from %s)" % (name, ", ".join(BUILTINS)), "example")
    tv = _scalar(t, mode, {}, "--t")
    text = t if isinstance(t, str) else _param_text(tv, mode)
    if name == "flat":
        return {"scalar_mode": mode, "params": {}, "torsion": [], "curvature": {"kind": "matrix", "payload": [["0"] * NPAIR for _ in range(NPAIR)]}, "frame": None}
    if name == "symmetric":
        if to_mode(tv, FLOAT) == 0:
            raise InputError("the symmetric example needs t != 0", "--t")
        p = projector_lambda2(mode=EXACT)
        payload = [["0" if v == 0 else "(%s)*t" % format_scalar(v) for v in row] for row in p]
        return {"scalar_mode": mode, "params": {"t": text}, "torsion": [], "curvature": {"kind": "matrix", "payload": payload}, "frame": None}
    if to_mode(tv, FLOAT) == 0:
        raise InputError("the so12 example needs t != 0", "--t")
    return {
        "scalar_mode": mode,
        "params": {"t": text},
        "torsion": [{"i": 1, "j": 2, "k": 4, "value": "t"}, {"i": 1, "j": 3, "k": 5, "value": "2*t"}],
        "curvature": {"kind": "rank_one_kappa3", "payload": {"c": "2*t^2"}},
        "frame": None,
    }


def builtin(name: str, t="1", mode: str = EXACT) -> StructureInput:
    return load_document(builtin_document(name, t, mode))


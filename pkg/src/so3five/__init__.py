"""Exact algebra of irreducible SO(3)-structures on five-manifolds and their twistor spaces.

Scalars live in the field Q(sqrt 2, sqrt 3) (``mode="exact"``) or in
float64 (``mode="float"``); every public function accepts either.
"""

__version__ = "0.1.0"

from .scalars import EXACT, FLOAT, QF, format_scalar, parse_scalar  # noqa: E402

__all__ = ["EXACT", "FLOAT", "QF", "__version__", "format_scalar", "parse_scalar"]

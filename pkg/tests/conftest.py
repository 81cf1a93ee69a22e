"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from so3five.multilinear import COMBOS, KVector  # noqa: E402
from so3five.scalars import QF  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=25, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = rationals.filter(lambda f: f != 0)


@st.composite
def field_elements(draw):
    return QF(*(draw(rationals) for _ in range(4)))


@st.composite
def kvectors(draw, degree: int):
    comps = np.array([QF(draw(rationals)) for _ in COMBOS[degree]], dtype=object)
    return KVector(degree, comps, "exact")


@st.composite
def unit_y(draw):
    """Rational points of the unit 2-sphere via inverse stereographic projection."""
    a, b = draw(rationals), draw(rationals)
    d = 1 + a * a + b * b
    return (2 * a / d, 2 * b / d, (a * a + b * b - 1) / d)


@pytest.fixture
def half():
    return Fraction(1, 2)

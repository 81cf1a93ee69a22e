"""The invariant suite and its sensitivity to deliberate faults."""

import pytest

from so3five.identities import FAULTS, names, run_suite

OWNER = {"hodge_sign": "hodge_pairing", "upsilon_sign": "spectrum", "kappa_sign": "kappa_frame", "psi_scalar": "psi_round_trip"}


def test_float_suite_passes():
    results = run_suite("float")
    assert [r.name for r in results] == names()
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_names_are_unique():
    assert len(set(names())) == len(names()) >= 25


@pytest.mark.parametrize("fault", FAULTS)
def test_each_fault_is_caught_by_its_own_check_only(fault):
    failed = [r.name for r in run_suite("float", fault=fault) if not r.passed]
    assert failed == [OWNER[fault]]


@pytest.mark.parametrize("fault", FAULTS)
def test_faults_are_caught_in_exact_mode(fault):
    res = run_suite("exact", fault=fault, only=[OWNER[fault]])
    assert len(res) == 1 and not res[0].passed and res[0].residual > 0


def test_unknown_fault():
    with pytest.raises(ValueError):
        run_suite("float", fault="nope")


def test_runs_are_reproducible():
    a = run_suite("float", only=["psi_round_trip", "upsilon_cubic"])
    b = run_suite("float", only=["psi_round_trip", "upsilon_cubic"])
    assert [r.residual for r in a] == [r.residual for r in b]

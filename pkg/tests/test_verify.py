"""The verification harness itself: green by default, honest under faults."""

import pytest

from millscf.verify import SUITES, run_suites


def test_all_suites_pass():
    results = run_suites()
    assert len(results) == len(SUITES)
    failures = [(name, detail) for name, ok, detail in results if not ok]
    assert failures == []


def test_suite_filtering():
    results = run_suites(["alternating", "pade"])
    assert [name for name, _, _ in results] == ["alternating", "pade"]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(["no-such-suite"])


def test_injected_sign_fault_is_caught():
    # flipping the claimed parity must fail the sign suite and nothing else
    results = run_suites(inject_sign_fault=True)
    status = {name: ok for name, ok, _ in results}
    assert not status["sign-identity"]
    assert all(ok for name, ok in status.items() if name != "sign-identity")

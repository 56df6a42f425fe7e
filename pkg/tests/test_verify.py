"""The verification report machinery and suite outcomes."""

import pytest

from laddercf import run_suite
from laddercf.verify import FAIL, FLAGGED, PASS, SUITES, VerificationReport


def test_every_suite_passes():
    for suite in SUITES:
        report = run_suite(suite, 8)
        assert report.overall == PASS, [c for c in report.cases if c.status == FAIL]


def test_flagged_cases_are_exactly_two_overall():
    report = run_suite("all", 8)
    flagged = [c.case_id for c in report.cases if c.status == FLAGGED]
    assert flagged == ["chebyshev/plus-convention", "riccati/printed-f3-f4-displays"]
    assert report.overall == PASS


def test_flagged_details_show_corrections():
    report = run_suite("riccati", 4)
    flagged = {c.case_id: c for c in report.cases if c.status == FLAGGED}
    detail = flagged["riccati/printed-f3-f4-displays"].detail
    assert "x^2 - 3*x + 3" in detail            # the printed display
    assert "(x^2 - x^3)" in detail              # the oracle-backed correction

    report = run_suite("chebyshev", 4)
    flagged = {c.case_id: c for c in report.cases if c.status == FLAGGED}
    detail = flagged["chebyshev/plus-convention"].detail
    assert "x + 1/x" in detail
    assert "minus convention" in detail


def test_cases_sorted_by_id():
    report = run_suite("all", 6)
    ids = [c.case_id for c in report.cases]
    assert ids == sorted(ids)


def test_unknown_suite_and_bad_max_n():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("parity")
    with pytest.raises(ValueError, match="max_n"):
        run_suite("riccati", 0)


def test_overall_fail_and_counts():
    report = VerificationReport("demo")
    report.add("demo/a", True, "fine")
    report.add("demo/b", False, "broken")
    report.add_flagged("demo/c", True, "known divergence")
    report.finish()
    assert report.overall == FAIL
    assert report.counts == (1, 1, 1)
    obj = report.to_json_obj()
    assert obj["overall"] == FAIL
    assert [c["status"] for c in obj["cases"]] == [PASS, FAIL, FLAGGED]


def test_flagged_case_fails_when_divergence_disappears():
    report = VerificationReport("demo")
    report.add_flagged("demo/gone", False, "expected divergence was not observed")
    assert report.overall == FAIL

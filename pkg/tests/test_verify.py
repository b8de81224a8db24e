import numpy as np
import pytest

from starwalk.verify import (
    COMPLETE_CHECKS,
    STAR_CHECKS,
    CheckRecord,
    VerificationReport,
    chebyshev_times,
    verify,
)


def test_chebyshev_times():
    t = chebyshev_times()
    assert t.size == 64
    assert np.all(np.diff(t) > 0)
    assert 0 < t[0] and t[-1] < 4 * np.pi


def test_report_order_is_fixed():
    r = verify("star", [5, 3, 4])
    assert [c.name for c in r.records] == list(STAR_CHECKS)
    assert r.passed
    r = verify("complete", [3])
    assert [c.name for c in r.records] == list(COMPLETE_CHECKS)


def test_report_status_reflects_records():
    report = VerificationReport("star", (2,), [CheckRecord("a", 1.0), CheckRecord("b", 1e-9)])
    report.record("a").update(0.5, 2)
    assert report.passed
    report.record("b").update(1e-3, 2)
    assert not report.passed
    assert report.to_dict()["status"] == "fail"


def test_nan_counts_as_failure():
    rec = CheckRecord("x", 1.0)
    rec.update(float("nan"), 4)
    assert not rec.passed and rec.worst_n == 4


def test_stable_across_runs():
    a = verify("star", range(2, 10)).to_dict()
    b = verify("star", range(2, 10)).to_dict()
    assert a == b


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify("cycle", [3])
    with pytest.raises(ValueError):
        verify("star", [1])
    with pytest.raises(ValueError):
        verify("star", [])
